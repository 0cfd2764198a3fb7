#include <numbers>

#include <gtest/gtest.h>

#include "flateta/errors.hpp"
#include "flateta/gauss_bonnet.hpp"

using namespace flateta;

TEST(VolumeFromChi, Values) {
    const VolumeValue one = volume_from_chi(1);
    EXPECT_EQ(one.coefficient, Rational(4, 3));
    EXPECT_EQ(one.approx, "13.1594725348");
    EXPECT_NEAR(one.value(), 4 * std::numbers::pi * std::numbers::pi / 3, 1e-9);
    const VolumeValue three = volume_from_chi(3);
    EXPECT_EQ(three.coefficient, Rational(4));
    EXPECT_EQ(three.approx, "39.4784176044");
    EXPECT_THROW(volume_from_chi(0), DomainError);
    EXPECT_THROW(volume_from_chi(-2), DomainError);
}

TEST(VolumeFromChi, StrictlyIncreasing) {
    for (std::int64_t chi = 1; chi < 500; ++chi) {
        EXPECT_LT(volume_from_chi(chi).coefficient, volume_from_chi(chi + 1).coefficient);
        EXPECT_LT(volume_from_chi(chi).value(), volume_from_chi(chi + 1).value());
    }
}

TEST(ChiFromVolume, Values) {
    EXPECT_EQ(chi_from_volume(13.1594725348, 1e-6), 1);
    EXPECT_EQ(chi_from_volume(26.3189450696, 1e-6), 2);
    EXPECT_THROW(chi_from_volume(20.0, 1e-6), NoMatchError);
    EXPECT_THROW(chi_from_volume(1.0, 1e-6), NoMatchError);
    EXPECT_THROW(chi_from_volume(20.0, 10.0), AmbiguityError);
    EXPECT_THROW(chi_from_volume(-1.0, 1e-6), DomainError);
    EXPECT_THROW(chi_from_volume(13.0, 0.0), DomainError);
}

TEST(ChiFromVolume, MessageCarriesLatticeSpacing) {
    try {
        chi_from_volume(20.0, 1e-6);
        FAIL();
    } catch (const NoMatchError& e) {
        EXPECT_NE(std::string(e.what()).find("4*pi^2/3"), std::string::npos);
    }
}

TEST(ChiFromVolume, RoundTrip) {
    for (std::int64_t chi = 1; chi <= 10000; ++chi) ASSERT_EQ(chi_from_volume(volume_from_chi(chi).value(), 1e-6), chi);
}

TEST(DoubledEuler, Linear) {
    EXPECT_EQ(doubled_euler(1), 2);
    EXPECT_EQ(doubled_euler(0), 0);
    EXPECT_EQ(doubled_euler(7), 14);
    for (std::int64_t a = -20; a <= 20; ++a)
        for (std::int64_t b = -20; b <= 20; ++b) EXPECT_EQ(doubled_euler(a + b), doubled_euler(a) + doubled_euler(b));
}
