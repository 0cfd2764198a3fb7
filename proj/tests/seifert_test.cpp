#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "flateta/errors.hpp"
#include "flateta/seifert.hpp"

using namespace flateta;

namespace {

SeifertData sphere(std::int64_t b, std::vector<FiberPair> fibers) { return {BaseSurface::S2, 0, b, std::move(fibers)}; }

const SeifertData kG5 = sphere(0, {{2, 1}, {3, -1}, {6, -1}});
const SeifertData kG3 = sphere(0, {{3, 2}, {3, -1}, {3, -1}});
const SeifertData kTorus{BaseSurface::T2, 1, 0, {}};

std::string failing_field(const SeifertData& s) {
    try {
        validate(s);
    } catch (const ValidationError& e) {
        return e.field();
    }
    return "";
}

}  // namespace

TEST(Validate, AcceptsWellFormedData) {
    EXPECT_EQ(validate(kG5), kG5);
    EXPECT_EQ(validate(kTorus), kTorus);
    EXPECT_NO_THROW(validate(sphere(3, {{5, -7}})));
}

TEST(Validate, NamesOffendingField) {
    EXPECT_EQ(failing_field(sphere(0, {{4, 2}})), "fibers[0]");
    EXPECT_EQ(failing_field(sphere(0, {{2, 1}, {1, 0}})), "fibers[1]");
    EXPECT_EQ(failing_field(sphere(0, {{3, 1}, {0, 1}})), "fibers[1]");
    EXPECT_EQ(failing_field(SeifertData{BaseSurface::S2, 1, 0, {}}), "genus");
    EXPECT_EQ(failing_field(SeifertData{BaseSurface::T2, 0, 0, {}}), "genus");
    try {
        validate(sphere(0, {{4, 2}}));
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("gcd(4,2)"), std::string::npos);
    }
}

TEST(EulerNumber, Values) {
    EXPECT_EQ(euler_number(kG5), Rational(0));
    EXPECT_EQ(euler_number(kG3), Rational(0));
    EXPECT_EQ(euler_number(sphere(1, {})), Rational(-1));
    EXPECT_EQ(euler_number(sphere(0, {{2, 1}})), Rational(-1, 2));
}

TEST(OrbifoldEulerCharacteristic, Values) {
    EXPECT_EQ(orbifold_euler_characteristic(kG5), Rational(0));
    EXPECT_EQ(orbifold_euler_characteristic(kG3), Rational(0));
    EXPECT_EQ(orbifold_euler_characteristic(kTorus), Rational(0));
    EXPECT_EQ(orbifold_euler_characteristic(sphere(0, {{2, 1}})), Rational(3, 2));
}

TEST(IsFlat, Values) {
    EXPECT_TRUE(is_flat(kG5));
    EXPECT_TRUE(is_flat(kTorus));
    // e = -(1/2 + 1/3 + 1/6) = -1.
    EXPECT_FALSE(is_flat(sphere(0, {{2, 1}, {3, 1}, {6, 1}})));
    // Same fibers with b = -1 restore e = 0.
    EXPECT_TRUE(is_flat(sphere(-1, {{2, 1}, {3, 1}, {6, 1}})));
    // e = 0 but hyperbolic base orbifold S2(2,3,7,42).
    EXPECT_FALSE(is_flat(sphere(0, {{2, 1}, {3, 1}, {7, 1}, {42, -41}})));
}

TEST(FlatCatalog, Contents) {
    const auto cat = flat_catalog();
    ASSERT_EQ(cat.size(), 6u);
    const char* names[] = {"G1", "G2", "G3", "G4", "G5", "G6"};
    for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(cat[i].name, names[i]);
    EXPECT_EQ(cat[0].eta, Rational(0));
    EXPECT_EQ(cat[2].eta, Rational(-2, 3));
    EXPECT_EQ(cat[4].eta, Rational(-4, 3));
    EXPECT_EQ(cat[2].seifert, kG3);
    EXPECT_EQ(cat[4].seifert, kG5);
    EXPECT_EQ(cat[0].seifert, kTorus);
    EXPECT_FALSE(cat[5].seifert.has_value());
    EXPECT_FALSE(cat[5].eta.has_value());
    EXPECT_TRUE(cat[5].eta_integral);
    EXPECT_EQ(cat[5].holonomy, "Z2xZ2");
}

TEST(FlatCatalog, EntriesAreFlatAndConsistent) {
    int non_integral = 0;
    for (const auto& e : flat_catalog()) {
        if (e.seifert) EXPECT_TRUE(is_flat(*e.seifert)) << e.name;
        if (e.eta) EXPECT_EQ(e.eta_integral, e.eta->is_integer()) << e.name;
        if (!e.eta_integral) ++non_integral;
    }
    EXPECT_EQ(non_integral, 2);
}

TEST(SeifertProperty, InvariantsIgnoreFiberOrder) {
    std::mt19937 rng(42);
    for (const auto& e : flat_catalog()) {
        if (!e.seifert) continue;
        SeifertData s = *e.seifert;
        for (int i = 0; i < 10; ++i) {
            std::shuffle(s.fibers.begin(), s.fibers.end(), rng);
            EXPECT_EQ(euler_number(s), euler_number(*e.seifert));
            EXPECT_EQ(orbifold_euler_characteristic(s), orbifold_euler_characteristic(*e.seifert));
        }
    }
}

TEST(SeifertProperty, FiberShiftMoveKeepsEulerNumber) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::int64_t> alpha(2, 30), beta(-60, 60), count(0, 5), b(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        SeifertData s = sphere(b(rng), {});
        const auto n = count(rng);
        while (static_cast<std::int64_t>(s.fibers.size()) < n) {
            FiberPair f{alpha(rng), beta(rng)};
            if (std::gcd(f.alpha, f.beta) == 1) s.fibers.push_back(f);
        }
        if (s.fibers.empty()) continue;
        validate(s);
        // (alpha, beta) -> (alpha, beta - alpha) with b -> b + 1.
        SeifertData moved = s;
        auto& f = moved.fibers[static_cast<std::size_t>(trial) % moved.fibers.size()];
        f.beta -= f.alpha;
        moved.b += 1;
        validate(moved);
        EXPECT_EQ(euler_number(moved), euler_number(s));
        EXPECT_EQ(orbifold_euler_characteristic(moved), orbifold_euler_characteristic(s));
    }
}
