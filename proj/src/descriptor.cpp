#include "flateta/descriptor.hpp"

#include <cctype>
#include <charconv>

#include "flateta/errors.hpp"

namespace flateta {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_space();
        return pos_ == text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::size_t offset() {
        skip_space();
        return pos_;
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool accept(std::string_view token) {
        skip_space();
        if (text_.substr(pos_, token.size()) != token) return false;
        pos_ += token.size();
        return true;
    }

    std::int64_t integer() {
        skip_space();
        const std::size_t start = pos_;
        std::string digits;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            if (text_[pos_] == '-') digits.push_back('-');
            ++pos_;
            skip_space();
        }
        const std::size_t first_digit = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits.push_back(text_[pos_++]);
        if (pos_ == first_digit) {
            pos_ = start;
            fail("expected integer");
        }
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
            pos_ = start;
            fail("integer out of range");
        }
        return value;
    }

    [[noreturn]] void fail(const std::string& what) {
        const std::size_t at = offset();
        std::string found = at < text_.size() ? "'" + std::string(1, text_[at]) + "'" : "end of input";
        throw SyntaxError(at, "descriptor syntax error at byte " + std::to_string(at) + ": " + what + ", found " +
                                  found);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

SeifertData parse_descriptor(std::string_view text) {
    Cursor in(text);
    SeifertData s;
    if (in.accept("S2")) {
        s.base = BaseSurface::S2;
        s.genus = 0;
    } else if (in.accept("T2")) {
        s.base = BaseSurface::T2;
        s.genus = 1;
    } else {
        in.fail("expected base 'S2' or 'T2'");
    }
    in.expect(';');
    if (in.accept("b")) {
        in.expect('=');
        s.b = in.integer();
        in.expect(';');
    }
    while (!in.at_end()) {
        in.expect('(');
        FiberPair f{};
        f.alpha = in.integer();
        in.expect(',');
        f.beta = in.integer();
        in.expect(')');
        s.fibers.push_back(f);
    }
    validate(s);
    return s;
}

std::string render_descriptor(const SeifertData& s) {
    std::string out = to_string(s.base) + ";";
    if (s.b != 0) out += "b=" + std::to_string(s.b) + ";";
    for (const auto& f : s.fibers) out += "(" + std::to_string(f.alpha) + "," + std::to_string(f.beta) + ")";
    return out;
}

}  // namespace flateta
