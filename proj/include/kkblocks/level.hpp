#pragma once

#include "kkblocks/rational.hpp"

#include <optional>
#include <string>

namespace kkb {

// The level parameter kappa: an exact nonzero rational, or formally generic.
// Generic means transcendental over Q: "r + s*kappa is a positive integer"
// holds only when s = 0 and r is a positive integer.
class Level {
public:
    static Level rational(Rat value) {
        if (value == 0) throw std::invalid_argument("critical level kappa = 0 is excluded");
        Level l;
        l.value_ = std::move(value);
        return l;
    }
    static Level generic() { return Level{}; }
    static Level parse(const std::string& text);

    bool is_generic() const { return !value_.has_value(); }
    bool is_rational() const { return value_.has_value(); }
    const Rat& value() const {
        if (!value_) throw std::logic_error("generic level has no rational value");
        return *value_;
    }

    // Exact decision of "r + s*kappa in Z_{>0}"; returns the realized integer.
    std::optional<Int> positive_integer_value(const Rat& r, const Rat& s) const {
        if (is_generic()) {
            if (s != 0) return std::nullopt;
            if (!is_positive_integer(r)) return std::nullopt;
            return numerator(r);
        }
        Rat v = r + s * value();
        if (!is_positive_integer(v)) return std::nullopt;
        return numerator(v);
    }

    std::string str() const { return is_generic() ? "generic" : rat_to_string(value()); }

    friend bool operator==(const Level& a, const Level& b) { return a.value_ == b.value_; }

private:
    std::optional<Rat> value_;
};

inline Level Level::parse(const std::string& text) {
    if (text == "generic") return generic();
    return rational(parse_rat(text));
}

} // namespace kkb
