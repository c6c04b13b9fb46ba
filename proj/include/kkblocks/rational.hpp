#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace kkb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long long num, long long den = 1) { return Rat(Int(num), Int(den)); }

// Canonical lowest-terms rendering: "p" when the denominator is 1, else "p/q".
inline std::string rat_to_string(const Rat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

// Accepts "p", "p/q", optional leading sign on p. Throws std::invalid_argument.
Rat parse_rat(const std::string& text);

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

inline bool is_positive_integer(const Rat& x) { return is_integer(x) && numerator(x) > 0; }

// Floor of the exact rational (towards -infinity).
inline Int rat_floor(const Rat& x) {
    Int q = numerator(x) / denominator(x);
    if (numerator(x) < 0 && q * denominator(x) != numerator(x)) --q;
    return q;
}

inline long long to_long_checked(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("integer too large for int64 interface");
    return static_cast<long long>(v);
}

inline void hash_mix(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

inline std::size_t rat_hash(const Rat& x) {
    return std::hash<std::string>{}(rat_to_string(x));
}

} // namespace kkb
