#pragma once

#include "kkblocks/root_system.hpp"

#include <random>

namespace kkb::test {

inline Weight wt(const RootSystem& rs, std::vector<long long> coords) {
    std::vector<Rat> c;
    for (auto v : coords) c.emplace_back(v);
    return rs.weight_from_coords(std::move(c));
}

// Deterministic generator for property tests: small exact rationals.
class WeightGen {
public:
    explicit WeightGen(unsigned seed = 20240817) : rng_(seed) {}

    Rat rational(long long lo = -6, long long hi = 6, long long max_den = 4) {
        std::uniform_int_distribution<long long> num(lo, hi);
        std::uniform_int_distribution<long long> den(1, max_den);
        return Rat(num(rng_), den(rng_));
    }

    Weight weight(const RootSystem& rs, long long lo = -6, long long hi = 6, long long max_den = 4) {
        std::vector<Rat> c;
        for (std::size_t i = 0; i < rs.rank(); ++i) c.push_back(rational(lo, hi, max_den));
        return rs.weight_from_coords(std::move(c));
    }

    Weight integral_weight(const RootSystem& rs, long long lo = -6, long long hi = 6) {
        std::vector<Rat> c;
        std::uniform_int_distribution<long long> num(lo, hi);
        for (std::size_t i = 0; i < rs.rank(); ++i) c.emplace_back(num(rng_));
        return rs.weight_from_coords(std::move(c));
    }

    std::size_t index(std::size_t n) {
        std::uniform_int_distribution<std::size_t> d(0, n - 1);
        return d(rng_);
    }

private:
    std::mt19937 rng_;
};

} // namespace kkb::test
