#pragma once

#include "kkblocks/rational.hpp"

#include <vector>

namespace kkb {

// A point of h* with exact rational coordinates in the fundamental-weight basis.
struct Weight {
    std::vector<Rat> coords;

    Weight() = default;
    explicit Weight(std::size_t rank) : coords(rank, Rat(0)) {}
    explicit Weight(std::vector<Rat> c) : coords(std::move(c)) {}

    std::size_t rank() const { return coords.size(); }
    const Rat& operator[](std::size_t i) const { return coords[i]; }
    Rat& operator[](std::size_t i) { return coords[i]; }

    friend Weight operator+(const Weight& a, const Weight& b) {
        Weight out(a.coords);
        for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
        return out;
    }
    friend Weight operator-(const Weight& a, const Weight& b) {
        Weight out(a.coords);
        for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
        return out;
    }
    friend Weight operator*(const Rat& s, const Weight& w) {
        Weight out(w.coords);
        for (auto& c : out.coords) c *= s;
        return out;
    }
    friend Weight operator-(const Weight& w) { return Rat(-1) * w; }

    bool is_zero() const {
        for (const auto& c : coords)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    // Lexicographic on canonical coordinates; used for deterministic output ordering.
    friend bool operator<(const Weight& a, const Weight& b) {
        if (a.coords.size() != b.coords.size()) return a.coords.size() < b.coords.size();
        for (std::size_t i = 0; i < a.coords.size(); ++i) {
            if (a.coords[i] != b.coords[i]) return a.coords[i] < b.coords[i];
        }
        return false;
    }

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) out += ",";
            out += rat_to_string(coords[i]);
        }
        return out + ")";
    }
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const {
        std::size_t seed = w.coords.size();
        for (const auto& c : w.coords) hash_mix(seed, rat_hash(c));
        return seed;
    }
};

} // namespace kkb
