#pragma once

#include "kkblocks/rational.hpp"

#include <algorithm>
#include <vector>

namespace kkb {

// Dense polynomial in the level parameter kappa, coefficients in Q.
// coeffs[i] multiplies kappa^i; the representation is trimmed (no trailing zeros).
class KPoly {
public:
    KPoly() = default;
    KPoly(Rat constant) { // NOLINT: implicit by design, scalars embed
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }
    KPoly(long long constant) : KPoly(Rat(constant)) {}

    static KPoly kappa() {
        KPoly p;
        p.coeffs_ = {Rat(0), Rat(1)};
        return p;
    }
    static KPoly linear(Rat c0, Rat c1) {
        KPoly p;
        p.coeffs_ = {std::move(c0), std::move(c1)};
        p.trim();
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    const Rat& coeff(int i) const {
        static const Rat zero{};
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(i)] : zero;
    }
    const Rat& lead() const { return coeffs_.back(); }

    Rat eval(const Rat& kappa_value) const {
        Rat acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * kappa_value + *it;
        return acc;
    }

    KPoly& operator+=(const KPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    KPoly& operator-=(const KPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    friend KPoly operator+(KPoly a, const KPoly& b) { return a += b; }
    friend KPoly operator-(KPoly a, const KPoly& b) { return a -= b; }
    friend KPoly operator-(const KPoly& a) { return KPoly(Rat(0)) - a; }
    friend KPoly operator*(const KPoly& a, const KPoly& b) {
        KPoly out;
        if (a.is_zero() || b.is_zero()) return out;
        out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        out.trim();
        return out;
    }
    KPoly& operator*=(const KPoly& o) { return *this = *this * o; }

    friend bool operator==(const KPoly& a, const KPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const KPoly& a, const KPoly& b) { return !(a == b); }

    // Euclidean division; the coefficient field is Q so this is exact.
    static void divmod(const KPoly& a, const KPoly& b, KPoly& q, KPoly& r);

    static KPoly gcd(KPoly a, KPoly b); // monic gcd

    KPoly derivative_free_monic() const { // scale so leading coefficient is 1
        KPoly out = *this;
        if (out.is_zero()) return out;
        Rat l = out.lead();
        for (auto& c : out.coeffs_) c /= l;
        return out;
    }

    std::string str(const std::string& var = "k") const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rat> coeffs_;
};

// Field of fractions Q(kappa), normalized: gcd(num, den) = 1 and den monic.
class KRat {
public:
    KRat() : num_(Rat(0)), den_(Rat(1)) {}
    KRat(Rat constant) : num_(std::move(constant)), den_(Rat(1)) {} // NOLINT
    KRat(long long constant) : num_(Rat(constant)), den_(Rat(1)) {}
    KRat(KPoly num, KPoly den = KPoly(Rat(1))) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static KRat kappa() { return KRat(KPoly::kappa()); }

    const KPoly& num() const { return num_; }
    const KPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rat eval(const Rat& kappa_value) const {
        Rat d = den_.eval(kappa_value);
        if (d == 0) throw std::domain_error("KRat pole at requested level");
        return num_.eval(kappa_value) / d;
    }

    friend KRat operator+(const KRat& a, const KRat& b) {
        return KRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend KRat operator-(const KRat& a, const KRat& b) {
        return KRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend KRat operator*(const KRat& a, const KRat& b) { return KRat(a.num_ * b.num_, a.den_ * b.den_); }
    friend KRat operator/(const KRat& a, const KRat& b) {
        if (b.is_zero()) throw std::domain_error("division by zero in Q(kappa)");
        return KRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend KRat operator-(const KRat& a) { return KRat(-a.num_, a.den_); }
    KRat& operator+=(const KRat& o) { return *this = *this + o; }
    KRat& operator-=(const KRat& o) { return *this = *this - o; }
    KRat& operator*=(const KRat& o) { return *this = *this * o; }
    KRat& operator/=(const KRat& o) { return *this = *this / o; }

    friend bool operator==(const KRat& a, const KRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const KRat& a, const KRat& b) { return !(a == b); }

    std::string str(const std::string& var = "k") const;

private:
    void normalize();
    KPoly num_, den_;
};

// Scalar traits used by the templated exact linear algebra and the Verma engine.
template <class S> struct scalar_traits;

template <> struct scalar_traits<Rat> {
    static bool is_zero(const Rat& x) { return x == 0; }
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static Rat from_rat(const Rat& x) { return x; }
};

template <> struct scalar_traits<KRat> {
    static bool is_zero(const KRat& x) { return x.is_zero(); }
    static KRat zero() { return KRat(); }
    static KRat one() { return KRat(Rat(1)); }
    static KRat from_rat(const Rat& x) { return KRat(x); }
};

} // namespace kkb
