#include "kkblocks/kappa_poly.hpp"

#include <sstream>

namespace kkb {

void KPoly::divmod(const KPoly& a, const KPoly& b, KPoly& q, KPoly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    q = KPoly();
    r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rat factor = r.lead() / b.lead();
        KPoly mono;
        mono.coeffs_.assign(static_cast<std::size_t>(shift) + 1, Rat(0));
        mono.coeffs_.back() = factor;
        q += mono;
        r -= mono * b;
    }
}

KPoly KPoly::gcd(KPoly a, KPoly b) {
    while (!b.is_zero()) {
        KPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.derivative_free_monic();
}

std::string KPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = coeff(i);
        if (c == 0) continue;
        Rat abs_c = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? "-" : "+");
        }
        if (i == 0 || abs_c != 1) out << rat_to_string(abs_c);
        if (i >= 1) {
            out << var;
            if (i >= 2) out << "^" << i;
        }
    }
    return out.str();
}

void KRat::normalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator in Q(kappa)");
    if (num_.is_zero()) {
        den_ = KPoly(Rat(1));
        return;
    }
    KPoly g = KPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        KPoly q, r;
        KPoly::divmod(num_, g, q, r);
        num_ = q;
        KPoly::divmod(den_, g, q, r);
        den_ = q;
    }
    // make the denominator monic
    Rat l = den_.lead();
    if (l != 1) {
        num_ = num_ * KPoly(Rat(1) / l);
        den_ = den_ * KPoly(Rat(1) / l);
    }
}

std::string KRat::str(const std::string& var) const {
    if (den_ == KPoly(Rat(1))) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

} // namespace kkb
