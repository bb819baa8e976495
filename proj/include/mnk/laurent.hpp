// Laurent polynomials Q[t, t^-1], dense with an exponent offset. Units
// are exactly the monomials c*t^k with c != 0.

#ifndef MNK_LAURENT_HPP
#define MNK_LAURENT_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "mnk/poly.hpp"

namespace mnk {

struct ZeroPolynomial : std::domain_error {
    ZeroPolynomial() : std::domain_error("zero Laurent polynomial has no unit normalization") {}
};

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Rational c) : LaurentPoly(Poly(std::move(c)), 0) {}
    LaurentPoly(Poly p, int offset) : off_(offset), p_(std::move(p)) { normalize(); }

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(Rational(1)); }
    // c * t^k
    static LaurentPoly monomial(int k, Rational c = Rational(1)) {
        return LaurentPoly(Poly(std::move(c)), k);
    }
    static LaurentPoly from_poly(Poly p) { return LaurentPoly(std::move(p), 0); }

    bool is_zero() const { return p_.is_zero(); }
    int low_exp() const { return off_; }
    int high_exp() const { return off_ + p_.degree(); }
    // coefficient of t^k
    Rational coeff(int k) const { return p_.coeff(k - off_); }
    // the polynomial part with the offset stripped; nonzero constant term
    const Poly& mantissa() const { return p_; }

    bool is_unit() const { return !p_.is_zero() && p_.degree() == 0; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int off = std::min(a.off_, b.off_);
        return LaurentPoly(a.shifted(a.off_ - off) + b.shifted(b.off_ - off), off);
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        return a + (-b);
    }
    LaurentPoly operator-() const { return LaurentPoly(-p_, off_); }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        return LaurentPoly(a.p_ * b.p_, a.off_ + b.off_);
    }
    friend LaurentPoly operator*(const Rational& s, const LaurentPoly& a) {
        return LaurentPoly(s * a.p_, a.off_);
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& o) { *this = *this - o; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return (a.is_zero() && b.is_zero()) || (a.off_ == b.off_ && a.p_ == b.p_);
    }

private:
    Poly shifted(int k) const {  // p * x^k as plain Poly
        return p_ * Poly::monomial(k);
    }
    void normalize() {
        if (p_.is_zero()) {
            off_ = 0;
            return;
        }
        int low = 0;
        while (p_.coeff(low).is_zero()) ++low;
        if (low > 0) {
            std::vector<Rational> c(p_.coeffs().begin() + low, p_.coeffs().end());
            p_ = Poly(std::move(c));
            off_ += low;
        }
    }

    int off_ = 0;
    Poly p_;  // nonzero constant term unless zero
};

inline bool is_zero(const LaurentPoly& a) { return a.is_zero(); }
inline LaurentPoly zero_like(const LaurentPoly&) { return LaurentPoly(); }
inline LaurentPoly one_like(const LaurentPoly&) { return LaurentPoly::one(); }

// Exact division; throws when b does not divide a in Q[t,t^-1].
inline LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("Laurent division by zero");
    if (a.is_zero()) return a;
    return LaurentPoly(exact_div(a.mantissa(), b.mantissa()), a.low_exp() - b.low_exp());
}

// Writes f = c * t^k * g with g monic with nonzero constant term.
struct LaurentNormalForm {
    int unit_exponent;
    Rational unit_constant;
    Poly primitive;  // monic, nonzero constant term
};

inline LaurentNormalForm laurent_normalize(const LaurentPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    Rational c = f.mantissa().leading();
    return {f.low_exp(), c, f.mantissa().monic()};
}

inline std::string to_string(const LaurentPoly& f, const std::string& var = "t") {
    if (f.is_zero()) return "0";
    std::string s;
    for (int k = f.high_exp(); k >= f.low_exp(); --k) {
        Rational c = f.coeff(k);
        if (c.is_zero()) continue;
        bool first = s.empty();
        if (!first) s += (c > 0) ? " + " : " - ";
        Rational ac = first ? c : Rational(boost::multiprecision::abs(c));
        bool unit_coeff = (ac == 1) && k != 0;
        if (!unit_coeff) s += to_string(ac);
        if (k != 0) {
            if (!unit_coeff) s += "*";
            s += var;
            if (k != 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

}  // namespace mnk

#endif
