// The rational function field Q(t), used as an honest transcendental
// coefficient field: genericity statements become polynomial identities.

#ifndef MNK_POLY_FRACTION_HPP
#define MNK_POLY_FRACTION_HPP

#include <stdexcept>
#include <utility>

#include "mnk/poly.hpp"

namespace mnk {

class PolyFraction {
public:
    PolyFraction() : num_(), den_(Poly::one()) {}
    explicit PolyFraction(Poly num) : num_(std::move(num)), den_(Poly::one()) {}
    PolyFraction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        reduce();
    }

    static PolyFraction zero() { return PolyFraction(); }
    static PolyFraction one() { return PolyFraction(Poly::one()); }
    static PolyFraction indeterminate() { return PolyFraction(Poly::monomial(1)); }
    static PolyFraction from_rational(Rational c) { return PolyFraction(Poly(std::move(c))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend PolyFraction operator+(const PolyFraction& a, const PolyFraction& b) {
        return PolyFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend PolyFraction operator-(const PolyFraction& a, const PolyFraction& b) {
        return PolyFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    PolyFraction operator-() const {
        PolyFraction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend PolyFraction operator*(const PolyFraction& a, const PolyFraction& b) {
        return PolyFraction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend PolyFraction operator/(const PolyFraction& a, const PolyFraction& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return PolyFraction(a.num_ * b.den_, a.den_ * b.num_);
    }
    PolyFraction& operator+=(const PolyFraction& o) { *this = *this + o; return *this; }
    PolyFraction& operator-=(const PolyFraction& o) { *this = *this - o; return *this; }
    PolyFraction& operator*=(const PolyFraction& o) { *this = *this * o; return *this; }

    friend bool operator==(const PolyFraction& a, const PolyFraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly::one();
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        Rational lead = den_.leading();
        if (!(lead == 1)) {
            Rational s = inv(lead);
            num_ = s * num_;
            den_ = s * den_;
        }
    }
    Poly num_, den_;  // den monic, gcd(num, den) = 1
};

inline bool is_zero(const PolyFraction& a) { return a.is_zero(); }
inline PolyFraction zero_like(const PolyFraction&) { return PolyFraction::zero(); }
inline PolyFraction one_like(const PolyFraction&) { return PolyFraction::one(); }
inline PolyFraction inv(const PolyFraction& a) { return PolyFraction::one() / a; }
inline PolyFraction exact_div(const PolyFraction& a, const PolyFraction& b) { return a / b; }

inline std::string to_string(const PolyFraction& a, const std::string& var = "t") {
    if (a.den() == Poly::one()) return to_string(a.num(), var);
    return "(" + to_string(a.num(), var) + ")/(" + to_string(a.den(), var) + ")";
}

}  // namespace mnk

#endif
