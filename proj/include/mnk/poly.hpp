// Dense univariate polynomials over Q, lowest degree first.

#ifndef MNK_POLY_HPP
#define MNK_POLY_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mnk/rational.hpp"

namespace mnk {

class Poly {
public:
    Poly() = default;
    explicit Poly(Rational c) {
        if (!mnk::is_zero(c)) c_.push_back(std::move(c));
    }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rational(1)); }
    // x^k
    static Poly monomial(int k, Rational c = Rational(1)) {
        std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
        v.back() = std::move(c);
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<size_t>(k)];
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<Rational> r(c_);
        for (auto& x : r) x = -x;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Rational& s, const Poly& p) {
        if (mnk::is_zero(s)) return Poly();
        std::vector<Rational> r(p.c_);
        for (auto& x : r) x *= s;
        return Poly(std::move(r));
    }
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Rational eval(const Rational& x) const {
        Rational r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rational> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rational(i) * c_[i];
        return Poly(std::move(r));
    }

    Poly monic() const {
        if (is_zero()) return Poly();
        return inv(leading()) * *this;
    }

    // Euclidean division: returns (quotient, remainder) with deg r < deg b.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly q, r = a;
        Rational lead_inv = inv(b.leading());
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int d = r.degree() - b.degree();
            Rational c = r.leading() * lead_inv;
            Poly t = Poly::monomial(d, c);
            q += t;
            r -= t * b;
        }
        return {q, r};
    }

    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

private:
    void trim() {
        while (!c_.empty() && mnk::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }
inline Poly zero_like(const Poly&) { return Poly(); }
inline Poly one_like(const Poly&) { return Poly::one(); }

// Exact division; throws if b does not divide a.
inline Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

// Monic gcd.
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

// Extended Euclid: g = u*a + v*b with g monic (or zero).
inline void poly_xgcd(const Poly& a, const Poly& b, Poly& g, Poly& u, Poly& v) {
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::one(), u1 = Poly::zero();
    Poly v0 = Poly::zero(), v1 = Poly::one();
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        u0 = std::exchange(u1, u0 - q * u1);
        v0 = std::exchange(v1, v0 - q * v1);
    }
    if (!r0.is_zero()) {
        Rational s = inv(r0.leading());
        r0 = s * r0;
        u0 = s * u0;
        v0 = s * v0;
    }
    g = r0;
    u = u0;
    v = v0;
}

inline Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) return p;
    Poly g = poly_gcd(p, p.derivative());
    return g.degree() <= 0 ? p.monic() : exact_div(p, g).monic();
}

inline std::string to_string(const Poly& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(k);
        if (mnk::is_zero(c)) continue;
        bool first = s.empty();
        if (!first)
            s += (c > 0) ? " + " : " - ";
        else if (c < 0)
            s += "-";
        Rational ac = Rational(boost::multiprecision::abs(c));
        bool unit_coeff = (ac == 1) && k != 0;
        if (!unit_coeff) s += to_string(ac);
        if (k > 0) {
            if (!unit_coeff) s += "*";
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

}  // namespace mnk

#endif
