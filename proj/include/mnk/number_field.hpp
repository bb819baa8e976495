// Arithmetic in Q(alpha) = Q[x]/(q) for an irreducible modulus q.

#ifndef MNK_NUMBER_FIELD_HPP
#define MNK_NUMBER_FIELD_HPP

#include <memory>
#include <stdexcept>

#include "mnk/poly.hpp"

namespace mnk {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero in number field") {}
};

struct MixedCoefficients : std::domain_error {
    explicit MixedCoefficients(const char* what) : std::domain_error(what) {}
};

class NumberFieldElement {
public:
    NumberFieldElement() = default;
    NumberFieldElement(Poly residue, std::shared_ptr<const Poly> modulus)
        : r_(std::move(residue)), q_(std::move(modulus)) {
        if (!q_ || q_->degree() < 1) throw std::invalid_argument("invalid number field modulus");
        r_ = r_ % *q_;
    }

    static NumberFieldElement zero(std::shared_ptr<const Poly> modulus) {
        return NumberFieldElement(Poly::zero(), std::move(modulus));
    }
    static NumberFieldElement one(std::shared_ptr<const Poly> modulus) {
        return NumberFieldElement(Poly::one(), std::move(modulus));
    }
    // the class of x, i.e. the generator alpha
    static NumberFieldElement generator(std::shared_ptr<const Poly> modulus) {
        return NumberFieldElement(Poly::monomial(1), std::move(modulus));
    }
    static NumberFieldElement from_rational(Rational c, std::shared_ptr<const Poly> modulus) {
        return NumberFieldElement(Poly(std::move(c)), std::move(modulus));
    }

    const Poly& residue() const { return r_; }
    const std::shared_ptr<const Poly>& modulus() const { return q_; }
    bool is_zero() const { return r_.is_zero(); }

    friend NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b) {
        check(a, b);
        return NumberFieldElement(a.r_ + b.r_, a.q_);
    }
    friend NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b) {
        check(a, b);
        return NumberFieldElement(a.r_ - b.r_, a.q_);
    }
    NumberFieldElement operator-() const { return NumberFieldElement(-r_, q_); }
    friend NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b) {
        check(a, b);
        return NumberFieldElement((a.r_ * b.r_) % *a.q_, a.q_);
    }
    NumberFieldElement& operator+=(const NumberFieldElement& o) { *this = *this + o; return *this; }
    NumberFieldElement& operator-=(const NumberFieldElement& o) { *this = *this - o; return *this; }
    NumberFieldElement& operator*=(const NumberFieldElement& o) { *this = *this * o; return *this; }

    friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
        check(a, b);
        return a.r_ == b.r_;
    }

private:
    static void check(const NumberFieldElement& a, const NumberFieldElement& b) {
        if (!a.q_ || !b.q_ || !(*a.q_ == *b.q_))
            throw MixedCoefficients("number field elements with different moduli");
    }
    Poly r_;
    std::shared_ptr<const Poly> q_;
};

inline bool is_zero(const NumberFieldElement& a) { return a.is_zero(); }
inline NumberFieldElement zero_like(const NumberFieldElement& a) {
    return NumberFieldElement::zero(a.modulus());
}
inline NumberFieldElement one_like(const NumberFieldElement& a) {
    return NumberFieldElement::one(a.modulus());
}

// Inverse by extended Euclid on (residue, modulus); irreducibility of the
// modulus makes the gcd a nonzero constant for every nonzero residue.
inline NumberFieldElement nf_inverse(const NumberFieldElement& a) {
    if (a.is_zero()) throw DivisionByZero();
    Poly g, u, v;
    poly_xgcd(a.residue(), *a.modulus(), g, u, v);
    if (g.degree() != 0)
        throw std::domain_error("modulus is not irreducible: nontrivial gcd found");
    // g is monic, hence exactly 1
    return NumberFieldElement(u, a.modulus());
}

inline NumberFieldElement inv(const NumberFieldElement& a) { return nf_inverse(a); }

inline NumberFieldElement exact_div(const NumberFieldElement& a, const NumberFieldElement& b) {
    return a * nf_inverse(b);
}

inline std::string to_string(const NumberFieldElement& a, const std::string& var = "a") {
    return to_string(a.residue(), var);
}

}  // namespace mnk

#endif
