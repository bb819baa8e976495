// Rational factorization of univariate polynomials by Kronecker's method:
// evaluate at small integers, enumerate divisor combinations, interpolate
// candidate factors. Exponential in the degree, which is fine for the
// degree <= 6 characteristic polynomials this library meets.

#ifndef MNK_POLY_FACTOR_HPP
#define MNK_POLY_FACTOR_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "mnk/poly.hpp"

namespace mnk {
namespace detail {

using IntPoly = std::vector<BigInt>;  // lowest degree first, trimmed

inline void ipoly_trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline BigInt ipoly_eval(const IntPoly& p, const BigInt& x) {
    BigInt r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

inline Poly ipoly_to_poly(const IntPoly& p) {
    std::vector<Rational> c(p.size());
    for (size_t i = 0; i < p.size(); ++i) c[i] = Rational(p[i]);
    return Poly(std::move(c));
}

// Clear denominators and content; sign of the leading coefficient is kept.
inline IntPoly to_primitive_int(const Poly& p) {
    BigInt den_lcm = 1;
    for (const auto& c : p.coeffs())
        den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
    IntPoly r(p.coeffs().size());
    BigInt content = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        r[i] = boost::multiprecision::numerator(p.coeffs()[i] * Rational(den_lcm));
        content = boost::multiprecision::gcd(content, r[i]);
    }
    if (content > 1)
        for (auto& c : r) c /= content;
    return r;
}

inline std::vector<BigInt> positive_divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> d;
    for (BigInt i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            d.push_back(i);
            if (i * i != n) d.push_back(n / i);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

// Exact division test over Q; returns quotient as primitive integer poly.
inline bool ipoly_try_div(const IntPoly& a, const IntPoly& b, IntPoly& q_out) {
    Poly qa = ipoly_to_poly(a), qb = ipoly_to_poly(b);
    auto [q, r] = divmod(qa, qb);
    if (!r.is_zero()) return false;
    q_out = to_primitive_int(q);
    return true;
}

// Lagrange interpolation through integer points; false if the result is
// not an integer polynomial of degree exactly d.
inline bool interpolate_int(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys,
                            int d, IntPoly& out) {
    Poly g;
    for (size_t i = 0; i < xs.size(); ++i) {
        Poly basis = Poly::one();
        Rational denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            Rational neg = Rational(xs[j]);
            neg = -neg;
            basis *= Poly({neg, Rational(1)});
            denom *= Rational(BigInt(xs[i] - xs[j]));
        }
        g += (Rational(ys[i]) / denom) * basis;
    }
    if (g.degree() != d) return false;
    for (const auto& c : g.coeffs())
        if (boost::multiprecision::denominator(c) != 1) return false;
    out = to_primitive_int(g);
    return true;
}

// Splits off one nontrivial factor of degree in [1, deg/2], or returns
// false when p is irreducible. p is primitive with no integer roots and
// degree >= 2.
inline bool kronecker_split(const IntPoly& p, IntPoly& factor, IntPoly& cofactor) {
    int deg = static_cast<int>(p.size()) - 1;
    // linear factors would need a rational root; callers strip those first,
    // but a non-monic primitive poly can still have one (q*x - r). Cheap to
    // include d = 1 in the sweep anyway.
    for (int d = 1; d <= deg / 2; ++d) {
        std::vector<BigInt> xs;
        for (BigInt x = 0; static_cast<int>(xs.size()) < d + 1; x = (x > 0) ? BigInt(-x) : BigInt(1 - x))
            xs.push_back(x);
        std::vector<std::vector<BigInt>> divs(xs.size());
        for (size_t i = 0; i < xs.size(); ++i) {
            for (const auto& dv : positive_divisors(ipoly_eval(p, xs[i]))) {
                if (i == 0) {
                    divs[i].push_back(dv);  // sign of the factor is free: fix v_0 > 0
                } else {
                    divs[i].push_back(dv);
                    divs[i].push_back(-dv);
                }
            }
        }
        std::vector<size_t> idx(xs.size(), 0);
        std::vector<BigInt> ys(xs.size());
        while (true) {
            for (size_t i = 0; i < xs.size(); ++i) ys[i] = divs[i][idx[i]];
            IntPoly cand;
            if (interpolate_int(xs, ys, d, cand) && ipoly_try_div(p, cand, cofactor)) {
                factor = cand;
                return true;
            }
            size_t i = 0;
            for (; i < idx.size(); ++i) {
                if (++idx[i] < divs[i].size()) break;
                idx[i] = 0;
            }
            if (i == idx.size()) break;
        }
    }
    return false;
}

inline void factor_int_rec(IntPoly p, std::vector<IntPoly>& out) {
    ipoly_trim(p);
    int deg = static_cast<int>(p.size()) - 1;
    if (deg <= 0) return;
    if (deg == 1) {
        out.push_back(p);
        return;
    }
    // powers of x
    size_t low = 0;
    while (low < p.size() && p[low] == 0) ++low;
    if (low > 0) {
        for (size_t i = 0; i < low; ++i) out.push_back({BigInt(0), BigInt(1)});
        p.erase(p.begin(), p.begin() + static_cast<long>(low));
        factor_int_rec(std::move(p), out);
        return;
    }
    // rational roots r/s with r | p(0), s | leading
    for (const auto& r : positive_divisors(p.front())) {
        for (const auto& s : positive_divisors(p.back())) {
            for (int sign : {1, -1}) {
                Rational root(sign * r, s);
                if (!mnk::is_zero(ipoly_to_poly(p).eval(root))) continue;
                IntPoly lin = {-sign * r, s};
                IntPoly co;
                ipoly_try_div(p, lin, co);
                out.push_back(lin);
                factor_int_rec(std::move(co), out);
                return;
            }
        }
    }
    IntPoly f, co;
    if (kronecker_split(p, f, co)) {
        factor_int_rec(std::move(f), out);
        factor_int_rec(std::move(co), out);
        return;
    }
    out.push_back(std::move(p));
}

struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int k = a.degree(); k >= 0; --k)
            if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
        return false;
    }
};

}  // namespace detail

struct PolyFactor {
    Poly factor;  // monic, irreducible over Q
    int multiplicity;
};

// Factorization over Q into monic irreducibles; the product over all
// factors with multiplicities equals the input up to a rational constant.
inline std::vector<PolyFactor> poly_factor(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
    std::vector<detail::IntPoly> raw;
    detail::factor_int_rec(detail::to_primitive_int(p), raw);
    std::map<Poly, int, detail::PolyLess> grouped;
    for (const auto& f : raw) grouped[detail::ipoly_to_poly(f).monic()]++;
    std::vector<PolyFactor> out;
    for (auto& [f, m] : grouped) out.push_back({f, m});
    return out;
}

inline bool is_irreducible(const Poly& p) {
    auto fs = poly_factor(p);
    return fs.size() == 1 && fs.front().multiplicity == 1 && fs.front().factor.degree() == p.degree();
}

}  // namespace mnk

#endif
