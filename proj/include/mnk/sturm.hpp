// Real-root isolation via Sturm sequences and bisection.

#ifndef MNK_STURM_HPP
#define MNK_STURM_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mnk/poly.hpp"

namespace mnk {

struct NotSquarefree : std::domain_error {
    NotSquarefree() : std::domain_error("polynomial is not squarefree") {}
};

// Standard Sturm chain p, p', -rem(...), ...
inline std::vector<Poly> sturm_sequence(const Poly& p) {
    std::vector<Poly> s;
    s.push_back(p);
    s.push_back(p.derivative());
    while (!s.back().is_zero()) {
        Poly r = s[s.size() - 2] % s.back();
        s.push_back(-r);
    }
    s.pop_back();
    return s;
}

namespace detail {

inline int sign_of(const Rational& r) { return r.is_zero() ? 0 : (r < 0 ? -1 : 1); }

inline int variations_at(const std::vector<Poly>& chain, const Rational& x) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign_of(q.eval(x));
        if (s != 0) {
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
    }
    return var;
}

// Sign variations as x -> +inf (dir = +1) or -inf (dir = -1).
inline int variations_at_infinity(const std::vector<Poly>& chain, int dir) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        if (q.is_zero()) continue;
        int s = sign_of(q.leading());
        if (dir < 0 && q.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace detail

// Number of distinct real roots in the half-open interval (a, b].
inline int sturm_count(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
    return detail::variations_at(chain, a) - detail::variations_at(chain, b);
}

inline int sturm_count_all(const std::vector<Poly>& chain) {
    return detail::variations_at_infinity(chain, -1) - detail::variations_at_infinity(chain, +1);
}

// Isolating interval for a single real root of `modulus`; endpoints are
// never roots themselves, so signs at the endpoints differ.
struct RealRootLabel {
    Rational lo, hi;
    std::shared_ptr<const Poly> modulus;

    // Shrink the interval below `width` by bisection.
    void refine(const Rational& width) {
        while (hi - lo >= width) {
            Rational mid = (lo + hi) / 2;
            Rational v = modulus->eval(mid);
            if (v.is_zero()) {
                // mid is a rational root; nudge the endpoints around it
                Rational d = (hi - lo) / 4;
                while (d >= width / 2) d /= 2;
                lo = mid - d;
                hi = mid + d;
                return;
            }
            if (detail::sign_of(v) == detail::sign_of(modulus->eval(lo)))
                lo = mid;
            else
                hi = mid;
        }
    }
};

// All real roots of a squarefree polynomial, as disjoint isolating
// intervals in increasing order.
inline std::vector<RealRootLabel> isolate_real_roots(const Poly& p) {
    if (p.is_zero() || p.degree() == 0)
        return {};
    if (poly_gcd(p, p.derivative()).degree() > 0) throw NotSquarefree();
    auto chain = sturm_sequence(p);
    auto mod = std::make_shared<const Poly>(p);

    // Cauchy bound: all roots lie in (-B, B)
    Rational bound(1);
    for (int k = 0; k < p.degree(); ++k) {
        Rational t = 1 + boost::multiprecision::abs(p.coeff(k) / p.leading());
        if (t > bound) bound = t;
    }
    while (p.eval(bound).is_zero() || p.eval(-bound).is_zero()) bound += 1;

    std::vector<RealRootLabel> out;
    struct Seg { Rational a, b; int count; };
    std::vector<Seg> stack{{-bound, bound, sturm_count(chain, -bound, bound)}};
    // Depth-first from the left so results come out sorted after a reverse
    std::vector<Seg> ordered;
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1 && !p.eval(s.b).is_zero()) {
            // b is not a root (half-open counting already excludes a)
            ordered.push_back(s);
            continue;
        }
        Rational mid = (s.a + s.b) / 2;
        if (p.eval(mid).is_zero()) {
            Rational d = (s.b - s.a) / 4;
            while (sturm_count(chain, mid - d, mid + d) > 1 ||
                   p.eval(mid - d).is_zero() || p.eval(mid + d).is_zero())
                d /= 2;
            int left = sturm_count(chain, s.a, mid - d);
            int right = sturm_count(chain, mid + d, s.b);
            stack.push_back({s.a, mid - d, left});
            ordered.push_back({mid - d, mid + d, 1});
            stack.push_back({mid + d, s.b, right});
        } else {
            int left = sturm_count(chain, s.a, mid);
            stack.push_back({s.a, mid, left});
            stack.push_back({mid, s.b, s.count - left});
        }
    }
    for (auto& s : ordered) out.push_back({s.a, s.b, mod});
    std::sort(out.begin(), out.end(),
              [](const RealRootLabel& x, const RealRootLabel& y) { return x.lo < y.lo; });
    return out;
}

}  // namespace mnk

#endif
