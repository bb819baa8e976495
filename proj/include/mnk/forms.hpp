// Exact symbolic forms on the coordinate chart (x, y, w1, w2) of the
// Inoue-surface mapping torus. Coefficients live in the Laurent ring
// Q[u, u^-1] with u = w2^(1/2); the orthonormal coframe of the Tricerri
// metric introduces the half powers, every form in the identity battery
// stays inside this ring.

#ifndef MNK_FORMS_HPP
#define MNK_FORMS_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "mnk/laurent.hpp"

namespace mnk {

struct DegreeOverflow : std::domain_error {
    DegreeOverflow() : std::domain_error("wedge product exceeds the manifold dimension") {}
};

struct ThetaNotClosed : std::domain_error {
    ThetaNotClosed() : std::domain_error("twisting one-form is not closed") {}
};

// Coframe index order: 0 = dx, 1 = dy, 2 = dw1, 3 = dw2. A form stores
// one Laurent coefficient in u per coframe subset (bitmask).
class DifferentialForm {
public:
    DifferentialForm() = default;

    static DifferentialForm zero() { return {}; }
    static DifferentialForm scalar(LaurentPoly c) {
        DifferentialForm f;
        f.c_[0] = std::move(c);
        return f;
    }
    // c * (wedge of the coframe elements in `mask`, increasing index order)
    static DifferentialForm monomial(unsigned mask, LaurentPoly c) {
        DifferentialForm f;
        f.c_[mask & 15u] = std::move(c);
        return f;
    }

    const LaurentPoly& coeff(unsigned mask) const { return c_[mask & 15u]; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    // -1 for the zero form; throws for inhomogeneous forms
    int degree() const {
        int deg = -1;
        for (unsigned m = 0; m < 16; ++m) {
            if (c_[m].is_zero()) continue;
            int d = __builtin_popcount(m);
            if (deg >= 0 && d != deg)
                throw std::domain_error("inhomogeneous differential form");
            deg = d;
        }
        return deg;
    }

    friend DifferentialForm operator+(const DifferentialForm& a, const DifferentialForm& b) {
        DifferentialForm r;
        for (unsigned m = 0; m < 16; ++m) r.c_[m] = a.c_[m] + b.c_[m];
        return r;
    }
    friend DifferentialForm operator-(const DifferentialForm& a, const DifferentialForm& b) {
        DifferentialForm r;
        for (unsigned m = 0; m < 16; ++m) r.c_[m] = a.c_[m] - b.c_[m];
        return r;
    }
    DifferentialForm operator-() const {
        DifferentialForm r;
        for (unsigned m = 0; m < 16; ++m) r.c_[m] = -c_[m];
        return r;
    }
    friend DifferentialForm operator*(const Rational& s, const DifferentialForm& a) {
        DifferentialForm r;
        for (unsigned m = 0; m < 16; ++m) r.c_[m] = s * a.c_[m];
        return r;
    }
    friend DifferentialForm operator*(const LaurentPoly& s, const DifferentialForm& a) {
        DifferentialForm r;
        for (unsigned m = 0; m < 16; ++m) r.c_[m] = s * a.c_[m];
        return r;
    }

    friend bool operator==(const DifferentialForm& a, const DifferentialForm& b) {
        return a.c_ == b.c_;
    }

private:
    std::array<LaurentPoly, 16> c_{};
};

namespace detail {

// Sign of merging two disjoint increasing index sets: number of pairs
// (i in a, j in b) with j < i.
inline int wedge_sign(unsigned a, unsigned b) {
    int inversions = 0;
    for (int i = 0; i < 4; ++i) {
        if (!(a & (1u << i))) continue;
        for (int j = 0; j < i; ++j)
            if (b & (1u << j)) ++inversions;
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

// d/dw2 on a coefficient in u, with w2 = u^2: (1/(2u)) d/du.
inline LaurentPoly dw2_derivative(const LaurentPoly& f) {
    LaurentPoly out;
    for (int k = f.low_exp(); k <= f.high_exp(); ++k) {
        Rational c = f.coeff(k);
        if (c.is_zero()) continue;
        out += LaurentPoly::monomial(k - 2, Rational(k, 2) * c);
    }
    return out;
}

}  // namespace detail

inline DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
    int da = a.degree(), db = b.degree();
    if (da >= 0 && db >= 0 && da + db > 4) throw DegreeOverflow();
    DifferentialForm r;
    for (unsigned ma = 0; ma < 16; ++ma) {
        if (a.coeff(ma).is_zero()) continue;
        for (unsigned mb = 0; mb < 16; ++mb) {
            if (b.coeff(mb).is_zero() || (ma & mb)) continue;
            LaurentPoly term = a.coeff(ma) * b.coeff(mb);
            if (detail::wedge_sign(ma, mb) < 0) term = -term;
            r = r + DifferentialForm::monomial(ma | mb, std::move(term));
        }
    }
    return r;
}

inline DifferentialForm exterior_d(const DifferentialForm& a) {
    constexpr unsigned dw2_bit = 1u << 3;
    DifferentialForm r;
    for (unsigned m = 0; m < 16; ++m) {
        if (a.coeff(m).is_zero() || (m & dw2_bit)) continue;
        LaurentPoly df = detail::dw2_derivative(a.coeff(m));
        if (df.is_zero()) continue;
        // dw2 wedged in from the left, then sorted into place
        int sign = detail::wedge_sign(dw2_bit, m);
        r = r + DifferentialForm::monomial(m | dw2_bit, (sign < 0) ? -df : df);
    }
    return r;
}

inline DifferentialForm d_theta(const DifferentialForm& a, const DifferentialForm& theta) {
    if (!exterior_d(theta).is_zero()) throw ThetaNotClosed();
    return exterior_d(a) - wedge(theta, a);
}

// Hodge star of the Tricerri metric, computed through its orthonormal
// coframe e1 = dw1/w2, e2 = dw2/w2, e3 = u*dx, e4 = u*dy with the
// orientation e1^e2^e3^e4 > 0.
inline DifferentialForm hodge_star(const DifferentialForm& a) {
    // coordinate index -> (orthonormal index, scale): dx = u^-1 e3, etc.
    struct Entry { int e; int upow; };
    static constexpr Entry to_frame[4] = {{2, -1}, {3, -1}, {0, 2}, {1, 2}};
    static constexpr Entry from_frame[4] = {{2, -2}, {3, -2}, {0, 1}, {1, 1}};

    auto perm_sign = [](const std::vector<int>& v) {
        int s = 1;
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = i + 1; j < v.size(); ++j)
                if (v[i] > v[j]) s = -s;
        return s;
    };

    DifferentialForm r;
    for (unsigned m = 0; m < 16; ++m) {
        if (a.coeff(m).is_zero()) continue;
        // to orthonormal coframe
        std::vector<int> frame_idx;
        int upow = 0;
        for (int i = 0; i < 4; ++i)
            if (m & (1u << i)) {
                frame_idx.push_back(to_frame[i].e);
                upow += to_frame[i].upow;
            }
        int sign = perm_sign(frame_idx);
        unsigned fmask = 0;
        for (int e : frame_idx) fmask |= 1u << e;
        // star on the orthonormal monomial: complement with the sign of
        // the shuffle (T, T^c) against the orientation order
        unsigned cmask = (~fmask) & 15u;
        std::vector<int> shuffle;
        for (int e = 0; e < 4; ++e)
            if (fmask & (1u << e)) shuffle.push_back(e);
        for (int e = 0; e < 4; ++e)
            if (cmask & (1u << e)) shuffle.push_back(e);
        sign *= perm_sign(shuffle);
        // back to the coordinate coframe
        std::vector<int> coord_idx;
        for (int e = 0; e < 4; ++e)
            if (cmask & (1u << e)) {
                coord_idx.push_back(from_frame[e].e);
                upow += from_frame[e].upow;
            }
        sign *= perm_sign(coord_idx);
        unsigned out_mask = 0;
        for (int i : coord_idx) out_mask |= 1u << i;
        LaurentPoly c = a.coeff(m) * LaurentPoly::monomial(upow);
        if (sign < 0) c = -c;
        r = r + DifferentialForm::monomial(out_mask, c);
    }
    return r;
}

inline DifferentialForm delta_theta(const DifferentialForm& a, const DifferentialForm& theta) {
    return -hodge_star(d_theta(hodge_star(a), -theta));
}

inline DifferentialForm laplacian_theta(const DifferentialForm& a,
                                        const DifferentialForm& theta) {
    return delta_theta(d_theta(a, theta), theta) + d_theta(delta_theta(a, theta), theta);
}

// ---------------------------------------------------------------------
// The Tricerri data on the chart, with w2 = u^2.

struct TricerriData {
    DifferentialForm theta;   // dw2 / w2
    DifferentialForm eta;     // -dw1 / w2
    DifferentialForm omega1;  // -2 dw1^dw2 / w2^2
    DifferentialForm omega2;  // -2 w2 dx^dy
    DifferentialForm omega;   // omega1 + omega2
    DifferentialForm omega_metric;  // normalized so omega(X,Y) = g(JX,Y)
    Rational normalization;         // omega_metric = normalization * omega
    DifferentialForm dvol;          // e1^e2^e3^e4
};

inline TricerriData tricerri_data() {
    constexpr unsigned DX = 1u << 0, DY = 1u << 1, DW1 = 1u << 2, DW2 = 1u << 3;
    TricerriData t;
    t.theta = DifferentialForm::monomial(DW2, LaurentPoly::monomial(-2));
    t.eta = DifferentialForm::monomial(DW1, LaurentPoly::monomial(-2, Rational(-1)));
    t.omega1 = DifferentialForm::monomial(DW1 | DW2, LaurentPoly::monomial(-4, Rational(-2)));
    t.omega2 = DifferentialForm::monomial(DX | DY, LaurentPoly::monomial(2, Rational(-2)));
    t.omega = t.omega1 + t.omega2;
    // omega(X,Y) = g(JX,Y) with J dx -> dy, J dw1 -> dw2 gives
    // dw1^dw2/w2^2 + w2 dx^dy = -(omega1 + omega2)/2
    t.normalization = Rational(-1, 2);
    t.omega_metric = t.normalization * t.omega;
    t.dvol = DifferentialForm::monomial(DX | DY | DW1 | DW2, LaurentPoly::monomial(-2));
    return t;
}

struct IdentityCheck {
    std::string name;
    bool pass = false;
    std::string residual;  // empty when the identity holds exactly
};

struct TricerriReport {
    std::vector<IdentityCheck> identities;
    std::vector<IdentityCheck> negative_controls;
    Rational normalization;
    bool all_pass = true;
};

namespace detail {

inline std::string form_to_string(const DifferentialForm& f);

inline IdentityCheck identity(const std::string& name, const DifferentialForm& residual) {
    IdentityCheck c;
    c.name = name;
    c.pass = residual.is_zero();
    if (!c.pass) c.residual = form_to_string(residual);
    return c;
}

inline std::string form_to_string(const DifferentialForm& f) {
    static const char* names[4] = {"dx", "dy", "dw1", "dw2"};
    if (f.is_zero()) return "0";
    std::string s;
    for (unsigned m = 0; m < 16; ++m) {
        if (f.coeff(m).is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + to_string(f.coeff(m), "u") + ")";
        bool first = true;
        for (int i = 0; i < 4; ++i)
            if (m & (1u << i)) {
                s += (first ? " " : "^");
                s += names[i];
                first = false;
            }
    }
    return s;
}

}  // namespace detail

// The full symbolic battery for the Tricerri LCS/LCK structure. Every
// identity is an exact zero in the coefficient ring; the two negative
// controls must produce nonzero residuals (they pin the conventions).
inline TricerriReport verify_tricerri() {
    TricerriData t = tricerri_data();
    TricerriReport rep;
    rep.normalization = t.normalization;
    auto add = [&](const std::string& name, const DifferentialForm& residual) {
        rep.identities.push_back(detail::identity(name, residual));
    };
    add("d(theta) = 0", exterior_d(t.theta));
    add("d(omega) = theta ^ omega", exterior_d(t.omega) - wedge(t.theta, t.omega));
    // nondegeneracy: omega ^ omega is a nonzero top form
    {
        IdentityCheck c;
        c.name = "omega nondegenerate (omega^omega != 0)";
        c.pass = !wedge(t.omega, t.omega).is_zero();
        if (!c.pass) c.residual = "omega ^ omega = 0";
        rep.identities.push_back(c);
    }
    add("omega1 = d_theta(eta)", d_theta(t.eta, t.theta) - t.omega1);
    add("theta ^ omega1 = 0", wedge(t.theta, t.omega1));
    add("d(omega1) = 0", exterior_d(t.omega1));
    add("d_theta(omega2) = 0", d_theta(t.omega2, t.theta));
    add("delta_theta(omega2) = 0", delta_theta(t.omega2, t.theta));
    add("laplacian_theta(theta ^ omega) = 0",
        laplacian_theta(wedge(t.theta, t.omega), t.theta));
    add("*omega2 = omega1", hodge_star(t.omega2) - t.omega1);
    add("dvol = omega_metric^2 / 2",
        t.dvol - Rational(1, 2) * wedge(t.omega_metric, t.omega_metric));

    // controls: doubling theta breaks the LCS equation; omega1 alone is
    // decomposable, hence degenerate
    {
        DifferentialForm two_theta = Rational(2) * t.theta;
        DifferentialForm res = exterior_d(t.omega) - wedge(two_theta, t.omega);
        IdentityCheck c;
        c.name = "control: d(omega) != (2 theta) ^ omega";
        c.pass = !res.is_zero();
        c.residual = detail::form_to_string(res);
        rep.negative_controls.push_back(c);
    }
    {
        DifferentialForm sq = wedge(t.omega1, t.omega1);
        IdentityCheck c;
        c.name = "control: omega1 is degenerate (omega1^omega1 = 0)";
        c.pass = sq.is_zero();
        c.residual = detail::form_to_string(sq);
        rep.negative_controls.push_back(c);
    }
    for (const auto& c : rep.identities) rep.all_pass = rep.all_pass && c.pass;
    for (const auto& c : rep.negative_controls) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

inline std::string form_to_string(const DifferentialForm& f) {
    return detail::form_to_string(f);
}

}  // namespace mnk

#endif
