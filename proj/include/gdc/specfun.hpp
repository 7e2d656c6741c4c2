#pragma once

#include "gdc/errors.hpp"
#include "gdc/gamma.hpp"
#include "gdc/hyper.hpp"
#include "gdc/precision.hpp"
#include "gdc/quadrature.hpp"

namespace gdc {

/// One spectral parameter s_j: principal 1/2 + i t (t > 0), exceptional
/// real s in (1/2, 1], or the bottom point s = 1/2.
template <class P>
struct SpectralParameter {
    using R = typename P::Real;
    using C = typename P::Complex;
    enum class Kind { principal, exceptional, bottom };

    Kind kind = Kind::principal;
    R t{};       // principal: t > 0
    R s_real{};  // exceptional: s in (1/2, 1]

    static SpectralParameter principal(R tv) { return {Kind::principal, std::move(tv), R(0)}; }
    static SpectralParameter exceptional(R sv) { return {Kind::exceptional, R(0), std::move(sv)}; }
    static SpectralParameter bottom() { return {Kind::bottom, R(0), R(1) / 2}; }

    C s() const {
        switch (kind) {
            case Kind::principal: return C(R(1) / 2, t);
            case Kind::exceptional: return C(s_real);
            case Kind::bottom: return C(R(1) / 2);
        }
        return C(0);
    }
    R eigenvalue() const {  // lambda = s(1-s)
        C sv = s();
        return (sv * (C(1) - sv)).real();
    }
};

/// gamma_1(s) = -1/((s-2)(s+1))
template <class P>
typename P::Complex coeff_gamma1(const typename P::Complex& s) {
    using C = typename P::Complex;
    if (abs(s - C(2)) <= P::tol_eq())
        throw error(errc::pole, "coeff_gamma1: pole at s = 2");
    if (abs(s + C(1)) <= P::tol_eq())
        throw error(errc::pole, "coeff_gamma1: pole at s = -1");
    return -1 / ((s - 2) * (s + 1));
}

/// gamma_2(s) = pi Gamma(1-s/2) Gamma(1/2-s) / ((1-s) Gamma((1-s)/2)^3)
template <class P>
typename P::Complex coeff_gamma2(const typename P::Complex& s) {
    using R = typename P::Real;
    using C = typename P::Complex;
    if (abs(s - C(1)) <= P::tol_eq())
        throw error(errc::pole, "coeff_gamma2: pole at s = 1");
    C lg = log_gamma<P>(C(1) - s / 2) + log_gamma<P>(C(R(1) / 2) - s) -
           3 * log_gamma<P>((C(1) - s) / 2);
    return P::pi() * exp(lg) / (C(1) - s);
}

/// F(s,u) = u^{1/2-s} 2F1((s+1)/2, (s-1)/2; s+1/2; -u^{-2}), u > 0.
template <class P>
typename P::Complex f_su(const typename P::Complex& s, const typename P::Real& u) {
    using R = typename P::Real;
    using C = typename P::Complex;
    if (!(u > 0)) throw error(errc::usage, "f_su: u must be positive");
    C z = C(-1 / (u * u));
    C f = gauss_2f1<P>((s + 1) / 2, (s - 1) / 2, s + R(1) / 2, z);
    return exp((C(R(1) / 2) - s) * log(u)) * f;
}

/// G(s) of the F_s large-argument main term, evaluated through log-Gamma
/// sums so that nothing overflows along the critical line.
template <class P>
typename P::Complex big_g(const typename P::Complex& s) {
    using R = typename P::Real;
    using C = typename P::Complex;
    if (abs(s - C(R(1) / 2)) <= P::tol_eq())
        throw error(errc::pole, "big_g: pole at s = 1/2");
    if (abs(s - C(1)) <= P::tol_eq())
        throw error(errc::pole, "big_g: pole at s = 1");
    C lg = R(3) / 2 * log(2 * P::pi()) - log(s) / 2 + log_gamma<P>(C(1) - s / 2) +
           log_gamma<P>(C(R(1) / 2) - s) + log_gamma<P>(s + R(1) / 2) - log(R(2)) -
           log(C(1) - s) - 3 * log_gamma<P>((C(1) - s) / 2) - log_gamma<P>(s / 2 - R(1) / 2) -
           log_gamma<P>(s / 2 + 1);
    return exp(lg);
}

/// Intermediate identity from the sign analysis of Re G:
/// 2 sin^2(pi (1-s)/2), to be compared with 1 - i sinh(pi t) at s = 1/2+it.
template <class P>
typename P::Complex signs_identity_lhs(const typename P::Complex& s) {
    using C = typename P::Complex;
    C sn = sin(P::pi() * (C(1) - s) / 2);
    return 2 * sn * sn;
}

/// D(s) = Gamma((2s-1)/2) Gamma((s+1)/2) / (Gamma(s/2)^2 Gamma((s+2)/2)),
/// s in (1/2, 1].
template <class P>
typename P::Real d_coeff(const typename P::Real& s) {
    using R = typename P::Real;
    if (!(s > R(1) / 2 && s <= 1 + P::tol_eq())) {
        if (abs(s - R(1) / 2) <= P::tol_eq())
            throw error(errc::pole, "d_coeff: pole at s = 1/2");
        throw error(errc::usage, "d_coeff: s must lie in (1/2, 1]");
    }
    R lg = log_gamma_real<P>((2 * s - 1) / 2) + log_gamma_real<P>((s + 1) / 2) -
           2 * log_gamma_real<P>(s / 2) - log_gamma_real<P>((s + 2) / 2);
    return exp(lg);
}

namespace detail {

template <class P>
bool near_degenerate_s(const typename P::Complex& s) {
    using R = typename P::Real;
    using C = typename P::Complex;
    return abs(s) <= P::tol_eq() || abs(s - C(R(1) / 2)) <= P::tol_eq() ||
           abs(s - C(1)) <= P::tol_eq();
}

/// F_s(y) = sqrt(y-1) 3F2(1, s/2, (1-s)/2; 3/2, 1/2; 1-y) for y >= 1, with
/// the expansion coefficients cached per s so inner quadrature loops stay
/// cheap. Series branch for |1-y| < 1/2, connection expansion beyond, the
/// branches agreeing on the overlap. The inverse-argument 3F2 term carries
/// the exact coefficient -gamma_1(s) A^{-1}: the A^{-1} and the sign are
/// dropped in the source text, and both are required for the two branches
/// to match (checked numerically to full precision).
template <class P>
class FsEvaluator {
  public:
    using R = typename P::Real;
    using C = typename P::Complex;

    explicit FsEvaluator(const C& s) : s_(s) {
        degenerate_ = near_degenerate_s<P>(s);
        if (!degenerate_) {
            g1_ = coeff_gamma1<P>(s);
            g2a_ = coeff_gamma2<P>(s);
            g2b_ = coeff_gamma2<P>(C(1) - s);
        }
    }

    R operator()(const R& y) const { return real_part(y < R(3) / 2 ? series(y) : expansion(y)); }

    C series(const R& y) const {
        check_domain(y);
        if (abs(y - 1) <= P::tol_eq()) return C(0);
        return sqrt(y - 1) *
               hyp_3f2<P>(C(1), s_ / 2, (C(1) - s_) / 2, C(R(3) / 2), C(R(1) / 2), C(1 - y));
    }

    C expansion(const R& y) const {
        check_domain(y);
        if (degenerate_)
            throw error(errc::branch_gap,
                        "F_s: expansion branch undefined within tol_eq of s in {0,1/2,1}");
        R A = sqrt(y - 1);
        R w = -1 / (A * A);
        C tail;
        if (abs(w) <= R(1) / 2) {
            tail = hyp_3f2<P>(C(1), C(R(3) / 2), C(R(1) / 2), C(2) - s_ / 2, (C(3) + s_) / 2,
                              C(w));
        } else {
            tail = hyp_3f2_unit_neg<P>(C(R(3) / 2), C(R(1) / 2), C(2) - s_ / 2, (C(3) + s_) / 2,
                                       w);
        }
        C sA = sqrt(C(A));
        return -g1_ / A * tail + g2a_ * sA * f_su<P>(s_, A) + g2b_ * sA * f_su<P>(C(1) - s_, A);
    }

    R real_part(const C& val) const {
        R scale = abs(val) + 1;
        if (abs(val.imag()) > P::tol_quad() * scale)
            throw error(errc::route_disagreement, "F_s: imaginary part exceeds tol_quad");
        return val.real();
    }

  private:
    static void check_domain(const R& y) {
        if (!(y >= 1)) throw error(errc::usage, "F_s: y must be >= 1");
    }

    C s_, g1_, g2a_, g2b_;
    bool degenerate_ = false;
};

}  // namespace detail

/// Real value of F_s(y); see detail::FsEvaluator for branch layout.
template <class P>
typename P::Real f_s_eval(const typename P::Complex& s, const typename P::Real& y) {
    return detail::FsEvaluator<P>(s)(y);
}

/// a_{1/2}(X) = (4/pi) * period_sum * X * 3F2(1, 1/4, 1/4; 3/2, 1/2; -X^2).
/// Series for small X; otherwise adaptive quadrature of the Weyl-integral
/// representation F_{1/2}(X^2+1) = int_0^{pi/2} X sin(phi) *
/// 2F1(1/4, 1/4; 1/2; -(X sin phi)^2) dphi (the substitution x = X sin phi
/// removes the inverse-square-root endpoint).
template <class P>
typename P::Real a_half(const typename P::Real& X, const typename P::Real& period_sum) {
    using R = typename P::Real;
    using C = typename P::Complex;
    if (!(X > 0)) throw error(errc::usage, "a_half: X must be positive");
    if (period_sum < 0) throw error(errc::usage, "a_half: period_sum must be >= 0");
    if (period_sum == 0) return R(0);

    const R quarter = R(1) / 4;
    R fhalf;
    if (X < R(9) / 10) {
        C v = hyp_3f2<P>(C(1), C(quarter), C(quarter), C(R(3) / 2), C(R(1) / 2), C(-X * X));
        fhalf = X * v.real();
    } else {
        fhalf = Quad<P>::finite(
            [&](const R& phi) {
                R x = X * sin(phi);
                C f = gauss_2f1<P>(C(quarter), C(quarter), C(R(1) / 2), C(-x * x));
                return x * f.real();
            },
            R(0), P::pi() / 2);
    }
    R out = 4 / P::pi() * period_sum * fhalf;
    if (!(out > 0))
        throw error(errc::non_convergence, "a_half: result not positive");
    return out;
}

}  // namespace gdc
