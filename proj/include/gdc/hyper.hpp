#pragma once

#include <algorithm>
#include <array>
#include <cstddef>

#include "gdc/errors.hpp"
#include "gdc/gamma.hpp"
#include "gdc/precision.hpp"
#include "gdc/quadrature.hpp"

namespace gdc {

namespace detail {

template <class P>
bool near_nonpositive_int(const typename P::Complex& z) {
    using R = typename P::Real;
    if (abs(z.imag()) > P::tol_eq()) return false;
    R re = z.real();
    if (re > P::tol_eq()) return false;
    return abs(re - round(re)) <= P::tol_eq();
}

template <class P>
bool near_int(const typename P::Complex& z) {
    return abs(z.imag()) <= P::tol_eq() && abs(z.real() - round(z.real())) <= P::tol_eq();
}

// plain pFq power series; caller guarantees convergence region
template <class P, std::size_t NP, std::size_t NQ>
typename P::Complex pfq_series(const std::array<typename P::Complex, NP>& a,
                               const std::array<typename P::Complex, NQ>& b,
                               const typename P::Complex& z, double ratio_bound) {
    using R = typename P::Real;
    using C = typename P::Complex;
    for (const C& bi : b)
        if (near_nonpositive_int<P>(bi))
            throw error(errc::pole, "pFq: lower parameter at non-positive integer");
    C term(1), sum(1);
    const R eps = ldexp(R(1), -P::bits - 4);
    // tail <= |term| * r/(1-r) once the term ratio settles below ratio_bound
    const R stop = eps * R(std::max(0.05, (1.0 - ratio_bound) / std::max(ratio_bound, 0.05)));
    const unsigned kmax = 400000;
    for (unsigned k = 0; k < kmax; ++k) {
        C num(1), den(1);
        for (const C& ai : a) num *= ai + R(k);
        for (const C& bi : b) den *= bi + R(k);
        den *= R(k + 1);
        term *= num / den * z;
        sum += term;
        if (abs(term) <= stop * (1 + abs(sum))) return sum;
    }
    throw error(errc::non_convergence, "pFq series: term budget exhausted");
}

}  // namespace detail

/// Gauss 2F1 for the parameter families used here. Series for small |z|,
/// Pfaff transform z -> z/(z-1) for moderate negative z, the 1/z connection
/// for large negative z (a-b not an integer), and the Euler integral as the
/// fallback in the logarithmic case.
template <class P>
typename P::Complex gauss_2f1(const typename P::Complex& a, const typename P::Complex& b,
                              const typename P::Complex& c, const typename P::Complex& z) {
    using R = typename P::Real;
    using C = typename P::Complex;
    if (detail::near_nonpositive_int<P>(c))
        throw error(errc::pole, "2F1: c at non-positive integer");
    const R az = abs(z);
    if (az <= R(1) / 2)
        return detail::pfq_series<P, 2, 1>({a, b}, {c}, z, 0.5);

    const bool neg_real = abs(z.imag()) <= P::tol_eq() && z.real() < 0;
    C zeta = z / (z - R(1));
    if (abs(zeta) <= R(89) / 100) {
        // Pfaff: (1-z)^{-a} 2F1(a, c-b; c; z/(z-1))
        C f = detail::pfq_series<P, 2, 1>({a, c - b}, {c}, zeta, 0.9);
        return pow(C(1) - z, -a) * f;
    }
    if (neg_real) {
        if (!detail::near_int<P>(a - b)) {
            // connection at infinity, principal branch of (-z)^{-a}
            C t1 = exp(log_gamma<P>(c) + log_gamma<P>(b - a) - log_gamma<P>(b) -
                       log_gamma<P>(c - a) - a * log(-z)) *
                   detail::pfq_series<P, 2, 1>({a, a - c + R(1)}, {a - b + R(1)}, C(1) / z, 0.15);
            C t2 = exp(log_gamma<P>(c) + log_gamma<P>(a - b) - log_gamma<P>(a) -
                       log_gamma<P>(c - b) - b * log(-z)) *
                   detail::pfq_series<P, 2, 1>({b, b - c + R(1)}, {b - a + R(1)}, C(1) / z, 0.15);
            return t1 + t2;
        }
        // logarithmic case (a = b family): Euler integral, needs Re c > Re b > 0
        if (!(c.real() > b.real() && b.real() > 0))
            throw error(errc::non_convergence, "2F1: no continuation route for these parameters");
        C pref = exp(log_gamma<P>(c) - log_gamma<P>(b) - log_gamma<P>(c - b));
        const R qtol = P::tol_quad() / 1024;
        R zr = z.real();
        C val = Quad<P>::finite(
                    [&](const R& t) {
                        C w = pow(C(t), b - R(1)) * pow(C(1 - t), c - b - R(1)) *
                              pow(C(1 - zr * t), -a);
                        return w.real();
                    },
                    R(0), R(1), &qtol) +
                C(R(0), R(1)) * Quad<P>::finite(
                                    [&](const R& t) {
                                        C w = pow(C(t), b - R(1)) * pow(C(1 - t), c - b - R(1)) *
                                              pow(C(1 - zr * t), -a);
                                        return w.imag();
                                    },
                                    R(0), R(1), &qtol);
        return pref * val;
    }
    throw error(errc::non_convergence, "2F1: |z| >= 1 off the supported continuation region");
}

/// 3F2 by its power series; callers own any continuation (f_s_eval, a_half).
template <class P>
typename P::Complex hyp_3f2(const typename P::Complex& a1, const typename P::Complex& a2,
                            const typename P::Complex& a3, const typename P::Complex& b1,
                            const typename P::Complex& b2, const typename P::Complex& z) {
    using R = typename P::Real;
    R az = abs(z);
    if (az >= 1)
        throw error(errc::non_convergence, "3F2 series: |z| >= 1, use a continued evaluator");
    return detail::pfq_series<P, 3, 2>({a1, a2, a3}, {b1, b2}, z,
                                       std::min(0.95, to_d<P>(az) + 0.01));
}

namespace detail {

// 3F2(1, a2, a3; b1, b2; w) for w <= 0 via the Euler integral over a 2F1:
// pairs a3 with b2, valid Re b2 > Re a3 > 0.
template <class P>
typename P::Complex hyp_3f2_unit_neg(const typename P::Complex& a2, const typename P::Complex& a3,
                                     const typename P::Complex& b1, const typename P::Complex& b2,
                                     const typename P::Real& w) {
    using R = typename P::Real;
    using C = typename P::Complex;
    if (!(b2.real() > a3.real() && a3.real() > 0))
        throw error(errc::non_convergence, "3F2 continuation: parameter pairing out of range");
    C pref = exp(log_gamma<P>(b2) - log_gamma<P>(a3) - log_gamma<P>(b2 - a3));
    const R qtol = P::tol_quad() / 1024;
    auto integrand = [&](const R& t) -> C {
        C f = gauss_2f1<P>(C(1), a2, b1, C(w * t));
        return pow(C(t), a3 - R(1)) * pow(C(1 - t), b2 - a3 - R(1)) * f;
    };
    C val = Quad<P>::finite([&](const R& t) { return integrand(t).real(); }, R(0), R(1), &qtol) +
            C(R(0), R(1)) *
                Quad<P>::finite([&](const R& t) { return integrand(t).imag(); }, R(0), R(1), &qtol);
    return pref * val;
}

}  // namespace detail

/// Large-parameter asymptotic main term for 2F1(r, r+c; 2r+b; z), z <= 0,
/// |r| large, r away from the negative real axis. Complex powers on the
/// principal branch.
template <class P>
typename P::Complex luke_asymptotic_2f1(const typename P::Complex& r, const typename P::Complex& b,
                                        const typename P::Complex& c, const typename P::Real& z) {
    using R = typename P::Real;
    using C = typename P::Complex;
    C sq = sqrt(C(1 - z));
    C lg = log_gamma<P>(2 * r + b) - log_gamma<P>(r + c) - log_gamma<P>(r + b - c);
    C powers = (b - c - R(1) / 2) * log(sq) + (R(1) - b - 2 * r) * log(C(1) + sq);
    return sqrt(P::pi()) * exp(lg + powers - log(r) / 2);
}

}  // namespace gdc
