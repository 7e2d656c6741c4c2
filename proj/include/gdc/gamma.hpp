#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>

#include "gdc/errors.hpp"
#include "gdc/precision.hpp"

namespace gdc {

namespace detail {

// log sin(pi z) on the canonical branch that keeps the reflection formula
// analytic through the upper half plane; conjugate-symmetric below.
template <class P>
typename P::Complex log_sin_pi(const typename P::Complex& z) {
    using R = typename P::Real;
    using C = typename P::Complex;
    const R pi = P::pi();
    if (z.imag() < 0) return conj(log_sin_pi<P>(conj(z)));
    const C i(R(0), R(1));
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}), |e^{2 pi i z}| < 1 for Im z > 0
    C E = exp(2 * pi * i * z);
    return -i * pi * z + log(C(1) - E) + i * pi / 2 - log(R(2));
}

}  // namespace detail

/// Principal-branch complex log Gamma. Stirling series with argument
/// shifting for Re z >= 1/2, reflection otherwise. Signals a pole at
/// non-positive integers.
template <class P>
typename P::Complex log_gamma(typename P::Complex z) {
    using R = typename P::Real;
    using C = typename P::Complex;
    const R pi = P::pi();
    const R tol = P::tol_eq();

    if (abs(z.imag()) <= tol && z.real() <= tol) {
        R zr = z.real();
        R nearest = round(zr);
        if (abs(zr - nearest) <= tol)
            throw error(errc::pole, "log_gamma: pole at non-positive integer");
    }

    if (z.real() < R(1) / 2) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return log(pi) - detail::log_sin_pi<P>(z) - log_gamma<P>(C(1) - z);
    }

    // shift until Stirling converges fast enough
    const R z0 = R(std::max(24, (2 * P::bits) / 5));
    C acc(0);
    while (z.real() < z0) {
        acc -= log(z);
        z += 1;
    }

    static const R half_log_two_pi = log(2 * boost::math::constants::pi<R>()) / 2;
    C lz = log(z);
    C s = (z - R(1) / 2) * lz - z + half_log_two_pi;
    C zinv = C(1) / z;
    C zpow = zinv;
    const C z2 = zinv * zinv;
    const R target = ldexp(R(1), -P::bits - 8);
    for (unsigned k = 1; k <= 60; ++k) {
        R b = boost::math::bernoulli_b2n<R>(static_cast<int>(k));
        C term = b / (R(2 * k) * R(2 * k - 1)) * zpow;
        s += term;
        if (abs(term) < target * (1 + abs(s))) break;
        zpow *= z2;
    }
    return s + acc;
}

template <class P>
typename P::Real log_gamma_real(const typename P::Real& x) {
    using C = typename P::Complex;
    if (x <= 0)
        throw error(errc::pole, "log_gamma_real: needs x > 0");
    return log_gamma<P>(C(x)).real();
}

/// Gamma via exponentiated log-Gamma; fine while |log| stays in range.
template <class P>
typename P::Complex gamma_fn(const typename P::Complex& z) {
    return exp(log_gamma<P>(z));
}

}  // namespace gdc
