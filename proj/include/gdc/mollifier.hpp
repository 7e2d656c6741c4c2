#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "gdc/errors.hpp"
#include "gdc/precision.hpp"
#include "gdc/quadrature.hpp"

namespace gdc {

/// The fixed even bump phi(x) = exp(-1/(1-4x^2)) on (-1/2,1/2) and the
/// mollifier base psi = (phi * phi) / (int phi)^2 built from it. psi is
/// supported in [-1,1], psi >= 0, and psi_hat = phihat^2 >= 0 with
/// psi_hat(0) = 1. psi is cached on a Chebyshev grid; psi_hat values are
/// memoized.
template <class P>
class Bump {
  public:
    using R = typename P::Real;

    static const Bump& instance() {
        static Bump b;
        return b;
    }

    static R phi(const R& x) {
        R q = 1 - 4 * x * x;
        if (!(q > 0)) return R(0);
        return exp(-1 / q);
    }

    R psi(const R& x) const {
        R ax = abs(x);
        if (ax >= 1) return R(0);
        // Clenshaw on the Chebyshev expansion of psi(|x|) over [0,1]
        R u = 2 * ax - 1;
        R b0 = 0, b1 = 0;
        for (std::size_t i = cheb_.size(); i-- > 0;) {
            R b2 = b1;
            b1 = b0;
            b0 = 2 * u * b1 - b2 + cheb_[i];
        }
        R v = b0 - u * b1 - cheb_[0] / 2;
        return v < 0 ? R(0) : v;
    }

    R phi_hat(const R& t) const {  // normalized: phi_hat(0) = 1
        std::scoped_lock lk(mu_);
        auto it = hat_memo_.find(t);
        if (it != hat_memo_.end()) return it->second;
        R at = abs(t);
        R v = Quad<P>::finite_gk([&](const R& x) { return phi(x) * cos(at * x); }, R(0),
                                 R(1) / 2, 18) *
              2 / i0_;
        hat_memo_.emplace(t, v);
        return v;
    }

    R psi_hat(const R& t) const {
        R p = phi_hat(t);
        return p * p;
    }

    /// threshold with psi_hat > 1/2 on [0, tau)
    R tau() const { return tau_; }

  private:
    Bump() {
        i0_ = Quad<P>::finite([](const R& x) { return phi(x); }, R(-1) / 2, R(1) / 2);
        R n2 = i0_ * i0_;
        auto conv = [&](const R& x) {  // (phi * phi)(x) / (int phi)^2
            R lo = std::max(R(-1) / 2, x - R(1) / 2);
            R hi = std::min(R(1) / 2, x + R(1) / 2);
            if (!(hi > lo)) return R(0);
            return Quad<P>::finite([&](const R& u) { return phi(u) * phi(x - u); }, lo, hi) / n2;
        };
        // Chebyshev interpolation of psi on [0,1]
        const std::size_t N = 192;
        const R pi = P::pi();
        std::vector<R> vals(N);
        for (std::size_t j = 0; j < N; ++j) {
            R u = cos(pi * (R(2 * j + 1)) / (2 * N));  // in (-1,1)
            vals[j] = conv((u + 1) / 2);
        }
        cheb_.assign(N, R(0));
        for (std::size_t i = 0; i < N; ++i) {
            R s = 0;
            for (std::size_t j = 0; j < N; ++j)
                s += vals[j] * cos(pi * R(i) * (R(2 * j + 1)) / (2 * N));
            cheb_[i] = s * 2 / R(N);
        }
        // locate tau: phi_hat monotone through 1/sqrt(2) well before its first zero
        R lo = 0, hi = 8;
        for (int i = 0; i < P::bits / 2 + 16; ++i) {
            R mid = (lo + hi) / 2;
            R p = Quad<P>::finite_gk([&](const R& x) { return phi(x) * cos(mid * x); }, R(0),
                                     R(1) / 2, 18) *
                  2 / i0_;
            (p * p > R(1) / 2 ? lo : hi) = mid;
        }
        tau_ = (lo + hi) / 2;
    }

    R i0_;
    R tau_;
    std::vector<R> cheb_;
    mutable std::mutex mu_;
    mutable std::map<R, R> hat_memo_;
};

/// epsilon plus the Fourier decay order used in tail estimates.
template <class P>
struct MollifierConfig {
    using R = typename P::Real;
    R epsilon;
    int fourier_k = 2;

    MollifierConfig(R eps, int k = 2) : epsilon(std::move(eps)), fourier_k(k) {
        if (!(epsilon > 0 && epsilon < 1))
            throw error(errc::usage, "MollifierConfig: epsilon must lie in (0,1)");
        if (fourier_k < 1) throw error(errc::usage, "MollifierConfig: fourier_k >= 1");
    }
};

/// psi_eps(x) = psi(x/eps)/eps, supported in [-eps, eps].
template <class P>
typename P::Real mollifier_eval(const MollifierConfig<P>& cfg, const typename P::Real& x) {
    return Bump<P>::instance().psi(x / cfg.epsilon) / cfg.epsilon;
}

/// psi_hat_eps(t) = psi_hat(eps t) = phihat(eps t)^2, in [0,1].
template <class P>
typename P::Real mollifier_hat(const MollifierConfig<P>& cfg, const typename P::Real& t) {
    return Bump<P>::instance().psi_hat(cfg.epsilon * t);
}

}  // namespace gdc
