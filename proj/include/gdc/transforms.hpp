#pragma once

#include <functional>
#include <optional>

#include "gdc/errors.hpp"
#include "gdc/mollifier.hpp"
#include "gdc/precision.hpp"
#include "gdc/quadrature.hpp"
#include "gdc/specfun.hpp"

namespace gdc {

namespace detail {

// Re 2F1(s/2, (1-s)/2; 1/2; -x^2) with the inverse-argument connection
// prefactors computed once per s (the value is real: the parameters swap
// under conjugation on the critical line).
template <class P>
class HuberKernel {
  public:
    using R = typename P::Real;
    using C = typename P::Complex;

    explicit HuberKernel(const C& s) : s_(s), a_(s / 2), b_((C(1) - s) / 2), c_(R(1) / 2) {
        log_case_ = near_int<P>(a_ - b_);
        if (!log_case_) {
            k1_ = exp(log_gamma<P>(c_) + log_gamma<P>(b_ - a_) - log_gamma<P>(b_) -
                      log_gamma<P>(c_ - a_));
            k2_ = exp(log_gamma<P>(c_) + log_gamma<P>(a_ - b_) - log_gamma<P>(a_) -
                      log_gamma<P>(c_ - b_));
        }
    }

    R operator()(const R& x) const {
        if (x <= P::tol_eq()) return R(1);
        if (log_case_ || x < 3)
            return gauss_2f1<P>(a_, b_, c_, C(-x * x)).real();
        C z = C(-x * x);
        C t1 = k1_ * exp(-a_ * log(x * x)) *
               pfq_series<P, 2, 1>({a_, a_ - c_ + R(1)}, {a_ - b_ + R(1)}, C(1) / z, 0.15);
        C t2 = k2_ * exp(-b_ * log(x * x)) *
               pfq_series<P, 2, 1>({b_, b_ - c_ + R(1)}, {b_ - a_ + R(1)}, C(1) / z, 0.15);
        return (t1 + t2).real();
    }

  private:
    C s_, a_, b_, c_, k1_, k2_;
    bool log_case_;
};

}  // namespace detail

/// Smoothed counting weight at cutoff R: g is constant on [0,1] and
/// g(cosh^2 x) = int_x^inf psi_eps(R - Y) / sqrt(sinh Y) dY, which vanishes
/// beyond cosh^2(R+eps). Carries the analytic derivative through
/// sinh(2x) g'(cosh^2 x) = -psi_eps(R-x)/sqrt(sinh x).
template <class P>
struct SmoothedCount {
    using R = typename P::Real;

    R cutoff;  // the paper's R; X = cosh R
    MollifierConfig<P> cfg;

    SmoothedCount(R cutoff_, MollifierConfig<P> cfg_) : cutoff(std::move(cutoff_)), cfg(cfg_) {
        if (!(cutoff > cfg.epsilon))
            throw error(errc::usage, "SmoothedCount: need R > epsilon");
    }

    R y_lo() const { R x = cutoff - cfg.epsilon; return cosh(x) * cosh(x); }
    R y_hi() const { R x = cutoff + cfg.epsilon; return cosh(x) * cosh(x); }

    R g(const R& u) const {
        R x = u <= 1 ? R(0) : acosh(sqrt(u));
        R lo = std::max(x, cutoff - cfg.epsilon);
        R hi = cutoff + cfg.epsilon;
        if (!(lo < hi)) return R(0);
        return Quad<P>::finite(
            [&](const R& Y) { return mollifier_eval<P>(cfg, cutoff - Y) / sqrt(sinh(Y)); }, lo,
            hi);
    }

    R g_prime(const R& y) const {
        if (y <= 1 + P::tol_eq()) return R(0);
        if (y <= y_lo() || y >= y_hi()) return R(0);
        R x = acosh(sqrt(y));
        return -mollifier_eval<P>(cfg, cutoff - x) / (sqrt(sinh(x)) * sinh(2 * x));
    }

    /// Weyl inversion f(u) = -(2 sqrt(u-1)/pi) int_u^inf g'(y)/sqrt(y-u) dy
    /// evaluated with y = u + w^2 removing the endpoint singularity.
    R f(const R& u) const {
        if (u <= 1) return R(0);
        R hi = y_hi();
        if (u >= hi) return R(0);
        R wmax = sqrt(hi - u);
        R val = Quad<P>::finite([&](const R& w) { return g_prime(u + w * w); }, R(0), wmax);
        return -2 * sqrt(u - 1) / P::pi() * 2 * val;
    }
};

/// Test function for the relative trace formula machinery: either the
/// smoothed counting function above or a generic callable with declared
/// exponential decay rate (slower decay is rejected up front).
template <class P>
struct TestFunction {
    using R = typename P::Real;

    static TestFunction smoothed_count(R cutoff, MollifierConfig<P> cfg) {
        TestFunction tf;
        tf.sc.emplace(std::move(cutoff), cfg);
        return tf;
    }
    static TestFunction generic(std::function<R(const R&)> fn, R decay_rate) {
        if (!(decay_rate > 0))
            throw error(errc::usage, "TestFunction: generic kind requires exponential decay");
        TestFunction tf;
        tf.fn = std::move(fn);
        tf.decay = std::move(decay_rate);
        return tf;
    }

    bool is_smoothed() const { return sc.has_value(); }

    R operator()(const R& v) const { return sc ? sc->f(v) : fn(v); }

    // argument beyond which |f| is negligible at working precision
    R support_end() const {
        if (sc) return sc->y_hi();
        return 1 + R(P::bits + 16) * log(R(2)) / decay;
    }

    std::optional<SmoothedCount<P>> sc;
    std::function<R(const R&)> fn;
    R decay = R(1);
};

/// g(u) = int_{sqrt(max(0,u-1))}^inf f(x^2+1)/sqrt(x^2-(u-1)) dx. For u > 1
/// the substitution x = sqrt(u-1) cosh w turns it into
/// int_0^inf f((u-1) cosh^2 w + 1) dw.
template <class P>
typename P::Real weyl_g_from_f(const TestFunction<P>& f, const typename P::Real& u) {
    using R = typename P::Real;
    if (u < 0) throw error(errc::usage, "weyl_g_from_f: u >= 0 required");
    R vmax = f.support_end();
    if (u > 1 + P::tol_eq()) {
        if (u - 1 >= vmax) return R(0);
        R wmax = acosh(sqrt((vmax - 1) / (u - 1))) + 1;
        return Quad<P>::finite([&](const R& w) { R ch = cosh(w); return f((u - 1) * ch * ch + 1); },
                               R(0), wmax);
    }
    if (abs(u - 1) <= P::tol_eq() && abs(f(R(1))) > P::tol_quad())
        throw error(errc::non_convergence,
                    "weyl_g_from_f: logarithmic divergence at u = 1 with f(1) != 0");
    R xmax = sqrt(std::max(R(0), vmax - 1)) + 1;
    R om = 1 - u;
    return Quad<P>::finite([&](const R& x) { return f(x * x + 1) / sqrt(x * x + om); }, R(0),
                           xmax);
}

/// Inversion f(u) = -(2 sqrt(u-1)/pi) int_u^inf g'(y)/sqrt(y-u) dy for a
/// generic g with derivative supported in [1, y_support_end]. Without an
/// analytic derivative a stepped Richardson difference is used and flagged.
template <class P>
typename P::Real weyl_f_from_g(const std::function<typename P::Real(const typename P::Real&)>& g,
                               const typename P::Real& u, const typename P::Real& y_support_end,
                               const std::function<typename P::Real(const typename P::Real&)>*
                                   g_prime = nullptr,
                               bool* used_numeric_derivative = nullptr) {
    using R = typename P::Real;
    if (!(u >= 1)) throw error(errc::usage, "weyl_f_from_g: u >= 1 required");
    if (used_numeric_derivative) *used_numeric_derivative = (g_prime == nullptr);
    auto gp = [&](const R& y) -> R {
        if (g_prime) return (*g_prime)(y);
        // 4th-order Richardson step on the flagged numeric fallback
        R h = sqrt(sqrt(P::tol_quad())) * std::max(R(1), abs(y)) / 64;
        return (8 * (g(y + h) - g(y - h)) - (g(y + 2 * h) - g(y - 2 * h))) / (12 * h);
    };
    if (u >= y_support_end) return R(0);
    R wmax = sqrt(y_support_end - u);
    R val = Quad<P>::finite([&](const R& w) { return gp(u + w * w); }, R(0), wmax);
    return -2 * sqrt(std::max(R(0), u - 1)) / P::pi() * 2 * val;
}

enum class HuberRoute { automatic, definition, f_s };

/// Huber transform d_t(f) = int_0^inf f(x^2+1) 2F1(s/2,(1-s)/2;1/2;-x^2) dx,
/// s = 1/2 + it. For the smoothed count it is also computable through
/// (2/pi) int_{R-eps}^{R+eps} (sinh x)^{-1/2} F_s(cosh^2 x) psi_eps(R-x) dx;
/// the prefactor is 2/pi, not the 1/pi of the source text, which is tied
/// there to a g-normalization twice ours (both corrections verified against
/// direct quadrature of the definition).
template <class P>
typename P::Real huber_dt(const TestFunction<P>& f, const typename P::Real& t,
                          HuberRoute route = HuberRoute::automatic) {
    using R = typename P::Real;
    using C = typename P::Complex;
    if (t < 0) throw error(errc::usage, "huber_dt: t >= 0 required");
    const C s(R(1) / 2, t);

    if (route == HuberRoute::automatic)
        route = f.is_smoothed() ? HuberRoute::f_s : HuberRoute::definition;

    if (route == HuberRoute::f_s) {
        if (!f.is_smoothed())
            throw error(errc::usage, "huber_dt: F_s route needs the smoothed-count kind");
        const auto& sc = *f.sc;
        detail::FsEvaluator<P> fs(s);
        return 2 / P::pi() *
               Quad<P>::finite(
                   [&](const R& x) {
                       R ch = cosh(x);
                       return fs(ch * ch) / sqrt(sinh(x)) *
                              mollifier_eval<P>(sc.cfg, sc.cutoff - x);
                   },
                   sc.cutoff - sc.cfg.epsilon, sc.cutoff + sc.cfg.epsilon);
    }

    detail::HuberKernel<P> kern(s);
    R xmax = sqrt(std::max(R(0), f.support_end() - 1)) * (1 + P::tol_quad()) + R(1) / 100;
    // log substitution beyond x = 1 evens out the cos(t log x) oscillation
    R head = Quad<P>::finite([&](const R& x) { return f(x * x + 1) * kern(x); }, R(0), R(1));
    if (xmax <= 1) return head;
    R tail = Quad<P>::finite_gk(
        [&](const R& lam) {
            R x = exp(lam);
            return f(x * x + 1) * kern(x) * x;
        },
        R(0), log(xmax), 17);
    return head + tail;
}

/// Two-route cross check; raises route_disagreement beyond 10 * tol_quad.
template <class P>
typename P::Real huber_dt_checked(const TestFunction<P>& f, const typename P::Real& t) {
    using R = typename P::Real;
    R a = huber_dt<P>(f, t, HuberRoute::definition);
    R b = huber_dt<P>(f, t, HuberRoute::f_s);
    if (abs(a - b) > 10 * P::tol_quad() * (1 + abs(a)))
        throw error(errc::route_disagreement, "huber_dt: definition and F_s routes disagree");
    return b;
}

/// Main-term approximation d_t(f) ~ (4/pi) Re(G(s) e^{-iRt}) psi_hat_eps(t)
/// with an O(t^{-3/2}) residual (4/pi rather than the source's 2/pi; same
/// normalization note as above).
template <class P>
typename P::Real huber_dt_approx(const typename P::Real& cutoff, const MollifierConfig<P>& cfg,
                                 const typename P::Real& t) {
    using R = typename P::Real;
    using C = typename P::Complex;
    if (!(t >= 1)) throw error(errc::usage, "huber_dt_approx: t >= 1 required");
    C s(R(1) / 2, t);
    C phase = exp(C(R(0), -cutoff * t));
    return 4 / P::pi() * (big_g<P>(s) * phase).real() * mollifier_hat<P>(cfg, t);
}

}  // namespace gdc
