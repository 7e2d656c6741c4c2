#pragma once

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "gdc/errors.hpp"
#include "gdc/precision.hpp"

namespace gdc {

/// Adaptive quadrature front-end. tanh-sinh on finite intervals (absorbs the
/// 1/sqrt endpoint singularities that appear throughout), exp-sinh on
/// [a, inf) for integrands with exponential decay. Targets tol_quad and
/// signals non-convergence instead of degrading silently.
template <class P>
struct Quad {
    using R = typename P::Real;

    static R tol() { return P::tol_quad(); }

    template <class F>
    static R finite(F&& f, const R& a, const R& b, const R* tol_override = nullptr) {
        if (!(b > a)) return R(0);
        boost::math::quadrature::tanh_sinh<R> integ(15);
        R err = 0, l1 = 0;
        R t = tol_override ? *tol_override : tol();
        R v = integ.integrate(f, a, b, t, &err, &l1);
        if (l1 > 0 && err > t * (1 + l1) * 64)
            throw error(errc::non_convergence, "tanh_sinh did not reach target");
        return v;
    }

    template <class F>
    static R half_line(F&& f, const R& a) {
        boost::math::quadrature::exp_sinh<R> integ(12);
        R err = 0, l1 = 0;
        R v = integ.integrate([&](const R& u) { return f(a + u); }, tol(), &err, &l1);
        if (l1 > 0 && err > tol() * (1 + l1) * 64)
            throw error(errc::non_convergence, "exp_sinh did not reach target");
        return v;
    }

    // for smooth oscillatory integrands where tanh-sinh wastes points
    template <class F>
    static R finite_gk(F&& f, const R& a, const R& b, unsigned max_depth = 14) {
        if (!(b > a)) return R(0);
        R err = 0;
        R v = boost::math::quadrature::gauss_kronrod<R, 31>::integrate(f, a, b, max_depth, tol(),
                                                                       &err);
        if (err > tol() * 256 * (1 + abs(v)))
            throw error(errc::non_convergence, "gauss_kronrod did not reach target");
        return v;
    }
};

}  // namespace gdc
