#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

#include "gdc/errors.hpp"
#include "gdc/precision.hpp"

namespace gdc {

/// Real 2x2 unimodular matrix at context precision, a projective
/// representative of an element of PSL(2,R). Sign convention: the first
/// entry of (a,b,c,d) exceeding tol_eq in absolute value is positive.
template <class P>
struct Mat2 {
    using R = typename P::Real;
    R a{}, b{}, c{}, d{};

    static Mat2 identity() { return {R(1), R(0), R(0), R(1)}; }
    static Mat2 diag(const R& m) { return {m, R(0), R(0), R(1) / m}; }

    R det() const { return a * d - b * c; }
    R trace() const { return a + d; }
    R frobenius_sq() const { return a * a + b * b + c * c + d * d; }

    // adjugate; equals the inverse for det = 1
    Mat2 inverse() const { return {d, -b, -c, a}; }
};

template <class P>
Mat2<P> sign_normalize(Mat2<P> g) {
    using R = typename P::Real;
    const R tol = P::tol_eq();
    const R* e[4] = {&g.a, &g.b, &g.c, &g.d};
    for (const R* v : e) {
        if (abs(*v) > tol) {
            if (*v < 0) { g.a = -g.a; g.b = -g.b; g.c = -g.c; g.d = -g.d; }
            break;
        }
    }
    return g;
}

template <class P>
bool is_unimodular(const Mat2<P>& g, const typename P::Real& slack = P::tol_eq()) {
    return abs(g.det() - 1) <= slack;
}

template <class P>
bool approx_eq(const Mat2<P>& x, const Mat2<P>& y, const typename P::Real& tol) {
    return abs(x.a - y.a) <= tol && abs(x.b - y.b) <= tol && abs(x.c - y.c) <= tol &&
           abs(x.d - y.d) <= tol;
}

template <class P>
Mat2<P> mat_mul(const Mat2<P>& x, const Mat2<P>& y) {
    Mat2<P> r{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
              x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    const auto lim = P::overflow_limit();
    if (abs(r.a) > lim || abs(r.b) > lim || abs(r.c) > lim || abs(r.d) > lim)
        throw error(errc::precision_overflow, "mat_mul: entry exceeds 2^(bits/2)");
    return sign_normalize<P>(r);
}

/// B(gamma) = ad + bc. Constant on double cosets of the diagonal stabilizer;
/// cosh of the distance between gamma*I and I equals max(|B|, 1).
template <class P>
typename P::Real b_invariant(const Mat2<P>& g) {
    return g.a * g.d + g.b * g.c;
}

namespace detail {

// Minimize f over [lo, hi] by golden section (f unimodal there).
template <class R, class F>
R golden_min(F&& f, R lo, R hi, int iters) {
    static const R invphi = (sqrt(R(5)) - 1) / 2;
    R x1 = hi - invphi * (hi - lo);
    R x2 = lo + invphi * (hi - lo);
    R f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = f(x2);
        }
    }
    return f1 < f2 ? f1 : f2;
}

}  // namespace detail

/// Independent geometry oracle: cosh of the hyperbolic distance between
/// gamma*I and I (I = positive imaginary axis), computed from the boundary
/// endpoints gamma(0), gamma(infinity) and a 1-d minimization of the
/// point-to-axis distance sinh dist(x+iy, I) = |x|/y along the image
/// geodesic. Never forms ad + bc.
template <class P>
typename P::Real geodesic_axis_distance(const Mat2<P>& g) {
    using R = typename P::Real;
    const R tol = P::tol_eq();

    const bool u_inf = abs(g.d) <= tol;  // gamma(0) = b/d
    const bool v_inf = abs(g.c) <= tol;  // gamma(inf) = a/c
    if (u_inf && v_inf) return R(1);     // image is I itself
    if (u_inf || v_inf) return R(1);     // vertical line, asymptotic to I at infinity
    R u = g.b / g.d;
    R v = g.a / g.c;
    if (abs(u - v) <= tol)               // collapsed cross-ratio
        return R(1);
    if (v < u) std::swap(u, v);
    if (u <= tol && v >= -tol) return R(1);  // endpoints straddle 0: image crosses I
    if (v < 0) { R t = -u; u = -v; v = t; }  // reflect x -> -x, an isometry fixing I
    if (u <= tol) return R(1);               // shares the endpoint 0, asymptotic

    // image is the semicircle over (u, v), 0 < u < v; minimize (x/y)^2 with
    // y^2 = (x-u)(v-x)
    auto f = [&](const R& x) { return x * x / ((x - u) * (v - x)); };
    R pad = (v - u) * ldexp(R(1), -P::bits / 2);
    R s2 = detail::golden_min<R>(f, u + pad, v - pad, P::bits);
    return sqrt(1 + s2);
}

/// Diagonalize a primitive hyperbolic element: returns (conj, m) with
/// conj * g * conj^{-1} = diag(m, 1/m), m = (|tr| + sqrt(tr^2-4))/2 > 1.
template <class P>
std::pair<Mat2<P>, typename P::Real> diagonalize_primitive_hyperbolic(const Mat2<P>& g_in) {
    using R = typename P::Real;
    const R tol = P::tol_eq();
    R tr = g_in.trace();
    if (abs(tr) <= 2 + tol)
        throw error(errc::not_hyperbolic, "diagonalize: |trace| <= 2 + tol_eq");

    // flip the projective sign so both eigenvalues are positive
    Mat2<P> g = g_in;
    if (tr < 0) { g.a = -g.a; g.b = -g.b; g.c = -g.c; g.d = -g.d; tr = -tr; }
    const R disc = sqrt(tr * tr - 4);
    const R m = (tr + disc) / 2;

    if (abs(g.b) <= tol && abs(g.c) <= tol) {
        // already diagonal (up to ordering)
        if (g.a > g.d) return {Mat2<P>::identity(), m};
        return {Mat2<P>{R(0), R(1), R(-1), R(0)}, m};
    }

    // eigenvector columns for eigenvalues m and 1/m
    R v1x, v1y, v2x, v2y;
    if (abs(g.b) > abs(g.c)) {
        v1x = g.b; v1y = m - g.a;
        v2x = g.b; v2y = 1 / m - g.a;
    } else {
        v1x = m - g.d; v1y = g.c;
        v2x = 1 / m - g.d; v2y = g.c;
    }
    Mat2<P> Q{v1x, v2x, v1y, v2y};  // columns are eigenvectors
    R D = Q.det();
    R s = 1 / sqrt(abs(D));
    Q.a *= s; Q.b *= s; Q.c *= s; Q.d *= s;
    if (D < 0) { Q.b = -Q.b; Q.d = -Q.d; }  // det back to +1
    return {sign_normalize<P>(Q.inverse()), m};
}

}  // namespace gdc
