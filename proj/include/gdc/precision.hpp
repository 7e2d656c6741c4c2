#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/complex_adaptor.hpp>

namespace gdc {

namespace bmp = boost::multiprecision;

/// Precision policy. All tolerances are pure functions of the mantissa
/// width `Bits`: tol_eq = 2^(-Bits/2) is the equality/dedup tolerance,
/// tol_quad = 2^(-Bits/4) is the quadrature target.
template <int Bits>
struct Prec {
    static_assert(Bits >= 64, "need at least 64 mantissa bits");
    static constexpr int bits = Bits;

    using Real = bmp::number<bmp::cpp_bin_float<Bits, bmp::digit_base_2>, bmp::et_off>;
    using Complex =
        bmp::number<bmp::complex_adaptor<bmp::cpp_bin_float<Bits, bmp::digit_base_2>>, bmp::et_off>;

    static Real tol_eq() { return ldexp(Real(1), -Bits / 2); }
    static Real tol_quad() { return ldexp(Real(1), -Bits / 4); }
    static Real overflow_limit() { return ldexp(Real(1), Bits / 2); }

    static Real pi() { return boost::math::constants::pi<Real>(); }
};

using P64 = Prec<64>;
using P128 = Prec<128>;
using P192 = Prec<192>;
using P256 = Prec<256>;

template <class P>
double to_d(const typename P::Real& x) {
    return x.template convert_to<double>();
}

}  // namespace gdc
