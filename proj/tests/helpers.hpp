#pragma once

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "gdc/mat2.hpp"
#include "gdc/precision.hpp"

using P = gdc::P128;
using R = P::Real;
using C = P::Complex;

inline R operator""_r(const char* s, std::size_t) { return R(s); }

inline R rel_err(const R& got, const R& want) {
    R scale = abs(want);
    if (scale < R(1) / 1000000) scale = R(1) / 1000000;
    return abs(got - want) / scale;
}

inline R rel_err_c(const C& got, const C& want) {
    R scale = abs(want);
    if (scale < R(1) / 1000000) scale = R(1) / 1000000;
    return abs(got - want) / scale;
}

// Random unimodular matrices as random words in a fixed generator set
// (shears and the rotation by pi/2), the shape the group-side code sees.
struct RandomWords {
    std::mt19937 rng;
    explicit RandomWords(unsigned seed) : rng(seed) {}

    gdc::Mat2<P> next(int len = 8, double shear_scale = 1.25) {
        std::uniform_real_distribution<double> U(-shear_scale, shear_scale);
        std::uniform_int_distribution<int> kind(0, 2);
        auto g = gdc::Mat2<P>::identity();
        for (int i = 0; i < len; ++i) {
            gdc::Mat2<P> h;
            switch (kind(rng)) {
                case 0: h = {R(1), R(U(rng)), R(0), R(1)}; break;
                case 1: h = {R(1), R(0), R(U(rng)), R(1)}; break;
                default: h = {R(0), R(1), R(-1), R(0)}; break;
            }
            g = gdc::mat_mul<P>(g, h);
        }
        return g;
    }
};
