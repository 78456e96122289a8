#pragma once

#include <random>

#include "dulac/fields.hpp"
#include "dulac/map.hpp"

namespace dulac::testutil {

inline Coefficient Q(long num, long den = 1) { return Coefficient(GaussQ(num, den)); }
inline Coefficient Qi(long re_n, long re_d, long im_n, long im_d) {
    return Coefficient(GaussQ(Rational(re_n, re_d), Rational(im_n, im_d)));
}
inline Coefficient F(double re, double im = 0.0) { return Coefficient(std::complex<double>(re, im)); }

// Random exact series with small rational coefficients, zero constant term
// unless keep_constant.
inline Series random_series(std::mt19937& rng, int order, int max_degree, bool exact = true,
                            bool zero_constant = true) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> keep(0, 2);
    Series s(order, exact);
    for (int d = zero_constant ? 1 : 0; d <= std::min(order, max_degree); ++d) {
        for (int a = d; a >= 0; --a) {
            int b = d - a;
            if (keep(rng) == 0) continue;
            int n = num(rng);
            if (n == 0) continue;
            if (exact) s.set(a, b, Q(n, den(rng)));
            else s.set(a, b, F(double(n) / den(rng)));
        }
    }
    return s;
}

// Random origin-fixing map with invertible linear part.
inline FormalMap random_map(std::mt19937& rng, int order, int max_degree, bool exact = true) {
    for (;;) {
        Series mx = random_series(rng, order, max_degree, exact);
        Series my = random_series(rng, order, max_degree, exact);
        FormalMap m{mx, my};
        if (!m.jac_det().is_zero()) return m;
    }
}

// Random tangent-to-identity map.
inline FormalMap random_tangent_map(std::mt19937& rng, int order, int max_degree, bool exact = true) {
    Series mx = Series::var_x(order, exact);
    Series my = Series::var_y(order, exact);
    Series hx = random_series(rng, order, max_degree, exact);
    Series hy = random_series(rng, order, max_degree, exact);
    // drop linear parts of the perturbation
    hx.set(1, 0, hx.zero_coeff());
    hx.set(0, 1, hx.zero_coeff());
    hy.set(1, 0, hy.zero_coeff());
    hy.set(0, 1, hy.zero_coeff());
    return {mx + hx, my + hy};
}

inline VectorField random_polynomial_field(std::mt19937& rng, int order, int max_degree, bool exact = true) {
    for (;;) {
        Series a = random_series(rng, order, max_degree, exact, false);
        Series b = random_series(rng, order, max_degree, exact, false);
        if (!a.is_zero() || !b.is_zero()) return VectorField(a, b);
    }
}

} // namespace dulac::testutil
