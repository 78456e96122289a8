#pragma once

#include "dulac/series.hpp"

namespace dulac {

// Quotient num/den of truncated series, den not identically zero.
// Equality is cross-multiplication at truncation order; no GCD reduction.
// normalize() strips common monomial content, folds unit denominators into
// the numerator and rescales so the denominator's leading coefficient is 1.
struct RationalSeries {
    Series num;
    Series den;

    RationalSeries() = default;
    RationalSeries(Series n) : num(std::move(n)), den(Series::constant(num.one_coeff(), num.order())) {}
    RationalSeries(Series n, Series d);

    int order() const { return std::min(num.order(), den.order()); }
    bool exact_mode() const { return num.exact_mode(); }
    bool is_zero() const { return num.is_zero(); }
    bool unit_den() const { return !den.at_origin().is_zero(); }

    void normalize();

    // Series value when den is a unit or divides num exactly.
    std::optional<Series> as_series() const;
    Series as_series_or_throw(const char* what = "meromorphic value where a series was required") const;

    // num' / (x^p y^q) form when den = monomial * unit.
    struct MonomialDen {
        Series num;
        int p = 0, q = 0;
    };
    std::optional<MonomialDen> monomial_den_form() const;

    friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator-(const RationalSeries& a);
    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator/(const RationalSeries& a, const RationalSeries& b);
    RationalSeries operator*(const Coefficient& c) const { return RationalSeries(num * c, den); }

    std::string str() const;
};

// Cross-multiplication equality at the common truncation order.
bool rs_equal(const RationalSeries& a, const RationalSeries& b, double tol = Config::compare_tol);
bool rs_zero(const RationalSeries& a, double tol = Config::compare_tol);

RationalSeries rs_dx(const RationalSeries& a);
RationalSeries rs_dy(const RationalSeries& a);

} // namespace dulac
