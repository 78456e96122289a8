#include "dulac/rational_series.hpp"

namespace dulac {

RationalSeries::RationalSeries(Series n, Series d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw division_failure("RationalSeries: zero denominator");
    normalize();
}

void RationalSeries::normalize() {
    if (num.is_zero()) {
        den = Series::constant(num.one_coeff(), den.order());
        return;
    }
    // strip common monomial content
    int px = num.order() + 1, py = num.order() + 1;
    for (const auto& [e, c] : num.terms()) {
        px = std::min(px, e.a);
        py = std::min(py, e.b);
    }
    for (const auto& [e, c] : den.terms()) {
        px = std::min(px, e.a);
        py = std::min(py, e.b);
    }
    if (px > 0 || py > 0) {
        num = *divide_monomial(num, px, py);
        den = *divide_monomial(den, px, py);
    }
    if (!den.at_origin().is_zero()) {
        // fold unit denominator into the numerator
        if (den.terms().size() == 1) {
            num = num * (num.one_coeff() / den.at_origin());
        } else {
            num = num * invert_unit(den);
        }
        den = Series::constant(num.one_coeff(), den.order());
        return;
    }
    // scale so the leading denominator coefficient is 1
    auto lead = den.leading_expo();
    Coefficient lc = den.coeff(lead->a, lead->b);
    Coefficient inv = num.one_coeff() / lc;
    num = num * inv;
    den = den * inv;
}

std::optional<Series> RationalSeries::as_series() const {
    if (unit_den()) {
        if (den.terms().size() == 1) return num * (num.one_coeff() / den.at_origin());
        return num * invert_unit(den);
    }
    return divide_exact(num, den);
}

Series RationalSeries::as_series_or_throw(const char* what) const {
    auto s = as_series();
    if (!s) throw division_failure(what);
    return *s;
}

std::optional<RationalSeries::MonomialDen> RationalSeries::monomial_den_form() const {
    if (den.is_zero()) return std::nullopt;
    int px = den.order() + 1, py = den.order() + 1;
    for (const auto& [e, c] : den.terms()) {
        px = std::min(px, e.a);
        py = std::min(py, e.b);
    }
    Series unit = *divide_monomial(den, px, py);
    if (unit.at_origin().is_zero()) return std::nullopt;
    MonomialDen m;
    m.num = num * invert_unit(unit);
    m.p = px;
    m.q = py;
    return m;
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
    return RationalSeries(a.num * b.den + b.num * a.den, a.den * b.den);
}
RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
    return RationalSeries(a.num * b.den - b.num * a.den, a.den * b.den);
}
RationalSeries operator-(const RationalSeries& a) { return RationalSeries(-a.num, a.den); }
RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    return RationalSeries(a.num * b.num, a.den * b.den);
}
RationalSeries operator/(const RationalSeries& a, const RationalSeries& b) {
    if (b.num.is_zero()) throw division_failure("RationalSeries division by zero");
    return RationalSeries(a.num * b.den, a.den * b.num);
}

bool rs_equal(const RationalSeries& a, const RationalSeries& b, double tol) {
    return approx_zero(a.num * b.den - b.num * a.den, tol);
}

bool rs_zero(const RationalSeries& a, double tol) { return approx_zero(a.num, tol); }

RationalSeries rs_dx(const RationalSeries& a) {
    if (a.unit_den() && a.den.terms().size() == 1) return RationalSeries(dx(a.num));
    return RationalSeries(dx(a.num) * a.den.truncated(a.den.order() - 1) -
                              a.num.truncated(a.num.order() - 1) * dx(a.den),
                          (a.den * a.den).truncated(a.den.order() - 1));
}

RationalSeries rs_dy(const RationalSeries& a) {
    if (a.unit_den() && a.den.terms().size() == 1) return RationalSeries(dy(a.num));
    return RationalSeries(dy(a.num) * a.den.truncated(a.den.order() - 1) -
                              a.num.truncated(a.num.order() - 1) * dy(a.den),
                          (a.den * a.den).truncated(a.den.order() - 1));
}

std::string RationalSeries::str() const {
    if (unit_den() && den.terms().size() == 1) return num.str();
    return "(" + num.str() + ") / (" + den.str() + ")";
}

} // namespace dulac
