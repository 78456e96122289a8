#include "dulac/fields.hpp"

namespace dulac {

VectorField VectorField::truncated(int ord) const {
    VectorField r = *this;
    r.cx.num = r.cx.num.truncated(ord);
    r.cx.den = r.cx.den.truncated(ord);
    r.cy.num = r.cy.num.truncated(ord);
    r.cy.den = r.cy.den.truncated(ord);
    r.order = std::min(order, ord);
    return r;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
    return {a.cx + b.cx, a.cy + b.cy, std::min(a.order, b.order)};
}
VectorField operator-(const VectorField& a, const VectorField& b) {
    return {a.cx - b.cx, a.cy - b.cy, std::min(a.order, b.order)};
}

VectorField diagonal_field(const Coefficient& l1, const Coefficient& l2, int order) {
    Series x = Series::var_x(order, l1.is_exact());
    Series y = Series::var_y(order, l1.is_exact());
    return VectorField(x * l1, y * l2);
}

RationalSeries lie_rs(const VectorField& W, const RationalSeries& F) {
    return W.cx * rs_dx(F) + W.cy * rs_dy(F);
}

Series lie_derivative(const VectorField& W, const Series& F) {
    RationalSeries r = lie_rs(W, RationalSeries(F));
    return r.as_series_or_throw("lie_derivative: pole of W survives in W.F");
}

Series lie_log_dressed_factor(const VectorField& W, int n, int m, const Coefficient& gamma, const Series& Qu) {
    Series Wx = W.sx(), Wy = W.sy();
    int ord = std::min({Wx.order(), Wy.order(), Qu.order()});
    Series acc = Series::zero(ord, W.exact_mode());
    if (n != 0) {
        auto q = divide_monomial(Wx, 1, 0);
        if (!q) throw division_failure("dressed factor: Wx not divisible by x");
        acc = acc + *q * Wx.int_coeff(n);
    }
    if (m != 0) {
        auto q = divide_monomial(Wy, 0, 1);
        if (!q) throw division_failure("dressed factor: Wy not divisible by y");
        acc = acc + *q * Wy.int_coeff(m);
    }
    if (!gamma.is_zero()) {
        Series dq = lie_derivative(W, Qu);
        acc = acc + dq * invert_unit(Qu.truncated(dq.order())) * gamma;
    }
    return acc;
}

DressedSeries lie_derivative(const VectorField& W, const DressedSeries& F) {
    DressedSeries r = F;
    Series logpart = lie_log_dressed_factor(W, F.n, F.m, F.gamma, F.Qu);
    r.body = logpart * F.body.truncated(logpart.order()) + lie_derivative(W, F.body);
    return r;
}

LogLaurent lie_derivative(const VectorField& W, const LogLaurent& F) {
    // W.(A/x^N y^M) = (W.A - A * (N Wx/x + M Wy/y)) / x^N y^M,
    // then the log terms contribute alpha Wx/x + beta Wy/y.
    Series Wx = W.sx(), Wy = W.sy();
    int ord = std::min({F.A.order(), Wx.order() - 1, Wy.order() - 1});
    LogLaurent r;
    r.alpha = F.alpha.zero_like();
    r.beta = F.beta.zero_like();
    r.N = F.N + 1;
    r.M = F.M + 1;
    // everything over x^{N+1} y^{M+1}
    Series one = Series::constant(F.A.one_coeff(), ord);
    Series xs = Series::var_x(ord, F.exact_mode());
    Series ys = Series::var_y(ord, F.exact_mode());
    Series WA = lie_derivative(W, F.A).truncated(ord);
    Series acc = WA * xs * ys;
    Series A = F.A.truncated(ord);
    acc = acc - A * (Wx.truncated(ord) * ys * A.int_coeff(F.N) + Wy.truncated(ord) * xs * A.int_coeff(F.M));
    if (!F.alpha.is_zero()) acc = acc + Wx.truncated(ord) * ys * Series::monomial(F.N, F.M, F.alpha, ord);
    if (!F.beta.is_zero()) acc = acc + Wy.truncated(ord) * xs * Series::monomial(F.N, F.M, F.beta, ord);
    r.A = acc;
    r.canonicalize();
    return r;
}

VectorField bracket(const VectorField& Z, const VectorField& Y) {
    RationalSeries bx = lie_rs(Z, Y.cx) - lie_rs(Y, Z.cx);
    RationalSeries by = lie_rs(Z, Y.cy) - lie_rs(Y, Z.cy);
    return {bx, by, std::min(Z.order, Y.order) - 1};
}

RationalSeries det_field(const VectorField& Z, const VectorField& Y) {
    return Z.cx * Y.cy - Z.cy * Y.cx;
}

std::optional<Coefficient> rs_constant(const RationalSeries& r, double tol) {
    if (rs_zero(r, tol)) return r.num.zero_coeff();
    // r = c  <=>  num = c * den
    auto ln = r.num.leading_expo();
    auto ld = r.den.leading_expo();
    if (!ln || !ld || !(*ln == *ld)) return std::nullopt;
    Coefficient c = r.num.coeff(ln->a, ln->b) / r.den.coeff(ld->a, ld->b);
    if (approx_zero(r.num - r.den * c, tol)) return c;
    return std::nullopt;
}

AffineRatio affine_ratio(const VectorField& Z, const VectorField& Y, double tol) {
    if (Y.is_zero()) throw degenerate_input("affine_ratio: Y = 0");
    AffineRatio out;
    out.transverse = !rs_zero(det_field(Z, Y), tol);
    VectorField B = bracket(Z, Y);
    int ord = B.order;
    const RationalSeries* yc = !Y.cx.is_zero() ? &Y.cx : &Y.cy;
    const RationalSeries* bc = !Y.cx.is_zero() ? &B.cx : &B.cy;
    auto c = rs_constant(*bc / *yc, tol);
    if (!c) {
        if (bc->is_zero()) c = Y.cx.num.zero_coeff();
        else return out;
    }
    // verify [Z,Y] = c Y on both components at the certified order
    RationalSeries rx = (B.cx - Y.cx * (*c));
    RationalSeries ry = (B.cy - Y.cy * (*c));
    rx.num = rx.num.truncated(ord);
    ry.num = ry.num.truncated(ord);
    if (rs_zero(rx, tol) && rs_zero(ry, tol)) out.delta = c;
    return out;
}

std::pair<OneForm, OneForm> dual_basis(const VectorField& Z, const VectorField& Y) {
    RationalSeries D = det_field(Z, Y);
    if (D.is_zero()) throw degenerate_input("dual_basis: det(Z,Y) = 0, pair is degenerate");
    OneForm tz{Y.cy / D, -(Y.cx / D)};
    OneForm ty{-(Z.cy / D), Z.cx / D};
    return {tz, ty};
}

RationalSeries d_one_form(const OneForm& w) { return rs_dx(w.wy) - rs_dy(w.wx); }

RationalSeries wedge(const OneForm& a, const OneForm& b) { return a.wx * b.wy - a.wy * b.wx; }

std::optional<Series> cofactor(const VectorField& Z, const Series& f) {
    if (f.is_zero()) throw degenerate_input("cofactor: f = 0");
    RationalSeries K = lie_rs(Z, RationalSeries(f)) / RationalSeries(f);
    return K.as_series();
}

} // namespace dulac
