#include "dulac/conjugacy.hpp"

#include <cmath>

namespace dulac {

VectorField pullback(const FormalMap& phi, const VectorField& W) {
    phi.validate();
    int ord = std::min(phi.order(), W.order) - 1;
    Series fx = dx(phi.mx), fy = dy(phi.mx);
    Series gx = dx(phi.my), gy = dy(phi.my);
    Series J = mul_to(fx, gy, ord) - mul_to(fy, gx, ord);
    auto comp = [&](const RationalSeries& c) {
        Series n = substitute(c.num, phi.mx, phi.my).truncated(ord);
        Series d = substitute(c.den, phi.mx, phi.my).truncated(ord);
        return RationalSeries(n, d);
    };
    RationalSeries U = comp(W.cx), V = comp(W.cy);
    RationalSeries Jr{J};
    RationalSeries rx = (U * RationalSeries(gy) - V * RationalSeries(fy)) / Jr;
    RationalSeries ry = (V * RationalSeries(fx) - U * RationalSeries(gx)) / Jr;
    return {rx, ry, ord};
}

std::vector<std::pair<Series, Series>> lie_powers_of_id(const VectorField& W, int count) {
    if (!W.holomorphic()) throw degenerate_input("flow: W must be holomorphic");
    int ord = W.order;
    Series Wx = W.sx().truncated(ord), Wy = W.sy().truncated(ord);
    std::vector<std::pair<Series, Series>> H;
    H.reserve(count + 1);
    H.emplace_back(Series::var_x(ord, W.exact_mode()), Series::var_y(ord, W.exact_mode()));
    for (int n = 1; n <= count; ++n) {
        const auto& [hx, hy] = H.back();
        Series nx = mul_to(Wx, dx(hx), ord) + mul_to(Wy, dy(hx), ord);
        Series ny = mul_to(Wx, dx(hy), ord) + mul_to(Wy, dy(hy), ord);
        H.emplace_back(std::move(nx), std::move(ny));
    }
    return H;
}

FormalMap flow_map(const VectorField& W, const Series& F) {
    if (!F.at_origin().is_zero()) throw degenerate_input("flow_map: F(0,0) must vanish");
    int ord = std::min(W.order, F.order());
    Coefficient wf0 = lie_derivative(W, F).at_origin();
    if (wf0 == -F.one_coeff()) throw degenerate_input("flow_map: (W.F)(0,0) = -1, Jacobian degenerates");
    auto H = lie_powers_of_id(W, ord);
    Series mx = Series::zero(ord, F.exact_mode());
    Series my = mx;
    Series Fp = Series::constant(F.one_coeff(), ord); // F^n / n!
    Coefficient fact = F.one_coeff();
    for (int n = 0; n <= ord; ++n) {
        if (n > 0) {
            Fp = mul_to(Fp, F, ord);
            fact = fact * F.int_coeff(n);
            if (Fp.is_zero()) break;
        }
        Coefficient inv = F.one_coeff() / fact;
        mx = mx + mul_to(Fp, H[n].first, ord) * inv;
        my = my + mul_to(Fp, H[n].second, ord) * inv;
    }
    return {mx, my};
}

TangentialResult tangential(const VectorField& W, const Series& T) {
    Series WT = lie_derivative(W, T);
    Series oneplus = Series::constant(T.one_coeff(), WT.order()) + WT;
    if (oneplus.at_origin().is_zero())
        throw degenerate_input("tangential: 1 + W.T vanishes at the origin");
    TangentialResult r{flow_map(W, T), W.truncated(WT.order()).mul(RationalSeries(invert_unit(oneplus)))};
    return r;
}

TransversalResult transversal(const VectorField& Z, const VectorField& Y, const Series& D, const Series& N) {
    // hypothesis checks: [Z,Y] = D Y and Y.D = 0
    VectorField B = bracket(Z, Y);
    RationalSeries rd{D.truncated(B.order)};
    RationalSeries resx = B.cx - Y.cx * rd;
    RationalSeries resy = B.cy - Y.cy * rd;
    resx.num = resx.num.truncated(B.order);
    resy.num = resy.num.truncated(B.order);
    if (!rs_zero(resx) || !rs_zero(resy))
        throw degenerate_input("transversal: [Z,Y] != D Y at truncation");
    if (!approx_zero(lie_derivative(Y, D)))
        throw degenerate_input("transversal: Y.D != 0");
    Series YN = lie_derivative(Y, N);
    Series oneplus = Series::constant(N.one_coeff(), YN.order()) + YN;
    if (oneplus.at_origin().is_zero())
        throw degenerate_input("transversal: 1 + Y.N vanishes at the origin");
    RationalSeries inv{invert_unit(oneplus)};
    VectorField predY = Y.truncated(YN.order()).mul(inv);
    Series ZN = lie_derivative(Z, N);
    Series factor = ZN + mul_to(D, N, ZN.order());
    VectorField predZ = Z.truncated(factor.order()) - predY.mul(RationalSeries(factor));
    return {flow_map(Y, N), predY, predZ};
}

namespace {

// Flow-box map with the time variable in the requested slot.  sigma is the
// transversal parametrized by the other variable.
FormalMap flow_box(const VectorField& W, const Series& sigma_x, const Series& sigma_y, bool time_is_x) {
    int ord = W.order;
    bool exact = W.exact_mode();
    auto H = lie_powers_of_id(W, ord);
    Series t = time_is_x ? Series::var_x(ord, exact) : Series::var_y(ord, exact);
    Series mx = Series::zero(ord, exact), my = mx;
    Series tp = Series::constant(sigma_x.one_coeff(), ord);
    Coefficient fact = sigma_x.one_coeff();
    for (int n = 0; n <= ord; ++n) {
        if (n > 0) {
            tp = mul_to(tp, t, ord);
            fact = fact * sigma_x.int_coeff(n);
        }
        Series hx = substitute(H[n].first, sigma_x, sigma_y);
        Series hy = substitute(H[n].second, sigma_x, sigma_y);
        Coefficient inv = sigma_x.one_coeff() / fact;
        mx = mx + mul_to(tp, hx, ord) * inv;
        my = my + mul_to(tp, hy, ord) * inv;
    }
    FormalMap m{mx, my};
    return m;
}

} // namespace

FormalMap rectify(const VectorField& Z, const Coefficient& px, const Coefficient& py) {
    if (!Z.holomorphic()) throw degenerate_input("rectify: Z must be holomorphic");
    int ord = Z.order;
    bool exact = Z.exact_mode();
    bool translated = !(px.is_zero() && py.is_zero());
    VectorField Zp = Z;
    FormalMap trans = FormalMap::identity(ord, exact);
    if (translated) {
        trans.mx = Series::var_x(ord, exact) + Series::constant(px, ord);
        trans.my = Series::var_y(ord, exact) + Series::constant(py, ord);
        trans.translation = true;
        Series nx = substitute(Z.sx(), trans.mx, trans.my);
        Series ny = substitute(Z.sy(), trans.mx, trans.my);
        Zp = VectorField(nx, ny); // translation has identity Jacobian
    }
    Coefficient zx = Zp.sx().at_origin(), zy = Zp.sy().at_origin();
    if (zx.is_zero() && zy.is_zero()) throw degenerate_input("rectify: Z(p) = 0");
    // transversal axis maximizing |det(Z(p), axis)|
    bool use_e2 = zx.abs() >= zy.abs(); // det(Z, e2) = zx, det(Z, e1) = -zy
    Series z = Series::var_y(ord, exact); // transverse parameter lives in the 2nd slot
    Series sx = use_e2 ? Series::zero(ord, exact) : z;
    Series sy = use_e2 ? z : Series::zero(ord, exact);
    FormalMap box = flow_box(Zp, sx, sy, /*time_is_x=*/true);
    box.validate();
    if (translated) return compose(trans, box);
    return box;
}

NonIsolatedNormalForm normalize_nonisolated(const VectorField& Z) {
    int ord = Z.order;
    bool exact = Z.exact_mode();
    SingularityClass cls = classify(Z);
    if (cls.kind != SingularityClass::Kind::nonisolated)
        throw degenerate_input("normalize_nonisolated: singularity is not non-isolated");
    FormalMap M = eigen_chart(Z, cls);
    VectorField Z1 = pullback(M, Z);
    int ord1 = Z1.order;
    Series A = Z1.sx(), B = Z1.sy();
    auto w = solve_zero_graph_y(B);
    if (!w) throw degenerate_input("normalize_nonisolated: singular locus is not a graph y = u(x)");
    // shift chart (x, y) -> (x, y + w(x)) has pullback components re-centered on the locus
    FormalMap shift{Series::var_x(ord1, exact), Series::var_y(ord1, exact) + w->truncated(ord1)};
    VectorField Z2 = pullback(shift, Z1);
    Series A2 = Z2.cx.as_series_or_throw(), B2 = Z2.cy.as_series_or_throw();
    auto at = divide_monomial(A2, 0, 1);
    auto bt = divide_monomial(B2, 0, 1);
    if (!at || !bt) throw degenerate_input("normalize_nonisolated: components do not vanish on the locus");
    VectorField Xt(*at, *bt); // nonvanishing: (0, l2) at the origin
    Coefficient l2 = bt->at_origin();
    if (!at->at_origin().is_zero() || l2.is_zero())
        throw degenerate_input("normalize_nonisolated: unexpected linear data on the singular locus");
    // flow box with time y over the x-axis transversal
    int ord2 = Xt.order;
    FormalMap box = flow_box(Xt, Series::var_x(ord2, exact), Series::zero(ord2, exact), /*time_is_x=*/false);
    box.validate();
    VectorField Z3 = pullback(box, Z2.truncated(ord2));
    // Z3 = l2 y stilde(x,y) d/dy
    int ord3 = Z3.order;
    if (!rs_zero(Z3.cx)) throw degenerate_input("normalize_nonisolated: rectification left an x-component");
    Series B3 = Z3.cy.as_series_or_throw();
    auto ydiv = divide_monomial(B3, 0, 1);
    if (!ydiv) throw degenerate_input("normalize_nonisolated: y-component not divisible by y");
    Series stilde = *ydiv * (Series::constant(l2, ord3).one_coeff() / l2);
    // tangential step: solve l2 y dT/dy = 1/stilde(x,y) - 1/stilde(x,0)
    Series inv_st = invert_unit(stilde);
    Series s0 = stilde;
    // restriction to y = 0
    Series s0_only(ord3, exact);
    for (const auto& [e, c] : stilde.terms())
        if (e.b == 0) s0_only.set(e.a, e.b, c);
    s0 = s0_only;
    Series G = inv_st - invert_unit(s0);
    Series T(ord3, exact);
    for (const auto& [e, c] : G.terms())
        if (e.b >= 1) T.set(e.a, e.b, c / (l2 * G.int_coeff(e.b)));
    Series zhat_cy = Series::var_y(ord3, exact) * s0 * l2;
    VectorField Zhat(Series::zero(ord3, exact), zhat_cy);
    FormalMap tang = flow_map(Zhat, T);
    // transverse step: match s0 to 1 + mu x^k
    NonIsolatedNormalForm out;
    out.l2 = l2;
    Series s0m1 = s0 - Series::constant(s0.one_coeff(), ord3);
    FormalMap norm = FormalMap::identity(ord3, exact);
    if (s0m1.is_zero()) {
        out.k = 1;
        out.mu = s0.zero_coeff();
    } else {
        int k = *s0m1.valuation();
        Coefficient mu = s0m1.coeff(k, 0);
        out.k = k;
        out.mu = mu;
        Series ratio = *divide_monomial(s0m1, k, 0) * (s0.one_coeff() / mu);
        Series N = log_series(ratio) * (s0.one_coeff() / s0.int_coeff(k));
        VectorField xdx(Series::var_x(ord3, exact), Series::zero(ord3, exact));
        norm = flow_map(xdx, N);
    }
    // assemble: pullback(chart, Z) = l2 y (1 + mu x^k) d/dy
    FormalMap chart = compose(compose(compose(M, shift), box), compose(invert_map(tang), invert_map(norm)));
    out.chart = chart;
    Series nf_cy = Series::var_y(ord, exact) *
                   (Series::constant(out.l2, ord) +
                    Series::monomial(out.k, 0, out.mu * out.l2, ord));
    out.normal_form = VectorField(Series::zero(ord, exact), nf_cy);
    return out;
}

} // namespace dulac
