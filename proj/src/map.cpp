#include "dulac/map.hpp"

namespace dulac {

FormalMap FormalMap::identity(int order, bool exact) {
    return {Series::var_x(order, exact), Series::var_y(order, exact)};
}

void FormalMap::validate() const {
    if (!translation && (!mx.at_origin().is_zero() || !my.at_origin().is_zero()))
        throw degenerate_input("FormalMap: nonzero constant term without translation flag");
    if (jac_det().is_zero()) throw degenerate_input("FormalMap: linear part not invertible");
}

FormalMap compose(const FormalMap& phi, const FormalMap& psi) {
    FormalMap r{substitute(phi.mx, psi.mx, psi.my), substitute(phi.my, psi.mx, psi.my),
                phi.translation || psi.translation};
    return r;
}

FormalMap invert_map(const FormalMap& phi) {
    phi.validate();
    if (phi.translation) throw degenerate_input("invert_map: translation maps not supported");
    int ord = phi.order();
    bool exact = phi.exact_mode();
    Coefficient det = phi.jac_det();
    Coefficient a = phi.jxx(), b = phi.jxy(), c = phi.jyx(), d = phi.jyy();
    auto linv = [&](const Series& u, const Series& v) {
        // apply [[a,b],[c,d]]^{-1} = 1/det [[d,-b],[-c,a]]
        Series rx = (u * d - v * b) * (phi.mx.one_coeff() / det);
        Series ry = (v * a - u * c) * (phi.mx.one_coeff() / det);
        return std::pair{rx, ry};
    };
    Series idx = Series::var_x(ord, exact), idy = Series::var_y(ord, exact);
    // higher-order part h := phi - L
    Series hx = phi.mx, hy = phi.my;
    hx.set(1, 0, hx.zero_coeff());
    hx.set(0, 1, hx.zero_coeff());
    hy.set(1, 0, hy.zero_coeff());
    hy.set(0, 1, hy.zero_coeff());
    auto [px, py] = linv(idx, idy);
    for (int it = 0; it < ord + 1; ++it) {
        Series ex = idx - substitute(hx, px, py);
        Series ey = idy - substitute(hy, px, py);
        auto [nx, ny] = linv(ex, ey);
        if (nx == px && ny == py) { px = nx; py = ny; break; }
        px = nx;
        py = ny;
    }
    return {px, py};
}

bool approx_identity(const FormalMap& phi, double tol) {
    int ord = phi.order();
    return approx_equal(phi.mx, Series::var_x(ord, phi.exact_mode()), tol) &&
           approx_equal(phi.my, Series::var_y(ord, phi.exact_mode()), tol);
}

} // namespace dulac
