#pragma once

#include <optional>

#include "dulac/dressed.hpp"
#include "dulac/rational_series.hpp"

namespace dulac {

// Meromorphic vector field cx * d/dx + cy * d/dy at a truncation order.
// `order` is the certified truncation degree; brackets lower it by one and
// operations propagate the minimum.
struct VectorField {
    RationalSeries cx;
    RationalSeries cy;
    int order = Config::default_order;

    VectorField() = default;
    VectorField(RationalSeries x_, RationalSeries y_, int ord) : cx(std::move(x_)), cy(std::move(y_)), order(ord) {}
    VectorField(Series x_, Series y_) : cx(std::move(x_)), cy(std::move(y_)) {
        order = std::min(cx.order(), cy.order());
    }

    bool exact_mode() const { return cx.exact_mode(); }
    bool is_zero() const { return cx.is_zero() && cy.is_zero(); }
    bool holomorphic() const { return cx.unit_den() && cy.unit_den(); }

    Series sx() const { return cx.as_series_or_throw("vector field x-component is not holomorphic"); }
    Series sy() const { return cy.as_series_or_throw("vector field y-component is not holomorphic"); }

    VectorField truncated(int ord) const;

    friend VectorField operator+(const VectorField& a, const VectorField& b);
    friend VectorField operator-(const VectorField& a, const VectorField& b);
    VectorField scaled(const Coefficient& c) const { return {cx * c, cy * c, order}; }
    VectorField mul(const RationalSeries& f) const { return {cx * f, cy * f, std::min(order, f.order())}; }
};

// Covector wx dx + wy dy.
struct OneForm {
    RationalSeries wx;
    RationalSeries wy;

    RationalSeries pair_with(const VectorField& W) const { return wx * W.cx + wy * W.cy; }
};

VectorField diagonal_field(const Coefficient& l1, const Coefficient& l2, int order);

// --- Lie calculus ---

// W . F as a rational series (always defined).
RationalSeries lie_rs(const VectorField& W, const RationalSeries& F);

// W . F for series F; throws division_failure when W's poles survive.
Series lie_derivative(const VectorField& W, const Series& F);

// Dressed and log-Laurent expressions are closed under the action:
// product rule on x^n y^m (Qu)^gamma, log rule on the log terms.
DressedSeries lie_derivative(const VectorField& W, const DressedSeries& F);
LogLaurent lie_derivative(const VectorField& W, const LogLaurent& F);

// W . log(x^n y^m (Qu)^gamma) = n Wx/x + m Wy/y + gamma (W.Qu)/Qu,
// when the exact divisions hold (throws otherwise).
Series lie_log_dressed_factor(const VectorField& W, int n, int m, const Coefficient& gamma, const Series& Qu);

VectorField bracket(const VectorField& Z, const VectorField& Y);

struct AffineRatio {
    std::optional<Coefficient> delta; // [Z,Y] = delta Y when present
    bool transverse = false;          // det(Z,Y) not identically zero
};
AffineRatio affine_ratio(const VectorField& Z, const VectorField& Y, double tol = Config::compare_tol);

RationalSeries det_field(const VectorField& Z, const VectorField& Y);

// Dual basis (tau_Z, tau_Y): tau_Z(Z)=1, tau_Z(Y)=0, tau_Y(Z)=0, tau_Y(Y)=1.
std::pair<OneForm, OneForm> dual_basis(const VectorField& Z, const VectorField& Y);

// Coefficient of dx ^ dy in d(omega).
RationalSeries d_one_form(const OneForm& w);

// Coefficient of dx ^ dy in a ^ b.
RationalSeries wedge(const OneForm& a, const OneForm& b);

// K with Z.f = K f up to truncation, or nullopt (f not a separatrix to this order).
std::optional<Series> cofactor(const VectorField& Z, const Series& f);

// Constant detection for rational series: all non-constant structure zero.
std::optional<Coefficient> rs_constant(const RationalSeries& r, double tol = Config::compare_tol);

} // namespace dulac
