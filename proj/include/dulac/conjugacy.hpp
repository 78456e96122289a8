#pragma once

#include "dulac/classify.hpp"
#include "dulac/fields.hpp"
#include "dulac/map.hpp"

namespace dulac {

// phi^* W = (D phi)^{-1} (W o phi), solved as a 2x2 linear system over
// rational series.  Certified order drops by one (Jacobian entries).
VectorField pullback(const FormalMap& phi, const VectorField& W);

// Contravariance helper: pullback(compose(phi, psi), W) == pullback(psi, pullback(phi, W)).

// The map (x,y) -> Phi_W^{F(x,y)}(x,y) via the exponential series
// sum F^n/n! W.^n (x,y).  Requires W holomorphic, F(0,0) = 0 and
// (W.F)(0,0) != -1 (invertible Jacobian).
FormalMap flow_map(const VectorField& W, const Series& F);

struct TangentialResult {
    FormalMap map;        // flow of W with time T
    VectorField predicted; // W / (1 + W.T)
};
// Flow along W itself; predicted pullback has the closed form W/(1+W.T).
TangentialResult tangential(const VectorField& W, const Series& T);

struct TransversalResult {
    FormalMap map;
    VectorField predicted_Y; // Y / (1 + Y.N)
    VectorField predicted_Z; // Z - (Z.N + D N) predicted_Y
};
// Requires [Z,Y] = D Y with Y.D = 0 at truncation (checked).
TransversalResult transversal(const VectorField& Z, const VectorField& Y, const Series& D, const Series& N);

// Chart m with pullback(m, Z) = d/dt at truncation, t the first coordinate;
// built as the flow box m(t,z) = Phi_Z^t(sigma(z)) over a coordinate-axis
// transversal sigma through p.  Z must be holomorphic and nonzero at p.
FormalMap rectify(const VectorField& Z, const Coefficient& px, const Coefficient& py);

struct NonIsolatedNormalForm {
    FormalMap chart; // pullback(chart, Z) = l2 y (1 + mu x^k) d/dy
    int k = 1;
    Coefficient mu;
    Coefficient l2;
    VectorField normal_form;
};
NonIsolatedNormalForm normalize_nonisolated(const VectorField& Z);

// Iterated Lie derivatives of the coordinate functions: W.^n (x, y).
// Entry n is certified to degree order - max(n-1, 0).
std::vector<std::pair<Series, Series>> lie_powers_of_id(const VectorField& W, int count);

} // namespace dulac
