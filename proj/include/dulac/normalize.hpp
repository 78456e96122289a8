#pragma once

#include <vector>

#include "dulac/cohom.hpp"
#include "dulac/conjugacy.hpp"

namespace dulac {

// Coefficient vector of a series in u = x^q y^p (entry l is the u^l
// coefficient).
using USeries = std::vector<Coefficient>;

std::optional<USeries> extract_u_series(const Series& s, int q, int p);
Series u_series_to_bivariate(const USeries& c, int q, int p, int order, bool exact);

// Z = U (X0 + R Y0) in the prepared chart; pullback(chart, Z_input) equals
// the prepared field at the certified order.
struct PreparedField {
    bool resonant = false;     // false: quasi-resonant (Y0 = y d/dy)
    Series U;                  // unit, U(0,0) = 1
    Series R;                  // R(0,0) = 0; resonant: divisible by u^{k+1}
    Coefficient l1, l2;
    ResonantOperator op;       // resonant data (p, q, k, mu, l2, R, eps)
    FormalMap chart;
    bool linearizable_to_order = false; // resonant: no u^k term detected up to the order
    int order = Config::default_order;

    VectorField prepared_field() const; // U * (X0 + R Y0)
    VectorField X() const;              // X0 + R Y0
};

// Separatrix-straightening + factorization (quasi-resonant), plus the
// degree-by-degree resonant cleanup to the Dulac shape (resonant).
// For saddle-nodes, eps selects the chart convention (+1 straightens the
// formal center manifold, -1 keeps only the strong separatrix shape).
PreparedField prepare(const VectorField& Z, const SingularityClass& cls, int eps = 1);

// Chart psi with pullback(psi, prepared field) = Z0 = l1 x d/dx + l2 y d/dy.
FormalMap linearize_quasiresonant(const PreparedField& prep);

struct FormalInvariants {
    int k = 1;
    Coefficient mu;
    USeries Q;           // degree <= k, Q[0] = 1, as found in the working chart
    USeries Q_canonical; // representative under u -> alpha u, alpha^k = 1
    Series Qu;           // Q composed with u, bivariate
    Series T;            // X.T = 1/(Q o u) - 1/U
};

FormalInvariants formal_invariants(const PreparedField& prep);

// x^n y^m (Qu)^gamma * base with integer (possibly negative) n, m.
struct DressedVectorField {
    int n = 0;
    int m = 0;
    Coefficient gamma;
    Series Qu;
    VectorField base;

    // expanded meromorphic field (dressed factor expanded as a series)
    VectorField expanded() const;
};

// [Z, Yd] - delta * Yd with the dressed factor handled by the product rule;
// exact when the inputs are exact.
VectorField dressed_bracket_residual(const VectorField& Z, const DressedVectorField& Yd,
                                     const Coefficient& delta);

struct PartnerResult {
    DressedVectorField Yhat;
    Coefficient delta;
    USeries Q; // resonant: the forced Q (delta != 0), or the supplied one
};

// Quasi-resonant partner x^n y^m (d x d/dx + c y d/dy).
PartnerResult transverse_partner_quasiresonant(const Coefficient& l1, const Coefficient& l2, int n, int m,
                                               const Coefficient& c, const Coefficient& d, int order);

// Resonant partner x^n y^m (Q o u)^gamma (c Z0 + d W0) for Z0 = (Q o u) X0.
// delta != 0 forces Q = 1 - (n/delta + mu) u^k and needs (n,m) not in (q,p)Z;
// delta = 0 forces n = m = 0 and leaves Q free (supply via Qfree).
PartnerResult transverse_partner_resonant(const ResonantOperator& op, int n, int m, const Coefficient& c,
                                          const Coefficient& d, const USeries* Qfree, int order);

// Solve (n, m) from delta = n l1 + m l2 inside a search window.
std::optional<std::pair<int, int>> solve_lattice_pair(const Coefficient& l1, const Coefficient& l2,
                                                      const Coefficient& delta, int window,
                                                      double tol = Config::compare_tol);

struct NormalFormReport {
    Coefficient delta;
    int n = 0, m = 0;
    Coefficient gamma;
    Coefficient c, d;
    FormalInvariants inv;
    USeries P;               // degree <= k-1 (zero at formal truncation level)
    VectorField Ztilde;      // (Q o u) X0 (+ (P o u) x^n y^m W0)
    DressedVectorField Ytilde;
    FormalMap chart;         // pullback(chart, prepared Z) = Ztilde
};

// Full resonant pipeline on a prepared field together with a transverse
// partner Y given in the prepared chart.
NormalFormReport resonant_normal_form(const PreparedField& prep, const VectorField& Y_prepared);

// Reduction step of the transversal residual: given X = X0 + (K o u) x^n y^m W0,
// find F (a u-series) and a polynomial P of degree <= k-1 with
//   q u^{k+1} (FQ)' + (delta + (n + delta mu) u^k) (FQ) = K - P
// so that the flow of x^n y^m W0 with time (FQ) o u conjugates X to
// X0 + (P o u) x^n y^m W0.  P picks up exactly the blocked directions.
struct ReductionResult {
    USeries FQ;
    USeries P;
};
ReductionResult reduce_transversal_residual(const ResonantOperator& op, int n, int m, const USeries& K,
                                            int ulen);

// ---- delta-lattice classification ----

enum class TriState { yes, no, unknown };

struct DeltaLattice {
    enum class Shape { all_of_C, rank2, dense_line, rank1, point, empty };
    Shape shape = Shape::point;
    // generators, when meaningful: rank2/dense_line use {g1, g2} = {l1, l2};
    // rank1 uses g1; point uses g1 when the singleton is known.
    Coefficient g1, g2;
    bool singleton_known = false;

    // membership at the formal level for the closure property tests
    bool contains(const Coefficient& delta, int window = 16, double tol = Config::compare_tol) const;
};

DeltaLattice delta_lattice(const SingularityClass& cls, TriState linearizable, TriState normal_form,
                           const Coefficient* known_delta = nullptr);

} // namespace dulac
