#pragma once

#include <vector>

#include "dulac/dressed.hpp"
#include "dulac/fields.hpp"

namespace dulac {

// Data of the prepared resonant operator X = X0 + R y^eps W0 with
//   u = x^q y^p,  W0 = l1 x d/dx + l2 y d/dy,  l1 = -(p/q) l2,
//   X0 = u^k x d/dx + (1 + mu u^k) W0,
// R divisible by u^{k+1}; eps = -1 requires p = 0.
struct ResonantOperator {
    int p = 0;
    int q = 1;
    int k = 1;
    Coefficient mu;
    Coefficient l2;
    Series R;
    int eps = 0; // the eps of the zeroth-order term eps*l2*(1+mu u^k)*F

    Coefficient l1() const { return -(l2 * l2.from_int(p) / l2.from_int(q)); }
    void validate() const;
    VectorField X0(int order) const;          // u^k x d/dx + (1+mu u^k) W0
    VectorField W0(int order) const;          // l1 x d/dx + l2 y d/dy
    VectorField X(int order) const;           // X0 + R y^eps W0
    VectorField Y0(int order) const;          // y^eps W0 (series components; eps=-1 needs p=0)
    Series delta0(int order) const;           // eps l2 (1 + mu u^k)
    Series u_power(int n, int order) const;   // u^n
};

// Blocking right-hand-side directions of the resonant solver: coefficients
// at the monomials y^{-eps} u^n, 0 <= n <= k, intersected with Z^2_{>=0}.
struct Obstructions {
    struct Entry {
        Expo at;
        int n; // resonance index: at = (n q, n p - eps)
        Coefficient value;
    };
    std::vector<Entry> entries;
    bool empty() const { return entries.empty(); }
};

// Solves (Z0 + R y d/dy) . F = G for lambda = l1/l2 without nonzero rational
// resonances; F(0,0) = 0, unique.  Exact mode refuses zero divisors
// (rational lambda belongs to the resonant solver); float mode enforces
// |a l1 + b l2| >= divisor_floor.
Series solve_diagonal(const Coefficient& l1, const Coefficient& l2, const Series& R, const Series& G,
                      double divisor_floor = Config::divisor_floor);

// Forward operator of solve_diagonal, for round-trip checks.
Series apply_diagonal(const Coefficient& l1, const Coefficient& l2, const Series& R, const Series& F);

struct ResonantSolution {
    Series F;
    Obstructions obstructions;
};

// Solves X.F + eps l2 (1+mu u^k) F = G - (reported obstructions); the free
// coefficient (d^{-eps} F / dy^{-eps})(0,0) is normalized to 0 for eps <= 0.
// Resonant-direction coefficients of F of degree > order - k(q+p) are not
// reachable at this truncation and are left at zero.
ResonantSolution solve_resonant(const ResonantOperator& op, const Series& G);

// Forward operator of solve_resonant.
Series apply_resonant(const ResonantOperator& op, const Series& F);

enum class DecomposeMode { quasi_resonant, resonant };

struct LogClassDecomposition {
    Series Fhat;
    Coefficient alpha;
    Coefficient beta;       // quasi-resonant: the G(0,0) log y coefficient
    Coefficient polar_coeff; // resonant: the -G(0,0)/(qk) coefficient on u^{-k}
    Series G;                // X.F, for reference
};

// Lemma-style decomposition of F in the log-Laurent class, given that X.F
// is a power series.  Quasi-resonant:
//   F = Fhat + G(0,0) log y + alpha (log x - lambda log y).
// Resonant:
//   F = Fhat - G(0,0)/(q k u^k) + alpha ((1-mu p) log y - mu q log x + 1/(k u^k)).
LogClassDecomposition decompose_logclass(const LogLaurent& F, const VectorField& X, DecomposeMode mode,
                                         const Coefficient& lambda_or_unused, const ResonantOperator* op);

// Primitive of a closed 1-form with poles on the axes only:
// F in the log-Laurent class with dF = omega, zero constant term.
LogLaurent integrate_closed_form(const OneForm& omega);

} // namespace dulac
