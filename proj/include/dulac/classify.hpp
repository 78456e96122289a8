#pragma once

#include <optional>

#include "dulac/fields.hpp"
#include "dulac/map.hpp"

namespace dulac {

enum class RationalityHint { automatic, rational, irrational };

// Linear-part classification of a holomorphic germ.  Eigenvalues are
// labeled so that l2 != 0; for two rational eigenvalues the labels are
// chosen with |l1| <= |l2| so that lambda = l1/l2 has |lambda| <= 1.
struct SingularityClass {
    enum class Kind { regular, nonisolated, nonnilpotent, nilpotent };
    enum class Subtype {
        none,
        quasi_resonant,       // lambda in R_{<0} \ Q
        resonant,             // lambda = -p/q in Q_{<=0} (saddle-node when p = 0)
        poincare_nonresonant, // lambda in R_{>0} \ Q
        complex_lambda,       // lambda not real
        rational_node         // lambda in Q_{>0}: non-reduced
    };

    Kind kind = Kind::regular;
    Subtype subtype = Subtype::none;
    Coefficient l1, l2;
    int p = 0, q = 1; // reduced lambda = -p/q for the resonant subtype

    bool reduced_saddle() const {
        return kind == Kind::nonnilpotent &&
               (subtype == Subtype::quasi_resonant || subtype == Subtype::resonant);
    }
};

struct LinearPart {
    Coefficient a, b, c, d; // [[a, b], [c, d]]
};

LinearPart linear_part(const VectorField& Z);

SingularityClass classify(const VectorField& Z, RationalityHint hint = RationalityHint::automatic);

// Linear chart M (columns = chosen eigenvectors) with pullback(M, Z) in
// Jordan-diagonal position diag(l1, l2); requires eigenvalues representable
// in the coefficient mode.
FormalMap eigen_chart(const VectorField& Z, const SingularityClass& cls);

// w(x) with B(x, w(x)) = 0 to order, when dB/dy(0,0) != 0.
std::optional<Series> solve_zero_graph_y(const Series& B);
// symmetric version: w(y) with A(w(y), y) = 0, when dA/dx(0,0) != 0.
std::optional<Series> solve_zero_graph_x(const Series& A);

// Writes lambda = l1/l2 as a reduced fraction -p/q when it is rational
// (exact mode), or within tol (float mode with a rational hint).
std::optional<std::pair<int, int>> lambda_as_neg_fraction(const Coefficient& l1, const Coefficient& l2,
                                                          double tol = 1e-9, int max_den = 64);

} // namespace dulac
