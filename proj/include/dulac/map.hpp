#pragma once

#include "dulac/series.hpp"

namespace dulac {

// Formal change of coordinates (x, y) -> (mx(x,y), my(x,y)).
// Fixes the origin unless `translation` is set (then constant terms are
// allowed; used for charts based at a point away from the origin).
struct FormalMap {
    Series mx;
    Series my;
    bool translation = false;

    int order() const { return std::min(mx.order(), my.order()); }
    bool exact_mode() const { return mx.exact_mode(); }

    static FormalMap identity(int order, bool exact = true);

    // Entries of the linear part at the origin.
    Coefficient jxx() const { return mx.coeff(1, 0); }
    Coefficient jxy() const { return mx.coeff(0, 1); }
    Coefficient jyx() const { return my.coeff(1, 0); }
    Coefficient jyy() const { return my.coeff(0, 1); }
    Coefficient jac_det() const { return jxx() * jyy() - jxy() * jyx(); }

    void validate() const; // origin / invertible-linear-part invariants
};

// phi o psi (apply psi first).
FormalMap compose(const FormalMap& phi, const FormalMap& psi);

// Inverse at truncation order, by degree-by-degree fixed point.
FormalMap invert_map(const FormalMap& phi);

bool approx_identity(const FormalMap& phi, double tol = Config::compare_tol);

} // namespace dulac
