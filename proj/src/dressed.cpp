#include "dulac/dressed.hpp"

namespace dulac {

DressedExpansion dressed_expand(const DressedSeries& d) {
    if (!(d.Qu.at_origin() == d.Qu.one_coeff()))
        throw math_error("dressed_expand: Qu(0,0) must be 1");
    DressedExpansion e;
    e.n = d.n;
    e.m = d.m;
    e.value = pow_unit(d.Qu, d.gamma) * d.body;
    return e;
}

void LogLaurent::canonicalize() {
    if (A.is_zero()) {
        N = M = 0;
        return;
    }
    int px = N, py = M;
    for (const auto& [e, c] : A.terms()) {
        px = std::min(px, e.a);
        py = std::min(py, e.b);
    }
    if (px > 0 || py > 0) {
        A = *divide_monomial(A, px, py);
        N -= px;
        M -= py;
    }
}

std::optional<Series> LogLaurent::as_series() const {
    if (!alpha.is_zero() || !beta.is_zero()) return std::nullopt;
    if (N == 0 && M == 0) return A;
    return divide_monomial(A, N, M);
}

LogLaurent ll_add(const LogLaurent& a, const LogLaurent& b) {
    LogLaurent r;
    r.N = std::max(a.N, b.N);
    r.M = std::max(a.M, b.M);
    Series xa = a.A, xb = b.A;
    // bring over common monomial denominator
    xa = xa * Series::monomial(r.N - a.N, r.M - a.M, a.A.one_coeff(), a.A.order());
    xb = xb * Series::monomial(r.N - b.N, r.M - b.M, b.A.one_coeff(), b.A.order());
    r.A = xa + xb;
    r.alpha = a.alpha + b.alpha;
    r.beta = a.beta + b.beta;
    r.canonicalize();
    return r;
}

LogLaurent ll_sub(const LogLaurent& a, const LogLaurent& b) {
    LogLaurent nb = b;
    nb.A = -nb.A;
    nb.alpha = -nb.alpha;
    nb.beta = -nb.beta;
    return ll_add(a, nb);
}

bool ll_approx_equal(const LogLaurent& a, const LogLaurent& b, double tol) {
    LogLaurent d = ll_sub(a, b);
    bool logs_ok = d.alpha.negligible(tol) && d.beta.negligible(tol);
    return logs_ok && approx_zero(d.A, tol);
}

} // namespace dulac
