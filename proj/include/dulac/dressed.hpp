#pragma once

#include "dulac/series.hpp"

namespace dulac {

// x^n y^m (Qu)^gamma * body, with Qu a unit series (Qu(0,0) = 1) so the
// dressed factor expands through exp(gamma * log Qu). n, m may be negative.
struct DressedSeries {
    int n = 0;
    int m = 0;
    Coefficient gamma;
    Series Qu;   // already composed with u = x^q y^p
    Series body;

    int order() const { return std::min(Qu.order(), body.order()); }
    bool exact_mode() const { return body.exact_mode(); }

    static DressedSeries plain(const Series& s) {
        DressedSeries d;
        d.gamma = s.zero_coeff();
        d.Qu = Series::constant(s.one_coeff(), s.order());
        d.body = s;
        return d;
    }
};

struct DressedExpansion {
    int n = 0;
    int m = 0;
    Series value; // (Qu)^gamma * body
};

// Expands the ramified factor: returns (n, m) and (Qu)^gamma * body.
DressedExpansion dressed_expand(const DressedSeries& d);

// A/(x^N y^M) + alpha log x + beta log y.  N = M = 0 with alpha = beta = 0
// reduces to a plain Series.
struct LogLaurent {
    Series A;
    int N = 0;
    int M = 0;
    Coefficient alpha;
    Coefficient beta;

    int order() const { return A.order(); }
    bool exact_mode() const { return A.exact_mode(); }

    static LogLaurent plain(const Series& s) {
        LogLaurent l;
        l.A = s;
        l.alpha = s.zero_coeff();
        l.beta = s.zero_coeff();
        return l;
    }

    bool is_series() const { return N == 0 && M == 0 && alpha.is_zero() && beta.is_zero(); }

    // Strip common monomial factors of A against x^N y^M.
    void canonicalize();

    // The series it represents when the polar part divides out and no logs.
    std::optional<Series> as_series() const;
};

LogLaurent ll_add(const LogLaurent& a, const LogLaurent& b);
LogLaurent ll_sub(const LogLaurent& a, const LogLaurent& b);
bool ll_approx_equal(const LogLaurent& a, const LogLaurent& b, double tol = Config::compare_tol);

} // namespace dulac
