#include "dulac/classify.hpp"

#include <cmath>
#include <numeric>

namespace dulac {

LinearPart linear_part(const VectorField& Z) {
    Series A = Z.sx(), B = Z.sy();
    return {A.coeff(1, 0), A.coeff(0, 1), B.coeff(1, 0), B.coeff(0, 1)};
}

std::optional<Series> solve_zero_graph_y(const Series& B) {
    Series dB = dy(B);
    if (dB.at_origin().is_zero()) return std::nullopt;
    int ord = B.order();
    Series w = Series::zero(ord, B.exact_mode());
    Series xs = Series::var_x(ord, B.exact_mode());
    for (int it = 0; it <= ord; ++it) {
        Series val = substitute(B, xs, w);
        if (val.is_zero()) break;
        Series slope = substitute(dB, xs.truncated(dB.order()), w.truncated(dB.order()));
        Series neww = w - val.truncated(slope.order()) * invert_unit(slope);
        neww = neww.truncated(ord);
        if (neww == w) break;
        w = neww;
    }
    if (!substitute(B, xs, w).is_zero()) {
        // float-mode residue may survive below tolerance
        if (!approx_zero(substitute(B, xs, w))) return std::nullopt;
    }
    return w;
}

std::optional<Series> solve_zero_graph_x(const Series& A) {
    Series dA = dx(A);
    if (dA.at_origin().is_zero()) return std::nullopt;
    int ord = A.order();
    Series w = Series::zero(ord, A.exact_mode());
    Series ys = Series::var_y(ord, A.exact_mode());
    for (int it = 0; it <= ord; ++it) {
        Series val = substitute(A, w, ys);
        if (val.is_zero()) break;
        Series slope = substitute(dA, w.truncated(dA.order()), ys.truncated(dA.order()));
        Series neww = w - val.truncated(slope.order()) * invert_unit(slope);
        neww = neww.truncated(ord);
        if (neww == w) break;
        w = neww;
    }
    if (!approx_zero(substitute(A, w, ys))) return std::nullopt;
    return w;
}

std::optional<std::pair<int, int>> lambda_as_neg_fraction(const Coefficient& l1, const Coefficient& l2,
                                                          double tol, int max_den) {
    if (l1.is_exact()) {
        GaussQ lam = (l1 / l2).q();
        if (lam.im != 0) return std::nullopt;
        Rational r = lam.re;
        if (r > 0) return std::nullopt;
        Rational nr = -r;
        auto num = numerator(nr), den = denominator(nr);
        return std::pair{(int)num, (int)den};
    }
    std::complex<double> lam = l1.approx() / l2.approx();
    if (std::abs(lam.imag()) > tol) return std::nullopt;
    double x = lam.real();
    if (x > tol) return std::nullopt;
    x = -x;
    // continued-fraction search for p/q, q <= max_den
    int best_p = 0, best_q = 1;
    double best_err = std::abs(x);
    for (int q = 1; q <= max_den; ++q) {
        int p = (int)std::llround(x * q);
        double err = std::abs(x - double(p) / q);
        if (err < best_err) {
            best_err = err;
            best_p = p;
            best_q = q;
        }
    }
    if (best_err > tol) return std::nullopt;
    int g = std::gcd(best_p, best_q);
    if (best_p == 0) return std::pair{0, 1};
    return std::pair{best_p / g, best_q / g};
}

namespace {

// lambda + 1/lambda as an exact Gaussian rational (tr^2/det - 2).
GaussQ lambda_sum_exact(const GaussQ& tr, const GaussQ& det) {
    return tr * tr / det - GaussQ(2);
}

SingularityClass classify_pair(const Coefficient& l1, const Coefficient& l2, RationalityHint hint) {
    SingularityClass cls;
    cls.kind = SingularityClass::Kind::nonnilpotent;
    cls.l1 = l1;
    cls.l2 = l2;
    if (auto pq = lambda_as_neg_fraction(l1, l2)) {
        cls.subtype = SingularityClass::Subtype::resonant;
        cls.p = pq->first;
        cls.q = pq->second;
        return cls;
    }
    // lambda not in Q_{<=0}
    if (l1.is_exact()) {
        GaussQ lam = (l1 / l2).q();
        if (lam.im == 0) {
            cls.subtype = lam.re > 0 ? SingularityClass::Subtype::rational_node
                                     : SingularityClass::Subtype::resonant; // unreachable: negative handled above
        } else {
            cls.subtype = SingularityClass::Subtype::complex_lambda;
        }
        return cls;
    }
    std::complex<double> lam = l1.approx() / l2.approx();
    if (std::abs(lam.imag()) > 1e-9) {
        cls.subtype = SingularityClass::Subtype::complex_lambda;
        return cls;
    }
    double x = lam.real();
    bool rational = hint == RationalityHint::rational;
    if (x < 0) {
        cls.subtype = rational ? SingularityClass::Subtype::resonant : SingularityClass::Subtype::quasi_resonant;
        if (rational) {
            auto pq = lambda_as_neg_fraction(l1, l2);
            if (!pq) throw degenerate_input("classify: rational hint but lambda not close to a small fraction");
            cls.p = pq->first;
            cls.q = pq->second;
        }
    } else {
        cls.subtype = rational ? SingularityClass::Subtype::rational_node
                               : SingularityClass::Subtype::poincare_nonresonant;
    }
    return cls;
}

} // namespace

SingularityClass classify(const VectorField& Z, RationalityHint hint) {
    SingularityClass cls;
    Series A = Z.sx(), B = Z.sy();
    bool exact = Z.exact_mode();
    if (!A.at_origin().is_zero() || !B.at_origin().is_zero()) {
        cls.kind = SingularityClass::Kind::regular;
        return cls;
    }
    LinearPart J = linear_part(Z);
    Coefficient tr = J.a + J.d;
    Coefficient det = J.a * J.d - J.b * J.c;
    bool J_zero = J.a.is_zero() && J.b.is_zero() && J.c.is_zero() && J.d.is_zero();
    if (J_zero || (det.is_zero() && tr.is_zero())) {
        cls.kind = SingularityClass::Kind::nilpotent;
        return cls;
    }
    if (det.is_zero()) {
        // eigenvalues {0, tr}: non-isolated iff the singular locus is a curve
        cls.kind = SingularityClass::Kind::nonnilpotent;
        cls.l1 = tr.zero_like();
        cls.l2 = tr;
        cls.subtype = SingularityClass::Subtype::resonant;
        cls.p = 0;
        cls.q = 1;
        FormalMap M = eigen_chart(Z, cls);
        // pull back by the linear chart directly
        Series Am = substitute(A, M.mx, M.my);
        Series Bm = substitute(B, M.mx, M.my);
        Coefficient detM = M.jac_det();
        Series Anew = (Am * M.jyy() - Bm * M.jxy()) * (tr.one_like() / detM);
        Series Bnew = (Bm * M.jxx() - Am * M.jyx()) * (tr.one_like() / detM);
        if (auto w = solve_zero_graph_y(Bnew)) {
            Series Aval = substitute(Anew, Series::var_x(Anew.order(), exact), *w);
            if (approx_zero(Aval)) {
                cls.kind = SingularityClass::Kind::nonisolated;
                cls.subtype = SingularityClass::Subtype::none;
                return cls;
            }
        }
        return cls;
    }
    // two nonzero eigenvalues
    if (exact) {
        GaussQ trq = tr.q(), detq = det.q();
        GaussQ disc = trq * trq - GaussQ(4) * detq;
        if (auto s = exact_sqrt(disc)) {
            GaussQ e1 = (trq + *s) / GaussQ(2);
            GaussQ e2 = (trq - *s) / GaussQ(2);
            // canonical labeling: |l1| <= |l2| when both real rational
            Coefficient c1(e1), c2(e2);
            if (e1.is_real() && e2.is_real()) {
                Rational a1 = e1.re < 0 ? Rational(-e1.re) : e1.re;
                Rational a2 = e2.re < 0 ? Rational(-e2.re) : e2.re;
                if (a1 > a2) std::swap(c1, c2);
            }
            return classify_pair(c1, c2, hint);
        }
        // irrational spectrum: decide through tau = lambda + 1/lambda
        GaussQ tau = lambda_sum_exact(trq, detq);
        SingularityClass out;
        out.kind = SingularityClass::Kind::nonnilpotent;
        // eigenvalues are not representable exactly; expose float approximations
        std::complex<double> trf = tr.approx(), detf = det.approx();
        std::complex<double> sq = std::sqrt(trf * trf - 4.0 * detf);
        std::complex<double> e1 = (trf + sq) / 2.0, e2 = (trf - sq) / 2.0;
        if (std::abs(e1) > std::abs(e2)) std::swap(e1, e2);
        out.l1 = Coefficient(e1);
        out.l2 = Coefficient(e2);
        if (tau.im != 0) out.subtype = SingularityClass::Subtype::complex_lambda;
        else if (tau.re < -2) out.subtype = SingularityClass::Subtype::quasi_resonant;
        else if (tau.re > 2) out.subtype = SingularityClass::Subtype::poincare_nonresonant;
        else out.subtype = SingularityClass::Subtype::complex_lambda;
        return out;
    }
    std::complex<double> trf = tr.f(), detf = det.f();
    std::complex<double> sq = std::sqrt(trf * trf - 4.0 * detf);
    std::complex<double> e1 = (trf + sq) / 2.0, e2 = (trf - sq) / 2.0;
    if (std::abs(e1) > std::abs(e2)) std::swap(e1, e2);
    return classify_pair(Coefficient(e1), Coefficient(e2), hint);
}

FormalMap eigen_chart(const VectorField& Z, const SingularityClass& cls) {
    LinearPart J = linear_part(Z);
    int ord = Z.order;
    bool exact = Z.exact_mode();
    auto eigvec = [&](const Coefficient& lam) -> std::pair<Coefficient, Coefficient> {
        // kernel of J - lam: rows (a-lam, b), (c, d-lam)
        Coefficient a = J.a - lam, d = J.d - lam;
        if (!J.b.is_zero() || !a.is_zero()) {
            if (!J.b.is_zero()) return {J.b, -a};
            return {a.zero_like(), a.one_like()}; // b=0, a-lam=0 -> e2 direction
        }
        if (!J.c.is_zero() || !d.is_zero()) {
            if (!J.c.is_zero()) return {-d, J.c};
            return {a.one_like(), a.zero_like()};
        }
        return {a.one_like(), a.zero_like()};
    };
    auto [v1x, v1y] = eigvec(cls.l1);
    auto [v2x, v2y] = eigvec(cls.l2);
    Coefficient det = v1x * v2y - v1y * v2x;
    if (det.is_zero()) throw degenerate_input("eigen_chart: defective linear part");
    Series xs = Series::var_x(ord, exact), ys = Series::var_y(ord, exact);
    FormalMap M{xs * v1x + ys * v2x, xs * v1y + ys * v2y};
    return M;
}

} // namespace dulac
