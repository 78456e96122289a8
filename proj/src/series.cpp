#include "dulac/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dulac {

Series Series::constant(const Coefficient& c, int order) {
    Series s(order, c.is_exact());
    s.set(0, 0, c);
    return s;
}

Series Series::monomial(int a, int b, const Coefficient& c, int order) {
    Series s(order, c.is_exact());
    if (a + b <= order) s.set(a, b, c);
    return s;
}

Series Series::var_x(int order, bool exact) {
    return monomial(1, 0, exact ? Coefficient(GaussQ(1)) : Coefficient(std::complex<double>(1.0)), order);
}

Series Series::var_y(int order, bool exact) {
    return monomial(0, 1, exact ? Coefficient(GaussQ(1)) : Coefficient(std::complex<double>(1.0)), order);
}

Coefficient Series::coeff(int a, int b) const {
    auto it = terms_.find(Expo{a, b});
    if (it == terms_.end()) return zero_coeff();
    return it->second;
}

void Series::set(int a, int b, const Coefficient& c) {
    if (a < 0 || b < 0) throw math_error("negative exponent in Series");
    Expo e{a, b};
    if (e.deg() > order_ || c.negligible(Config::prune_eps)) {
        terms_.erase(e);
        return;
    }
    terms_[e] = c;
}

void Series::add_term(int a, int b, const Coefficient& c) {
    if (a + b > order_) return;
    set(a, b, coeff(a, b) + c);
}

Series Series::truncated(int new_order) const {
    Series r(new_order, exact_);
    for (const auto& [e, c] : terms_)
        if (e.deg() <= new_order) r.terms_[e] = c;
    return r;
}

std::optional<int> Series::valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.deg();
}

std::optional<Expo> Series::leading_expo() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

static void check_modes(const Series& a, const Series& b) {
    if (a.exact_mode() != b.exact_mode()) throw mode_mismatch();
}

Series operator+(const Series& a, const Series& b) {
    check_modes(a, b);
    Series r(std::min(a.order(), b.order()), a.exact_mode());
    for (const auto& [e, c] : a.terms())
        if (e.deg() <= r.order()) r.set(e.a, e.b, c);
    for (const auto& [e, c] : b.terms())
        if (e.deg() <= r.order()) r.add_term(e.a, e.b, c);
    return r;
}

Series operator-(const Series& a, const Series& b) {
    check_modes(a, b);
    Series r(std::min(a.order(), b.order()), a.exact_mode());
    for (const auto& [e, c] : a.terms())
        if (e.deg() <= r.order()) r.set(e.a, e.b, c);
    for (const auto& [e, c] : b.terms())
        if (e.deg() <= r.order()) r.add_term(e.a, e.b, -c);
    return r;
}

Series operator-(const Series& a) {
    Series r(a.order(), a.exact_mode());
    for (const auto& [e, c] : a.terms()) r.set(e.a, e.b, -c);
    return r;
}

Series operator*(const Series& a, const Series& b) {
    check_modes(a, b);
    Series r(std::min(a.order(), b.order()), a.exact_mode());
    for (const auto& [ea, ca] : a.terms()) {
        if (ea.deg() > r.order()) continue;
        for (const auto& [eb, cb] : b.terms()) {
            int da = ea.a + eb.a, db = ea.b + eb.b;
            if (da + db > r.order()) continue;
            r.add_term(da, db, ca * cb);
        }
    }
    return r;
}

Series Series::operator*(const Coefficient& c) const {
    Series r(order_, exact_);
    for (const auto& [e, v] : terms_) r.set(e.a, e.b, v * c);
    return r;
}

bool operator==(const Series& a, const Series& b) {
    Series d = a - b;
    return d.is_zero();
}

double Series::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, c.abs());
    return m;
}

Series arith(const Series& a, const Series& b, ArithKind kind) {
    if (a.order() != b.order()) throw order_mismatch(a.order(), b.order());
    switch (kind) {
        case ArithKind::add: return a + b;
        case ArithKind::sub: return a - b;
        case ArithKind::mul: return a * b;
    }
    throw math_error("unreachable");
}

Series invert_unit(const Series& a) {
    Coefficient a0 = a.at_origin();
    if (a0.is_zero()) throw division_failure("invert_unit: zero constant term");
    // b solves a*b = 1: recurrence on graded terms.
    Series b(a.order(), a.exact_mode());
    Coefficient inv0 = a.one_coeff() / a0;
    b.set(0, 0, inv0);
    // iterate degree by degree: b_d = -inv0 * sum_{0<k<=d} a_k * b_{d-k}
    for (int d = 1; d <= a.order(); ++d) {
        // compute (a*b) restricted to degree d with current partial b
        for (int i = 0; i <= d; ++i) {
            int j = d - i;
            Coefficient acc = a.zero_coeff();
            for (const auto& [ea, ca] : a.terms()) {
                if (ea.deg() == 0 || ea.a > i || ea.b > j) continue;
                Coefficient bc = b.coeff(i - ea.a, j - ea.b);
                if (!bc.is_zero()) acc += ca * bc;
            }
            if (!acc.is_zero()) b.set(i, j, -(inv0 * acc));
        }
    }
    return b;
}

std::optional<Series> divide_monomial(const Series& a, int p, int q) {
    Series r(a.order(), a.exact_mode());
    for (const auto& [e, c] : a.terms()) {
        if (e.a < p || e.b < q) return std::nullopt;
        r.set(e.a - p, e.b - q, c);
    }
    return r;
}

std::optional<Series> divide_exact(const Series& a, const Series& b) {
    if (b.is_zero()) return std::nullopt;
    Expo lead = *b.leading_expo();
    Coefficient lc = b.coeff(lead.a, lead.b);
    Series rem = a;
    Series quot(a.order(), a.exact_mode());
    // greedy: the minimal term of the remainder must be divisible by lead
    while (!rem.is_zero()) {
        Expo e = *rem.leading_expo();
        if (e.a < lead.a || e.b < lead.b) return std::nullopt;
        Expo qe{e.a - lead.a, e.b - lead.b};
        Coefficient qc = rem.coeff(e.a, e.b) / lc;
        quot.set(qe.a, qe.b, quot.coeff(qe.a, qe.b) + qc);
        Series t = Series::monomial(qe.a, qe.b, qc, a.order());
        rem = rem - t * b;
        // terms of degree > order - deg(lead) cannot be certified; stop there
        if (auto v = rem.valuation(); v && *v > a.order()) break;
    }
    return quot;
}

Series dx(const Series& a) {
    Series r(std::max(a.order() - 1, 0), a.exact_mode());
    for (const auto& [e, c] : a.terms())
        if (e.a >= 1) r.add_term(e.a - 1, e.b, c * a.int_coeff(e.a));
    return r;
}

Series dy(const Series& a) {
    Series r(std::max(a.order() - 1, 0), a.exact_mode());
    for (const auto& [e, c] : a.terms())
        if (e.b >= 1) r.add_term(e.a, e.b - 1, c * a.int_coeff(e.b));
    return r;
}

Series substitute(const Series& F, const Series& gx, const Series& gy) {
    check_modes(gx, gy);
    int ord = std::min({F.order(), gx.order(), gy.order()});
    bool exact = F.exact_mode();
    if (exact != gx.exact_mode()) throw mode_mismatch();
    // cache powers of gx and gy
    std::vector<Series> px(1, Series::constant(F.one_coeff(), ord));
    std::vector<Series> py(1, Series::constant(F.one_coeff(), ord));
    int max_a = 0, max_b = 0;
    for (const auto& [e, c] : F.terms()) {
        max_a = std::max(max_a, e.a);
        max_b = std::max(max_b, e.b);
    }
    Series gxt = gx.truncated(ord), gyt = gy.truncated(ord);
    for (int i = 1; i <= max_a; ++i) px.push_back(px.back() * gxt);
    for (int j = 1; j <= max_b; ++j) py.push_back(py.back() * gyt);
    Series r(ord, exact);
    for (const auto& [e, c] : F.terms()) r = r + (px[e.a] * py[e.b]) * c;
    return r;
}

Series exp_log(const Series& a, ExpLogKind kind) {
    int ord = a.order();
    if (kind == ExpLogKind::exp) {
        if (!a.at_origin().is_zero()) throw math_error("exp: nonzero constant term");
        Series r = Series::constant(a.one_coeff(), ord);
        Series term = Series::constant(a.one_coeff(), ord);
        Coefficient fact = a.one_coeff();
        for (int n = 1; n <= ord; ++n) {
            term = term * a;
            if (term.is_zero()) break;
            fact = fact * a.int_coeff(n);
            r = r + term * (a.one_coeff() / fact);
        }
        return r;
    }
    if (!(a.at_origin() == a.one_coeff())) throw math_error("log: constant term must be 1");
    Series u = a - Series::constant(a.one_coeff(), ord);
    Series r(ord, a.exact_mode());
    Series term = Series::constant(a.one_coeff(), ord);
    for (int n = 1; n <= ord; ++n) {
        term = term * u;
        if (term.is_zero()) break;
        Coefficient c = a.one_coeff() / a.int_coeff(n);
        if (n % 2 == 0) c = -c;
        r = r + term * c;
    }
    return r;
}

Series pow_unit(const Series& base, const Coefficient& gamma) {
    if (!(base.at_origin() == base.one_coeff())) throw math_error("pow_unit: base constant term must be 1");
    if (gamma.is_zero()) return Series::constant(base.one_coeff(), base.order());
    return exp_series(log_series(base) * gamma);
}

Series pow_int(const Series& base, int n) {
    Series r = Series::constant(base.one_coeff(), base.order());
    for (int i = 0; i < n; ++i) r = r * base;
    return r;
}

int monomial_valuation(const Series& a, int p, int q, int cap) {
    int k = cap;
    for (const auto& [e, c] : a.terms()) {
        int kx = p > 0 ? e.a / p : cap;
        int ky = q > 0 ? e.b / q : cap;
        k = std::min({k, kx, ky});
        if (k == 0) break;
    }
    return k;
}

Series mul_to(const Series& a, const Series& b, int ord) {
    Series r(ord, a.exact_mode());
    for (const auto& [ea, ca] : a.terms()) {
        if (ea.deg() > ord) continue;
        for (const auto& [eb, cb] : b.terms()) {
            int da = ea.a + eb.a, db = ea.b + eb.b;
            if (da + db > ord) continue;
            r.add_term(da, db, ca * cb);
        }
    }
    return r;
}

bool approx_zero(const Series& a, double tol) {
    if (a.exact_mode()) return a.is_zero();
    return a.max_abs_coeff() <= tol;
}

bool approx_equal(const Series& a, const Series& b, double tol) {
    return approx_zero(a - b, tol);
}

std::string Series::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (e.a) os << "*x^" << e.a;
        if (e.b) os << "*y^" << e.b;
    }
    return os.str();
}

} // namespace dulac
