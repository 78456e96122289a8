#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dulac/coeff.hpp"

namespace dulac {

// Tolerances shared across the library.
struct Config {
    static constexpr double prune_eps = 1e-14;     // representation noise cutoff
    static constexpr double compare_tol = 1e-10;   // assertion slack, float mode
    static constexpr double divisor_floor = 1e-8;  // small-divisor guard, float mode
    static constexpr int default_order = 12;
};

struct Expo {
    int a = 0;
    int b = 0;
    int deg() const { return a + b; }
    friend bool operator==(const Expo& l, const Expo& r) { return l.a == r.a && l.b == r.b; }
};

// Graded order; within a degree the x-heavy exponent comes first.
struct ExpoLess {
    bool operator()(const Expo& l, const Expo& r) const {
        if (l.deg() != r.deg()) return l.deg() < r.deg();
        return l.a > r.a;
    }
};

// Truncated sparse bivariate formal power series.
// Invariants: no stored term with a+b > order, no stored zero coefficient
// (float mode: coefficients with |c| <= prune_eps are dropped).
class Series {
public:
    using Terms = std::map<Expo, Coefficient, ExpoLess>;

    Series() : order_(Config::default_order), exact_(true) {}
    Series(int order, bool exact) : order_(order), exact_(exact) {}

    static Series zero(int order, bool exact = true) { return Series(order, exact); }
    static Series constant(const Coefficient& c, int order);
    static Series monomial(int a, int b, const Coefficient& c, int order);
    static Series var_x(int order, bool exact = true);
    static Series var_y(int order, bool exact = true);

    int order() const { return order_; }
    bool exact_mode() const { return exact_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    Coefficient coeff(int a, int b) const;
    Coefficient at_origin() const { return coeff(0, 0); }
    void set(int a, int b, const Coefficient& c); // prunes zero/negligible
    void add_term(int a, int b, const Coefficient& c);

    Series truncated(int new_order) const;
    // Lowest total degree with a nonzero term; nullopt for the zero series.
    std::optional<int> valuation() const;
    std::optional<Expo> leading_expo() const; // graded-lex minimal term

    Coefficient zero_coeff() const { return exact_ ? Coefficient(GaussQ{}) : Coefficient(std::complex<double>(0.0)); }
    Coefficient one_coeff() const { return exact_ ? Coefficient(GaussQ(1)) : Coefficient(std::complex<double>(1.0)); }
    Coefficient int_coeff(long n) const { return exact_ ? Coefficient(GaussQ(n)) : Coefficient(std::complex<double>((double)n)); }

    // Binary operators work at the min of the two orders (explicit, never extends).
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator-(const Series& a);
    friend Series operator*(const Series& a, const Series& b);
    Series operator*(const Coefficient& c) const;
    friend bool operator==(const Series& a, const Series& b); // exact equality of stored terms at min order

    double max_abs_coeff() const;

    std::string str() const; // deterministic human-readable form

private:
    int order_;
    bool exact_;
    Terms terms_;
};

enum class ArithKind { add, sub, mul };

// Spec-surface arithmetic: requires equal truncation orders.
Series arith(const Series& a, const Series& b, ArithKind kind);

// Multiplicative inverse of a unit (a(0,0) != 0).
Series invert_unit(const Series& a);

// Exact division a/b at truncation order; nullopt when b does not divide a.
// Greedy graded-lex division by the leading term of b.
std::optional<Series> divide_exact(const Series& a, const Series& b);

// Division by the monomial x^p y^q; nullopt if some term is not divisible.
std::optional<Series> divide_monomial(const Series& a, int p, int q);

Series dx(const Series& a); // partial derivative, order drops by one
Series dy(const Series& a);

// F(gx, gy). For origin-fixing (gx, gy) the result depends only on jets up
// to the truncation order; with constant terms it re-expands around the
// translated point (used by rectification at a base point).
Series substitute(const Series& F, const Series& gx, const Series& gy);

enum class ExpLogKind { exp, log };
Series exp_log(const Series& a, ExpLogKind kind);
inline Series exp_series(const Series& a) { return exp_log(a, ExpLogKind::exp); }
inline Series log_series(const Series& a) { return exp_log(a, ExpLogKind::log); }

// (base)^gamma for base a unit with base(0,0) = 1: exp(gamma * log base).
Series pow_unit(const Series& base, const Coefficient& gamma);
Series pow_int(const Series& base, int n); // n >= 0

// Largest k with m^k dividing a (componentwise on exponents), capped by cap.
int monomial_valuation(const Series& a, int p, int q, int cap);

// Product placed in a result container of the given order.  Caller asserts
// that missing high-degree terms of the factors cannot reach `ord` (used for
// valuation-shifted sums such as flows).
Series mul_to(const Series& a, const Series& b, int ord);

bool approx_equal(const Series& a, const Series& b, double tol = Config::compare_tol);
bool approx_zero(const Series& a, double tol = Config::compare_tol);

} // namespace dulac
