#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <optional>
#include <string>
#include <variant>

#include "dulac/errors.hpp"

namespace dulac {

using Rational = boost::multiprecision::cpp_rational;

// Exact Gaussian rational a + b*i with a, b in Q.
struct GaussQ {
    Rational re;
    Rational im;

    GaussQ() = default;
    GaussQ(Rational r) : re(std::move(r)) {}
    GaussQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussQ(long n) : re(n) {}
    GaussQ(long num, long den) : re(Rational(num, den)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend GaussQ operator+(const GaussQ& a, const GaussQ& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussQ operator-(const GaussQ& a, const GaussQ& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussQ operator-(const GaussQ& a) { return {-a.re, -a.im}; }
    friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussQ operator/(const GaussQ& a, const GaussQ& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw division_failure("division by zero Gaussian rational");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }

    // Fixed total order used for deterministic canonicalization choices.
    friend bool operator<(const GaussQ& a, const GaussQ& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

GaussQ parse_gaussq(const std::string& text); // "3/7", "-2", "1/3+2i", ...
std::string to_string(const GaussQ& q);

// Exact square root in Q(i) when one exists.
std::optional<Rational> exact_sqrt(const Rational& r);
std::optional<GaussQ> exact_sqrt(const GaussQ& q);
// Exact k-th root in Q (positive branch) when one exists; k >= 1.
std::optional<Rational> exact_kth_root(const Rational& r, int k);

// Two-mode coefficient: exact Gaussian rational or complex double.
// All ring operations require matching modes.
class Coefficient {
public:
    Coefficient() : v_(GaussQ{}) {}
    Coefficient(GaussQ q) : v_(std::move(q)) {}
    Coefficient(std::complex<double> z) : v_(z) {}

    static Coefficient exact(long num, long den = 1) { return Coefficient(GaussQ(num, den)); }
    static Coefficient fl(double re, double im = 0.0) { return Coefficient(std::complex<double>(re, im)); }

    bool is_exact() const { return std::holds_alternative<GaussQ>(v_); }
    const GaussQ& q() const { return std::get<GaussQ>(v_); }
    std::complex<double> f() const { return std::get<std::complex<double>>(v_); }

    // Numeric value in either mode (lossy for exact).
    std::complex<double> approx() const;

    bool is_zero() const;
    // |c| below eps (float) or exactly zero (exact): used for pruning.
    bool negligible(double eps) const;
    double abs() const;

    Coefficient zero_like() const { return is_exact() ? Coefficient(GaussQ{}) : Coefficient(std::complex<double>(0.0)); }
    Coefficient one_like() const { return is_exact() ? Coefficient(GaussQ(1)) : Coefficient(std::complex<double>(1.0)); }
    Coefficient from_int(long n) const { return is_exact() ? Coefficient(GaussQ(n)) : Coefficient(std::complex<double>((double)n)); }

    friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator-(const Coefficient& a);
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator/(const Coefficient& a, const Coefficient& b);
    friend bool operator==(const Coefficient& a, const Coefficient& b);

    Coefficient& operator+=(const Coefficient& b) { *this = *this + b; return *this; }
    Coefficient& operator-=(const Coefficient& b) { *this = *this - b; return *this; }
    Coefficient& operator*=(const Coefficient& b) { *this = *this * b; return *this; }

    // k-th root when representable in the current mode; principal branch for floats.
    std::optional<Coefficient> kth_root(int k) const;

    std::string str() const; // canonical printing, deterministic

private:
    std::variant<GaussQ, std::complex<double>> v_;
};

inline void check_same_mode(const Coefficient& a, const Coefficient& b) {
    if (a.is_exact() != b.is_exact()) throw mode_mismatch();
}

} // namespace dulac
