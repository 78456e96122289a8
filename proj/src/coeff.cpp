#include "dulac/coeff.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <sstream>

namespace dulac {

using boost::multiprecision::cpp_int;

std::complex<double> Coefficient::approx() const {
    if (is_exact()) return {static_cast<double>(q().re), static_cast<double>(q().im)};
    return f();
}

bool Coefficient::is_zero() const {
    if (is_exact()) return q().is_zero();
    return f() == std::complex<double>(0.0, 0.0);
}

bool Coefficient::negligible(double eps) const {
    if (is_exact()) return q().is_zero();
    return std::abs(f()) <= eps;
}

double Coefficient::abs() const { return std::abs(approx()); }

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
    check_same_mode(a, b);
    if (a.is_exact()) return Coefficient(a.q() + b.q());
    return Coefficient(a.f() + b.f());
}
Coefficient operator-(const Coefficient& a, const Coefficient& b) {
    check_same_mode(a, b);
    if (a.is_exact()) return Coefficient(a.q() - b.q());
    return Coefficient(a.f() - b.f());
}
Coefficient operator-(const Coefficient& a) {
    if (a.is_exact()) return Coefficient(-a.q());
    return Coefficient(-a.f());
}
Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    check_same_mode(a, b);
    if (a.is_exact()) return Coefficient(a.q() * b.q());
    return Coefficient(a.f() * b.f());
}
Coefficient operator/(const Coefficient& a, const Coefficient& b) {
    check_same_mode(a, b);
    if (a.is_exact()) return Coefficient(a.q() / b.q());
    if (b.f() == std::complex<double>(0.0, 0.0)) throw division_failure("division by zero float coefficient");
    return Coefficient(a.f() / b.f());
}
bool operator==(const Coefficient& a, const Coefficient& b) {
    if (a.is_exact() != b.is_exact()) return false;
    if (a.is_exact()) return a.q() == b.q();
    return a.f() == b.f();
}

// ---- exact roots ----

static std::optional<cpp_int> int_sqrt(const cpp_int& n) {
    if (n < 0) return std::nullopt;
    cpp_int r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    auto n = int_sqrt(numerator(r));
    auto d = int_sqrt(denominator(r));
    if (!n || !d) return std::nullopt;
    return Rational(*n, *d);
}

std::optional<GaussQ> exact_sqrt(const GaussQ& q) {
    if (q.im == 0) {
        if (auto s = exact_sqrt(q.re)) return GaussQ(*s);
        // sqrt of a negative rational is purely imaginary
        if (auto s = exact_sqrt(Rational(-q.re))) return GaussQ(Rational(0), *s);
        return std::nullopt;
    }
    // z = c + d i with c^2 - d^2 = re, 2 c d = im. Needs |q| rational square.
    auto norm = exact_sqrt(Rational(q.re * q.re + q.im * q.im));
    if (!norm) return std::nullopt;
    auto c2 = Rational((q.re + *norm) / 2);
    auto c = exact_sqrt(c2);
    if (!c || *c == 0) return std::nullopt;
    Rational d = q.im / (2 * (*c));
    return GaussQ(*c, d);
}

static std::optional<cpp_int> int_kth_root(const cpp_int& n, int k) {
    if (n < 0) return std::nullopt;
    if (n == 0) return cpp_int(0);
    // binary search
    cpp_int lo = 1, hi = n + 1;
    while (lo < hi) {
        cpp_int mid = (lo + hi) / 2;
        cpp_int p = 1;
        for (int i = 0; i < k && p <= n; ++i) p *= mid;
        if (p == n) return mid;
        if (p < n) lo = mid + 1; else hi = mid;
    }
    return std::nullopt;
}

std::optional<Rational> exact_kth_root(const Rational& r, int k) {
    if (k <= 0) return std::nullopt;
    if (k == 1) return r;
    if (r == 0) return Rational(0);
    bool neg = r < 0;
    if (neg && k % 2 == 0) return std::nullopt;
    Rational a = neg ? Rational(-r) : r;
    auto n = int_kth_root(numerator(a), k);
    auto d = int_kth_root(denominator(a), k);
    if (!n || !d) return std::nullopt;
    Rational root(*n, *d);
    return neg ? Rational(-root) : root;
}

std::optional<Coefficient> Coefficient::kth_root(int k) const {
    if (k == 1) return *this;
    if (!is_exact()) {
        return Coefficient(std::pow(f(), 1.0 / double(k)));
    }
    if (q().im == 0) {
        if (auto r = exact_kth_root(q().re, k)) return Coefficient(GaussQ(*r));
        if (k == 2) {
            if (auto s = exact_sqrt(q())) return Coefficient(*s);
        }
        return std::nullopt;
    }
    if (k == 2) {
        if (auto s = exact_sqrt(q())) return Coefficient(*s);
    }
    return std::nullopt;
}

// ---- printing / parsing ----

static std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

std::string to_string(const GaussQ& q) {
    if (q.im == 0) return rat_str(q.re);
    if (q.re == 0) {
        if (q.im == 1) return "i";
        if (q.im == -1) return "-i";
        return rat_str(q.im) + "i";
    }
    std::string s = rat_str(q.re);
    if (q.im > 0) s += "+";
    if (q.im == 1) s += "i";
    else if (q.im == -1) s += "-i";
    else s += rat_str(q.im) + "i";
    return s;
}

std::string Coefficient::str() const {
    if (is_exact()) return to_string(q());
    std::complex<double> z = f();
    char buf[64];
    std::string s;
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
    s = buf;
    if (z.imag() != 0.0) {
        std::snprintf(buf, sizeof buf, "%+.17g", z.imag());
        s += buf;
        s += "i";
    }
    return s;
}

GaussQ parse_gaussq(const std::string& text) {
    // forms: "p", "p/q", "pi", "p/qi", "a+bi", "a-bi", "i", "-i"
    auto parse_rat = [](std::string t) -> Rational {
        if (!t.empty() && t[0] == '+') t.erase(0, 1);
        auto slash = t.find('/');
        if (slash == std::string::npos) return Rational(cpp_int(t));
        return Rational(cpp_int(t.substr(0, slash)), cpp_int(t.substr(slash + 1)));
    };
    std::string s;
    for (char c : text)
        if (!isspace((unsigned char)c)) s += c;
    if (s.empty()) throw usage_error("empty coefficient literal");
    // split at an interior +/- that is not the leading sign
    size_t split = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i] == '+' || s[i] == '-') split = i;
    bool has_i = s.back() == 'i';
    try {
        if (!has_i) return GaussQ(parse_rat(s));
        if (split == std::string::npos) {
            std::string im = s.substr(0, s.size() - 1);
            if (im.empty() || im == "+") return GaussQ(Rational(0), Rational(1));
            if (im == "-") return GaussQ(Rational(0), Rational(-1));
            return GaussQ(Rational(0), parse_rat(im));
        }
        std::string re = s.substr(0, split);
        std::string im = s.substr(split, s.size() - 1 - split);
        if (im == "+") im = "1";
        if (im == "-") im = "-1";
        return GaussQ(parse_rat(re), parse_rat(im));
    } catch (const std::exception&) {
        throw usage_error("bad coefficient literal: " + text);
    }
}

} // namespace dulac
