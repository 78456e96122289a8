#include "dulac/cohom.hpp"

#include <cmath>
#include <numeric>

namespace dulac {

void ResonantOperator::validate() const {
    if (p < 0 || q < 1 || k < 1) throw degenerate_input("resonant operator: need p >= 0, q >= 1, k >= 1");
    if (p > 0 && std::gcd(p, q) != 1) throw degenerate_input("resonant operator: p, q must be coprime");
    if (p == 0 && q != 1) throw degenerate_input("resonant operator: q = 1 when p = 0");
    if (eps == -1 && p != 0) throw degenerate_input("resonant operator: eps = -1 needs p = 0 (saddle-node)");
    if (eps < -1 || eps > 1) throw degenerate_input("resonant operator: eps in {-1,0,1}");
    if (!R.is_zero()) {
        int vx = R.order() + 1, vy = R.order() + 1;
        for (const auto& [e, c] : R.terms()) {
            vx = std::min(vx, e.a);
            vy = std::min(vy, e.b);
        }
        if (vx < (k + 1) * q || vy < (k + 1) * p)
            throw degenerate_input("resonant operator: R not divisible by u^{k+1}");
    }
}

Series ResonantOperator::u_power(int n, int order) const {
    return Series::monomial(n * q, n * p, l2.one_like(), order);
}

VectorField ResonantOperator::W0(int order) const { return diagonal_field(l1(), l2, order); }

VectorField ResonantOperator::X0(int order) const {
    bool exact = l2.is_exact();
    Series uk = u_power(k, order);
    Series cx = Series::var_x(order, exact) * uk +
                Series::var_x(order, exact) * (Series::constant(l2.one_like(), order) + uk * mu) * l1();
    Series cy = Series::var_y(order, exact) * (Series::constant(l2.one_like(), order) + uk * mu) * l2;
    return VectorField(cx, cy);
}

VectorField ResonantOperator::Y0(int order) const {
    bool exact = l2.is_exact();
    if (eps == 0) return W0(order);
    if (eps == 1) {
        VectorField w = W0(order);
        Series y = Series::var_y(order, exact);
        return VectorField(w.sx() * y, w.sy() * y);
    }
    // eps = -1, p = 0: y^{-1} W0 = l2 d/dy
    return VectorField(Series::zero(order, exact), Series::constant(l2, order));
}

VectorField ResonantOperator::X(int order) const {
    VectorField x0 = X0(order);
    if (R.is_zero()) return x0;
    VectorField y0 = Y0(order);
    Series Rt = R.truncated(order);
    return VectorField(x0.sx() + y0.sx() * Rt, x0.sy() + y0.sy() * Rt);
}

Series ResonantOperator::delta0(int order) const {
    return Series::constant(eps == 0 ? l2.zero_like() : l2 * l2.from_int(eps), order) +
           u_power(k, order) * (mu * l2 * l2.from_int(eps));
}

Series apply_diagonal(const Coefficient& l1, const Coefficient& l2, const Series& R, const Series& F) {
    int ord = F.order();
    Series out(ord, F.exact_mode());
    Series ydF = Series::var_y(ord, F.exact_mode()) * dy(F).truncated(ord);
    // Z0.F term is degree-exact, no derivative loss
    for (const auto& [e, c] : F.terms())
        out.add_term(e.a, e.b, c * (l1 * F.int_coeff(e.a) + l2 * F.int_coeff(e.b)));
    if (!R.is_zero()) out = out + mul_to(R, ydF, ord);
    return out;
}

Series solve_diagonal(const Coefficient& l1, const Coefficient& l2, const Series& R, const Series& G,
                      double divisor_floor) {
    if (!G.at_origin().is_zero())
        throw degenerate_input("solve_diagonal: G(0,0) != 0, equation unsolvable");
    bool exact = G.exact_mode();
    int ord = G.order();
    Series F(ord, exact);
    for (int d = 1; d <= ord; ++d) {
        for (int a = d; a >= 0; --a) {
            int b = d - a;
            Coefficient divisor = l1 * G.int_coeff(a) + l2 * G.int_coeff(b);
            // o(a,b): coefficient of R * y dF/dy at (a,b), lower degrees only
            Coefficient o = G.zero_coeff();
            for (const auto& [er, cr] : R.terms()) {
                if (er.deg() == 0 || er.a > a || er.b > b) continue;
                int fa = a - er.a, fb = b - er.b;
                Coefficient fc = F.coeff(fa, fb);
                if (!fc.is_zero()) o += cr * fc * G.int_coeff(fb);
            }
            Coefficient rhs = G.coeff(a, b) - o;
            if (exact) {
                if (divisor.is_zero()) {
                    if (rhs.is_zero()) continue; // kernel direction with no demand
                    throw degenerate_input("solve_diagonal: zero divisor (rational resonance) at x^" +
                                           std::to_string(a) + " y^" + std::to_string(b) +
                                           "; use the resonant solver");
                }
            } else if (divisor.abs() < divisor_floor) {
                throw small_divisor(a, b);
            }
            Coefficient f = rhs / divisor;
            if (!f.is_zero()) F.set(a, b, f);
        }
    }
    return F;
}

Series apply_resonant(const ResonantOperator& op, const Series& F) {
    op.validate();
    int ord = F.order();
    VectorField X = op.X(ord);
    Series XF = lie_derivative(X, F);
    Series zero_term = mul_to(op.delta0(ord), F, XF.order());
    return XF + zero_term;
}

ResonantSolution solve_resonant(const ResonantOperator& op, const Series& G) {
    op.validate();
    const int ord = G.order();
    const bool exact = G.exact_mode();
    const int p = op.p, q = op.q, k = op.k, eps = op.eps;
    const Coefficient l2 = op.l2, l1 = op.l1(), mu = op.mu;
    Series F(ord, exact);
    Obstructions obs;

    // integer resonance test: a l1 + (b+eps) l2 = 0  <=>  (a, b+eps) = l (q, p)
    auto resonance_index = [&](int a, int b) -> std::optional<int> {
        int be = b + eps;
        if (p == 0) {
            if (be != 0) return std::nullopt;
            return a / q; // q = 1
        }
        if (a % q != 0) return std::nullopt;
        int l = a / q;
        if (be != l * p) return std::nullopt;
        return l;
    };

    // o(a,b): coefficient of R y^eps W0 . F at (a,b) from already-known F
    auto convolution = [&](int a, int b) {
        Coefficient acc = G.zero_coeff();
        for (const auto& [er, cr] : op.R.terms()) {
            int fa = a - er.a, fb = b - er.b - eps;
            if (fa < 0 || fb < 0) continue;
            Coefficient fc = F.coeff(fa, fb);
            if (fc.is_zero()) continue;
            Coefficient w = l1 * G.int_coeff(fa) + l2 * G.int_coeff(fb);
            acc += cr * fc * w;
        }
        return acc;
    };

    for (int d = 0; d <= ord; ++d) {
        // pass 1: resonant positions determine lower-degree coefficients
        for (int a = d; a >= 0; --a) {
            int b = d - a;
            auto l = resonance_index(a, b);
            if (!l) continue;
            Coefficient rhs = G.coeff(a, b) - convolution(a, b);
            if (*l <= k) {
                // blocked direction; for l == k the f_{0,-eps} coefficient is
                // free (normalized to 0 when eps <= 0, absent when eps = 1)
                if (!rhs.negligible(exact ? 0.0 : Config::compare_tol))
                    obs.entries.push_back({Expo{a, b}, *l, rhs});
                continue;
            }
            // l > k: determines f at (a - kq, b - kp); divisor = a - kq = (l-k) q
            Coefficient denom = G.int_coeff(a - k * q);
            Coefficient f = rhs / denom;
            if (!f.is_zero()) F.set(a - k * q, b - k * p, f);
        }
        // pass 2: plain positions
        for (int a = d; a >= 0; --a) {
            int b = d - a;
            if (resonance_index(a, b)) continue;
            Coefficient divisor = l1 * G.int_coeff(a) + l2 * G.int_coeff(b + eps);
            if (!exact && divisor.abs() < Config::divisor_floor) throw small_divisor(a, b);
            Coefficient rhs = G.coeff(a, b) - convolution(a, b);
            int fa = a - k * q, fb = b - k * p;
            if (fa >= 0 && fb >= 0) {
                Coefficient prev = F.coeff(fa, fb);
                if (!prev.is_zero()) rhs -= prev * (mu * divisor + G.int_coeff(fa));
            }
            Coefficient f = rhs / divisor;
            if (!f.is_zero()) F.set(a, b, f);
        }
    }
    return {F, obs};
}

LogClassDecomposition decompose_logclass(const LogLaurent& F, const VectorField& X, DecomposeMode mode,
                                         const Coefficient& lambda, const ResonantOperator* op) {
    LogLaurent XF = lie_derivative(X, F);
    auto Gs = XF.as_series();
    if (!Gs || !XF.alpha.negligible(Config::compare_tol) || !XF.beta.negligible(Config::compare_tol))
        throw degenerate_input("decompose_logclass: X.F is not a power series at truncation");
    LogClassDecomposition out;
    out.G = *Gs;
    Coefficient G00 = Gs->at_origin();
    LogLaurent Fc = F;
    Fc.canonicalize();
    bool exact = F.exact_mode();
    double tol = exact ? 0.0 : Config::compare_tol;
    auto check = [&](const Coefficient& aa, const Coefficient& bb, const char* what) {
        if (!(aa - bb).negligible(tol)) throw degenerate_input(std::string("decompose_logclass: ") + what);
    };
    if (mode == DecomposeMode::quasi_resonant) {
        auto Fhat = divide_monomial(Fc.A, Fc.N, Fc.M);
        if (!Fhat)
            throw degenerate_input("decompose_logclass: polar part violates the forced-vanishing pattern");
        out.Fhat = *Fhat;
        out.alpha = Fc.alpha;
        out.beta = G00;
        out.polar_coeff = G00.zero_like();
        // beta_F must equal G(0,0) - alpha lambda
        check(Fc.beta, G00 - Fc.alpha * lambda, "log y coefficient inconsistent with G(0,0)");
        return out;
    }
    if (!op) throw degenerate_input("decompose_logclass: resonant mode needs operator data");
    int kq = op->k * op->q, kp = op->k * op->p;
    Coefficient c_pole = G00.zero_like();
    Series A = Fc.A;
    if (Fc.N >= kq && Fc.M >= kp) {
        c_pole = A.coeff(Fc.N - kq, Fc.M - kp);
        A.set(Fc.N - kq, Fc.M - kp, A.zero_coeff());
    }
    auto Fhat = divide_monomial(A, Fc.N, Fc.M);
    if (!Fhat) throw degenerate_input("decompose_logclass: polar part is not a pure u^{-k} pole");
    Coefficient kk = G00.from_int(op->k), qq = G00.from_int(op->q), pp = G00.from_int(op->p);
    // c_pole = -G00/(qk) + alpha/k
    Coefficient alpha = c_pole * kk + G00 / qq;
    check(Fc.alpha, -(alpha * op->mu * qq), "log x coefficient inconsistent");
    check(Fc.beta, alpha * (G00.one_like() - op->mu * pp), "log y coefficient inconsistent");
    out.Fhat = *Fhat;
    out.alpha = alpha;
    out.beta = Fc.beta;
    out.polar_coeff = -(G00 / (qq * kk));
    return out;
}

LogLaurent integrate_closed_form(const OneForm& omega) {
    auto px = omega.wx.monomial_den_form();
    auto py = omega.wy.monomial_den_form();
    if (!px || !py)
        throw degenerate_input("integrate_closed_form: denominators must divide monomials x^N y^M");
    if (!rs_zero(d_one_form(omega)))
        throw degenerate_input("integrate_closed_form: form is not closed at truncation");
    int N = std::max(px->p, py->p);
    int M = std::max(px->q, py->q);
    bool exact = omega.wx.exact_mode();
    int ord = std::min(px->num.order(), py->num.order());
    Coefficient one = px->num.is_zero() ? py->num.one_coeff() : px->num.one_coeff();
    Series P = mul_to(px->num, Series::monomial(N - px->p, M - px->q, one, ord + 1), ord);
    Series Q = mul_to(py->num, Series::monomial(N - py->p, M - py->q, one, ord + 1), ord);
    // x P = x dA/dx - N A + alpha x^N y^M ;  y Q = y dA/dy - M A + beta x^N y^M
    Series xP = mul_to(P, Series::var_x(ord + 1, exact), ord + 1);
    Series yQ = mul_to(Q, Series::var_y(ord + 1, exact), ord + 1);
    LogLaurent out;
    out.N = N;
    out.M = M;
    out.alpha = one.zero_like();
    out.beta = one.zero_like();
    Series A(ord + 1, exact);
    double ctol = exact ? 0.0 : std::max(Config::compare_tol, 1e-9);
    auto consistent = [&](const Coefficient& u, const Coefficient& v) {
        if (!(u - v).negligible(ctol))
            throw degenerate_input("integrate_closed_form: residue along a non-axis divisor detected");
    };
    for (int d = 0; d <= ord + 1; ++d) {
        for (int i = d; i >= 0; --i) {
            int j = d - i;
            Coefficient vx = xP.coeff(i, j), vy = yQ.coeff(i, j);
            if (i == N && j == M) {
                out.alpha = vx;
                out.beta = vy;
                continue; // a_{N,M} normalized to zero
            }
            Coefficient a;
            if (i != N && j != M) {
                a = vx / xP.int_coeff(i - N);
                consistent(a, vy / yQ.int_coeff(j - M));
            } else if (i != N) {
                a = vx / xP.int_coeff(i - N);
                consistent(vy, one.zero_like());
            } else {
                a = vy / yQ.int_coeff(j - M);
                consistent(vx, one.zero_like());
            }
            if (!a.is_zero()) A.set(i, j, a);
        }
    }
    out.A = A;
    out.canonicalize();
    return out;
}

} // namespace dulac
