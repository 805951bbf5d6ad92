#include "qv/lp.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qv {

namespace {

template <typename T>
struct Scalar;

template <>
struct Scalar<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_neg(const Rational& v) { return v < Rational(0); }
    static bool is_pos(const Rational& v) { return Rational(0) < v; }
    static bool is_zero(const Rational& v) { return v == Rational(0); }
    static bool less(const Rational& a, const Rational& b) { return a < b; }
};

template <>
struct Scalar<double> {
    static constexpr double eps = 1e-11;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static bool is_neg(double v) { return v < -eps; }
    static bool is_pos(double v) { return v > eps; }
    static bool is_zero(double v) { return std::abs(v) <= eps; }
    static bool less(double a, double b) { return a < b - eps; }
};

template <typename T>
struct Tableau {
    std::vector<std::vector<T>> a;  // m x n
    std::vector<T> b;               // m, kept >= 0
    std::vector<int> basis;         // m basic column indices

    int rows() const { return static_cast<int>(a.size()); }
    int cols() const { return static_cast<int>(a[0].size()); }

    void pivot(int r, int c) {
        using S = Scalar<T>;
        const T p = a[r][c];
        for (auto& v : a[r]) v = v / p;
        b[r] = b[r] / p;
        for (int i = 0; i < rows(); ++i) {
            if (i == r) continue;
            const T f = a[i][c];
            if (S::is_zero(f)) continue;
            for (int j = 0; j < cols(); ++j) a[i][j] = a[i][j] - f * a[r][j];
            b[i] = b[i] - f * b[r];
        }
        basis[r] = c;
    }

    // Minimize c*x with Bland's rule from the current feasible basis.
    // Returns false iff unbounded.
    bool minimize(const std::vector<T>& cost) {
        using S = Scalar<T>;
        for (int iter = 0;; ++iter) {
            if (iter > 200000) throw std::runtime_error("simplex: iteration cap exceeded");
            int entering = -1;
            for (int j = 0; j < cols() && entering < 0; ++j) {
                T r = cost[j];
                for (int i = 0; i < rows(); ++i) r = r - cost[basis[i]] * a[i][j];
                if (S::is_neg(r)) entering = j;  // Bland: first improving index
            }
            if (entering < 0) return true;

            int leaving = -1;
            T best = S::zero();
            for (int i = 0; i < rows(); ++i) {
                if (!S::is_pos(a[i][entering])) continue;
                const T ratio = b[i] / a[i][entering];
                const bool tie = leaving >= 0 && !S::less(ratio, best) && !S::less(best, ratio);
                if (leaving < 0 || S::less(ratio, best) || (tie && basis[i] < basis[leaving])) {
                    leaving = i;
                    best = ratio;
                }
            }
            if (leaving < 0) return false;
            pivot(leaving, entering);
        }
    }

    void drop_column(int c) {
        for (auto& row : a) row.erase(row.begin() + c);
        for (auto& v : basis)
            if (v > c) --v;
    }

    void drop_row(int r) {
        a.erase(a.begin() + r);
        b.erase(b.begin() + r);
        basis.erase(basis.begin() + r);
    }
};

// Solve the minimax LP over scalar type T. Variable layout:
// [mu_0..mu_{tau-1} | t | s_0..s_{m-1} | artificial].
template <typename T>
std::pair<std::vector<T>, T> solve(const std::vector<std::vector<T>>& rows, int tau) {
    using S = Scalar<T>;
    const int m = static_cast<int>(rows.size());
    const int n = tau + 1 + m + 1;
    const int t_col = tau;
    const int art_col = n - 1;

    Tableau<T> tb;
    tb.a.assign(m + 1, std::vector<T>(n, S::zero()));
    tb.b.assign(m + 1, S::zero());
    tb.basis.assign(m + 1, 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < tau; ++j) tb.a[i][j] = rows[i][j];
        tb.a[i][t_col] = -S::one();
        tb.a[i][tau + 1 + i] = S::one();
        tb.basis[i] = tau + 1 + i;
    }
    for (int j = 0; j < tau; ++j) tb.a[m][j] = S::one();
    tb.a[m][art_col] = S::one();
    tb.b[m] = S::one();
    tb.basis[m] = art_col;

    // Phase 1: minimize the artificial variable.
    std::vector<T> c1(n, S::zero());
    c1[art_col] = S::one();
    if (!tb.minimize(c1)) throw std::runtime_error("minimax LP: phase 1 unbounded");
    for (int i = 0; i < tb.rows(); ++i)
        if (tb.basis[i] == art_col && S::is_pos(tb.b[i]))
            throw std::runtime_error("minimax LP: infeasible");

    // Remove the artificial variable before phase 2. If it is still basic
    // (at level zero), pivot it out or drop its now-redundant row.
    for (int i = 0; i < tb.rows(); ++i) {
        if (tb.basis[i] != art_col) continue;
        int col = -1;
        for (int j = 0; j < art_col && col < 0; ++j)
            if (!S::is_zero(tb.a[i][j])) col = j;
        if (col >= 0)
            tb.pivot(i, col);
        else
            tb.drop_row(i);
        break;
    }
    tb.drop_column(art_col);

    // Phase 2: minimize t.
    std::vector<T> c2(n - 1, S::zero());
    c2[t_col] = S::one();
    if (!tb.minimize(c2)) throw std::runtime_error("minimax LP: phase 2 unbounded");

    std::vector<T> x(n - 1, S::zero());
    for (int i = 0; i < tb.rows(); ++i) x[tb.basis[i]] = tb.b[i];
    std::vector<T> mu(x.begin(), x.begin() + tau);
    return {mu, x[t_col]};
}

}  // namespace

MinimaxSolution minimize_max(const std::vector<std::vector<Rational>>& rows, int tau) {
    if (tau < 1) throw std::invalid_argument("minimize_max: need at least one weight");
    if (tau > 4096) throw std::invalid_argument("minimize_max: too many subsets");
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != tau)
            throw std::invalid_argument("minimize_max: row length mismatch");

    // Duplicate rows produce identical constraints; collapse them.
    std::vector<std::vector<Rational>> unique_rows;
    {
        std::set<std::vector<std::pair<long long, long long>>> seen;
        for (const auto& r : rows) {
            std::vector<std::pair<long long, long long>> key;
            key.reserve(r.size());
            for (const auto& v : r) key.emplace_back(v.num(), v.den());
            if (seen.insert(key).second) unique_rows.push_back(r);
        }
    }
    if (unique_rows.empty()) unique_rows.push_back(std::vector<Rational>(tau, Rational(0)));

    MinimaxSolution out;
    try {
        auto [mu, beta] = solve<Rational>(unique_rows, tau);
        // exact primal certificate: feasibility and achievability of beta
        Rational total(0);
        for (const auto& v : mu) {
            if (v < Rational(0)) throw std::runtime_error("minimax LP: negative weight");
            total += v;
        }
        if (total != Rational(1)) throw std::runtime_error("minimax LP: weights do not sum to 1");
        for (const auto& r : unique_rows) {
            Rational lam(0);
            for (int i = 0; i < tau; ++i) lam += r[i] * mu[i];
            if (beta < lam) throw std::runtime_error("minimax LP: certificate violated");
        }
        out.mu = mu;
        out.beta = beta;
        out.exact = true;
        out.mu_float.reserve(mu.size());
        for (const auto& v : mu) out.mu_float.push_back(v.to_double());
        out.beta_float = beta.to_double();
        return out;
    } catch (const std::overflow_error&) {
        // int64 rationals overflowed mid-pivot; redo in double precision
    }

    std::vector<std::vector<double>> drows(unique_rows.size(), std::vector<double>(tau));
    for (size_t i = 0; i < unique_rows.size(); ++i)
        for (int j = 0; j < tau; ++j) drows[i][j] = unique_rows[i][j].to_double();
    auto [mu, beta] = solve<double>(drows, tau);
    out.exact = false;
    out.mu_float = mu;
    out.beta_float = beta;
    return out;
}

}  // namespace qv
