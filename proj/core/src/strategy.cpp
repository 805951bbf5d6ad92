#include "qv/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qv {

namespace {

bool all_zero(const ExponentTuple& h) {
    return std::all_of(h.begin(), h.end(), [](int v) { return v == 0; });
}

std::vector<ExponentTuple> tuples_supported_on(const HybridDims& dims,
                                               const std::vector<int>& support) {
    // all nonzero tuples whose nonzero entries lie inside `support`
    std::vector<ExponentTuple> out;
    long long count = 1;
    for (int v : support) count *= dims.dim(v);
    for (long long idx = 1; idx < count; ++idx) {
        ExponentTuple h(dims.n(), 0);
        long long rest = idx;
        for (int i = static_cast<int>(support.size()) - 1; i >= 0; --i) {
            h[support[i]] = static_cast<int>(rest % dims.dim(support[i]));
            rest /= dims.dim(support[i]);
        }
        out.push_back(std::move(h));
    }
    return out;
}

void set_uniform_mu(TestPartition& p) {
    p.mu.assign(p.tau(), Rational(1, p.tau()));
}

}  // namespace

void validate_partition(const TestPartition& p) {
    if (p.subsets.empty()) throw std::invalid_argument("partition: no subsets");
    if (static_cast<int>(p.mu.size()) != p.tau())
        throw std::invalid_argument("partition: weight count mismatch");
    Rational total(0);
    for (const auto& w : p.mu) {
        if (w < Rational(0)) throw std::invalid_argument("partition: negative weight");
        total += w;
    }
    if (total != Rational(1)) throw std::invalid_argument("partition: weights must sum to 1");

    // Subsets may overlap: multigraph test sets share their single-vertex
    // tuples across exponent assignments.
    std::set<ExponentTuple> seen;
    for (const auto& subset : p.subsets) {
        if (subset.tuples.empty()) throw std::invalid_argument("partition: empty subset");
        for (const auto& h : subset.tuples) {
            if (static_cast<int>(h.size()) != p.dims.n())
                throw std::invalid_argument("partition: tuple length mismatch");
            for (int k = 0; k < p.dims.n(); ++k)
                if (h[k] < 0 || h[k] >= p.dims.dim(k))
                    throw std::invalid_argument("partition: tuple entry out of range");
            if (all_zero(h)) throw std::invalid_argument("partition: zero tuple not allowed");
            seen.insert(h);
        }
    }

    for (int k = 0; k < p.dims.n(); ++k) {
        ExponentTuple unit(p.dims.n(), 0);
        unit[k] = 1;
        if (!seen.count(unit))
            throw std::invalid_argument("partition: generator tuple missing for particle " +
                                        std::to_string(k));
    }
}

bool subset_passes(const TestPartition& p, int subset, const ExponentTuple& outcome) {
    const auto& tuples = p.subsets.at(subset).tuples;
    return count_condition_solutions(tuples, outcome, p.dims) ==
           static_cast<long long>(tuples.size());
}

std::vector<Rational> lambda_coefficients(const TestPartition& p) {
    validate_partition(p);
    const long long total = p.dims.total();
    std::vector<Rational> lambda(total, Rational(0));
    for (long long idx = 0; idx < total; ++idx) {
        const ExponentTuple j = index_to_tuple(idx, p.dims);
        Rational acc(0);
        for (int i = 0; i < p.tau(); ++i) {
            const long long count = count_condition_solutions(p.subsets[i].tuples, j, p.dims);
            if (count > 0)
                acc += p.mu[i] * Rational(count, static_cast<long long>(p.subsets[i].tuples.size()));
        }
        lambda[idx] = acc;
    }
    if (lambda[0] != Rational(1))
        throw std::logic_error("lambda_coefficients: lambda at the zero tuple must be 1");
    return lambda;
}

VerificationOperator assemble_omega(const BuiltState& state, const TestPartition& p) {
    if (!(state.dims.split() == p.dims))
        throw std::invalid_argument("assemble_omega: partition dims do not match state");
    VerificationOperator v;
    v.lambda = lambda_coefficients(p);
    const long long total = p.dims.total();
    cvector diag(total);
    double beta = 0.0;
    for (long long idx = 0; idx < total; ++idx) {
        const double value = v.lambda[idx].to_double();
        diag(idx) = value;
        if (idx > 0) beta = std::max(beta, value);
    }
    v.omega = state.unitary * diag.asDiagonal() * state.unitary.adjoint();
    v.beta = beta;
    v.nu = 1.0 - beta;
    return v;
}

WeightOptimum optimize_weights(const TestPartition& p) {
    validate_partition(p);
    const long long total = p.dims.total();
    std::vector<std::vector<Rational>> rows;
    rows.reserve(total - 1);
    for (long long idx = 1; idx < total; ++idx) {
        const ExponentTuple j = index_to_tuple(idx, p.dims);
        std::vector<Rational> row(p.tau(), Rational(0));
        for (int i = 0; i < p.tau(); ++i) {
            const long long count = count_condition_solutions(p.subsets[i].tuples, j, p.dims);
            row[i] = Rational(count, static_cast<long long>(p.subsets[i].tuples.size()));
        }
        rows.push_back(std::move(row));
    }

    const MinimaxSolution sol = minimize_max(rows, p.tau());
    WeightOptimum out;
    out.exact = sol.exact;
    out.mu_float = sol.mu_float;
    out.beta_float = sol.beta_float;
    out.nu_float = 1.0 - sol.beta_float;
    if (sol.exact) {
        out.mu = sol.mu;
        out.beta = sol.beta;
        out.nu = Rational(1) - sol.beta;
    }
    return out;
}

SampleCount n_opt(double nu, double epsilon, double delta) {
    if (!(nu > 0.0)) throw std::invalid_argument("n_opt: spectral gap must be positive");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("n_opt: epsilon in (0,1)");
    if (!(delta > 0.0)) throw std::invalid_argument("n_opt: delta must be positive");
    if (delta >= 1.0) return {0, 0};
    const double p = nu * epsilon;
    if (p >= 1.0) return {1, 1};  // a single perfect test
    SampleCount out;
    out.exact = static_cast<long long>(std::ceil(std::log(delta) / std::log1p(-p)));
    out.bound = static_cast<long long>(std::ceil(-std::log(delta) / p));
    out.exact = std::max<long long>(out.exact, 1);
    out.bound = std::max<long long>(out.bound, out.exact);
    return out;
}

namespace {

TestPartition psi_pair_partition(const HybridDims& dims,
                                 const std::vector<std::vector<ExponentTuple>>& subsets,
                                 const std::vector<std::string>& notes) {
    TestPartition p;
    p.dims = dims;
    for (size_t i = 0; i < subsets.size(); ++i) p.subsets.push_back({subsets[i], notes[i]});
    set_uniform_mu(p);
    return p;
}

TestPartition ghz_partition(int n, int d) {
    TestPartition p;
    p.dims = HybridDims(std::vector<int>(n, d));

    TestSubset joint;
    joint.note = "computational-basis residue tests, h_0 = 0";
    ExponentTuple h(n, 0);
    long long rest_count = 1;
    for (int i = 0; i < n - 1; ++i) rest_count *= d;
    for (long long idx = 1; idx < rest_count; ++idx) {
        long long r = idx;
        for (int k = n - 1; k >= 1; --k) {
            h[k] = static_cast<int>(r % d);
            r /= d;
        }
        joint.tuples.push_back(h);
    }
    p.subsets.push_back(std::move(joint));

    // singleton tests, indexed 1 + (h_0-1)*d^{n-1} + sum_l h_l d^{n-1-l}
    for (int h0 = 1; h0 < d; ++h0) {
        for (long long idx = 0; idx < rest_count; ++idx) {
            ExponentTuple t(n, 0);
            t[0] = h0;
            long long r = idx;
            for (int k = n - 1; k >= 1; --k) {
                t[k] = static_cast<int>(r % d);
                r /= d;
            }
            p.subsets.push_back({{t}, "single adaptive eigenbasis test"});
        }
    }
    set_uniform_mu(p);
    return p;
}

TestPartition ghz_like_partition(int n, int d) {
    TestPartition p;
    p.dims = HybridDims(std::vector<int>(n, d));

    TestSubset rest;
    rest.note = "computational-basis residue tests, h_0 = 0";
    ExponentTuple h(n, 0);
    long long rest_count = 1;
    for (int i = 0; i < n - 1; ++i) rest_count *= d;
    for (long long idx = 1; idx < rest_count; ++idx) {
        long long r = idx;
        for (int k = n - 1; k >= 1; --k) {
            h[k] = static_cast<int>(r % d);
            r /= d;
        }
        rest.tuples.push_back(h);
    }
    p.subsets.push_back(std::move(rest));

    TestSubset head;
    head.note = "adaptive rotated-basis tests, h_0 != 0";
    for (int h0 = 1; h0 < d; ++h0) {
        ExponentTuple t(n, 0);
        t[0] = h0;
        head.tuples.push_back(std::move(t));
    }
    p.subsets.push_back(std::move(head));
    set_uniform_mu(p);
    return p;
}

TestPartition graph_partition(const GraphSpec& g) {
    const ColoringResult coloring = color_graph(g);
    TestPartition p;
    p.dims = HybridDims(std::vector<int>(g.n, g.d));

    if (!g.is_multi()) {
        for (int i = 0; i < coloring.colors; ++i) {
            TestSubset s;
            s.note = "color class " + std::to_string(i);
            s.tuples = tuples_supported_on(p.dims, coloring.sets[i]);
            p.subsets.push_back(std::move(s));
        }
    } else {
        for (int i = 0; i < coloring.colors; ++i) {
            const auto& verts = coloring.sets[i];
            const int pi = static_cast<int>(verts.size());
            long long assignments = 1;
            for (int t = 0; t < pi; ++t) assignments *= g.d - 1;
            for (long long l = 0; l < assignments; ++l) {
                // l = sum_t (k_t - 1) (d-1)^t over the class vertices
                std::vector<int> k(pi);
                long long r = l;
                for (int t = 0; t < pi; ++t) {
                    k[t] = static_cast<int>(r % (g.d - 1)) + 1;
                    r /= (g.d - 1);
                }
                TestSubset s;
                s.note = "color class " + std::to_string(i) + ", exponent assignment " +
                         std::to_string(l);
                for (long long mask = 1; mask < (1LL << pi); ++mask) {
                    ExponentTuple h(g.n, 0);
                    for (int t = 0; t < pi; ++t)
                        if (mask & (1LL << t)) h[verts[t]] = k[t];
                    s.tuples.push_back(std::move(h));
                }
                p.subsets.push_back(std::move(s));
            }
        }
    }
    set_uniform_mu(p);
    return p;
}

}  // namespace

TestPartition family_partition(const StateSpec& spec) {
    switch (spec.family) {
        case Family::Psi1:
            return psi_pair_partition(HybridDims({3, 2}), {{{1, 0}}, {{2, 0}}, {{0, 1}}},
                                      {"adaptive qutrit-then-qubit test",
                                       "adaptive qutrit-then-qubit test",
                                       "kappa-basis joint test"});
        case Family::BellLike:
            return psi_pair_partition(HybridDims({2, 2}), {{{0, 1}}, {{1, 0}}, {{1, 1}}},
                                      {"computational parity test", "x-basis adaptive test",
                                       "y-basis adaptive test"});
        case Family::GHZ:
            return ghz_partition(spec.n, spec.d);
        case Family::GHZLikeQubit:
            return ghz_like_partition(spec.n, 2);
        case Family::GHZLikeQudit:
            return ghz_like_partition(spec.n, spec.d);
        case Family::Graph:
            return graph_partition(spec.graph);
        case Family::Psi3:
            return psi_pair_partition(
                HybridDims({2, 3, 2, 3}),
                {{{1, 0, 0, 0}}, {{0, 1, 0, 0}}, {{0, 0, 1, 0}, {0, 0, 0, 1}}},
                {"u0-basis test", "u1-basis test", "computational-basis joint test"});
        case Family::Custom:
            throw unsupported_family("family_partition: no built-in strategy for custom circuits");
    }
    throw unsupported_family("family_partition: unknown family");
}

Rational graph_family_nu(const GraphSpec& g, const ColoringResult& coloring) {
    g.validate();
    const long long d = g.d;
    if (!g.is_multi()) {
        // nu = (d-1) / (d*chi - sum_j d^{1-p_j})
        Rational denom(d * coloring.colors);
        for (int pj : coloring.sizes()) {
            long long pow_val = 1;
            for (int i = 0; i < pj - 1; ++i) pow_val *= d;
            denom -= Rational(1, pow_val);
        }
        return Rational(d - 1) / denom;
    }
    // nu = 1 / sum_i (2^{p_i}-1)(d-1) / ((2^{p_i}-1)(d-1) - (2^{p_i-1}-1))
    Rational denom(0);
    for (int pi : coloring.sizes()) {
        const long long full = (1LL << pi) - 1;
        const long long half = (1LL << (pi - 1)) - 1;
        denom += Rational(full * (d - 1), full * (d - 1) - half);
    }
    return Rational(1) / denom;
}

}  // namespace qv
