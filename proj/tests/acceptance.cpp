// Acceptance suite: one pass/fail line per criterion, exit code equal to
// the number of failed criteria. Each criterion pins its tolerances in
// code; run a single criterion by passing its number.

#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <vector>

#include "qv/json_io.hpp"

using namespace qv;

namespace {

struct Harness {
    bool ok = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            detail << "  FAILED: " << what << "\n";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

GraphSpec path3(int d) {
    return GraphSpec{.n = 3, .d = d, .edges = {{{0, 1}, 1, {}}, {{1, 2}, 1, {}}}};
}
GraphSpec triangle(int d) {
    return GraphSpec{
        .n = 3, .d = d, .edges = {{{0, 1}, 1, {}}, {{0, 2}, 1, {}}, {{1, 2}, 1, {}}}};
}
GraphSpec cycle5(int d) {
    return GraphSpec{.n = 5,
                     .d = d,
                     .edges = {{{0, 1}, 1, {}},
                               {{1, 2}, 1, {}},
                               {{2, 3}, 1, {}},
                               {{3, 4}, 1, {}},
                               {{0, 4}, 1, {}}}};
}

cmatrix haar_unitary(int n, Xoshiro256& rng) {
    cmatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double u1 = std::max(rng.uniform(), 1e-300), u2 = rng.uniform();
            m(i, j) = std::sqrt(-2.0 * std::log(u1)) *
                      cxd(std::cos(2 * std::numbers::pi * u2),
                          std::sin(2 * std::numbers::pi * u2));
        }
    const Eigen::HouseholderQR<cmatrix> qr(m);
    cmatrix q = qr.householderQ();
    const cmatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
    return q;
}

// spectral gap by LP plus the independent eigendecomposition route
void check_gap(Harness& h, const std::string& label, const StateSpec& spec,
               const Rational& nu_expected) {
    const TestPartition p = family_partition(spec);
    const WeightOptimum opt = optimize_weights(p);
    h.require(opt.exact, label + ": LP did not certify an exact optimum");
    if (!opt.exact) return;
    h.require(std::abs(opt.nu_float - nu_expected.to_double()) < 1e-9,
              label + ": LP gap " + opt.nu.str() + " != " + nu_expected.str());

    TestPartition tuned = p;
    tuned.mu = opt.mu;
    const BuiltState state = build(spec);
    const VerificationOperator v = assemble_omega(state, tuned);
    const Spectrum s = hermitian_spectrum(v.omega);
    h.require(std::abs(s.values(0) - 1.0) < 1e-9, label + ": top eigenvalue != 1");
    h.require(std::abs(s.values(1) - opt.beta_float) < 1e-9,
              label + ": eigendecomposition disagrees with the LP optimum");
    h.require(std::abs((1.0 - s.values(1)) - nu_expected.to_double()) < 1e-9,
              label + ": spectral route gap != " + nu_expected.str());
}

bool criterion1() {
    const auto start = std::chrono::steady_clock::now();
    Harness h;

    check_gap(h, "psi1", StateSpec::psi1(), Rational(1, 2));
    for (double theta : {std::numbers::pi / 6, std::numbers::pi / 4, std::numbers::pi / 3})
        check_gap(h, "psi2", StateSpec::bell_like(theta), Rational(2, 3));
    for (int n = 2; n <= 6; ++n)
        check_gap(h, "GHZ_" + std::to_string(n) + "^2", StateSpec::ghz(n, 2),
                  Rational(1LL << (n - 1), (1LL << n) - 1));
    for (int n = 2; n <= 6; ++n)
        check_gap(h, "GHZ-like_" + std::to_string(n) + "^2",
                  StateSpec::ghz_like_qubit(n, 0.6),
                  Rational(1LL << (n - 2), 3 * (1LL << (n - 2)) - 1));
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 5}}) {
        long long dn = 1;
        for (int i = 0; i < n; ++i) dn *= d;
        check_gap(h, "GHZ_" + std::to_string(n) + "^" + std::to_string(d),
                  StateSpec::ghz(n, d), Rational((d - 1) * (dn / d), dn - 1));
    }
    check_gap(h, "GHZ-like_3^3", StateSpec::ghz_like_qudit(3, 3, {0.5, 1.1}),
              Rational(2 * 3, 2 * 9 - 3 - 1));
    check_gap(h, "psi3", StateSpec::psi3(), Rational(3, 4));

    const double elapsed = seconds_since(start);
    h.require(elapsed < 60.0, "runtime exceeded 60 s");
    std::cout << (h.ok ? "[PASS]" : "[FAIL]")
              << " criterion 1: closed-form spectral gaps via LP and eigendecomposition ("
              << elapsed << " s)\n"
              << h.detail.str();
    return h.ok;
}

bool criterion2() {
    Harness h;
    const double epsilon = 0.01, delta = 0.05;
    const double c = std::log(1.0 / delta) / epsilon;  // 100 ln 20
    const auto ceil_of = [&](double f) { return static_cast<long long>(std::ceil(f * c)); };
    const auto bound_of = [&](const StateSpec& spec) {
        const WeightOptimum opt = optimize_weights(family_partition(spec));
        return n_opt(opt.nu_float, epsilon, delta).bound;
    };

    h.require(bound_of(StateSpec::psi1()) == ceil_of(2.0), "psi1 row != ceil(2c)");
    h.require(bound_of(StateSpec::bell_like(std::numbers::pi / 4)) == ceil_of(1.5),
              "psi2 row != ceil(1.5c)");
    for (int n : {2, 3, 4})
        for (int d : {2, 3}) {
            h.require(bound_of(StateSpec::ghz(n, d)) < ceil_of(3.0), "GHZ row not < ceil(3c)");
            h.require(bound_of(d == 2 ? StateSpec::ghz_like_qubit(n, 0.7)
                                      : StateSpec::ghz_like_qudit(n, d, {0.5, 1.0})) <
                          ceil_of(3.0),
                      "GHZ-like row not < ceil(3c)");
        }
    for (int d : {2, 3})
        for (const auto& g : {path3(d), triangle(d), cycle5(d)}) {
            const ColoringResult coloring = color_graph(g);
            h.require(coloring.exact, "coloring not exact");
            const long long rhs =
                ceil_of((1.0 + 1.0 / (d - 1)) * coloring.colors);
            const long long lhs = bound_of(StateSpec::graph_state(g));
            h.require(lhs < rhs, "graph row bound violated for d=" + std::to_string(d));
        }

    std::cout << (h.ok ? "[PASS]" : "[FAIL]")
              << " criterion 2: efficiency-table ceilings at (0.01, 0.05)\n"
              << h.detail.str();
    return h.ok;
}

bool criterion3() {
    Harness h;
    GraphSpec hyper{.n = 3, .d = 3, .edges = {{{0, 1, 2}, 1, {}}}};
    const std::vector<std::pair<std::string, StateSpec>> named = {
        {"psi1", StateSpec::psi1()},
        {"psi2", StateSpec::bell_like(0.6)},
        {"GHZ_3^3", StateSpec::ghz(3, 3)},
        {"hypergraph", StateSpec::graph_state(hyper)},
    };
    for (const auto& [label, spec] : named) {
        const BuiltState s = build(spec);
        const StabilizerGroup g = generators(s.unitary, s.dims);
        const double residual = density_identity_residual(g, s.psi);
        h.require(residual <= 1e-10, label + ": density residual " + std::to_string(residual));
    }
    Xoshiro256 rng(404);
    for (int i = 0; i < 20; ++i) {
        const HybridDims dims = i % 2 ? HybridDims({2, 3}) : HybridDims({2, 2, 3});
        const StabilizerGroup g = generators(haar_unitary(dims.total(), rng), dims);
        const StateVector psi(g.dims, g.unitary.col(0));
        h.require(density_identity_residual(g, psi) <= 1e-10,
                  "random unitary " + std::to_string(i) + ": density residual too large");
    }
    std::cout << (h.ok ? "[PASS]" : "[FAIL]")
              << " criterion 3: density identity residual <= 1e-10\n"
              << h.detail.str();
    return h.ok;
}

bool criterion4() {
    Harness h;
    Xoshiro256 rng(1234);
    GraphSpec hyper{.n = 3, .d = 3, .edges = {{{0, 1, 2}, 1, {}}}};
    std::vector<BuiltState> pool;
    pool.push_back(build(StateSpec::psi1()));
    pool.push_back(build(StateSpec::bell_like(0.8)));
    pool.push_back(build(StateSpec::ghz(3, 2)));
    pool.push_back(build(StateSpec::ghz(2, 3)));
    pool.push_back(build(StateSpec::ghz_like_qubit(3, 0.4)));
    pool.push_back(build(StateSpec::ghz_like_qudit(2, 3, {0.9, 0.4})));
    pool.push_back(build(StateSpec::graph_state(hyper)));
    pool.push_back(build(StateSpec::psi3()));

    for (int i = 0; i < 100; ++i) {
        const BuiltState& s = pool[rng.next() % pool.size()];
        const StabilizerGroup g = generators(s.unitary, s.dims);
        ExponentTuple tuple(g.dims.n());
        do {
            for (int k = 0; k < g.dims.n(); ++k)
                tuple[k] = static_cast<int>(rng.next() % static_cast<uint64_t>(g.dims.dim(k)));
        } while (std::all_of(tuple.begin(), tuple.end(), [](int v) { return v == 0; }));

        const cmatrix p = eigen1_projector(g, tuple);
        const std::string label = "sample " + std::to_string(i);
        h.require(max_abs(p - p.adjoint()) < 1e-9, label + ": not Hermitian");
        h.require(max_abs(p * p - p) < 1e-9, label + ": not idempotent");
        h.require((p * s.psi.amps - s.psi.amps).norm() < 1e-9, label + ": does not fix psi");
        h.require(max_abs(p - solution_projector(g, tuple)) < 1e-10,
                  label + ": power sum != solution-set construction");
    }
    std::cout << (h.ok ? "[PASS]" : "[FAIL]")
              << " criterion 4: Lemma projector properties on 100 random (state, h) pairs\n"
              << h.detail.str();
    return h.ok;
}

bool criterion5() {
    Harness h;
    const cmatrix I = identity(2), Z = pauli_z(2), X = pauli_x(2);
    cmatrix Y(2, 2);
    Y << cxd(0, 0), cxd(0, -1), cxd(0, 1), cxd(0, 0);
    Xoshiro256 rng(55);
    for (int i = 0; i < 10; ++i) {
        const double theta = 0.05 + 1.4 * rng.uniform();
        const StateSpec spec = StateSpec::bell_like(theta);
        const VerificationOperator v = assemble_omega(build(spec), family_partition(spec));
        const double c2 = std::cos(2 * theta), s2 = std::sin(2 * theta);
        const cmatrix pauli = (3.0 * kron(I, I) - c2 * kron(Z, I) + s2 * kron(X, X) +
                               kron(Z, Z) - c2 * kron(I, Z) - s2 * kron(Y, Y)) /
                              6.0;
        h.require(max_abs(v.omega - pauli) < 1e-10,
                  "theta=" + std::to_string(theta) + ": operator forms differ");
    }
    std::cout << (h.ok ? "[PASS]" : "[FAIL]")
              << " criterion 5: projector-form Omega equals the Pauli form for 10 thetas\n"
              << h.detail.str();
    return h.ok;
}

bool criterion6() {
    const auto start = std::chrono::steady_clock::now();
    Harness h;
    const double eps = 0.1;
    const long long rounds = 100000;

    struct Case {
        std::string label;
        StateSpec spec;
        double stated;  // 1 - nu*eps at the quoted reference gap
    };
    const std::vector<Case> cases = {
        {"psi2", StateSpec::bell_like(0.6), 14.0 / 15.0},
        {"psi3", StateSpec::psi3(), 0.925},
    };
    for (const auto& c : cases) {
        const BuiltState s = build(c.spec);
        TestPartition p = family_partition(c.spec);
        const WeightOptimum opt = optimize_weights(p);
        p.mu = opt.mu;
        const VerificationOperator v = assemble_omega(s, p);

        const ProtocolReport honest = run_protocol(s, p, honest_source(s), rounds / 100, 100, 5);
        h.require(honest.pass_frequency == 1.0, c.label + ": honest source frequency != 1");

        const SourceModel sigma = worst_case_state(v, s, eps);
        const ProtocolReport worst = run_protocol(s, p, sigma, rounds / 100, 100, 6);
        const double sigma3 = 3.0 * std::sqrt(c.stated * (1.0 - c.stated) / rounds);
        h.require(std::abs(worst.pass_frequency - c.stated) < sigma3,
                  c.label + ": frequency " + std::to_string(worst.pass_frequency) +
                      " not within 3 sigma of stated " + std::to_string(c.stated) +
                      " (operator trace gives " +
                      std::to_string((v.omega * sigma.density).trace().real()) + ")");
    }

    const double elapsed = seconds_since(start);
    h.require(elapsed < 120.0, "runtime exceeded 120 s");
    std::cout << (h.ok ? "[PASS]" : "[FAIL]")
              << " criterion 6: Monte Carlo worst-case pass rates at eps=0.1 (" << elapsed
              << " s)\n"
              << h.detail.str();
    return h.ok;
}

bool criterion7() {
    Harness h;
    const int samples = 100000;

    {
        const double theta = 0.55;
        const BuiltState s = build(StateSpec::bell_like(theta));
        const AdaptivePlan plan = psi2_g10_plan(theta);
        std::map<ExponentTuple, double> expected;
        for (const auto& [path, prob] : path_distribution(plan, s.psi.amps))
            expected[path] = prob;
        std::map<ExponentTuple, long long> counts;
        Xoshiro256 rng(77);
        for (int i = 0; i < samples; ++i) counts[sequential_measure(plan, s.psi.amps, rng)]++;
        double tv = 0.0;
        for (const auto& [path, prob] : expected) {
            const auto it = counts.find(path);
            const double freq =
                it == counts.end() ? 0.0 : static_cast<double>(it->second) / samples;
            tv += std::abs(prob - freq);
        }
        h.require(tv / 2.0 < 0.01, "psi2 plan: TV distance " + std::to_string(tv / 2.0));
    }
    {
        const BuiltState s = build(StateSpec::ghz(3, 2));
        const AdaptivePlan plan = computational_plan(s.dims);
        std::map<ExponentTuple, double> expected;
        for (const auto& [path, prob] : path_distribution(plan, s.psi.amps))
            expected[path] = prob;
        std::map<ExponentTuple, long long> counts;
        Xoshiro256 rng(78);
        for (int i = 0; i < samples; ++i) counts[sequential_measure(plan, s.psi.amps, rng)]++;
        double tv = 0.0;
        for (const auto& [path, prob] : expected) {
            const auto it = counts.find(path);
            const double freq =
                it == counts.end() ? 0.0 : static_cast<double>(it->second) / samples;
            tv += std::abs(prob - freq);
        }
        h.require(tv / 2.0 < 0.01, "GHZ subset-0 plan: TV distance " + std::to_string(tv / 2.0));
    }

    std::cout << (h.ok ? "[PASS]" : "[FAIL]")
              << " criterion 7: sequential sampling matches Born path probabilities\n"
              << h.detail.str();
    return h.ok;
}

bool criterion8() {
    Harness h;
    GraphSpec tri = triangle(3);
    GraphSpec hyper{.n = 3, .d = 3, .edges = {{{0, 1, 2}, 1, {1, 2, 1}}}};
    const std::vector<std::pair<std::string, StateSpec>> named = {
        {"psi1", StateSpec::psi1()},
        {"psi2", StateSpec::bell_like(0.5)},
        {"GHZ_3^2", StateSpec::ghz(3, 2)},
        {"GHZ_2^5", StateSpec::ghz(2, 5)},
        {"GHZ-like_3^2", StateSpec::ghz_like_qubit(3, 0.8)},
        {"GHZ-like_2^3", StateSpec::ghz_like_qudit(2, 3, {0.7, 0.3})},
        {"triangle", StateSpec::graph_state(tri)},
        {"multihypergraph", StateSpec::graph_state(hyper)},
        {"psi3", StateSpec::psi3()},
    };
    for (const auto& [label, spec] : named) {
        const BuiltState s = build(spec);
        const StabilizerGroup g = generators(s.unitary, s.dims);
        for (int k = 0; k < g.dims.n(); ++k) {
            const cmatrix& gk = g.generators[k];
            h.require(is_unitary(gk, 1e-10), label + ": generator not unitary");
            h.require((gk * s.psi.amps - s.psi.amps).norm() < 1e-9,
                      label + ": generator does not fix psi");
            cmatrix power = identity(g.dims.total());
            for (int i = 0; i < g.dims.dim(k); ++i) power = power * gk;
            h.require(max_abs(power - identity(g.dims.total())) < 1e-9,
                      label + ": generator order != d_k");
            for (int l = k + 1; l < g.dims.n(); ++l)
                h.require(max_abs(gk * g.generators[l] - g.generators[l] * gk) < 1e-9,
                          label + ": generators do not commute");
        }

        if (spec.family == Family::Custom) continue;
        TestPartition p = family_partition(spec);
        ExponentTuple unit(p.dims.n(), 0);
        unit[0] = 1;
        for (auto& subset : p.subsets) std::erase(subset.tuples, unit);
        std::erase_if(p.subsets, [](const TestSubset& sub) { return sub.tuples.empty(); });
        p.mu.assign(p.tau(), Rational(1, p.tau()));
        bool rejected = false;
        try {
            validate_partition(p);
        } catch (const std::invalid_argument&) {
            rejected = true;
        }
        h.require(rejected, label + ": partition missing a generator passed validation");
    }
    std::cout << (h.ok ? "[PASS]" : "[FAIL]")
              << " criterion 8: stabilizer property suite and coverage negative test\n"
              << h.detail.str();
    return h.ok;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<bool (*)()> criteria = {criterion1, criterion2, criterion3, criterion4,
                                              criterion5, criterion6, criterion7, criterion8};
    int failures = 0;
    if (argc > 1) {
        const int which = std::atoi(argv[1]);
        if (which < 1 || which > static_cast<int>(criteria.size())) {
            std::cerr << "criterion number must be 1.." << criteria.size() << "\n";
            return 64;
        }
        return criteria[which - 1]() ? 0 : 1;
    }
    for (const auto& criterion : criteria)
        if (!criterion()) ++failures;
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criterion(s) failed")
              << "\n";
    return failures;
}
