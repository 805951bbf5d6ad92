#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qv/strategy.hpp"

using namespace qv;

namespace {

GraphSpec path3(int d) {
    GraphSpec g;
    g.n = 3;
    g.d = d;
    g.edges = {{{0, 1}, 1, {}}, {{1, 2}, 1, {}}};
    return g;
}

GraphSpec triangle(int d) {
    GraphSpec g;
    g.n = 3;
    g.d = d;
    g.edges = {{{0, 1}, 1, {}}, {{0, 2}, 1, {}}, {{1, 2}, 1, {}}};
    return g;
}

GraphSpec cycle5(int d) {
    GraphSpec g;
    g.n = 5;
    g.d = d;
    g.edges = {{{0, 1}, 1, {}}, {{1, 2}, 1, {}}, {{2, 3}, 1, {}}, {{3, 4}, 1, {}}, {{0, 4}, 1, {}}};
    return g;
}

GraphSpec with_unit_exponents(GraphSpec g) {
    for (auto& e : g.edges) e.exponents.assign(e.vertices.size(), 1);
    return g;
}

Rational lambda_at(const TestPartition& p, const ExponentTuple& j) {
    return lambda_coefficients(p)[tuple_to_index(j, p.dims)];
}

void check_closed_form(const StateSpec& spec, const Rational& beta_expected) {
    const TestPartition p = family_partition(spec);
    const WeightOptimum opt = optimize_weights(p);
    CHECK(std::abs(opt.beta_float - beta_expected.to_double()) < 1e-9);
    if (opt.exact) CHECK(opt.beta == beta_expected);

    // independent route: eigendecompose Omega at the optimal weights
    REQUIRE(opt.exact);
    TestPartition tuned = p;
    tuned.mu = opt.mu;
    const BuiltState state = build(spec);
    const VerificationOperator v = assemble_omega(state, tuned);
    const Spectrum s = hermitian_spectrum(v.omega);
    CHECK(std::abs(s.values(0) - 1.0) < 1e-9);
    CHECK(std::abs(s.values(1) - beta_expected.to_double()) < 1e-9);
}

}  // namespace

TEST_CASE("family partitions carry the expected test sets") {
    const TestPartition psi2 = family_partition(StateSpec::bell_like(0.5));
    REQUIRE(psi2.tau() == 3);
    CHECK(psi2.subsets[0].tuples == std::vector<ExponentTuple>{{0, 1}});
    CHECK(psi2.subsets[1].tuples == std::vector<ExponentTuple>{{1, 0}});
    CHECK(psi2.subsets[2].tuples == std::vector<ExponentTuple>{{1, 1}});

    const TestPartition psi3 = family_partition(StateSpec::psi3());
    REQUIRE(psi3.tau() == 3);
    CHECK(psi3.subsets[2].tuples ==
          std::vector<ExponentTuple>{{0, 0, 1, 0}, {0, 0, 0, 1}});

    const TestPartition ghz = family_partition(StateSpec::ghz(3, 2));
    REQUIRE(ghz.tau() == 5);
    CHECK(ghz.subsets[0].tuples.size() == 3);
    for (int i = 1; i < 5; ++i) CHECK(ghz.subsets[i].tuples.size() == 1);
    // singleton at index 1 + h1*2 + h2 carries (1, h1, h2)
    CHECK(ghz.subsets[1].tuples[0] == ExponentTuple{1, 0, 0});
    CHECK(ghz.subsets[4].tuples[0] == ExponentTuple{1, 1, 1});

    // qudit singleton labels follow 1 + (h0-1) d^{n-1} + sum_l h_l d^{n-1-l}
    const TestPartition qudit = family_partition(StateSpec::ghz(2, 3));
    REQUIRE(qudit.tau() == 7);
    CHECK(qudit.subsets[1].tuples[0] == ExponentTuple{1, 0});
    CHECK(qudit.subsets[3].tuples[0] == ExponentTuple{1, 2});
    CHECK(qudit.subsets[4].tuples[0] == ExponentTuple{2, 0});
    CHECK(qudit.subsets[6].tuples[0] == ExponentTuple{2, 2});

    const TestPartition like = family_partition(StateSpec::ghz_like_qudit(3, 3, {0.4, 0.9}));
    REQUIRE(like.tau() == 2);
    CHECK(like.subsets[0].tuples.size() == 8);
    CHECK(like.subsets[1].tuples == std::vector<ExponentTuple>{{1, 0, 0}, {2, 0, 0}});

    CHECK_THROWS_AS(family_partition(StateSpec{.family = Family::Custom}), unsupported_family);
}

TEST_CASE("partition validation and the generator-coverage negative test") {
    GraphSpec tri = triangle(3);
    const std::vector<StateSpec> specs = {
        StateSpec::psi1(),          StateSpec::bell_like(0.5),
        StateSpec::ghz(3, 2),       StateSpec::ghz_like_qubit(3, 0.7),
        StateSpec::graph_state(tri), StateSpec::psi3(),
    };
    for (const auto& spec : specs) {
        TestPartition p = family_partition(spec);
        CHECK_NOTHROW(validate_partition(p));

        // strip the first generator tuple wherever it lives
        ExponentTuple unit(p.dims.n(), 0);
        unit[0] = 1;
        for (auto& subset : p.subsets)
            std::erase(subset.tuples, unit);
        std::erase_if(p.subsets, [](const TestSubset& s) { return s.tuples.empty(); });
        p.mu.assign(p.tau(), Rational(1, p.tau()));
        CHECK_THROWS_AS(validate_partition(p), std::invalid_argument);
    }
}

TEST_CASE("partition validation rejects structural breakage") {
    TestPartition p = family_partition(StateSpec::bell_like(0.5));
    p.mu = {Rational(1, 2), Rational(1, 2), Rational(1, 2)};
    CHECK_THROWS_AS(validate_partition(p), std::invalid_argument);

    p = family_partition(StateSpec::bell_like(0.5));
    p.subsets[0].tuples.push_back({0, 0});
    CHECK_THROWS_AS(validate_partition(p), std::invalid_argument);

    p = family_partition(StateSpec::bell_like(0.5));
    p.subsets[0].tuples.push_back({0, 2});  // entry out of range
    CHECK_THROWS_AS(validate_partition(p), std::invalid_argument);
}

TEST_CASE("lambda coefficients") {
    TestPartition psi2 = family_partition(StateSpec::bell_like(0.5));
    CHECK(lambda_at(psi2, {0, 0}) == Rational(1));
    CHECK(lambda_at(psi2, {0, 1}) == Rational(1, 3));
    CHECK(lambda_at(psi2, {1, 0}) == Rational(1, 3));
    CHECK(lambda_at(psi2, {1, 1}) == Rational(1, 3));

    TestPartition psi1 = family_partition(StateSpec::psi1());
    psi1.mu = {Rational(1, 4), Rational(1, 4), Rational(1, 2)};
    CHECK(lambda_at(psi1, {1, 0}) == Rational(1, 2));
    CHECK(lambda_at(psi1, {2, 0}) == Rational(1, 2));
    CHECK(lambda_at(psi1, {0, 1}) == Rational(1, 2));
    CHECK(lambda_at(psi1, {1, 1}) == Rational(0));
    CHECK(lambda_at(psi1, {0, 0}) == Rational(1));
}

TEST_CASE("joint subset pass rules") {
    const TestPartition ghz = family_partition(StateSpec::ghz(3, 2));
    // subset 0 tests all h with h_0 = 0 at once
    CHECK(subset_passes(ghz, 0, {0, 0, 0}));
    CHECK(subset_passes(ghz, 0, {1, 0, 0}));
    CHECK_FALSE(subset_passes(ghz, 0, {0, 1, 1}));

    const TestPartition psi2 = family_partition(StateSpec::bell_like(0.5));
    for (long long idx = 0; idx < 4; ++idx) {
        const ExponentTuple j = index_to_tuple(idx, psi2.dims);
        for (int i = 0; i < psi2.tau(); ++i)
            CHECK(subset_passes(psi2, i, j) ==
                  residue_condition(psi2.subsets[i].tuples[0], j, psi2.dims));
    }
}

TEST_CASE("per-subset counts are monotone under enlargement") {
    const HybridDims dims({2, 2});
    const std::vector<ExponentTuple> small = {{0, 1}};
    const std::vector<ExponentTuple> large = {{0, 1}, {1, 1}};
    for (long long idx = 0; idx < dims.total(); ++idx) {
        const ExponentTuple j = index_to_tuple(idx, dims);
        CHECK(count_condition_solutions(large, j, dims) >=
              count_condition_solutions(small, j, dims));
    }
}

TEST_CASE("omega assembly matches the pauli form of the bell-like operator") {
    const cmatrix I = identity(2), Z = pauli_z(2), X = pauli_x(2);
    cmatrix Y(2, 2);
    Y << cxd(0, 0), cxd(0, -1), cxd(0, 1), cxd(0, 0);

    for (double theta : {std::numbers::pi / 4, 0.3, 1.2}) {
        const BuiltState s = build(StateSpec::bell_like(theta));
        const TestPartition p = family_partition(StateSpec::bell_like(theta));
        const VerificationOperator v = assemble_omega(s, p);
        const double c2 = std::cos(2 * theta), s2 = std::sin(2 * theta);
        const cmatrix pauli_form =
            (3.0 * kron(I, I) - c2 * kron(Z, I) + s2 * kron(X, X) + kron(Z, Z) -
             c2 * kron(I, Z) - s2 * kron(Y, Y)) /
            6.0;
        CHECK(max_abs(v.omega - pauli_form) < 1e-10);
        CHECK(v.beta == doctest::Approx(1.0 / 3.0));
        CHECK(v.nu == doctest::Approx(2.0 / 3.0));

        const Spectrum sp = hermitian_spectrum(v.omega);
        CHECK(sp.values(0) == doctest::Approx(1.0));
        for (int i = 1; i < 4; ++i) CHECK(sp.values(i) == doctest::Approx(1.0 / 3.0));
    }
}

TEST_CASE("omega collapses to the target projector when no condition survives") {
    TestPartition p;
    p.dims = HybridDims({2});
    p.subsets = {{{{1}}, "all nonzero tuples"}};
    p.mu = {Rational(1)};
    StateSpec spec;
    spec.family = Family::Custom;
    spec.custom_dims = {2};
    spec.circuit = {GateSpec{.kind = GateKind::Ry, .targets = {0}, .theta = 0.8}};
    const BuiltState qubit = build(spec);
    const VerificationOperator v = assemble_omega(qubit, p);
    CHECK(max_abs(v.omega - qubit.psi.amps * qubit.psi.amps.adjoint()) < 1e-12);
    CHECK(v.beta == 0.0);

    const WeightOptimum opt = optimize_weights(p);
    CHECK(opt.beta_float == doctest::Approx(0.0));
    CHECK(opt.exact);
    CHECK(opt.nu == Rational(1));
}

TEST_CASE("omega spectrum equals the lambda multiset") {
    for (const auto& spec :
         {StateSpec::psi1(), StateSpec::ghz(3, 3), StateSpec::psi3()}) {
        const BuiltState s = build(spec);
        const TestPartition p = family_partition(spec);
        const VerificationOperator v = assemble_omega(s, p);
        std::vector<double> expected;
        for (const auto& r : v.lambda) expected.push_back(r.to_double());
        std::sort(expected.rbegin(), expected.rend());
        const Spectrum sp = hermitian_spectrum(v.omega);
        for (size_t i = 0; i < expected.size(); ++i)
            CHECK(std::abs(sp.values(static_cast<Eigen::Index>(i)) - expected[i]) < 1e-9);
        // second-largest eigenvalue equals max nontrivial lambda
        CHECK(std::abs(sp.values(1) - v.beta) < 1e-9);
    }
}

TEST_CASE("optimized weights reach the closed-form spectral gaps") {
    check_closed_form(StateSpec::psi1(), Rational(1, 2));
    check_closed_form(StateSpec::bell_like(0.5), Rational(1, 3));
    for (int n = 2; n <= 6; ++n)
        check_closed_form(StateSpec::ghz(n, 2), Rational((1LL << (n - 1)) - 1, (1LL << n) - 1));
    for (int n : {2, 3})
        for (int d : {2, 3, 5}) {
            long long dn1 = 1;
            for (int i = 0; i < n - 1; ++i) dn1 *= d;
            check_closed_form(StateSpec::ghz(n, d), Rational(dn1 - 1, dn1 * d - 1));
        }
    for (int n = 2; n <= 6; ++n)
        check_closed_form(StateSpec::ghz_like_qubit(n, 0.9),
                          Rational((1LL << (n - 1)) - 1, 3 * (1LL << (n - 2)) - 1));
    check_closed_form(StateSpec::ghz_like_qudit(3, 3, {0.5, 1.1}),
                      Rational(9 - 1, 2 * 9 - 3 - 1));
}

TEST_CASE("optimizer dominates the uniform weighting") {
    for (const auto& spec : {StateSpec::psi1(), StateSpec::ghz(3, 3),
                             StateSpec::ghz_like_qubit(4, 0.6), StateSpec::psi3()}) {
        const TestPartition p = family_partition(spec);
        const WeightOptimum opt = optimize_weights(p);
        double uniform_beta = 0.0;
        const auto lambda = lambda_coefficients(p);
        for (size_t i = 1; i < lambda.size(); ++i)
            uniform_beta = std::max(uniform_beta, lambda[i].to_double());
        CHECK(opt.beta_float <= uniform_beta + 1e-12);
    }
}

TEST_CASE("psi3 minimax gap is 1/4 for the built-in subsets") {
    // The three subsets overlap on outcomes like (0,0,0,1): the
    // lambda there is mu_0 + mu_1 + mu_2/2, so max lambda >= 3/4 for any
    // weights; the optimum is attained exactly at mu = (1/4, 1/4, 1/2).
    const TestPartition p = family_partition(StateSpec::psi3());
    const WeightOptimum opt = optimize_weights(p);
    REQUIRE(opt.exact);
    CHECK(opt.beta == Rational(3, 4));
    CHECK(opt.nu == Rational(1, 4));

    TestPartition tuned = p;
    tuned.mu = {Rational(1, 4), Rational(1, 4), Rational(1, 2)};
    CHECK(lambda_at(tuned, {0, 0, 0, 1}) == Rational(3, 4));
    CHECK(lambda_at(tuned, {1, 0, 0, 0}) == Rational(3, 4));
    CHECK(lambda_at(tuned, {0, 1, 0, 0}) == Rational(3, 4));

    const BuiltState s = build_psi3();
    const VerificationOperator v = assemble_omega(s, tuned);
    const Spectrum sp = hermitian_spectrum(v.omega);
    CHECK(std::abs(sp.values(1) - 0.75) < 1e-9);
}

TEST_CASE("sample counts") {
    const SampleCount s = n_opt(2.0 / 3.0, 0.01, 0.05);
    CHECK(s.exact == 448);
    CHECK(s.bound == 450);
    CHECK(s.exact <= s.bound);

    CHECK(n_opt(0.5, 0.5, 1.5).exact == 0);
    CHECK(n_opt(1.0, 0.999999999, 0.05).exact >= 1);
    const SampleCount perfect = n_opt(2.0, 0.5, 0.05);  // nu*eps = 1
    CHECK(perfect.exact == 1);
    CHECK(perfect.bound == 1);
    CHECK_THROWS_AS(n_opt(0.0, 0.01, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(n_opt(0.5, 1.5, 0.05), std::invalid_argument);
}

TEST_CASE("graph coloring") {
    const ColoringResult p3 = color_graph(path3(3));
    CHECK(p3.colors == 2);
    CHECK(p3.exact);
    CHECK(p3.sets[0] == std::vector<int>{0, 2});
    CHECK(p3.sets[1] == std::vector<int>{1});

    CHECK(color_graph(triangle(3)).colors == 3);

    GraphSpec petersen;
    petersen.n = 10;
    petersen.d = 3;
    for (int i = 0; i < 5; ++i) {
        petersen.edges.push_back({{i, (i + 1) % 5}, 1, {}});
        petersen.edges.push_back({{i, i + 5}, 1, {}});
        petersen.edges.push_back({{5 + i, 5 + (i + 2) % 5}, 1, {}});
    }
    for (auto& e : petersen.edges) std::sort(e.vertices.begin(), e.vertices.end());
    const ColoringResult pc = color_graph(petersen);
    CHECK(pc.colors == 3);
    CHECK(pc.exact);

    // hyperedges make all their vertices pairwise adjacent
    GraphSpec hyper;
    hyper.n = 3;
    hyper.d = 3;
    hyper.edges = {{{0, 1, 2}, 1, {}}};
    CHECK(color_graph(hyper).colors == 3);

    // past 20 vertices the greedy path takes over and is flagged
    GraphSpec big;
    big.n = 25;
    big.d = 2;
    for (int i = 0; i < 25; ++i) {
        std::vector<int> e = {i, (i + 1) % 25};
        std::sort(e.begin(), e.end());
        big.edges.push_back({e, 1, {}});
    }
    const ColoringResult odd_cycle = color_graph(big);
    CHECK_FALSE(odd_cycle.exact);
    CHECK(odd_cycle.colors >= 3);
    // still a valid independent cover
    const auto adj = adjacency(big);
    int covered = 0;
    for (const auto& set : odd_cycle.sets) {
        covered += static_cast<int>(set.size());
        for (size_t a = 0; a < set.size(); ++a)
            for (size_t b = a + 1; b < set.size(); ++b) CHECK_FALSE(adj[set[a]][set[b]]);
    }
    CHECK(covered == 25);
}

TEST_CASE("graph family closed forms against the optimizer") {
    // plain graphs: the closed form equals the LP optimum
    struct Case {
        GraphSpec g;
        Rational nu;
    };
    const std::vector<Case> cases = {
        {path3(3), Rational(3, 7)},
        {path3(2), Rational(2, 5)},
        {triangle(2), Rational(1, 3)},
        {triangle(3), Rational(1, 3)},
        {cycle5(2), Rational(1, 4)},
        {cycle5(3), Rational(3, 11)},
    };
    for (const auto& c : cases) {
        const ColoringResult coloring = color_graph(c.g);
        const Rational formula = graph_family_nu(c.g, coloring);
        CHECK(formula == c.nu);
        const WeightOptimum opt = optimize_weights(family_partition(StateSpec::graph_state(c.g)));
        CHECK(std::abs(opt.nu_float - formula.to_double()) < 1e-9);
    }

    // single vertex, chi = 1
    GraphSpec lone;
    lone.n = 1;
    lone.d = 2;
    CHECK(graph_family_nu(lone, color_graph(lone)) == Rational(1));
}

TEST_CASE("multigraph closed form is exact only for singleton color classes") {
    GraphSpec tri = with_unit_exponents(triangle(3));
    const Rational tri_nu = graph_family_nu(tri, color_graph(tri));
    CHECK(tri_nu == Rational(1, 3));
    const WeightOptimum tri_opt = optimize_weights(family_partition(StateSpec::graph_state(tri)));
    CHECK(std::abs(tri_opt.nu_float - tri_nu.to_double()) < 1e-9);

    // path with a two-vertex color class: the closed form gives 5/11
    // while the LP optimum over the built-in subsets is 2/5
    GraphSpec p3 = with_unit_exponents(path3(3));
    const Rational p3_formula = graph_family_nu(p3, color_graph(p3));
    CHECK(p3_formula == Rational(5, 11));
    const WeightOptimum p3_opt = optimize_weights(family_partition(StateSpec::graph_state(p3)));
    REQUIRE(p3_opt.exact);
    CHECK(p3_opt.nu == Rational(2, 5));
}

TEST_CASE("graph partitions verify their states spectrally") {
    for (const auto& g : {path3(3), triangle(3)}) {
        const StateSpec spec = StateSpec::graph_state(g);
        const BuiltState s = build(spec);
        TestPartition p = family_partition(spec);
        const WeightOptimum opt = optimize_weights(p);
        REQUIRE(opt.exact);
        p.mu = opt.mu;
        const VerificationOperator v = assemble_omega(s, p);
        const Spectrum sp = hermitian_spectrum(v.omega);
        CHECK(std::abs(sp.values(0) - 1.0) < 1e-9);
        CHECK(std::abs(sp.values(1) - opt.beta_float) < 1e-9);
    }
}
