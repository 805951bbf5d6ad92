#include "qv/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qv {

bool GraphSpec::is_multi() const {
    return std::any_of(edges.begin(), edges.end(),
                       [](const GraphEdge& e) { return !e.exponents.empty(); });
}

bool GraphSpec::is_hyper() const {
    return std::any_of(edges.begin(), edges.end(),
                       [](const GraphEdge& e) { return e.vertices.size() > 2; });
}

void GraphSpec::validate() const {
    if (n < 1) throw std::invalid_argument("GraphSpec: need at least one vertex");
    if (!is_prime(d)) throw std::invalid_argument("GraphSpec: d must be prime");
    for (const auto& e : edges) {
        if (e.vertices.size() < 2) throw std::invalid_argument("GraphSpec: edge needs >= 2 vertices");
        if (!std::is_sorted(e.vertices.begin(), e.vertices.end()) ||
            std::adjacent_find(e.vertices.begin(), e.vertices.end()) != e.vertices.end())
            throw std::invalid_argument("GraphSpec: edge vertices must be sorted and distinct");
        for (int v : e.vertices)
            if (v < 0 || v >= n) throw std::invalid_argument("GraphSpec: vertex out of range");
        if (e.weight < 1 || e.weight >= d)
            throw std::invalid_argument("GraphSpec: edge weight must lie in Z_d^*");
        if (!e.exponents.empty()) {
            if (e.exponents.size() != e.vertices.size())
                throw std::invalid_argument("GraphSpec: exponent count mismatch");
            for (int s : e.exponents)
                if (s < 1 || s >= d)
                    throw std::invalid_argument("GraphSpec: exponents must lie in Z_d^*");
        }
    }
}

StateSpec StateSpec::psi1() { return StateSpec{.family = Family::Psi1}; }

StateSpec StateSpec::bell_like(double theta) {
    return StateSpec{.family = Family::BellLike, .theta = theta};
}

StateSpec StateSpec::ghz(int n, int d) {
    return StateSpec{.family = Family::GHZ, .n = n, .d = d};
}

StateSpec StateSpec::ghz_like_qubit(int n, double theta) {
    return StateSpec{.family = Family::GHZLikeQubit, .theta = theta, .n = n};
}

StateSpec StateSpec::ghz_like_qudit(int n, int d, std::vector<double> thetas) {
    StateSpec s{.family = Family::GHZLikeQudit, .n = n, .d = d};
    s.thetas = std::move(thetas);
    return s;
}

StateSpec StateSpec::graph_state(GraphSpec g) {
    StateSpec s{.family = Family::Graph};
    s.graph = std::move(g);
    return s;
}

StateSpec StateSpec::psi3() { return StateSpec{.family = Family::Psi3}; }

namespace {
constexpr std::pair<Family, const char*> kFamilyNames[] = {
    {Family::Psi1, "psi1"},
    {Family::BellLike, "bell_like"},
    {Family::GHZ, "ghz"},
    {Family::GHZLikeQubit, "ghz_like_qubit"},
    {Family::GHZLikeQudit, "ghz_like_qudit"},
    {Family::Graph, "graph"},
    {Family::Psi3, "psi3"},
    {Family::Custom, "custom"},
};

void require_open_theta(double theta) {
    if (!(theta > 0.0 && theta < std::numbers::pi / 2))
        throw std::invalid_argument("theta must lie in the open interval (0, pi/2)");
}

BuiltState finish(HybridDims dims, cmatrix u) {
    if (!is_unitary(u, 1e-10)) throw std::logic_error("state builder produced non-unitary U");
    cvector zero = cvector::Zero(dims.total());
    zero(0) = 1.0;
    StateVector psi(dims, u * zero);
    return BuiltState{std::move(dims), std::move(u), std::move(psi)};
}
}  // namespace

const char* family_name(Family f) {
    for (const auto& [fam, name] : kFamilyNames)
        if (fam == f) return name;
    throw std::invalid_argument("family_name: unknown family");
}

Family family_from_name(const std::string& name) {
    for (const auto& [fam, n] : kFamilyNames)
        if (name == n) return fam;
    throw std::invalid_argument("family_from_name: unknown family '" + name + "'");
}

BuiltState build(const StateSpec& spec) {
    switch (spec.family) {
        case Family::Psi1: {
            HybridDims dims({3, 2});
            cmatrix u = embed(hybrid_cz(3, 2), {0, 1}, dims) * kron(qft(3), hadamard());
            return finish(dims, std::move(u));
        }
        case Family::BellLike: {
            require_open_theta(spec.theta);
            HybridDims dims({2, 2});
            cmatrix u = embed(cnot(), {0, 1}, dims) *
                        embed(ry(std::numbers::pi - 2 * spec.theta), {0}, dims);
            return finish(dims, std::move(u));
        }
        case Family::GHZ: {
            if (spec.n < 2) throw std::invalid_argument("GHZ: need n >= 2");
            if (!is_prime(spec.d)) throw std::invalid_argument("GHZ: d must be prime");
            HybridDims dims(std::vector<int>(spec.n, spec.d));
            cmatrix u = embed(qft(spec.d), {0}, dims);
            for (int j = 1; j < spec.n; ++j) u = embed(csum(spec.d), {0, j}, dims) * u;
            return finish(dims, std::move(u));
        }
        case Family::GHZLikeQubit: {
            if (spec.n < 2) throw std::invalid_argument("GHZ-like: need n >= 2");
            require_open_theta(spec.theta);
            HybridDims dims(std::vector<int>(spec.n, 2));
            cmatrix u = embed(ry(std::numbers::pi - 2 * spec.theta), {0}, dims);
            for (int j = 1; j < spec.n; ++j) u = embed(cnot(), {0, j}, dims) * u;
            return finish(dims, std::move(u));
        }
        case Family::GHZLikeQudit: {
            if (spec.n < 2) throw std::invalid_argument("GHZ-like: need n >= 2");
            if (!is_prime(spec.d)) throw std::invalid_argument("GHZ-like: d must be prime");
            for (double t : spec.thetas) require_open_theta(t);
            HybridDims dims(std::vector<int>(spec.n, spec.d));
            cmatrix u = embed(givens_chain(spec.d, spec.thetas), {0}, dims);
            for (int j = 1; j < spec.n; ++j) u = embed(csum(spec.d), {0, j}, dims) * u;
            return finish(dims, std::move(u));
        }
        case Family::Graph: {
            spec.graph.validate();
            HybridDims dims(std::vector<int>(spec.graph.n, spec.graph.d));
            cmatrix u = identity(dims.total());
            for (int v = 0; v < spec.graph.n; ++v) u = embed(qft(spec.graph.d), {v}, dims) * u;
            for (const auto& e : spec.graph.edges)
                u = edge_gate(dims, e.vertices, e.weight, e.exponents) * u;
            return finish(dims, std::move(u));
        }
        case Family::Psi3:
            return build_psi3();
        case Family::Custom: {
            HybridDims dims(spec.custom_dims);
            cmatrix u = identity(dims.total());
            for (const auto& g : spec.circuit) u = gate_matrix(g, dims) * u;
            return finish(dims, std::move(u));
        }
    }
    throw std::invalid_argument("build: unknown family");
}

BuiltState build_psi3() {
    HybridDims dims({2, 3, 2, 3});
    cmatrix u = embed(hadamard(), {0}, dims);
    u = embed(qft(3), {1}, dims) * u;
    u = embed(hybrid_cz(3, 2), {1, 0}, dims) * u;  // w_3^{j0*j1}, Z carried by the qutrit
    u = embed(cnot(), {0, 2}, dims) * u;
    u = embed(csum(3), {1, 3}, dims) * u;
    return BuiltState{dims, u, StateVector(dims, u * cvector::Unit(dims.total(), 0))};
}

std::vector<int> composite_index_map(int d, int k) {
    if (d < 2) throw std::invalid_argument("composite_index_map: d must be >= 2");
    if (k < 0 || k >= d) throw std::invalid_argument("composite_index_map: label out of range");
    std::vector<int> split;
    for (const auto& [p, mult] : factorize(d))
        for (int i = 0; i < mult; ++i) split.push_back(static_cast<int>(p));
    std::vector<int> digits(split.size());
    for (int i = static_cast<int>(split.size()) - 1; i >= 0; --i) {
        digits[i] = k % split[i];
        k /= split[i];
    }
    return digits;
}

}  // namespace qv
