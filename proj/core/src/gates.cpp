#include "qv/gates.hpp"

#include <cmath>
#include <numbers>

namespace qv {

cxd omega(int d, long long e) {
    if (d < 2) throw std::invalid_argument("omega: d must be >= 2");
    e %= d;
    if (e < 0) e += d;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / d);
}

long long powmod(long long base, long long exp, long long mod) {
    base %= mod;
    if (base < 0) base += mod;
    long long out = 1 % mod;
    while (exp > 0) {
        if (exp & 1) out = out * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return out;
}

cmatrix pauli_z(int d) {
    cmatrix z = cmatrix::Zero(d, d);
    for (int k = 0; k < d; ++k) z(k, k) = omega(d, k);
    return z;
}

cmatrix pauli_x(int d) {
    cmatrix x = cmatrix::Zero(d, d);
    for (int k = 0; k < d; ++k) x((k - 1 + d) % d, k) = 1.0;
    return x;
}

cmatrix powered_z(int d, int s) {
    if (s < 1) throw std::invalid_argument("powered_z: exponent must be >= 1");
    cmatrix z = cmatrix::Zero(d, d);
    for (int k = 0; k < d; ++k) z(k, k) = omega(d, powmod(k, s, d));
    return z;
}

cmatrix qft(int d) {
    cmatrix f(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) f(j, k) = norm * omega(d, static_cast<long long>(j) * k);
    return f;
}

cmatrix hadamard() { return qft(2); }

cmatrix ry(double alpha) {
    cmatrix r(2, 2);
    const double c = std::cos(alpha / 2), s = std::sin(alpha / 2);
    r << c, -s, s, c;
    return r;
}

cmatrix givens(int d, int i, double theta) {
    if (i < 0 || i + 1 >= d) throw std::invalid_argument("givens: level out of range");
    cmatrix r = identity(d);
    const double c = std::cos(theta), s = std::sin(theta);
    r(i, i) = c;
    r(i + 1, i + 1) = c;
    r(i + 1, i) = s;
    r(i, i + 1) = -s;
    return r;
}

cmatrix givens_chain(int d, const std::vector<double>& thetas) {
    if (static_cast<int>(thetas.size()) != d - 1)
        throw std::invalid_argument("givens_chain: need d-1 angles");
    cmatrix u = identity(d);
    for (int i = 0; i < d - 1; ++i) u = givens(d, i, thetas[i]) * u;
    return u;
}

cmatrix csum(int d) {
    cmatrix m = cmatrix::Zero(static_cast<long long>(d) * d, static_cast<long long>(d) * d);
    for (int c = 0; c < d; ++c)
        for (int t = 0; t < d; ++t) m(c * d + (t + c) % d, c * d + t) = 1.0;
    return m;
}

cmatrix cnot() { return csum(2); }

cmatrix cz_weighted(int d, int m) {
    cmatrix g = cmatrix::Zero(static_cast<long long>(d) * d, static_cast<long long>(d) * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            g(a * d + b, a * d + b) = omega(d, static_cast<long long>(m) * a * b);
    return g;
}

cmatrix hybrid_cz(int dz, int dc) {
    cmatrix g = cmatrix::Zero(static_cast<long long>(dz) * dc, static_cast<long long>(dz) * dc);
    for (int a = 0; a < dz; ++a)
        for (int b = 0; b < dc; ++b)
            g(a * dc + b, a * dc + b) = omega(dz, static_cast<long long>(a) * b);
    return g;
}

cmatrix embed(const cmatrix& local, const std::vector<int>& targets, const HybridDims& dims) {
    if (local.rows() != local.cols()) throw std::invalid_argument("embed: local gate not square");
    std::vector<bool> seen(dims.n(), false);
    long long local_dim = 1;
    for (int t : targets) {
        if (t < 0 || t >= dims.n()) throw std::invalid_argument("embed: target out of range");
        if (seen[t]) throw std::invalid_argument("embed: duplicate target");
        seen[t] = true;
        local_dim *= dims.dim(t);
    }
    if (local.rows() != local_dim)
        throw std::invalid_argument("embed: local dimension does not match target dims");

    std::vector<int> tdims;
    for (int t : targets) tdims.push_back(dims.dim(t));
    const HybridDims target_dims(tdims);

    const long long total = dims.total();
    cmatrix out = cmatrix::Zero(total, total);
    for (long long col = 0; col < total; ++col) {
        ExponentTuple digits = index_to_tuple(col, dims);
        ExponentTuple local_digits(targets.size());
        for (size_t i = 0; i < targets.size(); ++i) local_digits[i] = digits[targets[i]];
        const long long lcol = tuple_to_index(local_digits, target_dims);
        for (long long lrow = 0; lrow < local_dim; ++lrow) {
            const cxd v = local(lrow, lcol);
            if (v == cxd(0.0, 0.0)) continue;
            ExponentTuple row_local = index_to_tuple(lrow, target_dims);
            ExponentTuple row_digits = digits;
            for (size_t i = 0; i < targets.size(); ++i) row_digits[targets[i]] = row_local[i];
            out(tuple_to_index(row_digits, dims), col) = v;
        }
    }
    return out;
}

cmatrix edge_gate(const HybridDims& dims, const std::vector<int>& vertices, int weight,
                  const std::vector<int>& exponents) {
    if (vertices.size() < 2) throw std::invalid_argument("edge_gate: edge needs >= 2 vertices");
    if (!exponents.empty() && exponents.size() != vertices.size())
        throw std::invalid_argument("edge_gate: exponent count mismatch");
    const int d = dims.dim(vertices[0]);
    for (int v : vertices) {
        if (v < 0 || v >= dims.n()) throw std::invalid_argument("edge_gate: vertex out of range");
        if (dims.dim(v) != d)
            throw std::invalid_argument("edge_gate: edge vertices must share one dimension");
    }
    if (!is_prime(d)) throw std::invalid_argument("edge_gate: dimension must be prime");

    const long long total = dims.total();
    cmatrix g = cmatrix::Zero(total, total);
    for (long long idx = 0; idx < total; ++idx) {
        ExponentTuple digits = index_to_tuple(idx, dims);
        long long e = ((weight % d) + d) % d;
        for (size_t t = 0; t < vertices.size(); ++t) {
            const int s = exponents.empty() ? 1 : exponents[t];
            e = e * powmod(digits[vertices[t]], s, d) % d;
        }
        g(idx, idx) = omega(d, e);
    }
    return g;
}

cmatrix gate_matrix(const GateSpec& g, const HybridDims& dims) {
    auto one_target = [&](const cmatrix& local) {
        if (g.targets.size() != 1) throw std::invalid_argument("gate_matrix: expected one target");
        return embed(local, g.targets, dims);
    };
    auto two_targets = [&](const cmatrix& local) {
        if (g.targets.size() != 2) throw std::invalid_argument("gate_matrix: expected two targets");
        return embed(local, g.targets, dims);
    };
    switch (g.kind) {
        case GateKind::PauliZ: return one_target(pauli_z(dims.dim(g.targets.at(0))));
        case GateKind::PauliX: return one_target(pauli_x(dims.dim(g.targets.at(0))));
        case GateKind::PoweredZ: return one_target(powered_z(dims.dim(g.targets.at(0)), g.power));
        case GateKind::QFT: return one_target(qft(dims.dim(g.targets.at(0))));
        case GateKind::Hadamard:
            if (dims.dim(g.targets.at(0)) != 2)
                throw std::invalid_argument("gate_matrix: Hadamard requires d=2");
            return one_target(hadamard());
        case GateKind::Ry:
            if (dims.dim(g.targets.at(0)) != 2)
                throw std::invalid_argument("gate_matrix: Ry requires d=2");
            return one_target(ry(g.theta));
        case GateKind::GivensChain:
            return one_target(givens_chain(dims.dim(g.targets.at(0)), g.thetas));
        case GateKind::CNOT:
            if (dims.dim(g.targets.at(0)) != 2 || dims.dim(g.targets.at(1)) != 2)
                throw std::invalid_argument("gate_matrix: CNOT requires d=2");
            return two_targets(cnot());
        case GateKind::CSUM: {
            const int d = dims.dim(g.targets.at(0));
            if (dims.dim(g.targets.at(1)) != d)
                throw std::invalid_argument("gate_matrix: CSUM requires equal dims");
            return two_targets(csum(d));
        }
        case GateKind::HybridCZ:
            return two_targets(hybrid_cz(dims.dim(g.targets.at(0)), dims.dim(g.targets.at(1))));
        case GateKind::CZ:
            if (g.targets.size() != 2) throw std::invalid_argument("gate_matrix: CZ takes two vertices");
            return edge_gate(dims, g.targets, g.weight);
        case GateKind::HyperCZ: return edge_gate(dims, g.targets, g.weight);
        case GateKind::MultiCZ:
            if (g.targets.size() != 2)
                throw std::invalid_argument("gate_matrix: MultiCZ takes two vertices");
            return edge_gate(dims, g.targets, g.weight, g.exponents);
        case GateKind::MultiHyperCZ: return edge_gate(dims, g.targets, g.weight, g.exponents);
    }
    throw std::invalid_argument("gate_matrix: unknown gate kind");
}

namespace {
constexpr std::pair<GateKind, const char*> kGateNames[] = {
    {GateKind::PauliZ, "pauli_z"},       {GateKind::PauliX, "pauli_x"},
    {GateKind::PoweredZ, "powered_z"},   {GateKind::QFT, "qft"},
    {GateKind::Hadamard, "hadamard"},    {GateKind::Ry, "ry"},
    {GateKind::GivensChain, "givens_chain"}, {GateKind::CNOT, "cnot"},
    {GateKind::CSUM, "csum"},            {GateKind::CZ, "cz"},
    {GateKind::HybridCZ, "hybrid_cz"},   {GateKind::HyperCZ, "hyper_cz"},
    {GateKind::MultiCZ, "multi_cz"},     {GateKind::MultiHyperCZ, "multi_hyper_cz"},
};
}

const char* gate_kind_name(GateKind k) {
    for (const auto& [kind, name] : kGateNames)
        if (kind == k) return name;
    throw std::invalid_argument("gate_kind_name: unknown kind");
}

GateKind gate_kind_from_name(const std::string& name) {
    for (const auto& [kind, n] : kGateNames)
        if (name == n) return kind;
    throw std::invalid_argument("gate_kind_from_name: unknown gate '" + name + "'");
}

}  // namespace qv
