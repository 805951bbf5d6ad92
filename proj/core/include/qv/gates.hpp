// Qudit gate zoo: generalized Paulis, Fourier/Hadamard, rotations, the
// controlled-gate family (including hybrid-dimension and hypergraph edge
// variants), and embedding of local gates into the full multi-qudit space.
//
// Conventions fixed here and relied on everywhere else:
//   Z|k> = w_d^k |k>,  X|k> = |k-1 mod d>,  QFT(j,k) = w_d^{jk}/sqrt(d),
// so that QFT * Z * QFT^dag == X holds exactly for every d.

#pragma once

#include "qv/linalg.hpp"

namespace qv {

// w_d^e with the exponent reduced mod d before evaluation.
cxd omega(int d, long long e);

long long powmod(long long base, long long exp, long long mod);

cmatrix pauli_z(int d);
cmatrix pauli_x(int d);

// ^sZ = sum_k w_d^{k^s} |k><k|.
cmatrix powered_z(int d, int s);

cmatrix qft(int d);
cmatrix hadamard();  // qft(2)

// Ry(alpha); Ry(pi - 2*theta)|0> = sin(theta)|0> + cos(theta)|1>.
cmatrix ry(double alpha);

// Adjacent-level Givens rotation R_{i,i+1}(theta).
cmatrix givens(int d, int i, double theta);

// Chain R_{0,1} applied first, then R_{1,2}, ...; maps |0_d> to
// sum_j lambda_j |j> with lambda_j = (prod_{i<j} sin t_i) * cos t_j and
// lambda_{d-1} = prod_i sin t_i.
cmatrix givens_chain(int d, const std::vector<double>& thetas);

// Control first, target second: |c,t> -> |c, t+c mod d>.
cmatrix csum(int d);
cmatrix cnot();  // csum(2)

// Two-site diagonal phase w_d^{m * a * b} on a uniform-dimension pair.
cmatrix cz_weighted(int d, int m);

// Hybrid controlled-phase on (d_z x d_c): diagonal phase w_{d_z}^{a*b},
// with the Z-carrying particle first.
cmatrix hybrid_cz(int dz, int dc);

// Identity on non-target particles; targets may be non-contiguous and
// permuted. local must be (prod target dims) square in target order.
cmatrix embed(const cmatrix& local, const std::vector<int>& targets,
              const HybridDims& dims);

// Full-space diagonal edge gate w_d^{m * prod_v (i_v)^{s_v}} covering the
// plain/hypergraph (s == 1) and multi (per-vertex s) variants. Vertices
// must share one prime dimension d; exponents empty means all 1.
cmatrix edge_gate(const HybridDims& dims, const std::vector<int>& vertices,
                  int weight, const std::vector<int>& exponents = {});

enum class GateKind {
    PauliZ,
    PauliX,
    PoweredZ,
    QFT,
    Hadamard,
    Ry,
    GivensChain,
    CNOT,
    CSUM,
    CZ,
    HybridCZ,
    HyperCZ,
    MultiCZ,
    MultiHyperCZ,
};

// One gate of a custom circuit; interpretation of the parameter fields
// depends on kind (weight for edge gates, power for PoweredZ, theta(s) for
// rotations, exponents for the multi variants).
struct GateSpec {
    GateKind kind = GateKind::PauliZ;
    std::vector<int> targets;
    int weight = 1;
    int power = 1;
    double theta = 0.0;
    std::vector<double> thetas;
    std::vector<int> exponents;
};

// Embedded full-space matrix of one GateSpec.
cmatrix gate_matrix(const GateSpec& g, const HybridDims& dims);

const char* gate_kind_name(GateKind k);
GateKind gate_kind_from_name(const std::string& name);

}  // namespace qv
