// Builders for the target-state families: each returns (dims, U, |psi>)
// with |psi> = U|0...0> by construction. Composite-dimension states are
// expressed over their ascending prime split so that prime-dimension
// stabilizer theory applies directly.

#pragma once

#include "qv/gates.hpp"

namespace qv {

struct GraphEdge {
    std::vector<int> vertices;   // sorted, >= 2 entries
    int weight = 1;              // m_e in Z_d^*
    std::vector<int> exponents;  // per-vertex s_v in Z_d^*; empty means all 1
};

struct GraphSpec {
    int n = 0;
    int d = 2;
    std::vector<GraphEdge> edges;

    // Multigraph/multihypergraph: any edge carries explicit exponents.
    bool is_multi() const;
    bool is_hyper() const;  // any edge with more than two vertices
    void validate() const;
};

enum class Family {
    Psi1,
    BellLike,
    GHZ,
    GHZLikeQubit,
    GHZLikeQudit,
    Graph,
    Psi3,
    Custom,
};

struct StateSpec {
    Family family = Family::Psi1;
    double theta = 0.0;           // BellLike, GHZLikeQubit
    int n = 0;                    // GHZ, GHZLikeQubit, GHZLikeQudit
    int d = 2;                    // GHZ, GHZLikeQudit
    std::vector<double> thetas;   // GHZLikeQudit, d-1 angles
    GraphSpec graph;              // Graph
    std::vector<int> custom_dims; // Custom
    std::vector<GateSpec> circuit;  // Custom, applied in listed order

    static StateSpec psi1();
    static StateSpec bell_like(double theta);
    static StateSpec ghz(int n, int d);
    static StateSpec ghz_like_qubit(int n, double theta);
    static StateSpec ghz_like_qudit(int n, int d, std::vector<double> thetas);
    static StateSpec graph_state(GraphSpec g);
    static StateSpec psi3();
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);

struct BuiltState {
    HybridDims dims;
    cmatrix unitary;
    StateVector psi;
};

BuiltState build(const StateSpec& spec);

// Qudit Bell-like d=6 state over the (2,3,2,3) prime split.
BuiltState build_psi3();

// Digits of the composite label k under the ascending-prime split of d;
// e.g. d=6, k=4 -> (1,1) since |k> = |3*j0 + j1>.
std::vector<int> composite_index_map(int d, int k);

}  // namespace qv
