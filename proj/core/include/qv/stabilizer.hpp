// Generalized stabilizer engine: generators g_k = U Z_k U^dag over the
// prime split of the system, exponent-tuple group elements, eigenvalue-1
// projectors, the density identity, and the adaptive-path measurement
// formalism (path projectors, weights, support).

#pragma once

#include <functional>

#include "qv/states.hpp"

namespace qv {

struct StabilizerGroup {
    HybridDims dims;  // always prime-split
    cmatrix unitary;
    std::vector<cmatrix> generators;
};

// g_k = U Z_k^{(d_k)} U^dag for each particle of the prime split of dims.
// Composite input dims are split first; the flat index identification makes
// this a pure relabeling of the same matrix U.
StabilizerGroup generators(const cmatrix& u, const HybridDims& dims);

// prod_k g_k^{h_k}: computed as U * diag(phases) * U^dag with the phase
// exponents reduced exactly mod lcm(dims).
cmatrix group_element(const StabilizerGroup& g, const ExponentTuple& h);

// Lemma power sum P = (1/L) * sum_{l<L} g_(h)^l with L = lcm(dims);
// projector onto the eigenvalue-1 eigenspace of g_(h). h must be nonzero.
cmatrix eigen1_projector(const StabilizerGroup& g, const ExponentTuple& h);

// Independent route to the same projector: sum over the solution set
// {j : sum_k h_k*j_k/d_k in Z} of U|j><j|U^dag.
cmatrix solution_projector(const StabilizerGroup& g, const ExponentTuple& h);

// ||(1/prod d_i) * prod_i (sum_j g_i^j) - |psi><psi|||_max. Requires prime
// dims (guaranteed after the split).
double density_identity_residual(const StabilizerGroup& g, const StateVector& psi);

// Adaptive local-measurement plan: particles are measured in `order`; the
// basis at step i may depend on the outcomes of earlier steps. Path tuples
// are step-ordered, so the alphabet at slot i is dims.dim(order[i]).
struct AdaptivePlan {
    HybridDims dims;
    std::vector<int> order;
    // basis(step, prior outcomes) -> local unitary whose columns are the
    // measurement basis of the particle measured at that step.
    std::function<cmatrix(int, const ExponentTuple&)> basis;
    // Path weight Lambda(J); defaults to 1 everywhere when empty.
    std::function<cxd(const ExponentTuple&)> weight;

    int steps() const { return static_cast<int>(order.size()); }
    int alphabet(int step) const { return dims.dim(order.at(step)); }
};

// Ordered product of the per-step projectors P_i(j_i | J_i) along path J.
cmatrix path_projector(const AdaptivePlan& plan, const ExponentTuple& path);

// M = sum_J Lambda(J) Pi(J) over all paths.
cmatrix measurement_operator(const AdaptivePlan& plan);

// {J : ||Pi(J)|psi>|| > 1e-9}.
std::vector<ExponentTuple> support(const AdaptivePlan& plan, const StateVector& psi);

// All-computational-bases plan in natural particle order.
AdaptivePlan computational_plan(const HybridDims& dims);

// Adaptive test of g_(1,0) for the Bell-like state: qubit 1 in {|+x>,|-x>},
// then qubit 0 in {|+phi_{+x}>,|-phi_{+x}>} or {|+phi_{-x}>,|-phi_{-x}>}.
// Passes on even outcome parity.
AdaptivePlan psi2_g10_plan(double theta);

}  // namespace qv
