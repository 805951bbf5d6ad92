// Test-strategy synthesis: family-specific partitions of the testable
// stabilizer set, exact lambda coefficients, assembly of the verification
// operator Omega, minimax optimization of the subset weights, the sample
// count, and the closed-form spectral gaps of the graph families.

#pragma once

#include "qv/coloring.hpp"
#include "qv/lp.hpp"
#include "qv/stabilizer.hpp"

namespace qv {

struct unsupported_family : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TestSubset {
    std::vector<ExponentTuple> tuples;  // C_i, reduced, never the zero tuple
    std::string note;
};

struct TestPartition {
    HybridDims dims;
    std::vector<TestSubset> subsets;
    std::vector<Rational> mu;  // tau weights, sum exactly 1

    int tau() const { return static_cast<int>(subsets.size()); }
};

// Structural checks: disjoint nonempty subsets of reduced nonzero tuples,
// all generator unit tuples covered, weights nonnegative and summing to 1.
// Throws std::invalid_argument on the first violation.
void validate_partition(const TestPartition& p);

// Declarative joint pass rule of one subset: the outcome satisfies the
// residue condition for every member of C_i (all co-testable elements
// accept in the shared measurement setting).
bool subset_passes(const TestPartition& p, int subset, const ExponentTuple& outcome);

// lambda(j) = sum_i mu_i/|C_i| * #{h in C_i : sum_k h_k j_k / d_k in Z},
// exact rationals indexed by the global mixed-radix index of j.
// lambda at the all-zero tuple is always 1.
std::vector<Rational> lambda_coefficients(const TestPartition& p);

struct VerificationOperator {
    std::vector<Rational> lambda;  // per global index; lambda[0] == 1
    cmatrix omega;
    double beta = 0.0;  // max lambda over nontrivial j
    double nu = 0.0;    // 1 - beta
};

// Omega = |psi><psi| + sum_{j != 0} lambda(j) U|j><j|U^dag.
VerificationOperator assemble_omega(const BuiltState& state, const TestPartition& p);

struct WeightOptimum {
    std::vector<Rational> mu;
    Rational beta;
    Rational nu;
    bool exact = false;
    std::vector<double> mu_float;
    double beta_float = 0.0;
    double nu_float = 0.0;
};

// min over weights of max_{j != 0} lambda(j), solved as a linear program.
WeightOptimum optimize_weights(const TestPartition& p);

struct SampleCount {
    long long exact = 0;  // ceil(ln delta / ln(1 - nu*eps))
    long long bound = 0;  // ceil(ln(1/delta) / (nu*eps))
};

SampleCount n_opt(double nu, double epsilon, double delta);

// Built-in testable-subset partition for each supported family, with
// uniform default weights. Throws unsupported_family for Custom specs.
TestPartition family_partition(const StateSpec& spec);

// Closed-form spectral gap: the graph/hypergraph formula
//   nu = (d-1) / (d*chi - sum_j d^{1-p_j})
// for plain specs, and the multigraph/multihypergraph formula
//   nu = [sum_i (2^{p_i}-1)(d-1) / ((2^{p_i}-1)(d-1) - (2^{p_i-1}-1))]^{-1}
// otherwise. For multi specs with a color class of two or more vertices the
// closed form deviates from the LP optimum (see tests).
Rational graph_family_nu(const GraphSpec& g, const ColoringResult& coloring);

}  // namespace qv
