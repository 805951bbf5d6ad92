// Monte Carlo simulation of the verification protocol: honest and
// adversarial sources, test sampling by the subset weights, and both the
// global-projector and sequential-adaptive measurement samplers.

#pragma once

#include "qv/rng.hpp"
#include "qv/strategy.hpp"

namespace qv {

enum class SourceKind { Honest, WorstCase, DepolarizedTarget, Custom };

struct SourceModel {
    SourceKind kind = SourceKind::Honest;
    double epsilon = 0.0;  // target infidelity for the adversarial kinds
    cmatrix density;       // Hermitian, PSD, trace 1
};

// Trace-1 / PSD / Hermiticity checks; throws on violation.
void validate_source(const SourceModel& source);

SourceModel honest_source(const BuiltState& state);

// sigma* = (1-eps)|psi><psi| + eps|b><b| with |b> a second-eigenvalue
// eigenvector of Omega; saturates tr(Omega sigma) = 1 - nu*eps.
SourceModel worst_case_state(const VerificationOperator& v, const BuiltState& state, double eps);

// (1-eps')|psi><psi| + eps' I/D with eps' chosen so fidelity is 1 - eps.
SourceModel depolarized_target(const BuiltState& state, double eps);

SourceModel custom_density(cmatrix density);

struct ProtocolReport {
    long long trials = 0;
    long long copies = 0;
    uint64_t seed = 0;
    long long rounds = 0;          // trials * copies
    long long round_passes = 0;    // rounds that passed their test
    long long accepted_trials = 0; // trials with every round passing
    std::vector<long long> passes_per_trial;  // histogram over 0..copies
    std::vector<long long> trial_passes;      // per-trial series, trial order
    double pass_frequency = 0.0;
    double pass_frequency_sigma = 0.0;  // binomial standard error
    double acceptance = 0.0;
    double acceptance_sigma = 0.0;
};

// One round: draw a state from the source, draw subset i by weight, draw a
// member h of C_i uniformly, measure in the shared eigenbasis and apply the
// binary test {P_h, I - P_h}. Per-round pass probability is tr(Omega sigma).
ProtocolReport run_protocol(const BuiltState& state, const TestPartition& p,
                            const SourceModel& source, long long copies, long long trials,
                            uint64_t seed);

// Particle-by-particle Born sampling along an adaptive plan.
ExponentTuple sequential_measure(const AdaptivePlan& plan, const cvector& pure_state,
                                 Xoshiro256& rng);
ExponentTuple sequential_measure(const AdaptivePlan& plan, const SourceModel& source,
                                 Xoshiro256& rng);

// Exact path distribution ||Pi(J)|psi>||^2 indexed by step-ordered paths.
std::vector<std::pair<ExponentTuple, double>> path_distribution(const AdaptivePlan& plan,
                                                                const cvector& pure_state);

}  // namespace qv
