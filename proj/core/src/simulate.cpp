#include "qv/simulate.hpp"

#include <cmath>

namespace qv {

void validate_source(const SourceModel& source) {
    const auto& rho = source.density;
    if (rho.rows() != rho.cols()) throw std::invalid_argument("source: density not square");
    if (std::abs(rho.trace().real() - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-10)
        throw std::invalid_argument("source: density trace must be 1");
    if (max_abs(rho - rho.adjoint()) > 1e-10)
        throw std::invalid_argument("source: density not Hermitian");
    const Spectrum s = hermitian_spectrum(rho);
    if (s.values.minCoeff() < -1e-10)
        throw std::invalid_argument("source: density not positive semidefinite");
}

SourceModel honest_source(const BuiltState& state) {
    SourceModel m;
    m.kind = SourceKind::Honest;
    m.density = state.psi.amps * state.psi.amps.adjoint();
    return m;
}

SourceModel worst_case_state(const VerificationOperator& v, const BuiltState& state, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("worst_case_state: eps in (0,1)");
    long long worst = -1;
    Rational best(-1);
    for (size_t idx = 1; idx < v.lambda.size(); ++idx)
        if (best < v.lambda[idx]) {
            best = v.lambda[idx];
            worst = static_cast<long long>(idx);
        }
    // U|j*> is a beta-eigenvector of Omega and orthogonal to |psi> = U|0>.
    const cvector beta_vec = state.unitary.col(worst);
    SourceModel m;
    m.kind = SourceKind::WorstCase;
    m.epsilon = eps;
    m.density = (1.0 - eps) * (state.psi.amps * state.psi.amps.adjoint()) +
                eps * (beta_vec * beta_vec.adjoint());
    validate_source(m);
    return m;
}

SourceModel depolarized_target(const BuiltState& state, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("depolarized_target: eps in (0,1)");
    const long long d = state.dims.total();
    const double eps_prime = eps * static_cast<double>(d) / static_cast<double>(d - 1);
    if (eps_prime > 1.0)
        throw std::invalid_argument("depolarized_target: infidelity unreachable by depolarizing");
    SourceModel m;
    m.kind = SourceKind::DepolarizedTarget;
    m.epsilon = eps;
    m.density = (1.0 - eps_prime) * (state.psi.amps * state.psi.amps.adjoint()) +
                eps_prime / static_cast<double>(d) * identity(d);
    validate_source(m);
    return m;
}

SourceModel custom_density(cmatrix density) {
    SourceModel m;
    m.kind = SourceKind::Custom;
    m.density = std::move(density);
    validate_source(m);
    return m;
}

namespace {

struct PureComponents {
    std::vector<double> weights;
    std::vector<cvector> vectors;
};

PureComponents decompose(const SourceModel& source) {
    const Spectrum s = hermitian_spectrum(source.density);
    PureComponents out;
    for (Eigen::Index i = 0; i < s.values.size(); ++i) {
        if (s.values(i) > 1e-12) {
            out.weights.push_back(s.values(i));
            out.vectors.push_back(s.vectors.col(i));
        }
    }
    return out;
}

double binomial_sigma(double p, long long n) {
    if (n <= 0) return 0.0;
    return std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(n));
}

}  // namespace

ProtocolReport run_protocol(const BuiltState& state, const TestPartition& p,
                            const SourceModel& source, long long copies, long long trials,
                            uint64_t seed) {
    if (copies < 1) throw std::invalid_argument("run_protocol: copies must be >= 1");
    if (trials < 1) throw std::invalid_argument("run_protocol: trials must be >= 1");
    validate_partition(p);
    if (!(state.dims.split() == p.dims))
        throw std::invalid_argument("run_protocol: partition dims do not match state");
    validate_source(source);

    const PureComponents components = decompose(source);
    // Born distribution over the shared eigenbasis {U|j>} per pure component
    const long long total = p.dims.total();
    std::vector<std::vector<double>> born(components.vectors.size());
    for (size_t c = 0; c < components.vectors.size(); ++c) {
        const cvector overlap = state.unitary.adjoint() * components.vectors[c];
        born[c].resize(total);
        for (long long j = 0; j < total; ++j) born[c][j] = std::norm(overlap(j));
    }
    std::vector<double> mu(p.tau());
    for (int i = 0; i < p.tau(); ++i) mu[i] = p.mu[i].to_double();

    ProtocolReport report;
    report.trials = trials;
    report.copies = copies;
    report.seed = seed;
    report.rounds = trials * copies;
    report.passes_per_trial.assign(copies + 1, 0);
    report.trial_passes.reserve(trials);

    for (long long t = 0; t < trials; ++t) {
        Xoshiro256 rng = Xoshiro256::stream(seed, static_cast<uint64_t>(t));
        long long passed = 0;
        for (long long r = 0; r < copies; ++r) {
            const int c = components.weights.size() == 1 ? 0 : rng.discrete(components.weights);
            const long long j = rng.discrete(born[c]);
            const int subset = p.tau() == 1 ? 0 : rng.discrete(mu);
            const auto& tuples = p.subsets[subset].tuples;
            const size_t member =
                tuples.size() == 1
                    ? 0
                    : static_cast<size_t>(rng.next() % static_cast<uint64_t>(tuples.size()));
            if (residue_condition(tuples[member], index_to_tuple(j, p.dims), p.dims)) ++passed;
        }
        report.round_passes += passed;
        report.passes_per_trial[passed] += 1;
        report.trial_passes.push_back(passed);
        if (passed == copies) ++report.accepted_trials;
    }

    report.pass_frequency =
        static_cast<double>(report.round_passes) / static_cast<double>(report.rounds);
    report.pass_frequency_sigma = binomial_sigma(report.pass_frequency, report.rounds);
    report.acceptance =
        static_cast<double>(report.accepted_trials) / static_cast<double>(report.trials);
    report.acceptance_sigma = binomial_sigma(report.acceptance, report.trials);
    return report;
}

namespace {

// Project particle onto a basis column; returns the outcome probability and
// writes the collapsed (unnormalized) vector.
double project_onto(const cvector& v, const HybridDims& dims, int particle,
                    const cvector& basis_column, cvector& out) {
    const long long total = dims.total();
    long long stride = 1;
    for (int k = particle + 1; k < dims.n(); ++k) stride *= dims.dim(k);
    const int d = dims.dim(particle);
    out = cvector::Zero(total);
    double prob = 0.0;
    for (long long block = 0; block < total / (stride * d); ++block) {
        for (long long inner = 0; inner < stride; ++inner) {
            const long long base = block * stride * d + inner;
            cxd amp(0.0, 0.0);
            for (int a = 0; a < d; ++a) amp += std::conj(basis_column(a)) * v(base + a * stride);
            prob += std::norm(amp);
            for (int a = 0; a < d; ++a) out(base + a * stride) = amp * basis_column(a);
        }
    }
    return prob;
}

}  // namespace

ExponentTuple sequential_measure(const AdaptivePlan& plan, const cvector& pure_state,
                                 Xoshiro256& rng) {
    if (pure_state.size() != plan.dims.total())
        throw std::invalid_argument("sequential_measure: state size mismatch");
    cvector v = pure_state;
    ExponentTuple outcomes;
    for (int step = 0; step < plan.steps(); ++step) {
        const int particle = plan.order[step];
        const cmatrix basis = plan.basis(step, outcomes);
        const int d = plan.dims.dim(particle);
        std::vector<double> probs(d);
        std::vector<cvector> collapsed(d);
        for (int j = 0; j < d; ++j)
            probs[j] = project_onto(v, plan.dims, particle, basis.col(j), collapsed[j]);
        const int j = rng.discrete(probs);
        v = collapsed[j] / std::sqrt(probs[j]);
        outcomes.push_back(j);
    }
    return outcomes;
}

ExponentTuple sequential_measure(const AdaptivePlan& plan, const SourceModel& source,
                                 Xoshiro256& rng) {
    const PureComponents components = decompose(source);
    const int c = components.weights.size() == 1 ? 0 : rng.discrete(components.weights);
    return sequential_measure(plan, components.vectors[c], rng);
}

std::vector<std::pair<ExponentTuple, double>> path_distribution(const AdaptivePlan& plan,
                                                                const cvector& pure_state) {
    std::vector<std::pair<ExponentTuple, double>> out;
    std::function<void(int, ExponentTuple&)> walk = [&](int step, ExponentTuple& path) {
        if (step == plan.steps()) {
            out.emplace_back(path, (path_projector(plan, path) * pure_state).squaredNorm());
            return;
        }
        for (int j = 0; j < plan.alphabet(step); ++j) {
            path.push_back(j);
            walk(step + 1, path);
            path.pop_back();
        }
    };
    ExponentTuple path;
    walk(0, path);
    return out;
}

}  // namespace qv
