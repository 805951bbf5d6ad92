#include "qv/stabilizer.hpp"

#include <cmath>

namespace qv {

StabilizerGroup generators(const cmatrix& u, const HybridDims& dims) {
    if (u.rows() != dims.total() || u.cols() != dims.total())
        throw std::invalid_argument("generators: unitary size does not match dims");
    if (!is_unitary(u, 1e-10)) throw std::invalid_argument("generators: U is not unitary");
    StabilizerGroup g{dims.split(), u, {}};
    g.generators.reserve(g.dims.n());
    for (int k = 0; k < g.dims.n(); ++k) {
        cmatrix z = embed(pauli_z(g.dims.dim(k)), {k}, g.dims);
        g.generators.push_back(u * z * u.adjoint());
    }
    return g;
}

namespace {

ExponentTuple reduced(const ExponentTuple& h, const HybridDims& dims) {
    if (static_cast<int>(h.size()) != dims.n())
        throw std::invalid_argument("exponent tuple length does not match dims");
    ExponentTuple out(h.size());
    for (int k = 0; k < dims.n(); ++k) {
        const int d = dims.dim(k);
        out[k] = ((h[k] % d) + d) % d;
    }
    return out;
}

bool all_zero(const ExponentTuple& h) {
    for (int v : h)
        if (v != 0) return false;
    return true;
}

// Phase exponent of g_(h) on U|j>, as a residue mod L.
long long phase_num(const ExponentTuple& h, const ExponentTuple& j, const HybridDims& dims,
                    long long l) {
    long long acc = 0;
    for (int k = 0; k < dims.n(); ++k)
        acc = (acc + static_cast<long long>(h[k]) * j[k] % l * (l / dims.dim(k))) % l;
    return acc;
}

}  // namespace

cmatrix group_element(const StabilizerGroup& g, const ExponentTuple& h) {
    const ExponentTuple hr = reduced(h, g.dims);
    const long long total = g.dims.total();
    const long long l = g.dims.lcm();
    cvector phases(total);
    for (long long idx = 0; idx < total; ++idx) {
        const ExponentTuple j = index_to_tuple(idx, g.dims);
        const long long num = phase_num(hr, j, g.dims, l);
        phases(idx) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num) / l);
    }
    return g.unitary * phases.asDiagonal() * g.unitary.adjoint();
}

cmatrix eigen1_projector(const StabilizerGroup& g, const ExponentTuple& h) {
    if (all_zero(reduced(h, g.dims)))
        throw std::invalid_argument("eigen1_projector: h must be nonzero");
    const long long l = g.dims.lcm();
    const cmatrix m = group_element(g, h);
    cmatrix power = identity(g.dims.total());
    cmatrix sum = power;
    for (long long i = 1; i < l; ++i) {
        power = power * m;
        sum += power;
    }
    return sum / static_cast<double>(l);
}

cmatrix solution_projector(const StabilizerGroup& g, const ExponentTuple& h) {
    const ExponentTuple hr = reduced(h, g.dims);
    const long long total = g.dims.total();
    cvector diag = cvector::Zero(total);
    for (long long idx = 0; idx < total; ++idx)
        if (residue_condition(hr, index_to_tuple(idx, g.dims), g.dims)) diag(idx) = 1.0;
    return g.unitary * diag.asDiagonal() * g.unitary.adjoint();
}

double density_identity_residual(const StabilizerGroup& g, const StateVector& psi) {
    if (!g.dims.all_prime())
        throw std::invalid_argument("density_identity_residual: dims must be prime");
    const long long total = g.dims.total();
    cmatrix acc = identity(total);
    for (int k = 0; k < g.dims.n(); ++k) {
        cmatrix power = identity(total);
        cmatrix sum = power;
        for (int j = 1; j < g.dims.dim(k); ++j) {
            power = power * g.generators[k];
            sum += power;
        }
        acc = acc * sum;
    }
    acc /= static_cast<double>(total);
    return max_abs(acc - psi.amps * psi.amps.adjoint());
}

namespace {

cmatrix step_projector(const AdaptivePlan& plan, int step, const ExponentTuple& prior,
                       int outcome) {
    const int particle = plan.order.at(step);
    const cmatrix basis = plan.basis(step, prior);
    const int d = plan.dims.dim(particle);
    if (basis.rows() != d || basis.cols() != d)
        throw std::invalid_argument("adaptive plan: basis size mismatch");
    if (!is_unitary(basis, 1e-10))
        throw std::invalid_argument("adaptive plan: basis is not unitary");
    const cvector column = basis.col(outcome);
    return embed(column * column.adjoint(), {particle}, plan.dims);
}

void enumerate_paths(const AdaptivePlan& plan, int step, ExponentTuple& path,
                     const std::function<void(const ExponentTuple&)>& visit) {
    if (step == plan.steps()) {
        visit(path);
        return;
    }
    for (int j = 0; j < plan.alphabet(step); ++j) {
        path.push_back(j);
        enumerate_paths(plan, step + 1, path, visit);
        path.pop_back();
    }
}

}  // namespace

cmatrix path_projector(const AdaptivePlan& plan, const ExponentTuple& path) {
    if (static_cast<int>(path.size()) != plan.steps())
        throw std::invalid_argument("path_projector: path length mismatch");
    cmatrix out = identity(plan.dims.total());
    ExponentTuple prior;
    for (int step = 0; step < plan.steps(); ++step) {
        out = step_projector(plan, step, prior, path[step]) * out;
        prior.push_back(path[step]);
    }
    return out;
}

cmatrix measurement_operator(const AdaptivePlan& plan) {
    cmatrix m = cmatrix::Zero(plan.dims.total(), plan.dims.total());
    ExponentTuple path;
    enumerate_paths(plan, 0, path, [&](const ExponentTuple& j) {
        const cxd w = plan.weight ? plan.weight(j) : cxd(1.0, 0.0);
        if (w != cxd(0.0, 0.0)) m += w * path_projector(plan, j);
    });
    return m;
}

std::vector<ExponentTuple> support(const AdaptivePlan& plan, const StateVector& psi) {
    std::vector<ExponentTuple> out;
    ExponentTuple path;
    enumerate_paths(plan, 0, path, [&](const ExponentTuple& j) {
        if ((path_projector(plan, j) * psi.amps).norm() > 1e-9) out.push_back(j);
    });
    return out;
}

AdaptivePlan computational_plan(const HybridDims& dims) {
    AdaptivePlan plan;
    plan.dims = dims;
    plan.order.resize(dims.n());
    for (int k = 0; k < dims.n(); ++k) plan.order[k] = k;
    plan.basis = [dims](int step, const ExponentTuple&) {
        return identity(dims.dim(step));
    };
    return plan;
}

AdaptivePlan psi2_g10_plan(double theta) {
    AdaptivePlan plan;
    plan.dims = HybridDims({2, 2});
    plan.order = {1, 0};
    const double s = std::sin(theta), c = std::cos(theta);
    plan.basis = [s, c](int step, const ExponentTuple& prior) {
        if (step == 0) return hadamard();
        cmatrix b(2, 2);
        if (prior.at(0) == 0)
            b << s, c, c, -s;  // {|+phi_{+x}>, |-phi_{+x}>}
        else
            b << c, s, s, -c;  // {|+phi_{-x}>, |-phi_{-x}>}
        return b;
    };
    return plan;
}

}  // namespace qv
