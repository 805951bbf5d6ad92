#include "qv/linalg.hpp"

#include <cmath>
#include <sstream>

namespace qv {

StateVector::StateVector(HybridDims d, cvector a) : dims(std::move(d)), amps(std::move(a)) {
    if (amps.size() != dims.total())
        throw std::invalid_argument("StateVector: amplitude count does not match dims");
    if (std::abs(amps.squaredNorm() - 1.0) > 1e-12)
        throw std::invalid_argument("StateVector: state is not normalized");
}

cmatrix identity(long long d) { return cmatrix::Identity(d, d); }

cmatrix kron(const cmatrix& a, const cmatrix& b) {
    const long long rows = static_cast<long long>(a.rows()) * b.rows();
    const long long cols = static_cast<long long>(a.cols()) * b.cols();
    if (rows > dimension_cap() || cols > dimension_cap())
        throw capacity_error("kron: result exceeds dimension cap");
    cmatrix out(rows, cols);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

double max_abs(const cmatrix& a) {
    if (a.size() == 0) return 0.0;
    return a.cwiseAbs().maxCoeff();
}

Spectrum hermitian_spectrum(const cmatrix& a) {
    if (a.rows() != a.cols()) throw std::domain_error("hermitian_spectrum: matrix not square");
    if (max_abs(a - a.adjoint()) > 1e-9)
        throw std::domain_error("hermitian_spectrum: matrix not Hermitian");
    Eigen::SelfAdjointEigenSolver<cmatrix> solver(a);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_spectrum: eigensolver failed");
    Spectrum s;
    s.values = solver.eigenvalues().reverse();
    s.vectors = solver.eigenvectors().rowwise().reverse();
    return s;
}

bool is_unitary(const cmatrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    return max_abs(a.adjoint() * a - identity(a.rows())) <= tol;
}

bool is_projector(const cmatrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    if (max_abs(a - a.adjoint()) > tol) return false;
    return max_abs(a * a - a) <= tol;
}

std::string format_complex(cxd z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real();
    if (z.imag() >= 0 || std::isnan(z.imag())) os << "+";
    os << z.imag() << "j";
    return os.str();
}

void write_matrix_csv(std::ostream& os, const cmatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) os << ",";
            os << format_complex(m(i, j));
        }
        os << "\n";
    }
}

void write_vector_csv(std::ostream& os, const cvector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) os << format_complex(v(i)) << "\n";
}

}  // namespace qv
