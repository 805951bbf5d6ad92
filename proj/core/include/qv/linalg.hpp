// Dense complex vectors and matrices on top of Eigen: Kronecker products,
// Hermitian eigensolving, and the structural predicates used by the
// verification machinery. Matrices are immutable by convention after
// construction; nothing here mutates shared state.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <ostream>
#include <string>

#include "qv/qarith.hpp"

namespace qv {

using cxd = std::complex<double>;
using cmatrix = Eigen::MatrixXcd;
using cvector = Eigen::VectorXcd;

// Multi-qudit pure state; particle 0 is the most significant digit of the
// mixed-radix global index (big-endian).
struct StateVector {
    HybridDims dims;
    cvector amps;

    StateVector() = default;
    StateVector(HybridDims d, cvector a);
};

cmatrix identity(long long d);

// Standard Kronecker product; throws capacity_error past the dimension cap.
cmatrix kron(const cmatrix& a, const cmatrix& b);

// max |entry| of a matrix.
double max_abs(const cmatrix& a);

struct Spectrum {
    Eigen::VectorXd values;  // descending
    cmatrix vectors;         // columns matched to values
};

// Hermitian-only eigensolve; input must satisfy ||A - A^dag||_max <= 1e-9.
Spectrum hermitian_spectrum(const cmatrix& a);

bool is_unitary(const cmatrix& a, double tol);
bool is_projector(const cmatrix& a, double tol);

// CSV export, one row per matrix row, entries formatted "re+imj".
std::string format_complex(cxd z);
void write_matrix_csv(std::ostream& os, const cmatrix& m);
void write_vector_csv(std::ostream& os, const cvector& v);

}  // namespace qv
