#include "naqc/linalg.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace naqc {

namespace pauli {

ComplexMatrix identity()
{
    return ComplexMatrix::Identity(2, 2);
}

ComplexMatrix x()
{
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

ComplexMatrix y()
{
    const Complex i{0.0, 1.0};
    ComplexMatrix m(2, 2);
    m << 0.0, -i, i, 0.0;
    return m;
}

ComplexMatrix z()
{
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

ComplexMatrix by_index(int index)
{
    switch (index) {
    case 0: return identity();
    case 1: return x();
    case 2: return y();
    case 3: return z();
    default: throw std::out_of_range("pauli::by_index: index must be 0..3");
    }
}

} // namespace pauli

double hermiticity_error(const ComplexMatrix& m)
{
    if (m.rows() != m.cols())
        return INFINITY;
    return m.size() == 0 ? 0.0 : (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol)
{
    return hermiticity_error(m) <= tol;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b)
{
    const Eigen::Index rows = a.rows() * b.rows();
    const Eigen::Index cols = a.cols() * b.cols();
    if (rows > kMaxDim || cols > kMaxDim) {
        std::ostringstream os;
        os << "kron: result " << rows << "x" << cols << " exceeds " << kMaxDim << "x" << kMaxDim;
        throw std::invalid_argument(os.str());
    }
    ComplexMatrix out(rows, cols);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep)
{
    if (rho.rows() != 4 || rho.cols() != 4)
        throw std::invalid_argument("partial_trace: expected a 4x4 operator");
    // basis index = 2*a + b
    ComplexMatrix out = ComplexMatrix::Zero(2, 2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            for (int k = 0; k < 2; ++k)
                out(r, c) += keep == Subsystem::B ? rho(2 * k + r, 2 * k + c)
                                                  : rho(2 * r + k, 2 * c + k);
    return out;
}

EigenDecomposition hermitian_eig(const ComplexMatrix& m)
{
    const double err = hermiticity_error(m);
    if (!(err <= 1e-10)) {
        std::ostringstream os;
        os << "hermitian_eig: matrix is not Hermitian (max |M_ij - conj(M_ji)| = " << err << ")";
        throw std::invalid_argument(os.str());
    }
    // Symmetrize so the solver sees an exactly Hermitian input.
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eig: eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m)
{
    const EigenDecomposition eig = hermitian_eig(m);
    if (eig.values.size() > 0 && eig.values[0] < -1e-10) {
        std::ostringstream os;
        os << "psd_sqrt: matrix is not positive semidefinite (min eigenvalue " << eig.values[0] << ")";
        throw std::domain_error(os.str());
    }
    return eig.vectors * sqrt_spectrum(eig.values).cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

RealVector sqrt_spectrum(const RealVector& values)
{
    const double floor = 8.0 * std::numeric_limits<double>::epsilon() * values.cwiseAbs().maxCoeff();
    RealVector out(values.size());
    for (Eigen::Index k = 0; k < values.size(); ++k)
        out[k] = values[k] > floor ? std::sqrt(values[k]) : 0.0;
    return out;
}

} // namespace naqc
