#pragma once

// Dense complex-matrix kernel sized for single- and two-qubit work.
// Everything here is a pure function of its arguments.

#include <complex>
#include <Eigen/Dense>

namespace naqc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Largest dimension any matrix in this library may take.
inline constexpr Eigen::Index kMaxDim = 4;

enum class Subsystem { A, B };

struct EigenDecomposition {
    RealVector values;     ///< ascending
    ComplexMatrix vectors; ///< orthonormal columns, column k pairs with values[k]
};

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
/// index 0 is the identity, 1..3 are x, y, z.
ComplexMatrix by_index(int index);
} // namespace pauli

/// Max-abs deviation from Hermiticity, max_ij |M_ij - conj(M_ji)|.
double hermiticity_error(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = 1e-10);

/// Largest entrywise difference, max_ij |a_ij - b_ij|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tensor product. Throws std::invalid_argument when either result dimension exceeds kMaxDim.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced 2x2 state of a 4x4 operator, keeping the named qubit.
ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep);

/// Spectrum of a Hermitian matrix. Rejects inputs whose Hermiticity error exceeds 1e-10.
EigenDecomposition hermitian_eig(const ComplexMatrix& m);

/// Principal square root of a PSD matrix. Eigenvalues in [-1e-10, 0) are clamped to zero;
/// anything more negative throws std::domain_error.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// V diag(f(lambda)) V^dagger for an arbitrary real spectral function.
template <class F>
ComplexMatrix spectral_apply(const EigenDecomposition& eig, F&& f)
{
    RealVector mapped(eig.values.size());
    for (Eigen::Index k = 0; k < eig.values.size(); ++k)
        mapped[k] = f(eig.values[k]);
    return eig.vectors * mapped.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

/// Square roots of a PSD spectrum. Entries at or below 8 eps times the largest are
/// round-off of exact zeros and map to 0.
RealVector sqrt_spectrum(const RealVector& values);

} // namespace naqc
