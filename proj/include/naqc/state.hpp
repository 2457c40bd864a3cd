#pragma once

#include <array>

#include "naqc/linalg.hpp"

namespace naqc {

/// Hermitian, unit-trace, positive semidefinite 2x2 or 4x4 matrix.
/// Construction validates; instances are immutable afterwards.
class DensityMatrix {
public:
    static constexpr double kHermitianTol = 1e-10;
    static constexpr double kTraceTol = 1e-9;
    static constexpr double kEigenTol = 1e-9;

    /// Throws std::invalid_argument if `m` is not a valid qubit or two-qubit state.
    explicit DensityMatrix(ComplexMatrix m);

    const ComplexMatrix& matrix() const noexcept { return mat_; }
    Eigen::Index dim() const noexcept { return mat_.rows(); }
    Complex operator()(Eigen::Index r, Eigen::Index c) const { return mat_(r, c); }

    double purity() const;

private:
    ComplexMatrix mat_;
};

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// Weights of |Phi+>, |Phi->, |Psi+>, |Psi-> in a Bell-diagonal mixture.
struct BDSWeights {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
};

/// Mixing parameters of the optical preparation: p splits Phi/Psi sign, q weights Phi vs Psi.
struct PreparationParams {
    double p = 0.0;
    double q = 0.0;
};

struct BlochDecomposition {
    Eigen::Vector3d r_a;
    Eigen::Vector3d r_b;
    Eigen::Matrix3d t; ///< t(i, j) = Tr(rho sigma_i (x) sigma_j)
};

DensityMatrix bell_state(BellState kind);

DensityMatrix bds_from_weights(const BDSWeights& w);

/// Bell weights pq, (1-p)q, p(1-q), (1-p)(1-q).
BDSWeights weights_from_pq(const PreparationParams& params);
DensityMatrix bds_from_pq(const PreparationParams& params);

/// Diagonal of the correlation tensor of bds_from_pq: (2p-1, 2p+2q-4pq-1, 2q-1).
Eigen::Vector3d bds_correlations(const PreparationParams& params);

/// Pure qubit state with Bloch vector (1,1,1)/sqrt(3); saturates the coherence complementarity bounds.
DensityMatrix rho_max();

/// (I + r . sigma) / 2. Throws if |r| > 1 + 1e-9.
DensityMatrix qubit_from_bloch(const Eigen::Vector3d& r);
Eigen::Vector3d bloch_vector(const DensityMatrix& rho);

BlochDecomposition bloch_decompose(const DensityMatrix& rho);

/// Inverse of bloch_decompose. Returns the raw operator; no physicality check.
ComplexMatrix bloch_compose(const BlochDecomposition& bloch);

/// Square root of a state. Eigenvalues the validator tolerates (>= -1e-9) are clamped to zero.
ComplexMatrix state_sqrt(const DensityMatrix& rho);

/// Uhlmann fidelity Tr sqrt(sqrt(rho) goal sqrt(rho)), clamped to [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& goal);

/// v rho + (1 - v) I / dim.
DensityMatrix depolarize(const DensityMatrix& rho, double visibility);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

} // namespace naqc
