#include "naqc/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace naqc {

DensityMatrix::DensityMatrix(ComplexMatrix m) : mat_(std::move(m))
{
    if (mat_.rows() != mat_.cols() || (mat_.rows() != 2 && mat_.rows() != 4))
        throw std::invalid_argument("DensityMatrix: dimension must be 2x2 or 4x4");
    const double herr = hermiticity_error(mat_);
    if (!(herr <= kHermitianTol)) {
        std::ostringstream os;
        os << "DensityMatrix: not Hermitian (error " << herr << ")";
        throw std::invalid_argument(os.str());
    }
    mat_ = 0.5 * (mat_ + mat_.adjoint()).eval();
    const double tr = mat_.trace().real();
    if (!(std::abs(tr - 1.0) <= kTraceTol)) {
        std::ostringstream os;
        os << "DensityMatrix: trace " << tr << " != 1";
        throw std::invalid_argument(os.str());
    }
    const double min_eig = hermitian_eig(mat_).values[0];
    if (min_eig < -kEigenTol) {
        std::ostringstream os;
        os << "DensityMatrix: negative eigenvalue " << min_eig;
        throw std::invalid_argument(os.str());
    }
}

double DensityMatrix::purity() const
{
    return (mat_ * mat_).trace().real();
}

namespace {

ComplexVector bell_vector(BellState kind)
{
    const double s = 1.0 / std::sqrt(2.0);
    ComplexVector v = ComplexVector::Zero(4);
    switch (kind) {
    case BellState::PhiPlus: v[0] = s; v[3] = s; break;
    case BellState::PhiMinus: v[0] = s; v[3] = -s; break;
    case BellState::PsiPlus: v[1] = s; v[2] = s; break;
    case BellState::PsiMinus: v[1] = s; v[2] = -s; break;
    }
    return v;
}

ComplexMatrix projector_onto(const ComplexVector& v)
{
    return v * v.adjoint();
}

void check_unit_interval(double value, const char* what)
{
    if (!(value >= 0.0 && value <= 1.0)) {
        std::ostringstream os;
        os << what << " = " << value << " is outside [0, 1]";
        throw std::invalid_argument(os.str());
    }
}

} // namespace

DensityMatrix bell_state(BellState kind)
{
    return DensityMatrix(projector_onto(bell_vector(kind)));
}

DensityMatrix bds_from_weights(const BDSWeights& w)
{
    check_unit_interval(w.a, "BDS weight a");
    check_unit_interval(w.b, "BDS weight b");
    check_unit_interval(w.c, "BDS weight c");
    check_unit_interval(w.d, "BDS weight d");
    const double total = w.a + w.b + w.c + w.d;
    if (std::abs(total - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "BDS weights sum to " << total << ", expected 1";
        throw std::invalid_argument(os.str());
    }
    ComplexMatrix m = w.a * projector_onto(bell_vector(BellState::PhiPlus))
                    + w.b * projector_onto(bell_vector(BellState::PhiMinus))
                    + w.c * projector_onto(bell_vector(BellState::PsiPlus))
                    + w.d * projector_onto(bell_vector(BellState::PsiMinus));
    return DensityMatrix(std::move(m));
}

BDSWeights weights_from_pq(const PreparationParams& params)
{
    check_unit_interval(params.p, "p");
    check_unit_interval(params.q, "q");
    const double p = params.p, q = params.q;
    return {p * q, (1.0 - p) * q, p * (1.0 - q), (1.0 - p) * (1.0 - q)};
}

DensityMatrix bds_from_pq(const PreparationParams& params)
{
    return bds_from_weights(weights_from_pq(params));
}

Eigen::Vector3d bds_correlations(const PreparationParams& params)
{
    check_unit_interval(params.p, "p");
    check_unit_interval(params.q, "q");
    const double p = params.p, q = params.q;
    return {2.0 * p - 1.0, 2.0 * p + 2.0 * q - 4.0 * p * q - 1.0, 2.0 * q - 1.0};
}

DensityMatrix qubit_from_bloch(const Eigen::Vector3d& r)
{
    if (r.norm() > 1.0 + 1e-9)
        throw std::invalid_argument("qubit_from_bloch: Bloch vector longer than 1");
    ComplexMatrix m = 0.5 * (pauli::identity() + r[0] * pauli::x() + r[1] * pauli::y() + r[2] * pauli::z());
    return DensityMatrix(std::move(m));
}

DensityMatrix rho_max()
{
    return qubit_from_bloch(Eigen::Vector3d::Constant(1.0 / std::sqrt(3.0)));
}

Eigen::Vector3d bloch_vector(const DensityMatrix& rho)
{
    if (rho.dim() != 2)
        throw std::invalid_argument("bloch_vector: expected a single-qubit state");
    const ComplexMatrix& m = rho.matrix();
    return {(m * pauli::x()).trace().real(), (m * pauli::y()).trace().real(), (m * pauli::z()).trace().real()};
}

BlochDecomposition bloch_decompose(const DensityMatrix& rho)
{
    if (rho.dim() != 4)
        throw std::invalid_argument("bloch_decompose: expected a two-qubit state");
    const ComplexMatrix& m = rho.matrix();
    auto expect = [&](int i, int j) {
        const Complex v = (m * kron(pauli::by_index(i), pauli::by_index(j))).trace();
        if (std::abs(v.imag()) > 1e-10)
            throw std::logic_error("bloch_decompose: Pauli expectation has an imaginary part");
        return v.real();
    };
    BlochDecomposition out;
    for (int i = 0; i < 3; ++i) {
        out.r_a[i] = expect(i + 1, 0);
        out.r_b[i] = expect(0, i + 1);
        for (int j = 0; j < 3; ++j)
            out.t(i, j) = expect(i + 1, j + 1);
    }
    return out;
}

ComplexMatrix bloch_compose(const BlochDecomposition& bloch)
{
    ComplexMatrix m = kron(pauli::identity(), pauli::identity());
    for (int i = 0; i < 3; ++i) {
        m += bloch.r_a[i] * kron(pauli::by_index(i + 1), pauli::identity());
        m += bloch.r_b[i] * kron(pauli::identity(), pauli::by_index(i + 1));
        for (int j = 0; j < 3; ++j)
            m += bloch.t(i, j) * kron(pauli::by_index(i + 1), pauli::by_index(j + 1));
    }
    return m / 4.0;
}

ComplexMatrix state_sqrt(const DensityMatrix& rho)
{
    const EigenDecomposition eig = hermitian_eig(rho.matrix());
    return eig.vectors * sqrt_spectrum(eig.values).cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& goal)
{
    if (rho.dim() != goal.dim())
        throw std::invalid_argument("fidelity: dimension mismatch");
    const ComplexMatrix root = state_sqrt(rho);
    ComplexMatrix inner = root * goal.matrix() * root;
    inner = 0.5 * (inner + inner.adjoint()).eval();
    // inner is PSD up to round-off; clamp rather than reject.
    const double f = sqrt_spectrum(hermitian_eig(inner).values).sum();
    return std::clamp(f, 0.0, 1.0);
}

DensityMatrix depolarize(const DensityMatrix& rho, double visibility)
{
    check_unit_interval(visibility, "visibility");
    const auto n = rho.dim();
    ComplexMatrix m = visibility * rho.matrix()
                    + ((1.0 - visibility) / static_cast<double>(n)) * ComplexMatrix::Identity(n, n);
    return DensityMatrix(std::move(m));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b)
{
    return DensityMatrix(kron(a.matrix(), b.matrix()));
}

} // namespace naqc
