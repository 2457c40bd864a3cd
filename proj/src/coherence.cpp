#include "naqc/coherence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace naqc {

int axis_index(PauliAxis axis) noexcept
{
    return static_cast<int>(axis);
}

char axis_name(PauliAxis axis) noexcept
{
    return "xyz"[axis_index(axis)];
}

ComplexMatrix pauli_matrix(PauliAxis axis)
{
    return pauli::by_index(axis_index(axis) + 1);
}

ComplexMatrix eigenbasis(PauliAxis axis)
{
    const double s = 1.0 / std::sqrt(2.0);
    const Complex i{0.0, 1.0};
    ComplexMatrix v(2, 2);
    switch (axis) {
    case PauliAxis::Z: v << 1.0, 0.0, 0.0, 1.0; break;
    case PauliAxis::X: v << s, s, s, -s; break;
    case PauliAxis::Y: v << s, s, i * s, -i * s; break;
    }
    return v;
}

double binary_entropy(double x) noexcept
{
    auto term = [](double v) { return v > 0.0 ? -v * std::log2(v) : 0.0; };
    return term(x) + term(1.0 - x);
}

double von_neumann_entropy(const DensityMatrix& rho)
{
    const RealVector values = hermitian_eig(rho.matrix()).values;
    double s = 0.0;
    for (Eigen::Index k = 0; k < values.size(); ++k)
        if (values[k] > 0.0)
            s -= values[k] * std::log2(values[k]);
    return s;
}

double CoherenceMeasure::bound() const noexcept
{
    switch (kind_) {
    case CoherenceKind::L1: return std::sqrt(6.0);
    case CoherenceKind::RelativeEntropy: return 3.0 * binary_entropy(0.5 * (1.0 + 1.0 / std::sqrt(3.0)));
    case CoherenceKind::SkewInformation: return 2.0;
    }
    return 0.0;
}

std::string_view CoherenceMeasure::name() const noexcept
{
    switch (kind_) {
    case CoherenceKind::L1: return "l1";
    case CoherenceKind::RelativeEntropy: return "re";
    case CoherenceKind::SkewInformation: return "sk";
    }
    return "?";
}

CoherenceMeasure parse_measure(std::string_view label)
{
    if (label == "l1")
        return kL1;
    if (label == "re" || label == "relative_entropy")
        return kRelativeEntropy;
    if (label == "sk" || label == "skew_information")
        return kSkewInformation;
    throw std::invalid_argument("unknown coherence measure '" + std::string(label) + "'");
}

namespace {

double l1_coherence(const ComplexMatrix& in_basis)
{
    return std::abs(in_basis(0, 1)) + std::abs(in_basis(1, 0));
}

double relative_entropy_coherence(const DensityMatrix& rho, const ComplexMatrix& in_basis)
{
    const double p0 = in_basis(0, 0).real();
    return binary_entropy(p0) - von_neumann_entropy(rho);
}

double skew_coherence(const DensityMatrix& rho, PauliAxis axis)
{
    const ComplexMatrix root = state_sqrt(rho);
    const ComplexMatrix sigma = pauli_matrix(axis);
    const ComplexMatrix comm = root * sigma - sigma * root;
    const Complex value = -0.5 * (comm * comm).trace();
    if (std::abs(value.imag()) > 1e-10)
        throw std::logic_error("skew_coherence: commutator trace is not real");
    return value.real();
}

} // namespace

double coherence(const DensityMatrix& rho, PauliAxis axis, CoherenceMeasure measure)
{
    if (rho.dim() != 2)
        throw std::invalid_argument("coherence: expected a single-qubit state");
    const ComplexMatrix basis = eigenbasis(axis);
    const ComplexMatrix in_basis = basis.adjoint() * rho.matrix() * basis;
    double value = 0.0;
    switch (measure.kind()) {
    case CoherenceKind::L1: value = l1_coherence(in_basis); break;
    case CoherenceKind::RelativeEntropy: value = relative_entropy_coherence(rho, in_basis); break;
    case CoherenceKind::SkewInformation: value = skew_coherence(rho, axis); break;
    }
    return value > 0.0 ? value : 0.0;
}

double complementarity_sum(const DensityMatrix& rho, CoherenceMeasure measure)
{
    double sum = 0.0;
    for (PauliAxis axis : kAllAxes)
        sum += coherence(rho, axis, measure);
    return sum;
}

} // namespace naqc
