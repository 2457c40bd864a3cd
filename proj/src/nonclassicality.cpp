#include "naqc/nonclassicality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace naqc {

double chsh_max(const DensityMatrix& rho_ab)
{
    const BlochDecomposition bloch = bloch_decompose(rho_ab);
    const Eigen::Matrix3d gram = bloch.t.transpose() * bloch.t;
    const RealVector u = hermitian_eig(gram.cast<Complex>()).values;
    const double top_two = std::max(0.0, u[1] + u[2]);
    return 2.0 * std::sqrt(top_two);
}

ComplexMatrix spin_flip(const DensityMatrix& rho_ab)
{
    if (rho_ab.dim() != 4)
        throw std::invalid_argument("spin_flip: expected a two-qubit state");
    const ComplexMatrix yy = kron(pauli::y(), pauli::y());
    return yy * rho_ab.matrix().conjugate() * yy;
}

double concurrence(const DensityMatrix& rho_ab)
{
    const ComplexMatrix root = state_sqrt(rho_ab);
    ComplexMatrix r = root * spin_flip(rho_ab) * root;
    r = 0.5 * (r + r.adjoint()).eval();
    // PSD by construction, so negative eigenvalues are round-off.
    const RealVector lambda = sqrt_spectrum(hermitian_eig(r).values); // ascending
    const double c = lambda[3] - lambda[2] - lambda[1] - lambda[0];
    return std::clamp(c, 0.0, 1.0);
}

HierarchyReport hierarchy_report(const DensityMatrix& rho_ab)
{
    HierarchyReport report;
    report.naqc_l1 = naqc_value(rho_ab, kL1);
    report.naqc_re = naqc_value(rho_ab, kRelativeEntropy);
    report.naqc_sk = naqc_value(rho_ab, kSkewInformation);
    report.chsh_max = chsh_max(rho_ab);
    report.chsh_violated = report.chsh_max > 2.0;
    report.concurrence = concurrence(rho_ab);
    return report;
}

} // namespace naqc
