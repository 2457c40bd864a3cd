#pragma once

#include "naqc/advantage.hpp"

namespace naqc {

/// Maximal CHSH value 2 sqrt(u1 + u2), u1 >= u2 the top eigenvalues of T^T T.
double chsh_max(const DensityMatrix& rho_ab);

/// Wootters concurrence max{0, l1 - l2 - l3 - l4}.
///
/// The l_k are square roots of the spectrum of rho (sy x sy) rho* (sy x sy). That product is not
/// Hermitian, so the spectrum is taken from sqrt(rho) (sy x sy) rho* (sy x sy) sqrt(rho), which is.
double concurrence(const DensityMatrix& rho_ab);

/// Spin-flipped state (sy x sy) rho* (sy x sy), conjugation in the computational basis.
ComplexMatrix spin_flip(const DensityMatrix& rho_ab);

struct HierarchyReport {
    NaqcResult naqc_l1;
    NaqcResult naqc_re;
    NaqcResult naqc_sk;
    double chsh_max = 0.0;
    bool chsh_violated = false; ///< chsh_max > 2
    double concurrence = 0.0;

    bool any_naqc() const noexcept { return naqc_l1.achieved || naqc_re.achieved || naqc_sk.achieved; }
};

HierarchyReport hierarchy_report(const DensityMatrix& rho_ab);

} // namespace naqc
