#pragma once

#include "naqc/measurement.hpp"

namespace naqc {

struct NaqcResult {
    double value = 0.0;
    CoherenceMeasure measure = kL1;
    bool achieved = false; ///< value > measure.bound(), strictly
    double margin = 0.0;   ///< value - measure.bound()
};

/// Average coherence of Bob's conditional states over Alice's six Pauli settings.
///
/// For every coherence axis i, every Alice axis j != i and outcome a the term
/// p(j, a) * C_i(rho_B|j,a) is accumulated; the sum carries a prefactor 1/2.
/// Null branches contribute nothing.
NaqcResult naqc_value(const DensityMatrix& rho_ab, CoherenceMeasure measure);

/// Closed form of naqc_value for a Bell-diagonal state with correlation diagonal c:
///   l1: sum |c_i|;  re: sum 1 - h2((1 + |c_i|)/2);  sk: sum 1 - sqrt(1 - c_i^2).
/// Throws std::invalid_argument when some |c_i| > 1.
double naqc_bds_closed(const Eigen::Vector3d& c, CoherenceMeasure measure);

bool has_naqc(const DensityMatrix& rho_ab, CoherenceMeasure measure);

} // namespace naqc
