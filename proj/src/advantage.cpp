#include "naqc/advantage.hpp"

#include <cmath>
#include <stdexcept>

namespace naqc {

NaqcResult naqc_value(const DensityMatrix& rho_ab, CoherenceMeasure measure)
{
    if (rho_ab.dim() != 4)
        throw std::invalid_argument("naqc_value: expected a two-qubit state");

    double sum = 0.0;
    for (const MeasurementSetting& setting : kAllSettings) {
        const ConditionalEnsembleEntry entry = conditional_state(rho_ab, setting);
        if (entry.is_null())
            continue;
        for (PauliAxis axis : kAllAxes) {
            if (axis == setting.axis)
                continue;
            sum += entry.probability * coherence(*entry.state_b, axis, measure);
        }
    }

    NaqcResult result;
    result.value = 0.5 * sum;
    result.measure = measure;
    result.margin = result.value - measure.bound();
    result.achieved = result.value > measure.bound();
    return result;
}

double naqc_bds_closed(const Eigen::Vector3d& c, CoherenceMeasure measure)
{
    double sum = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double x = std::abs(c[i]);
        if (!(x <= 1.0))
            throw std::invalid_argument("naqc_bds_closed: correlation component outside [-1, 1]");
        switch (measure.kind()) {
        case CoherenceKind::L1: sum += x; break;
        case CoherenceKind::RelativeEntropy: sum += 1.0 - binary_entropy(0.5 * (1.0 + x)); break;
        case CoherenceKind::SkewInformation: sum += 1.0 - std::sqrt(1.0 - x * x); break;
        }
    }
    return sum;
}

bool has_naqc(const DensityMatrix& rho_ab, CoherenceMeasure measure)
{
    return naqc_value(rho_ab, measure).achieved;
}

} // namespace naqc
