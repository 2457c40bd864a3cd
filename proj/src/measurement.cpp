#include "naqc/measurement.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace naqc {

ComplexMatrix projector(const MeasurementSetting& setting)
{
    if (setting.outcome != 0 && setting.outcome != 1)
        throw std::invalid_argument("projector: outcome must be 0 or 1");
    const double sign = setting.outcome == 0 ? 1.0 : -1.0;
    return 0.5 * (pauli::identity() + sign * pauli_matrix(setting.axis));
}

ConditionalEnsembleEntry conditional_state(const DensityMatrix& rho_ab, const MeasurementSetting& setting)
{
    if (rho_ab.dim() != 4)
        throw std::invalid_argument("conditional_state: expected a two-qubit state");
    const ComplexMatrix local = kron(projector(setting), pauli::identity());
    const double probability = (local * rho_ab.matrix()).trace().real();

    ConditionalEnsembleEntry entry;
    entry.setting = setting;
    if (probability < ConditionalEnsembleEntry::kNullBranchProbability)
        return entry;
    entry.probability = probability;
    const ComplexMatrix post = local * rho_ab.matrix() * local / probability;
    entry.state_b.emplace(partial_trace(post, Subsystem::B));
    return entry;
}

ComplexMatrix waveplate_unitary(const WavePlate& plate)
{
    const double t = plate.theta_deg * std::numbers::pi / 180.0;
    ComplexMatrix u(2, 2);
    if (plate.kind == PlateKind::HWP) {
        u << std::cos(2 * t), std::sin(2 * t), std::sin(2 * t), -std::cos(2 * t);
        return u;
    }
    ComplexMatrix rot(2, 2);
    rot << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    ComplexMatrix retarder(2, 2);
    retarder << 1.0, 0.0, 0.0, Complex{0.0, 1.0};
    return rot * retarder * rot.adjoint();
}

ComplexMatrix plate_measurement_operator(const WavePlate& plate)
{
    const ComplexMatrix u = waveplate_unitary(plate);
    ComplexMatrix h = ComplexMatrix::Zero(2, 2);
    h(0, 0) = 1.0;
    return u.adjoint() * h * u;
}

double plate_row_error(const PlateSettingRow& row)
{
    return max_abs_diff(plate_measurement_operator(row.p1), projector(row.setting));
}

} // namespace naqc
