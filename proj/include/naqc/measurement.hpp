#pragma once

#include <array>
#include <optional>

#include "naqc/coherence.hpp"

namespace naqc {

/// Alice's local projective measurement: Pauli axis plus outcome a in {0, 1}.
struct MeasurementSetting {
    PauliAxis axis = PauliAxis::Z;
    int outcome = 0;

    friend constexpr bool operator==(const MeasurementSetting&, const MeasurementSetting&) = default;
};

inline constexpr std::array<MeasurementSetting, 6> kAllSettings{{
    {PauliAxis::X, 0}, {PauliAxis::X, 1},
    {PauliAxis::Y, 0}, {PauliAxis::Y, 1},
    {PauliAxis::Z, 0}, {PauliAxis::Z, 1},
}};

/// One branch of Bob's conditional ensemble. `state_b` is empty for a null branch
/// (probability below kNullBranchProbability), which must be skipped in averages.
struct ConditionalEnsembleEntry {
    static constexpr double kNullBranchProbability = 1e-12;

    MeasurementSetting setting;
    double probability = 0.0;
    std::optional<DensityMatrix> state_b;

    bool is_null() const noexcept { return !state_b.has_value(); }
};

/// [I + (-1)^a sigma_axis] / 2. Throws if outcome is not 0 or 1.
ComplexMatrix projector(const MeasurementSetting& setting);

ConditionalEnsembleEntry conditional_state(const DensityMatrix& rho_ab, const MeasurementSetting& setting);

enum class PlateKind { HWP, QWP };

struct WavePlate {
    PlateKind kind = PlateKind::HWP;
    double theta_deg = 0.0; ///< optic-axis angle, in (-90, 90]
};

/// Jones matrix. HWP(t) = [[cos 2t, sin 2t], [sin 2t, -cos 2t]];
/// QWP(t) = R(t) diag(1, i) R(-t) with R the rotation by t.
ComplexMatrix waveplate_unitary(const WavePlate& plate);

/// Measurement operator realized by `plate` followed by a PBS transmitting |H>: U^dagger |H><H| U.
ComplexMatrix plate_measurement_operator(const WavePlate& plate);

/// One row of the optical measurement-setting table. `p2` is a compensation
/// plate and does not enter the measurement operator.
struct PlateSettingRow {
    MeasurementSetting setting;
    WavePlate p1;
    WavePlate p2;
};

inline constexpr std::array<PlateSettingRow, 6> kPlateSettingTable{{
    {{PauliAxis::X, 0}, {PlateKind::HWP, 22.5}, {PlateKind::HWP, 22.5}},
    {{PauliAxis::X, 1}, {PlateKind::HWP, -22.5}, {PlateKind::HWP, -22.5}},
    {{PauliAxis::Y, 0}, {PlateKind::QWP, 45.0}, {PlateKind::QWP, -45.0}},
    {{PauliAxis::Y, 1}, {PlateKind::QWP, -45.0}, {PlateKind::QWP, 45.0}},
    {{PauliAxis::Z, 0}, {PlateKind::HWP, 0.0}, {PlateKind::HWP, 0.0}},
    {{PauliAxis::Z, 1}, {PlateKind::HWP, 45.0}, {PlateKind::HWP, 45.0}},
}};

/// Largest entrywise deviation between a table row's plate operator and projector(row.setting).
double plate_row_error(const PlateSettingRow& row);

} // namespace naqc
