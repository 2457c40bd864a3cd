#pragma once

#include <array>
#include <string_view>

#include "naqc/state.hpp"

namespace naqc {

enum class PauliAxis { X, Y, Z };

inline constexpr std::array<PauliAxis, 3> kAllAxes{PauliAxis::X, PauliAxis::Y, PauliAxis::Z};

int axis_index(PauliAxis axis) noexcept;
char axis_name(PauliAxis axis) noexcept;
ComplexMatrix pauli_matrix(PauliAxis axis);

/// Columns are the eigenvectors of sigma_axis, +1 eigenvalue first:
/// z: |0>, |1>;  x: (|0> +- |1>)/sqrt2;  y: (|0> +- i|1>)/sqrt2.
ComplexMatrix eigenbasis(PauliAxis axis);

enum class CoherenceKind { L1, RelativeEntropy, SkewInformation };

inline constexpr std::array<CoherenceKind, 3> kAllCoherenceKinds{
    CoherenceKind::L1, CoherenceKind::RelativeEntropy, CoherenceKind::SkewInformation};

/// Binary entropy in bits, with 0 log 0 = 0.
double binary_entropy(double x) noexcept;

/// Von Neumann entropy in bits.
double von_neumann_entropy(const DensityMatrix& rho);

/// A coherence quantifier together with its state-independent
/// complementarity bound over the three Pauli bases.
class CoherenceMeasure {
public:
    constexpr explicit CoherenceMeasure(CoherenceKind kind) noexcept : kind_(kind) {}

    constexpr CoherenceKind kind() const noexcept { return kind_; }

    /// sqrt(6) for l1, 3 h2((1 + 1/sqrt3)/2) ~= 2.2320 for relative entropy, 2 for skew information.
    double bound() const noexcept;

    std::string_view name() const noexcept;

    friend constexpr bool operator==(CoherenceMeasure, CoherenceMeasure) = default;

private:
    CoherenceKind kind_;
};

inline constexpr CoherenceMeasure kL1{CoherenceKind::L1};
inline constexpr CoherenceMeasure kRelativeEntropy{CoherenceKind::RelativeEntropy};
inline constexpr CoherenceMeasure kSkewInformation{CoherenceKind::SkewInformation};

/// Parses "l1", "re"/"relative_entropy", "sk"/"skew_information".
CoherenceMeasure parse_measure(std::string_view label);

/// Coherence of a qubit state in the eigenbasis of sigma_axis. Never negative.
double coherence(const DensityMatrix& rho, PauliAxis axis, CoherenceMeasure measure);

/// Sum of coherence over the x, y and z eigenbases.
double complementarity_sum(const DensityMatrix& rho, CoherenceMeasure measure);

} // namespace naqc
