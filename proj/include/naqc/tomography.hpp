#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "naqc/execution.hpp"
#include "naqc/measurement.hpp"

namespace naqc {

/// Rank-1 single-qubit projector used by the tomography settings.
enum class ProjectorLabel { ZPlus, ZMinus, XPlus, XMinus, YPlus, YMinus };

/// "z+", "z-", "x+", "x-", "y+", "y-".
std::string_view label_text(ProjectorLabel label) noexcept;
/// Accepts the ASCII forms above and U+2212 as the minus sign.
ProjectorLabel parse_label(std::string_view text);
ComplexMatrix label_projector(ProjectorLabel label);

struct TomoSetting {
    ProjectorLabel a;
    ProjectorLabel b;
};

/// Custom schemes are for analysis only; they have no record serialization.
enum class SchemeKind { Minimal16, Overcomplete36, Custom };

std::string_view scheme_name(SchemeKind kind) noexcept;
SchemeKind parse_scheme(std::string_view name);

/// Ordered list of product projectors P_A (x) P_B.
///
/// minimal16 takes every ordered pair from {z+, z-, x+, y+}.
/// overcomplete36 runs over basis pairs (z, x, y) x (z, x, y), and within each pair
/// over the outcome pairs ++, +-, -+, --; each consecutive block of four is one
/// normalization group.
class TomoScheme {
public:
    static TomoScheme minimal16();
    static TomoScheme overcomplete36();
    /// Throws for SchemeKind::Custom.
    static TomoScheme of(SchemeKind kind);
    static TomoScheme custom(std::vector<TomoSetting> settings);

    SchemeKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return scheme_name(kind_); }
    std::size_t size() const noexcept { return settings_.size(); }
    const std::vector<TomoSetting>& settings() const noexcept { return settings_; }
    /// 4x4 operator of setting s.
    const ComplexMatrix& effect(std::size_t s) const { return effects_.at(s); }

    /// True when every consecutive block of four settings sums to one for every state.
    bool has_normalization_groups() const noexcept { return kind_ == SchemeKind::Overcomplete36; }

private:
    TomoScheme(SchemeKind kind, std::vector<TomoSetting> settings);

    SchemeKind kind_;
    std::vector<TomoSetting> settings_;
    std::vector<ComplexMatrix> effects_;
};

struct TomographyRecord {
    SchemeKind scheme = SchemeKind::Overcomplete36;
    std::vector<std::uint64_t> counts;   ///< one per setting
    std::uint64_t pairs_per_setting = 0; ///< expected coincidences N per setting
    std::uint64_t seed = 0;

    friend bool operator==(const TomographyRecord&, const TomographyRecord&) = default;
};

/// Expected total that normalizes each setting's count into a frequency:
/// the group total for overcomplete36, N for minimal16.
std::vector<double> setting_normalizations(const TomographyRecord& record);

/// Text form: `scheme=<name> n=<N> seed=<seed>` then `<projA> <projB> <count>` per setting.
void write_record(std::ostream& out, const TomographyRecord& record);
std::string format_record(const TomographyRecord& record);
TomographyRecord read_record(std::istream& in);
TomographyRecord parse_record(std::string_view text);

/// Tr[rho (P_A (x) P_B)] for every setting.
std::vector<double> born_probabilities(const DensityMatrix& rho, const TomoScheme& scheme);

/// Poisson counts with mean n_per_setting * p_s, from a 64-bit Mersenne twister seeded with `seed`.
TomographyRecord simulate_counts(const DensityMatrix& rho, const TomoScheme& scheme,
                                 std::uint64_t n_per_setting, std::uint64_t seed);

/// Counts rounded from n_per_setting * p_s, no noise.
TomographyRecord expected_counts(const DensityMatrix& rho, const TomoScheme& scheme,
                                 std::uint64_t n_per_setting);

struct LinearInversion {
    ComplexMatrix rho_raw; ///< Hermitian, unit trace, possibly not PSD
    bool physical = false; ///< min eigenvalue >= -1e-9
};

/// Least-squares inversion of the Born map from raw frequencies.
/// Throws std::invalid_argument if the scheme does not determine the state.
LinearInversion linear_inversion(const TomoScheme& scheme, const std::vector<double>& frequencies);
LinearInversion linear_inversion(const TomographyRecord& record);

/// Drops negative eigenvalues of a Hermitian matrix and renormalizes.
DensityMatrix clamp_to_physical(const ComplexMatrix& hermitian);

struct MleOptions {
    int max_iterations = 10000;
    double ll_tolerance = 1e-10;
    double step_tolerance = 1e-12;
};

struct ReconstructionResult {
    DensityMatrix rho;
    double log_likelihood = 0.0;
    int iterations = 0;
    bool converged = false;
    std::vector<double> log_likelihood_trace; ///< value after every accepted iteration, starting point first
};

/// Poisson log-likelihood sum_s [n_s log p_s - M_s p_s] with M_s from setting_normalizations.
/// For overcomplete36 the second term is a constant. Zero counts contribute no log term.
double log_likelihood(const TomographyRecord& record, const TomoScheme& scheme, const DensityMatrix& rho);

/// Maximum-likelihood state over rho = L^dagger L / Tr(L^dagger L), L lower triangular.
/// Throws std::invalid_argument if every count is zero.
ReconstructionResult mle_reconstruct(const TomographyRecord& record, const MleOptions& options = {});

/// Estimated probability of Alice's outcome for a Pauli setting, averaged over Bob's
/// bases. Requires an overcomplete36 record.
double estimate_alice_probability(const TomographyRecord& record, const MeasurementSetting& setting);

enum class Statistic { Fidelity, NaqcL1, NaqcRe, NaqcSk, ChshMax, Concurrence };

inline constexpr std::array<Statistic, 6> kAllStatistics{
    Statistic::Fidelity, Statistic::NaqcL1, Statistic::NaqcRe,
    Statistic::NaqcSk, Statistic::ChshMax, Statistic::Concurrence};

std::string_view statistic_name(Statistic statistic) noexcept;
/// Labels: fidelity, naqc_l1, naqc_re, naqc_sk, chsh_max, concurrence.
Statistic parse_statistic(std::string_view label);

/// Fidelity is measured against `goal`; the rest depend on `rho` only.
double evaluate_statistic(Statistic statistic, const DensityMatrix& rho, const DensityMatrix& goal);

struct ErrorBar {
    double mean = 0.0;
    double std = 0.0; ///< sample standard deviation
};

struct ResampleSummary {
    std::array<ErrorBar, kAllStatistics.size()> bars;
    int unconverged = 0;

    const ErrorBar& operator[](Statistic s) const { return bars[static_cast<std::size_t>(s)]; }
};

/// Simulates n_resamples records of rho_true (seeds seed, seed+1, ...), reconstructs each by MLE
/// and summarizes every statistic. Throws if n_resamples < 2.
ResampleSummary resample_statistics(const DensityMatrix& rho_true, const DensityMatrix& goal,
                                    const TomoScheme& scheme, std::uint64_t n_per_setting,
                                    int n_resamples, std::uint64_t seed,
                                    Execution exec = Execution::Parallel);

ErrorBar poisson_error_bars(const DensityMatrix& rho_true, const DensityMatrix& goal,
                            const TomoScheme& scheme, std::uint64_t n_per_setting,
                            Statistic statistic, int n_resamples, std::uint64_t seed,
                            Execution exec = Execution::Parallel);

} // namespace naqc
