#pragma once

// Simulated experiment pipelines: (p, q) sweeps, noise calibration and CSV export.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "naqc/execution.hpp"
#include "naqc/tomography.hpp"

namespace naqc {

struct TomoConfig {
    SchemeKind scheme = SchemeKind::Overcomplete36;
    std::uint64_t n_per_setting = 10000;
    int n_resamples = 100;
};

struct SweepConfig {
    std::vector<double> p_values{0.0, 0.05, 0.95, 1.0};
    std::vector<double> q_values{0.0, 0.05, 0.3, 0.5, 0.7, 0.95, 1.0};
    /// NAQC columns to populate; the others are written as 0.
    std::vector<CoherenceMeasure> measures{kL1, kRelativeEntropy, kSkewInformation};
    double visibility = 1.0;
    std::optional<TomoConfig> tomo;
    std::uint64_t seed = 1; ///< row r resamples from derive_seed(seed, r)
    std::filesystem::path output_path;
};

struct ResultRow {
    double p = 0.0;
    double q = 0.0;
    double n_l1 = 0.0;
    double n_re = 0.0;
    double n_sk = 0.0;
    double chsh_max = 0.0;
    double concurrence = 0.0;
    double fidelity = 0.0;
    double err_n_l1 = 0.0;
    double err_n_re = 0.0;
    double err_n_sk = 0.0;
    double err_chsh = 0.0;
    double err_conc = 0.0;
    double err_fidelity = 0.0; ///< not part of the CSV layout
};

/// Throws std::invalid_argument describing the first problem found.
void validate(const SweepConfig& config);

/// One row per (p, q), p-major. Theoretical values come from depolarize(bds_from_pq(p, q), visibility);
/// with tomography enabled every column is a Monte-Carlo mean over MLE reconstructions and the err_*
/// columns hold the corresponding standard deviations. Fidelity is always measured against the
/// noiseless bds_from_pq state.
std::vector<ResultRow> run_sweep(const SweepConfig& config, Execution exec = Execution::Parallel);

/// Visibility v with fidelity(depolarize(rho, v), rho) = target for rho = bds_from_pq(params).
double calibrate_noise(double target_fidelity, const PreparationParams& params);

inline constexpr std::string_view kCsvHeader =
    "p,q,n_l1,n_re,n_sk,chsh_max,concurrence,fidelity,err_n_l1,err_n_re,err_n_sk,err_chsh,err_conc";

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);
/// Throws std::runtime_error naming the path on I/O failure.
void emit_csv(const std::vector<ResultRow>& rows, const std::filesystem::path& path);

/// Flat `key=value` configuration; `#` starts a comment. Keys: p, q, measures, visibility,
/// scheme, tomo_n, resamples, seed, out. A tomo_n of 0 disables tomography.
SweepConfig read_config(std::istream& in);
SweepConfig load_config(const std::filesystem::path& path);
void apply_setting(SweepConfig& config, std::string_view key, std::string_view value);

std::vector<double> parse_number_list(std::string_view text);

} // namespace naqc
