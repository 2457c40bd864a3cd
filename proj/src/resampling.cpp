#include "naqc/nonclassicality.hpp"
#include "naqc/tomography.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>

namespace naqc {

std::string_view statistic_name(Statistic statistic) noexcept
{
    switch (statistic) {
    case Statistic::Fidelity: return "fidelity";
    case Statistic::NaqcL1: return "naqc_l1";
    case Statistic::NaqcRe: return "naqc_re";
    case Statistic::NaqcSk: return "naqc_sk";
    case Statistic::ChshMax: return "chsh_max";
    case Statistic::Concurrence: return "concurrence";
    }
    return "?";
}

Statistic parse_statistic(std::string_view label)
{
    for (Statistic s : kAllStatistics)
        if (statistic_name(s) == label)
            return s;
    throw std::invalid_argument("unknown statistic '" + std::string(label) + "'");
}

double evaluate_statistic(Statistic statistic, const DensityMatrix& rho, const DensityMatrix& goal)
{
    switch (statistic) {
    case Statistic::Fidelity: return fidelity(rho, goal);
    case Statistic::NaqcL1: return naqc_value(rho, kL1).value;
    case Statistic::NaqcRe: return naqc_value(rho, kRelativeEntropy).value;
    case Statistic::NaqcSk: return naqc_value(rho, kSkewInformation).value;
    case Statistic::ChshMax: return chsh_max(rho);
    case Statistic::Concurrence: return concurrence(rho);
    }
    throw std::logic_error("evaluate_statistic: bad statistic");
}

namespace {

struct ResampleOutcome {
    std::array<double, kAllStatistics.size()> values{};
    bool converged = true;
};

ResampleOutcome run_resample(const DensityMatrix& rho_true, const DensityMatrix& goal,
                             const TomoScheme& scheme, std::uint64_t n_per_setting, std::uint64_t seed)
{
    const TomographyRecord record = simulate_counts(rho_true, scheme, n_per_setting, seed);
    const ReconstructionResult rec = mle_reconstruct(record);
    ResampleOutcome out;
    out.converged = rec.converged;
    for (std::size_t k = 0; k < kAllStatistics.size(); ++k)
        out.values[k] = evaluate_statistic(kAllStatistics[k], rec.rho, goal);
    return out;
}

std::vector<ResampleOutcome> run_serial(const DensityMatrix& rho_true, const DensityMatrix& goal,
                                        const TomoScheme& scheme, std::uint64_t n, int count,
                                        std::uint64_t seed)
{
    std::vector<ResampleOutcome> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k)
        out.push_back(run_resample(rho_true, goal, scheme, n, seed + static_cast<std::uint64_t>(k)));
    return out;
}

std::vector<ResampleOutcome> run_parallel(const DensityMatrix& rho_true, const DensityMatrix& goal,
                                          const TomoScheme& scheme, std::uint64_t n, int count,
                                          std::uint64_t seed)
{
    std::vector<ResampleOutcome> out(static_cast<std::size_t>(count));
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < count; ++k) {
        try {
            out[static_cast<std::size_t>(k)] =
                run_resample(rho_true, goal, scheme, n, seed + static_cast<std::uint64_t>(k));
        } catch (...) {
#pragma omp critical(naqc_resample_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

} // namespace

ResampleSummary resample_statistics(const DensityMatrix& rho_true, const DensityMatrix& goal,
                                    const TomoScheme& scheme, std::uint64_t n_per_setting,
                                    int n_resamples, std::uint64_t seed, Execution exec)
{
    if (n_resamples < 2)
        throw std::invalid_argument("resample_statistics: n_resamples must be at least 2");
    const std::vector<ResampleOutcome> samples =
        exec == Execution::Serial ? run_serial(rho_true, goal, scheme, n_per_setting, n_resamples, seed)
                                  : run_parallel(rho_true, goal, scheme, n_per_setting, n_resamples, seed);

    ResampleSummary summary;
    const double count = static_cast<double>(samples.size());
    for (std::size_t k = 0; k < kAllStatistics.size(); ++k) {
        double mean = 0.0;
        for (const ResampleOutcome& s : samples)
            mean += s.values[k];
        mean /= count;
        double var = 0.0;
        for (const ResampleOutcome& s : samples)
            var += (s.values[k] - mean) * (s.values[k] - mean);
        summary.bars[k] = {mean, std::sqrt(var / (count - 1.0))};
    }
    for (const ResampleOutcome& s : samples)
        summary.unconverged += s.converged ? 0 : 1;
    return summary;
}

ErrorBar poisson_error_bars(const DensityMatrix& rho_true, const DensityMatrix& goal,
                            const TomoScheme& scheme, std::uint64_t n_per_setting,
                            Statistic statistic, int n_resamples, std::uint64_t seed, Execution exec)
{
    return resample_statistics(rho_true, goal, scheme, n_per_setting, n_resamples, seed, exec)[statistic];
}

} // namespace naqc
