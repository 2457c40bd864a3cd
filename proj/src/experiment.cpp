#include "naqc/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "naqc/nonclassicality.hpp"

namespace naqc {

namespace {

bool wants(const SweepConfig& config, CoherenceMeasure m)
{
    for (CoherenceMeasure c : config.measures)
        if (c == m)
            return true;
    return false;
}

void check_writable(const std::filesystem::path& path)
{
    if (path.empty())
        return;
    const std::filesystem::path parent = path.has_parent_path() ? path.parent_path() : ".";
    std::error_code ec;
    if (!std::filesystem::is_directory(parent, ec))
        throw std::invalid_argument("output directory does not exist: " + parent.string());
    if (std::filesystem::is_directory(path, ec))
        throw std::invalid_argument("output path is a directory: " + path.string());
    std::ofstream probe(path, std::ios::app);
    if (!probe)
        throw std::invalid_argument("output path is not writable: " + path.string());
}

ResultRow evaluate_row(const SweepConfig& config, double p, double q, std::uint64_t row_seed)
{
    const DensityMatrix goal = bds_from_pq({p, q});
    const DensityMatrix prepared = depolarize(goal, config.visibility);

    ResultRow row;
    row.p = p;
    row.q = q;
    if (!config.tomo) {
        if (wants(config, kL1))
            row.n_l1 = naqc_value(prepared, kL1).value;
        if (wants(config, kRelativeEntropy))
            row.n_re = naqc_value(prepared, kRelativeEntropy).value;
        if (wants(config, kSkewInformation))
            row.n_sk = naqc_value(prepared, kSkewInformation).value;
        row.chsh_max = chsh_max(prepared);
        row.concurrence = concurrence(prepared);
        row.fidelity = fidelity(prepared, goal);
        return row;
    }

    const TomoConfig& tomo = *config.tomo;
    const ResampleSummary s = resample_statistics(prepared, goal, TomoScheme::of(tomo.scheme), tomo.n_per_setting,
                                                  tomo.n_resamples, row_seed, Execution::Serial);
    if (wants(config, kL1)) {
        row.n_l1 = s[Statistic::NaqcL1].mean;
        row.err_n_l1 = s[Statistic::NaqcL1].std;
    }
    if (wants(config, kRelativeEntropy)) {
        row.n_re = s[Statistic::NaqcRe].mean;
        row.err_n_re = s[Statistic::NaqcRe].std;
    }
    if (wants(config, kSkewInformation)) {
        row.n_sk = s[Statistic::NaqcSk].mean;
        row.err_n_sk = s[Statistic::NaqcSk].std;
    }
    row.chsh_max = s[Statistic::ChshMax].mean;
    row.err_chsh = s[Statistic::ChshMax].std;
    row.concurrence = s[Statistic::Concurrence].mean;
    row.err_conc = s[Statistic::Concurrence].std;
    row.fidelity = s[Statistic::Fidelity].mean;
    row.err_fidelity = s[Statistic::Fidelity].std;
    return row;
}

} // namespace

void validate(const SweepConfig& config)
{
    auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (config.p_values.empty() || config.q_values.empty())
        throw std::invalid_argument("sweep: p and q lists must be nonempty");
    if (config.measures.empty())
        throw std::invalid_argument("sweep: measure list must be nonempty");
    for (double p : config.p_values)
        if (!in_unit(p))
            throw std::invalid_argument("sweep: p = " + std::to_string(p) + " outside [0, 1]");
    for (double q : config.q_values)
        if (!in_unit(q))
            throw std::invalid_argument("sweep: q = " + std::to_string(q) + " outside [0, 1]");
    if (!in_unit(config.visibility))
        throw std::invalid_argument("sweep: visibility outside [0, 1]");
    if (config.tomo) {
        if (config.tomo->n_per_setting < 1)
            throw std::invalid_argument("sweep: tomography needs at least one pair per setting");
        if (config.tomo->n_resamples < 2)
            throw std::invalid_argument("sweep: tomography needs at least two resamples");
    }
}

std::vector<ResultRow> run_sweep(const SweepConfig& config, Execution exec)
{
    validate(config);
    check_writable(config.output_path);

    const std::size_t nq = config.q_values.size();
    const std::size_t total = config.p_values.size() * nq;
    std::vector<ResultRow> rows(total);

    auto compute = [&](std::size_t i) {
        rows[i] = evaluate_row(config, config.p_values[i / nq], config.q_values[i % nq], derive_seed(config.seed, i));
    };

    if (exec == Execution::Serial) {
        for (std::size_t i = 0; i < total; ++i)
            compute(i);
        return rows;
    }

    std::exception_ptr failure;
    const auto n = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
        try {
            compute(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(naqc_sweep_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return rows;
}

double calibrate_noise(double target_fidelity, const PreparationParams& params)
{
    const DensityMatrix goal = bds_from_pq(params);
    auto fid = [&](double v) { return fidelity(depolarize(goal, v), goal); };
    const double lowest = fid(0.0);
    const double highest = fid(1.0);
    if (!(target_fidelity <= 1.0) || !(target_fidelity >= lowest - 1e-12)) {
        std::ostringstream os;
        os.precision(10);
        os << "calibrate: target fidelity " << target_fidelity << " unachievable; achievable range is ["
           << lowest << ", 1]";
        throw std::invalid_argument(os.str());
    }
    if (target_fidelity >= highest)
        return 1.0;
    if (target_fidelity <= lowest)
        return 0.0;
    // fidelity is nondecreasing in v
    double lo = 0.0, hi = 1.0;
    for (int k = 0; k < 200 && hi - lo > 1e-15; ++k) {
        const double mid = 0.5 * (lo + hi);
        (fid(mid) < target_fidelity ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows)
{
    out << kCsvHeader << '\n';
    char buf[32];
    auto put = [&](double v, bool last) {
        std::snprintf(buf, sizeof buf, "%.12g", v);
        out << buf << (last ? '\n' : ',');
    };
    for (const ResultRow& r : rows) {
        put(r.p, false);
        put(r.q, false);
        put(r.n_l1, false);
        put(r.n_re, false);
        put(r.n_sk, false);
        put(r.chsh_max, false);
        put(r.concurrence, false);
        put(r.fidelity, false);
        put(r.err_n_l1, false);
        put(r.err_n_re, false);
        put(r.err_n_sk, false);
        put(r.err_chsh, false);
        put(r.err_conc, true);
    }
}

void emit_csv(const std::vector<ResultRow>& rows, const std::filesystem::path& path)
{
    if (rows.empty())
        throw std::invalid_argument("emit_csv: no rows to write");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("emit_csv: cannot open " + path.string());
    write_csv(out, rows);
    out.flush();
    if (!out)
        throw std::runtime_error("emit_csv: write failed for " + path.string());
}

std::vector<double> parse_number_list(std::string_view text)
{
    std::vector<double> values;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos)
            throw std::invalid_argument("empty entry in number list '" + std::string(text) + "'");
        item = item.substr(first, last - first + 1);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw std::invalid_argument("not a number: '" + item + "'");
        values.push_back(v);
    }
    if (values.empty())
        throw std::invalid_argument("empty number list");
    return values;
}

namespace {

std::uint64_t parse_count(std::string_view key, std::string_view value)
{
    const std::vector<double> v = parse_number_list(value);
    if (v.size() != 1 || v[0] < 0.0 || v[0] != std::floor(v[0]) || v[0] > 1.8e19)
        throw std::invalid_argument(std::string(key) + " must be a nonnegative integer");
    return static_cast<std::uint64_t>(v[0]);
}

TomoConfig& tomo_of(SweepConfig& config)
{
    if (!config.tomo)
        config.tomo.emplace();
    return *config.tomo;
}

} // namespace

void apply_setting(SweepConfig& config, std::string_view key, std::string_view value)
{
    if (key == "p") {
        config.p_values = parse_number_list(value);
    } else if (key == "q") {
        config.q_values = parse_number_list(value);
    } else if (key == "visibility") {
        const std::vector<double> v = parse_number_list(value);
        if (v.size() != 1)
            throw std::invalid_argument("visibility takes one value");
        config.visibility = v[0];
    } else if (key == "measures") {
        config.measures.clear();
        std::istringstream in{std::string(value)};
        std::string item;
        while (std::getline(in, item, ','))
            config.measures.push_back(parse_measure(item));
    } else if (key == "tomo_n" || key == "tomo-n") {
        const std::uint64_t n = parse_count(key, value);
        if (n == 0)
            config.tomo.reset();
        else
            tomo_of(config).n_per_setting = n;
    } else if (key == "resamples") {
        tomo_of(config).n_resamples = static_cast<int>(parse_count(key, value));
    } else if (key == "scheme") {
        tomo_of(config).scheme = parse_scheme(value);
    } else if (key == "seed") {
        config.seed = parse_count(key, value);
    } else if (key == "out") {
        config.output_path = std::string(value);
    } else {
        throw std::invalid_argument("unknown configuration key '" + std::string(key) + "'");
    }
}

SweepConfig read_config(std::istream& in)
{
    SweepConfig config;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
        };
        apply_setting(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return config;
}

SweepConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read config " + path.string());
    return read_config(in);
}

} // namespace naqc
