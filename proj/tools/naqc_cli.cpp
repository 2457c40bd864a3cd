// naqc: command-line driver for the NAQC experiment simulator.
//
//   naqc sweep      --out rows.csv [--config file] [--p ..] [--q ..] [--visibility v] [--tomo-n N] [--seed s]
//   naqc calibrate  --target 0.9978 --p 1 --q 1
//   naqc tomo-demo  --p 0.95 --q 0.3 [--tomo-n N] [--resamples R] [--seed s] [--record file]
//   naqc table1

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "naqc/experiment.hpp"
#include "naqc/nonclassicality.hpp"

namespace {

using namespace naqc;

struct SweepOptions {
    std::string config;
    // Kept as text so values reach the config parser unrounded.
    std::optional<std::string> p, q, measures, visibility, tomo_n, resamples, scheme, seed, out;
};

int run_sweep_command(const SweepOptions& o)
{
    SweepConfig config = o.config.empty() ? SweepConfig{} : load_config(o.config);
    if (o.p)
        apply_setting(config, "p", *o.p);
    if (o.q)
        apply_setting(config, "q", *o.q);
    if (o.measures)
        apply_setting(config, "measures", *o.measures);
    if (o.visibility)
        apply_setting(config, "visibility", *o.visibility);
    if (o.tomo_n)
        apply_setting(config, "tomo_n", *o.tomo_n);
    if (o.resamples)
        apply_setting(config, "resamples", *o.resamples);
    if (o.scheme)
        apply_setting(config, "scheme", *o.scheme);
    if (o.seed)
        apply_setting(config, "seed", *o.seed);
    if (o.out)
        apply_setting(config, "out", *o.out);
    if (config.output_path.empty())
        throw std::invalid_argument("sweep: no output path (use --out or out= in the config)");

    const std::vector<ResultRow> rows = run_sweep(config);
    emit_csv(rows, config.output_path);
    std::cout << "wrote " << rows.size() << " rows to " << config.output_path.string() << '\n';
    return 0;
}

int run_calibrate_command(double target, double p, double q)
{
    const double v = calibrate_noise(target, {p, q});
    std::printf("%.12f\n", v);
    return 0;
}

struct DemoOptions {
    double p = 0.95;
    double q = 0.3;
    double visibility = 1.0;
    std::uint64_t n = 10000;
    int resamples = 100;
    std::string scheme = "overcomplete36";
    std::uint64_t seed = 1;
    std::string record;
};

int run_tomo_demo(const DemoOptions& o)
{
    const DensityMatrix goal = bds_from_pq({o.p, o.q});
    const DensityMatrix prepared = depolarize(goal, o.visibility);
    const TomoScheme scheme = TomoScheme::of(parse_scheme(o.scheme));

    const TomographyRecord record = simulate_counts(prepared, scheme, o.n, o.seed);
    if (!o.record.empty()) {
        std::ofstream out(o.record, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write record to " + o.record);
        write_record(out, record);
    }
    const ReconstructionResult rec = mle_reconstruct(record);
    const LinearInversion lin = linear_inversion(record);

    std::printf("state p=%g q=%g visibility=%g scheme=%s n=%llu\n", o.p, o.q, o.visibility,
                std::string(scheme.name()).c_str(), static_cast<unsigned long long>(o.n));
    std::printf("linear inversion physical: %s\n", lin.physical ? "yes" : "no");
    std::printf("mle: log-likelihood %.6f after %d iterations (%s)\n", rec.log_likelihood, rec.iterations,
                rec.converged ? "converged" : "not converged");
    std::printf("reconstruction fidelity to goal: %.6f\n", fidelity(rec.rho, goal));

    const ResampleSummary summary = resample_statistics(prepared, goal, scheme, o.n, o.resamples, o.seed);
    std::printf("%-12s %12s %12s %12s\n", "statistic", "theory", "mean", "std");
    for (Statistic s : kAllStatistics) {
        const double theory = evaluate_statistic(s, prepared, goal);
        std::printf("%-12s %12.6f %12.6f %12.6f\n", std::string(statistic_name(s)).c_str(), theory,
                    summary[s].mean, summary[s].std);
    }
    if (summary.unconverged > 0)
        std::printf("warning: %d of %d reconstructions hit the iteration cap\n", summary.unconverged, o.resamples);
    return 0;
}

const char* plate_name(PlateKind kind)
{
    return kind == PlateKind::HWP ? "HWP" : "QWP";
}

int run_table1()
{
    std::printf("%-12s %-4s %8s %-4s %8s %12s %s\n", "measurement", "P1", "theta1", "P2", "theta2", "max error", "status");
    bool all_ok = true;
    for (const PlateSettingRow& row : kPlateSettingTable) {
        const double err = plate_row_error(row);
        const bool ok = err <= 1e-9;
        all_ok = all_ok && ok;
        const std::string label = std::string("Pi_") + axis_name(row.setting.axis) + "^" + std::to_string(row.setting.outcome);
        std::printf("%-12s %-4s %8.1f %-4s %8.1f %12.3e %s\n", label.c_str(), plate_name(row.p1.kind), row.p1.theta_deg,
                    plate_name(row.p2.kind), row.p2.theta_deg, err, ok ? "ok" : "MISMATCH");
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Nonlocal advantage of quantum coherence: theory curves and simulated tomography"};
    app.require_subcommand(1);

    SweepOptions sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate a (p, q) grid and write CSV");
    sweep_cmd->add_option("--config", sweep.config, "key=value configuration file");
    sweep_cmd->add_option("--p", sweep.p, "comma-separated p values");
    sweep_cmd->add_option("--q", sweep.q, "comma-separated q values");
    sweep_cmd->add_option("--measures", sweep.measures, "comma-separated subset of l1,re,sk");
    sweep_cmd->add_option("--visibility", sweep.visibility, "depolarizing visibility in [0, 1]");
    sweep_cmd->add_option("--tomo-n", sweep.tomo_n, "pairs per tomography setting; 0 disables tomography");
    sweep_cmd->add_option("--resamples", sweep.resamples, "Monte-Carlo resamples per row");
    sweep_cmd->add_option("--scheme", sweep.scheme, "minimal16 or overcomplete36");
    sweep_cmd->add_option("--seed", sweep.seed, "RNG seed");
    sweep_cmd->add_option("--out", sweep.out, "output CSV path");

    double target = 0.9978, cal_p = 1.0, cal_q = 1.0;
    auto* cal_cmd = app.add_subcommand("calibrate", "Find the visibility that yields a target fidelity");
    cal_cmd->add_option("--target", target, "target fidelity")->capture_default_str();
    cal_cmd->add_option("--p", cal_p, "state parameter p")->capture_default_str();
    cal_cmd->add_option("--q", cal_q, "state parameter q")->capture_default_str();

    DemoOptions demo;
    auto* demo_cmd = app.add_subcommand("tomo-demo", "Simulate tomography of one state and report error bars");
    demo_cmd->add_option("--p", demo.p, "state parameter p")->capture_default_str();
    demo_cmd->add_option("--q", demo.q, "state parameter q")->capture_default_str();
    demo_cmd->add_option("--visibility", demo.visibility, "depolarizing visibility")->capture_default_str();
    demo_cmd->add_option("--tomo-n", demo.n, "pairs per setting")->capture_default_str();
    demo_cmd->add_option("--resamples", demo.resamples, "Monte-Carlo resamples")->capture_default_str();
    demo_cmd->add_option("--scheme", demo.scheme, "minimal16 or overcomplete36")->capture_default_str();
    demo_cmd->add_option("--seed", demo.seed, "RNG seed")->capture_default_str();
    demo_cmd->add_option("--record", demo.record, "write the first simulated count record here");

    auto* table_cmd = app.add_subcommand("table1", "Print and verify the wave-plate measurement settings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*sweep_cmd)
            return run_sweep_command(sweep);
        if (*cal_cmd)
            return run_calibrate_command(target, cal_p, cal_q);
        if (*demo_cmd)
            return run_tomo_demo(demo);
        if (*table_cmd)
            return run_table1();
    } catch (const std::exception& e) {
        std::cerr << "naqc: error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
