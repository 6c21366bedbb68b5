#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "emo/config.hpp"
#include "emo/engine.hpp"
#include "emo/errors.hpp"
#include "emo/front_io.hpp"
#include "emo/indicators.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;
constexpr int kExitIo = 4;

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

int cmd_run(const std::string& config_path, std::optional<long> seed_override,
            const std::string& out_dir) {
    emo::ExperimentConfig config = emo::load_experiment_config(config_path);
    if (seed_override)
        config.set("seed", std::to_string(*seed_override));
    emo::BuiltExperiment built = emo::build_experiment(config, out_dir + "/snapshots");

    emo::RunResult result = emo::run(built.run);
    emo::ObjectiveSpace space = emo::make_problem(built.run.problem).space;

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw emo::IoError("cannot create output directory: " + out_dir);

    std::vector<emo::ObjectiveVector> pts;
    for (const auto& x : result.front)
        pts.push_back(*x.objectives);
    emo::write_front(emo::Front{pts, space}, out_dir + "/final.front");

    std::ofstream progress(out_dir + "/progress.tsv");
    if (!progress)
        throw emo::IoError("cannot write " + out_dir + "/progress.tsv");
    progress << "generation\tevaluations";
    for (const auto& col : result.progress_columns)
        progress << '\t' << col;
    progress << '\n';
    for (const auto& row : result.progress) {
        progress << row.generation << '\t' << row.evaluations;
        for (double v : row.values)
            progress << '\t' << format_real(v);
        progress << '\n';
    }
    if (!progress)
        throw emo::IoError("write failed: " + out_dir + "/progress.tsv");

    std::ofstream resolved(out_dir + "/resolved-config");
    if (!resolved)
        throw emo::IoError("cannot write " + out_dir + "/resolved-config");
    resolved << emo::serialize_experiment_config(built.resolved);

    std::cout << "generations=" << result.generations << " evaluations=" << result.evaluations
              << " front_size=" << result.front.size() << "\n";
    return 0;
}

emo::ObjectiveVector parse_ref(const std::string& csv) {
    emo::ObjectiveVector ref;
    std::string item;
    std::istringstream ss(csv);
    while (std::getline(ss, item, ','))
        ref.push_back(std::stod(item));
    if (ref.size() < 2)
        throw emo::ConfigError("ref-point: expected at least 2 comma-separated reals");
    return ref;
}

int cmd_metrics(const std::string& front_path, const std::string& indicator,
                const std::string& ref_csv, long seed, std::size_t samples) {
    emo::Front front = emo::read_front(front_path);
    if (indicator == "hypervolume" || indicator == "hv") {
        if (ref_csv.empty())
            throw emo::ConfigError("ref-point: required for hypervolume");
        emo::HypervolumeResult hv = emo::hypervolume(front, parse_ref(ref_csv), samples,
                                                     static_cast<std::uint64_t>(seed));
        std::cout << "indicator=hypervolume value=" << format_real(hv.value);
        if (hv.estimate)
            std::cout << " estimate=true samples=" << hv.samples;
        std::cout << "\n";
        return 0;
    }
    throw emo::ConfigError("indicator: unknown unary indicator `" + indicator +
                           "` (expected hypervolume)");
}

int cmd_compare(const std::string& a_path, const std::string& b_path,
                const std::string& indicator, const std::string& ref_csv, long seed,
                std::size_t samples) {
    emo::Front a = emo::read_front(a_path);
    emo::Front b = emo::read_front(b_path);
    auto value = [&](const emo::Front& x, const emo::Front& y) -> double {
        if (indicator == "eps+")
            return emo::epsilon_indicator(x, y, emo::EpsilonMode::Additive);
        if (indicator == "epsx")
            return emo::epsilon_indicator(x, y, emo::EpsilonMode::Multiplicative);
        if (indicator == "contribution")
            return emo::contribution(x, y);
        if (indicator == "hvd") {
            if (ref_csv.empty())
                throw emo::ConfigError("ref-point: required for hvd");
            return emo::binary_hypervolume(x, y, parse_ref(ref_csv), samples,
                                           static_cast<std::uint64_t>(seed));
        }
        throw emo::ConfigError("indicator: unknown binary indicator `" + indicator +
                               "` (expected eps+, epsx, hvd or contribution)");
    };
    std::cout << "indicator=" << indicator << " value=" << format_real(value(a, b))
              << " reversed=" << format_real(value(b, a)) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"evolutionary multiobjective optimization toolkit"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "execute a configured optimization run");
    std::string config_path, out_dir = ".";
    std::optional<long> seed_override;
    run->add_option("--config", config_path, "experiment config file")->required();
    run->add_option("--seed", seed_override, "override the config seed");
    run->add_option("--out", out_dir, "output directory");

    auto* metrics = app.add_subcommand("metrics", "compute a unary indicator on a front file");
    std::string front_path, indicator = "hypervolume", ref_csv;
    long seed = 0;
    std::size_t samples = emo::kDefaultHypervolumeSamples;
    metrics->add_option("--front", front_path, "front file")->required();
    metrics->add_option("--indicator", indicator, "hypervolume");
    metrics->add_option("--ref-point", ref_csv, "reference point, comma separated");
    metrics->add_option("--seed", seed, "Monte Carlo seed");
    metrics->add_option("--samples", samples, "Monte Carlo sample count");

    auto* compare = app.add_subcommand("compare", "compute a binary indicator between two fronts");
    std::string a_path, b_path, bin_indicator = "eps+", bin_ref;
    long bin_seed = 0;
    std::size_t bin_samples = emo::kDefaultHypervolumeSamples;
    compare->add_option("--a", a_path, "front A")->required();
    compare->add_option("--b", b_path, "front B")->required();
    compare->add_option("--indicator", bin_indicator, "eps+|epsx|hvd|contribution");
    compare->add_option("--ref-point", bin_ref, "reference point for hvd");
    compare->add_option("--seed", bin_seed, "Monte Carlo seed");
    compare->add_option("--samples", bin_samples, "Monte Carlo sample count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run)
            return cmd_run(config_path, seed_override, out_dir);
        if (*metrics)
            return cmd_metrics(front_path, indicator, ref_csv, seed, samples);
        return cmd_compare(a_path, b_path, bin_indicator, bin_ref, bin_seed, bin_samples);
    } catch (const emo::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const emo::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
