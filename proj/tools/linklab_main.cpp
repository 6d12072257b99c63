// linklab CLI: run sweep configs or figure presets, emit CSV datasets, and
// inspect the errata log. Talks to the library through the public C API only.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "linklab/linklab.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct CommonOpts {
    std::string out_dir = ".";
    std::string methods;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    bool trusted = false;
    int workers = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--out", o.out_dir, "Output directory for CSV and errata.log")
        ->capture_default_str();
    cmd->add_option("--methods", o.methods, "Comma list of methods: closed,quad,mc");
    cmd->add_option("--trials", o.trials, "Monte Carlo trials per grid point");
    cmd->add_option("--seed", o.seed, "Monte Carlo master seed");
    cmd->add_flag("--trusted", o.trusted,
                  "Fall back to the quadrature value where a closed form is logged as an erratum");
    cmd->add_option("--workers", o.workers, "Monte Carlo worker threads (0 = all cores)");
}

int run_spec(ll_sweep* sweep, const CommonOpts& o, const std::string& stem) {
    if (!sweep) {
        std::fprintf(stderr, "linklab: %s\n", ll_last_error());
        return kExitConfig;
    }
    std::error_code ec;
    std::filesystem::create_directories(o.out_dir, ec);

    const std::string errata_path = o.out_dir + "/errata.log";
    ll_errata_set_path(errata_path.c_str());

    ll_run_options ro{};
    ro.methods = o.methods.empty() ? nullptr : o.methods.c_str();
    ro.trials = o.trials;
    ro.seed = o.seed;
    ro.trusted = o.trusted ? 1 : -1;
    ro.workers = o.workers;

    ll_curves* curves = ll_sweep_run(sweep, &ro);
    ll_sweep_free(sweep);
    if (!curves) {
        std::fprintf(stderr, "linklab: %s\n", ll_last_error());
        return kExitNumeric;
    }

    const std::string csv_path = o.out_dir + "/" + stem + ".csv";
    if (ll_curves_write_csv(curves, csv_path.c_str()) != LL_OK) {
        std::fprintf(stderr, "linklab: %s\n", ll_last_error());
        ll_curves_free(curves);
        return kExitNumeric;
    }
    std::printf("wrote %zu rows to %s\n", ll_curves_row_count(curves), csv_path.c_str());

    const size_t n_err = ll_curves_error_count(curves);
    for (size_t i = 0; i < n_err; ++i) {
        char buf[512];
        size_t len = sizeof buf;
        if (ll_curves_error(curves, i, buf, &len) == LL_OK)
            std::fprintf(stderr, "linklab: grid-point failure: %s\n", buf);
    }
    ll_curves_free(curves);
    if (n_err > 0) {
        std::fprintf(stderr, "linklab: %zu grid point(s) failed; CSV is partial\n", n_err);
        return kExitNumeric;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linklab — dual-hop hybrid FSO/RF link performance sweeps"};
    app.require_subcommand(1);

    std::string config_path;
    CommonOpts run_opts;
    auto* run = app.add_subcommand("run", "Run a sweep described by a JSON config file");
    run->add_option("config", config_path, "Path to the config document")->required();
    add_common(run, run_opts);

    std::string preset_name;
    CommonOpts preset_opts;
    auto* preset = app.add_subcommand("preset", "Run a built-in figure-reproduction sweep");
    preset->add_option("name", preset_name, "Preset name: fig2 .. fig8")->required();
    add_common(preset, preset_opts);

    std::string errata_out = ".";
    auto* errata = app.add_subcommand("errata", "Print the printed-equation errata log");
    errata->add_option("--out", errata_out, "Directory holding errata.log")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        ll_sweep* sweep = ll_sweep_parse_file(config_path.c_str());
        std::string stem = std::filesystem::path(config_path).stem().string();
        if (stem.empty()) stem = "sweep";
        return run_spec(sweep, run_opts, stem);
    }
    if (preset->parsed()) {
        ll_sweep* sweep = ll_sweep_preset(preset_name.c_str());
        if (!sweep) {
            std::fprintf(stderr, "linklab: %s\n", ll_last_error());
            return kExitConfig;
        }
        return run_spec(sweep, preset_opts, preset_name);
    }
    // errata
    const std::string path = errata_out + "/errata.log";
    ll_errata_set_path(path.c_str());
    size_t len = 0;
    ll_errata_text(nullptr, &len);
    std::string buf(len, '\0');
    if (ll_errata_text(buf.data(), &len) != LL_OK) {
        std::fprintf(stderr, "linklab: %s\n", ll_last_error());
        return kExitNumeric;
    }
    std::fputs(buf.c_str(), stdout);
    return 0;
}
