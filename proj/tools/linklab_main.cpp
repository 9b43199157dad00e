// linklab command-line front end: link / sweep / chanest experiments with
// CSV outputs. Exit codes: 0 success, 2 configuration error, 3 runtime error.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "linklab/errors.hpp"
#include "linklab/report_io.hpp"
#include "linklab/run_config.hpp"

namespace fs = std::filesystem;
using namespace linklab;

namespace {

// Flags are collected as strings and funneled through set_key so that a
// flag and the same key in a config file behave identically. Application
// order is fixed: n_fft/n_occ recompute the guard split, an explicit
// n_guard must land after them.
const std::vector<std::pair<std::string, std::string>> kFlagKeys = {
    {"--n-fft", "n_fft"},
    {"--n-occ", "n_occ"},
    {"--n-guard", "n_guard"},
    {"--n-cp", "n_cp"},
    {"--n-data-cols", "n_data_cols"},
    {"--power-scaling", "power_scaling"},
    {"--null-band-center", "null_band_center"},
    {"--preamble-seed", "preamble_seed"},
    {"--pilot-seed", "pilot_seed"},
    {"--channel", "channel"},
    {"--taps", "taps"},
    {"--snr", "snr"},
    {"--delay", "delay"},
    {"--seed", "seed"},
    {"--sync-threshold", "sync_threshold"},
    {"--timing", "timing"},
    {"--equalizer", "equalizer"},
    {"--pilot-averaging", "pilot_averaging"},
    {"--snr-corrected", "snr_corrected"},
    {"--max-frame-delay", "max_frame_delay"},
    {"--message", "message"},
    {"--bits", "n_bits"},
    {"--bits-per-point", "n_bits_per_point"},
    {"--frames", "n_frames"},
    {"--snr-list", "snr_list"},
    {"--out", "out"},
    {"--threads", "threads"},
    {"--carrier-freq-ghz", "carrier_freq_ghz"},
    {"--modulation", "modulation"},
    {"--pilot-type", "pilot_type"},
};

struct SubcommandState {
    CLI::App* app = nullptr;
    std::string config_path;
    std::vector<std::string> values;  // parallel to kFlagKeys
};

void register_options(SubcommandState& st) {
    st.values.assign(kFlagKeys.size(), "");
    st.app->add_option("--config", st.config_path, "key=value configuration file");
    for (std::size_t i = 0; i < kFlagKeys.size(); ++i) {
        st.app->add_option(kFlagKeys[i].first, st.values[i]);
    }
}

RunConfig resolve_config(const SubcommandState& st, Experiment experiment) {
    RunConfig cfg;
    cfg.experiment = experiment;
    apply_env_seed(cfg);
    if (!st.config_path.empty()) load_config_file(cfg, st.config_path);
    for (std::size_t i = 0; i < kFlagKeys.size(); ++i) {
        if (st.app->count(kFlagKeys[i].first) > 0)
            set_key(cfg, kFlagKeys[i].second, st.values[i]);
    }
    cfg.validate();
    return cfg;
}

void check_output_dir(const std::string& dir) {
    std::error_code ec;
    if (!fs::is_directory(dir, ec))
        throw ConfigError("out: '" + dir + "' is not a directory");
    const fs::path probe = fs::path(dir) / ".linklab_probe";
    std::ofstream f(probe);
    if (!f) throw ConfigError("out: directory '" + dir + "' is not writable");
    f.close();
    fs::remove(probe, ec);
}

std::string snr_text(const ChannelModel& ch) {
    return ch.noiseless() ? "noiseless" : format_double(*ch.snr_db) + " dB";
}

int run(const RunConfig& cfg) {
    check_output_dir(cfg.output_dir);
    const fs::path out_dir(cfg.output_dir);

    switch (cfg.experiment) {
        case Experiment::Link: {
            const BerReport report = run_link(cfg.link, cfg.n_bits);
            write_ber_blocks_csv((out_dir / "ber_blocks.csv").string(), report);
            std::cout << "experiment: link  channel: " << cfg.channel_name
                      << "  snr: " << snr_text(cfg.link.channel) << "\n";
            std::cout << "bits: " << report.bits_total << "  errors: " << report.bit_errors
                      << "  ber: " << format_double(report.ber) << "\n";
            std::cout << "snr_estimated_mean: " << format_double(report.snr_estimated_mean)
                      << " dB\n";
            std::cout << "frames: " << report.frames_detected << " detected, "
                      << report.frames_missed << " missed\n";
            std::cout << "wrote: " << (out_dir / "ber_blocks.csv").string() << "\n";
            break;
        }
        case Experiment::Sweep: {
            const SweepResult sweep =
                sweep_snr(cfg.link, cfg.snr_list, cfg.n_bits_per_point, cfg.threads);
            write_sweep_csv((out_dir / "sweep.csv").string(), sweep);
            std::cout << "experiment: sweep  channel: " << cfg.channel_name << "  points: "
                      << sweep.rows.size() << "  bits/point: " << cfg.n_bits_per_point << "\n";
            std::cout << "snr_db,ber,snr_est_mean,missed_frac\n";
            for (const auto& row : sweep.rows) {
                std::cout << format_double(row.snr_db) << ',' << format_double(row.ber) << ','
                          << format_double(row.snr_est_mean) << ','
                          << format_double(row.missed_frac) << "\n";
            }
            std::cout << "wrote: " << (out_dir / "sweep.csv").string() << "\n";
            break;
        }
        case Experiment::Chanest: {
            const ChanEstDump dump = run_chanest(cfg.link, cfg.n_frames);
            write_chanest_csv((out_dir / "chanest.csv").string(), dump);
            std::cout << "experiment: chanest  channel: " << cfg.channel_name
                      << "  snr: " << snr_text(cfg.link.channel) << "  frames: " << cfg.n_frames
                      << "\n";
            std::cout << "max bin error: " << format_double(dump.max_abs_error) << "\n";
            std::cout << "wrote: " << (out_dir / "chanest.csv").string() << "\n";
            break;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"baseband OFDM link simulator: frame construction, FIR multipath + AWGN,\n"
                 "timing synchronization, LS/ZF equalization, SNR estimation, BER sweeps"};
    app.require_subcommand(1);

    SubcommandState link_st, sweep_st, chanest_st;
    link_st.app = app.add_subcommand("link", "single BER run, writes ber_blocks.csv");
    sweep_st.app = app.add_subcommand("sweep", "BER vs SNR sweep, writes sweep.csv");
    chanest_st.app =
        app.add_subcommand("chanest", "channel-estimation experiment, writes chanest.csv");
    register_options(link_st);
    register_options(sweep_st);
    register_options(chanest_st);

    try {
        app.parse(argc, argv);
        if (link_st.app->parsed()) return run(resolve_config(link_st, Experiment::Link));
        if (sweep_st.app->parsed()) return run(resolve_config(sweep_st, Experiment::Sweep));
        return run(resolve_config(chanest_st, Experiment::Chanest));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
