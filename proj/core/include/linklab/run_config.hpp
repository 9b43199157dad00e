#pragma once

#include <optional>
#include <string>

#include "linklab/harness.hpp"

namespace linklab {

enum class Experiment { Link, Sweep, Chanest };

/// Fully resolved run description. Defaults mirror the reference system's
/// parameter table; the carrier frequency is metadata only (the simulation
/// is complex baseband).
struct RunConfig {
    Experiment experiment = Experiment::Link;
    LinkOptions link;

    std::uint64_t n_bits = 1000000;       // link experiment
    std::uint64_t n_bits_per_point = 1000000;  // sweep experiment
    std::size_t n_frames = 100;           // chanest experiment
    std::vector<double> snr_list = {0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20};
    std::string output_dir = ".";
    unsigned threads = 1;

    // recorded metadata
    double carrier_freq_ghz = 2.515;
    std::string modulation = "bpsk";
    std::string pilot_type = "block";
    std::string channel_name = "paper-fir";

    /// Throws ConfigError naming the offending key.
    void validate() const;
};

/// Applies one key=value assignment. Shared by the config-file parser and
/// the CLI flags so both have identical effect. Throws ConfigError naming
/// the key on unknown keys or unparsable values.
void set_key(RunConfig& cfg, const std::string& key, const std::string& value);

/// Flat key=value file with '#' comments and blank lines.
void load_config_file(RunConfig& cfg, const std::string& path);

/// Channel presets: "flat" (single unit tap) and "paper-fir"
/// (taps 0.8+0.9i, 0.6+0.7i). Throws ConfigError on unknown names.
ComplexVec channel_preset_taps(const std::string& name);

/// Applies LINKLAB_SEED from the environment, if set (lowest precedence:
/// call before file/flag processing).
void apply_env_seed(RunConfig& cfg);

/// Parses "a,b,c" lists and "start:step:stop" inclusive ranges.
std::vector<double> parse_snr_list(const std::string& text);

/// Semicolon-separated complex taps, e.g. "0.8+0.9i;0.6+0.7i".
ComplexVec parse_taps(const std::string& text);

}  // namespace linklab
