#include "linklab/run_config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "linklab/errors.hpp"

namespace linklab {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
    throw ConfigError("invalid value '" + value + "' for key '" + key + "'");
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(value, &pos, 0);
        if (pos != value.size()) bad_value(key, value);
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (...) {
        bad_value(key, value);
    }
}

double parse_f64(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) bad_value(key, value);
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (...) {
        bad_value(key, value);
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "on" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "off" || value == "no") return false;
    bad_value(key, value);
}

Complex parse_complex(const std::string& key, const std::string& token) {
    // accepted forms: "a", "a+bi", "a-bi", "bi" ('j' also allowed)
    std::string t = trim(token);
    if (t.empty()) bad_value(key, token);
    bool has_imag_suffix = t.back() == 'i' || t.back() == 'j';
    if (!has_imag_suffix) {
        return Complex(parse_f64(key, t), 0.0);
    }
    t.pop_back();
    // find split point: the last '+'/'-' that is not an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t i = t.size(); i-- > 1;) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        std::string imag = t.empty() || t == "+" || t == "-" ? t + "1" : t;
        return Complex(0.0, parse_f64(key, imag));
    }
    std::string re = t.substr(0, split);
    std::string im = t.substr(split);
    if (im == "+" || im == "-") im += "1";
    return Complex(parse_f64(key, re), parse_f64(key, im));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

}  // namespace

ComplexVec parse_taps(const std::string& text) {
    ComplexVec taps;
    for (const auto& token : split(text, ';')) {
        const std::string t = trim(token);
        if (t.empty()) continue;
        taps.push_back(parse_complex("taps", t));
    }
    if (taps.empty()) throw ConfigError("invalid value '" + text + "' for key 'taps'");
    return taps;
}

std::vector<double> parse_snr_list(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) bad_value("snr_list", text);
        const double start = parse_f64("snr_list", trim(parts[0]));
        const double step = parse_f64("snr_list", trim(parts[1]));
        const double stop = parse_f64("snr_list", trim(parts[2]));
        if (step <= 0.0) bad_value("snr_list", text);
        for (double v = start; v <= stop + 1e-9; v += step) out.push_back(v);
    } else {
        for (const auto& token : split(text, ',')) {
            const std::string t = trim(token);
            if (t.empty()) continue;
            out.push_back(parse_f64("snr_list", t));
        }
    }
    if (out.empty()) bad_value("snr_list", text);
    return out;
}

ComplexVec channel_preset_taps(const std::string& name) {
    if (name == "flat") return {Complex(1.0, 0.0)};
    if (name == "paper-fir") return {Complex(0.8, 0.9), Complex(0.6, 0.7)};
    throw ConfigError("unknown channel preset '" + name + "'");
}

void set_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    FrameConfig& f = cfg.link.frame;
    ChannelModel& ch = cfg.link.channel;

    if (key == "n_fft") {
        f.n_fft = parse_u64(key, value);
        f.n_guard = f.n_fft >= f.n_occ ? (f.n_fft - f.n_occ) / 2 : 0;
    } else if (key == "n_occ") {
        f.n_occ = parse_u64(key, value);
        f.n_guard = f.n_fft >= f.n_occ ? (f.n_fft - f.n_occ) / 2 : 0;
    } else if (key == "n_guard") {
        f.n_guard = parse_u64(key, value);
    } else if (key == "n_cp") {
        f.n_cp = parse_u64(key, value);
    } else if (key == "n_data_cols") {
        f.n_data_cols = parse_u64(key, value);
    } else if (key == "power_scaling") {
        f.power_scaling = parse_bool(key, value);
    } else if (key == "null_band_center") {
        f.null_band_center = parse_bool(key, value);
    } else if (key == "preamble_seed") {
        f.preamble_seed = parse_u64(key, value);
    } else if (key == "pilot_seed") {
        f.pilot_seed = parse_u64(key, value);
    } else if (key == "channel") {
        ch.taps = channel_preset_taps(value);
        cfg.channel_name = value;
    } else if (key == "taps") {
        ch.taps = parse_taps(value);
        cfg.channel_name = "custom";
    } else if (key == "snr") {
        if (value == "noiseless" || value == "inf") {
            ch.snr_db.reset();
        } else {
            ch.snr_db = parse_f64(key, value);
        }
    } else if (key == "delay") {
        ch.delay = parse_u64(key, value);
    } else if (key == "seed") {
        cfg.link.master_seed = parse_u64(key, value);
    } else if (key == "sync_threshold") {
        const double t = parse_f64(key, value);
        if (t <= 0.0 || t >= 1.0) bad_value(key, value);
        cfg.link.sync_threshold = t;
    } else if (key == "timing") {
        if (value == "detect") cfg.link.known_timing = false;
        else if (value == "known") cfg.link.known_timing = true;
        else bad_value(key, value);
    } else if (key == "equalizer") {
        if (value == "ls") cfg.link.genie_equalizer = false;
        else if (value == "genie") cfg.link.genie_equalizer = true;
        else bad_value(key, value);
    } else if (key == "pilot_averaging") {
        cfg.link.average_estimates = parse_bool(key, value);
    } else if (key == "snr_corrected") {
        cfg.link.corrected_snr = parse_bool(key, value);
    } else if (key == "max_frame_delay") {
        cfg.link.max_frame_delay = parse_u64(key, value);
    } else if (key == "message") {
        std::vector<std::uint8_t> bytes;
        for (const auto& token : split(value, ',')) {
            const std::string t = trim(token);
            if (t.empty()) continue;
            const std::uint64_t b = parse_u64(key, t);
            if (b > 255) bad_value(key, value);
            bytes.push_back(static_cast<std::uint8_t>(b));
        }
        if (bytes.empty()) bad_value(key, value);
        cfg.link.message = bytes;
    } else if (key == "n_bits") {
        cfg.n_bits = parse_u64(key, value);
    } else if (key == "n_bits_per_point") {
        cfg.n_bits_per_point = parse_u64(key, value);
    } else if (key == "n_frames") {
        cfg.n_frames = parse_u64(key, value);
    } else if (key == "snr_list") {
        cfg.snr_list = parse_snr_list(value);
    } else if (key == "out") {
        cfg.output_dir = value;
    } else if (key == "threads") {
        const std::uint64_t t = parse_u64(key, value);
        if (t < 1) bad_value(key, value);
        cfg.threads = static_cast<unsigned>(t);
    } else if (key == "carrier_freq_ghz") {
        cfg.carrier_freq_ghz = parse_f64(key, value);
    } else if (key == "modulation") {
        cfg.modulation = value;
    } else if (key == "pilot_type") {
        cfg.pilot_type = value;
    } else {
        throw ConfigError("unknown key '" + key + "'");
    }
}

void load_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
        set_key(cfg, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
}

void apply_env_seed(RunConfig& cfg) {
    const char* env = std::getenv("LINKLAB_SEED");
    if (!env) return;
    cfg.link.master_seed = parse_u64("LINKLAB_SEED", env);
}

void RunConfig::validate() const {
    link.frame.validate();
    link.channel.validate();
    if (modulation != "bpsk")
        throw ConfigError("modulation: only 'bpsk' is supported, got '" + modulation + "'");
    if (pilot_type != "block")
        throw ConfigError("pilot_type: only 'block' is supported, got '" + pilot_type + "'");
    if (link.message.empty()) throw ConfigError("message: must not be empty");
    if (experiment == Experiment::Sweep && snr_list.empty())
        throw ConfigError("snr_list: must not be empty");
    if (experiment == Experiment::Chanest && n_frames < 1)
        throw ConfigError("n_frames: must be at least 1");
}

}  // namespace linklab
