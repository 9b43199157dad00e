#include "linklab/report_io.hpp"

#include <cstdio>
#include <fstream>

#include "linklab/errors.hpp"

namespace linklab {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    return out;
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw IoError("short write to " + path);
}

}  // namespace

void write_sweep_csv(const std::string& path, const SweepResult& sweep) {
    auto out = open_out(path);
    out << "snr_db,ber,snr_est_mean,missed_frac\n";
    for (const auto& row : sweep.rows) {
        out << format_double(row.snr_db) << ',' << format_double(row.ber) << ','
            << format_double(row.snr_est_mean) << ',' << format_double(row.missed_frac) << '\n';
    }
    finish(out, path);
}

void write_chanest_csv(const std::string& path, const ChanEstDump& dump) {
    auto out = open_out(path);
    out << "bin,true_re,true_im,est_re,est_im\n";
    for (const auto& row : dump.rows) {
        out << row.bin << ',' << format_double(row.true_h.real()) << ','
            << format_double(row.true_h.imag()) << ',' << format_double(row.est_h.real()) << ','
            << format_double(row.est_h.imag()) << '\n';
    }
    finish(out, path);
}

void write_ber_blocks_csv(const std::string& path, const BerReport& report) {
    auto out = open_out(path);
    out << "block_index,ber\n";
    for (const auto& [index, ber] : report.block_history) {
        out << index << ',' << format_double(ber) << '\n';
    }
    finish(out, path);
}

}  // namespace linklab
