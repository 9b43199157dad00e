#pragma once

#include <string>

#include "linklab/harness.hpp"

namespace linklab {

/// Deterministic float formatting shared by every CSV writer ("%.10g";
/// non-finite values print as inf/-inf/nan).
std::string format_double(double v);

/// Header: snr_db,ber,snr_est_mean,missed_frac
void write_sweep_csv(const std::string& path, const SweepResult& sweep);

/// Header: bin,true_re,true_im,est_re,est_im
void write_chanest_csv(const std::string& path, const ChanEstDump& dump);

/// Header: block_index,ber
void write_ber_blocks_csv(const std::string& path, const BerReport& report);

}  // namespace linklab
