// Copyright 2026 The mwsplan Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Path-level SNR: transmitter OSNR, span ASE and closed-form GN nonlinear
// interference, plus the transceiver configuration table and feasibility.

#ifndef MWSPLAN_PHYS_HPP_
#define MWSPLAN_PHYS_HPP_

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "mwsplan/netgraph.hpp"
#include "mwsplan/txmodel.hpp"
#include "mwsplan/units.hpp"

namespace mwsplan {

struct FiberParams {
  double attenuation_db_per_km = 0.2;
  double beta2_ps2_per_km = -21.7;
  double gamma_per_w_km = 1.3;
  double span_length_km = kSpanLengthKm;
  double span_amp_noise_figure_db = 5.0;
  // NLI is evaluated as if this much spectrum were lit at the reference PSD.
  double nli_loaded_bandwidth_ghz = 5000.0;
  // Launch power per channel at the reference symbol rate (constant PSD).
  double reference_launch_dbm = 0.0;
  double reference_symbol_rate_gbd = 32.0;

  void Validate() const {
    if (!(attenuation_db_per_km > 0.0) || !(gamma_per_w_km > 0.0) ||
        !(span_length_km > 0.0) || !(nli_loaded_bandwidth_ghz > 0.0) ||
        !(reference_symbol_rate_gbd > 0.0)) {
      throw std::invalid_argument("fiber parameters must be positive");
    }
    if (beta2_ps2_per_km == 0.0) throw std::invalid_argument("beta2 must be non-zero");
  }
};

enum class Modulation { kQpsk, k16Qam, k64Qam };

inline int BitsPerSymbol(Modulation m) {
  switch (m) {
    case Modulation::kQpsk: return 2;
    case Modulation::k16Qam: return 4;
    case Modulation::k64Qam: return 6;
  }
  return 0;
}

inline std::string ModulationName(Modulation m) {
  switch (m) {
    case Modulation::kQpsk: return "QPSK";
    case Modulation::k16Qam: return "16QAM";
    case Modulation::k64Qam: return "64QAM";
  }
  return "?";
}

inline constexpr double kSlotWidthGhz = 12.5;
inline constexpr double kFecRate = 0.8;

struct TransceiverConfig {
  double symbol_rate_gbd = 0.0;
  Modulation modulation = Modulation::kQpsk;
  double required_snr_db = 0.0;
  double channel_spacing_ghz = 0.0;
  int width_slots = 0;
  double data_rate_gbps = 0.0;

  std::string Label() const {
    return ModulationName(modulation) + "@" +
           std::to_string(static_cast<int>(symbol_rate_gbd));
  }
  bool operator==(const TransceiverConfig&) const = default;
};

inline TransceiverConfig MakeConfig(double sr_gbd, Modulation m, double required_snr_db,
                                    int width_slots) {
  return {sr_gbd,
          m,
          required_snr_db,
          width_slots * kSlotWidthGhz,
          width_slots,
          2.0 * BitsPerSymbol(m) * sr_gbd * kFecRate};
}

// Required SNR per (symbol rate, modulation) at the FEC threshold.
inline const std::vector<TransceiverConfig>& TransceiverTable() {
  static const std::vector<TransceiverConfig> table = [] {
    const double rates[] = {35, 70, 105, 140};
    const int widths[] = {3, 6, 9, 12};
    const double qpsk[] = {6.2, 6.7, 7.2, 7.7};
    const double qam16[] = {13.0, 13.5, 14.0, 14.5};
    const double qam64[] = {19.1, 19.6, 20.1, 20.6};
    std::vector<TransceiverConfig> t;
    for (int i = 0; i < 4; ++i) t.push_back(MakeConfig(rates[i], Modulation::kQpsk, qpsk[i], widths[i]));
    for (int i = 0; i < 4; ++i) t.push_back(MakeConfig(rates[i], Modulation::k16Qam, qam16[i], widths[i]));
    for (int i = 0; i < 4; ++i) t.push_back(MakeConfig(rates[i], Modulation::k64Qam, qam64[i], widths[i]));
    return t;
  }();
  return table;
}

// Data rate descending, narrower block first on ties.
inline bool LadderOrder(const TransceiverConfig& x, const TransceiverConfig& y) {
  if (x.data_rate_gbps != y.data_rate_gbps) return x.data_rate_gbps > y.data_rate_gbps;
  if (x.width_slots != y.width_slots) return x.width_slots < y.width_slots;
  return x.required_snr_db < y.required_snr_db;
}

inline const std::vector<TransceiverConfig>& ConfigLadder() {
  static const std::vector<TransceiverConfig> ladder = [] {
    std::vector<TransceiverConfig> l = TransceiverTable();
    std::stable_sort(l.begin(), l.end(), LadderOrder);
    return l;
  }();
  return ladder;
}

struct SnrBreakdown {
  double snr_tx_db = kInfinity;
  double snr_ase_db = kInfinity;
  double snr_nli_db = kInfinity;
  double snr_total_db = kInfinity;

  bool operator==(const SnrBreakdown&) const = default;
};

enum class SnrMode { kLinearOnly, kFull };

inline double LaunchPowerDbm(double sr_gbd, const FiberParams& fiber = {}) {
  if (!(sr_gbd > 0.0)) throw std::domain_error("symbol rate must be > 0");
  return fiber.reference_launch_dbm +
         10.0 * std::log10(sr_gbd / fiber.reference_symbol_rate_gbd);
}

// Span lengths along the path: each link is cut into ceil(L / span) spans and
// the last one keeps its true length.
inline std::vector<double> SpanLengths(const RoutePath& path, const FiberParams& fiber) {
  std::vector<double> spans;
  for (double length : path.link_lengths_km) {
    const int n = SpanCount(length, fiber.span_length_km);
    for (int i = 0; i < n - 1; ++i) spans.push_back(fiber.span_length_km);
    spans.push_back(length - (n - 1) * fiber.span_length_km);
  }
  return spans;
}

inline void RequireSpans(const RoutePath& path) {
  if (path.link_lengths_km.empty()) throw std::domain_error("path has no spans");
}

// SNR against span ASE. Each EDFA exactly compensates its span loss.
inline double AseSnrDb(const RoutePath& path, double sr_gbd, const FiberParams& fiber,
                       const PhysicalConstants& consts = {}) {
  RequireSpans(path);
  const AmplifierSpec edfa{fiber.span_amp_noise_figure_db, std::nullopt};
  double noise_ref_w = 0.0;
  for (double span_km : SpanLengths(path, fiber)) {
    noise_ref_w += AseNoisePower(2, fiber.attenuation_db_per_km * span_km, edfa, consts);
  }
  const double in_band_w = noise_ref_w * (sr_gbd * 1e9 / consts.reference_bandwidth_hz);
  return WattToDbm(DbmToWatt(LaunchPowerDbm(sr_gbd, fiber))) - WattToDbm(in_band_w);
}

// Incoherent closed-form GN estimate over a fully loaded band.
inline double GnNliSnrDb(const RoutePath& path, double sr_gbd, const FiberParams& fiber) {
  RequireSpans(path);
  // Field attenuation in 1/m.
  const double alpha = fiber.attenuation_db_per_km / (10.0 * std::log10(std::numbers::e)) / 1e3 / 2.0;
  const double beta2 = std::abs(fiber.beta2_ps2_per_km) * 1e-24 / 1e3;  // s^2/m
  const double gamma = fiber.gamma_per_w_km / 1e3;                      // 1/(W m)
  const double psd = DbmToWatt(fiber.reference_launch_dbm) /
                     (fiber.reference_symbol_rate_gbd * 1e9);  // W/Hz
  const double bandwidth = fiber.nli_loaded_bandwidth_ghz * 1e9;
  const double l_eff_a = 1.0 / (2.0 * alpha);
  const double asinh_term =
      std::asinh(std::numbers::pi * std::numbers::pi / 2.0 * beta2 * l_eff_a * bandwidth *
                 bandwidth) /
      (std::numbers::pi * beta2 * l_eff_a);
  double g_nli = 0.0;
  for (double span_km : SpanLengths(path, fiber)) {
    const double l_eff = (1.0 - std::exp(-2.0 * alpha * span_km * 1e3)) / (2.0 * alpha);
    g_nli += 8.0 / 27.0 * gamma * gamma * psd * psd * psd * l_eff * l_eff * asinh_term;
  }
  const double sr_hz = sr_gbd * 1e9;
  return LinearToDb((psd * sr_hz) / (g_nli * sr_hz));
}

// Converts an OSNR in the reference bandwidth to an SNR in the signal band.
inline double OsnrToSnrDb(double osnr_db, double sr_gbd,
                          const PhysicalConstants& consts = {}) {
  return osnr_db - 10.0 * std::log10(sr_gbd * 1e9 / consts.reference_bandwidth_hz);
}

// Per-route quantities that do not depend on the symbol rate (constant PSD).
struct RouteBudget {
  double snr_ase_db = kInfinity;
  double snr_nli_db = kInfinity;

  static RouteBudget For(const RoutePath& path, const FiberParams& fiber) {
    return {AseSnrDb(path, fiber.reference_symbol_rate_gbd, fiber),
            GnNliSnrDb(path, fiber.reference_symbol_rate_gbd, fiber)};
  }

  SnrBreakdown Evaluate(double sr_gbd, double osnr_tx_db, SnrMode mode) const {
    SnrBreakdown b;
    b.snr_tx_db = OsnrToSnrDb(osnr_tx_db, sr_gbd);
    b.snr_ase_db = snr_ase_db;
    b.snr_nli_db = mode == SnrMode::kFull ? snr_nli_db : kInfinity;
    b.snr_total_db = InverseSumDb({b.snr_tx_db, b.snr_ase_db, b.snr_nli_db});
    return b;
  }
};

inline SnrBreakdown PathSnr(const RoutePath& path, const TransceiverConfig& config,
                            double osnr_tx_db, const FiberParams& fiber,
                            SnrMode mode = SnrMode::kFull) {
  SnrBreakdown b;
  b.snr_tx_db = OsnrToSnrDb(osnr_tx_db, config.symbol_rate_gbd);
  b.snr_ase_db = AseSnrDb(path, config.symbol_rate_gbd, fiber);
  b.snr_nli_db = mode == SnrMode::kFull ? GnNliSnrDb(path, config.symbol_rate_gbd, fiber)
                                        : kInfinity;
  b.snr_total_db = InverseSumDb({b.snr_tx_db, b.snr_ase_db, b.snr_nli_db});
  return b;
}

// Configs whose threshold is met, in ladder order. `snr_of` maps a config to
// the SNR it would see.
template <typename SnrFn>
std::vector<TransceiverConfig> FilterFeasible(SnrFn&& snr_of) {
  std::vector<TransceiverConfig> out;
  for (const TransceiverConfig& c : ConfigLadder()) {
    if (c.required_snr_db <= snr_of(c)) out.push_back(c);
  }
  return out;
}

inline std::vector<TransceiverConfig> FeasibleConfigs(const RoutePath& path,
                                                      double osnr_tx_db,
                                                      const FiberParams& fiber,
                                                      SnrMode mode) {
  const RouteBudget budget = RouteBudget::For(path, fiber);
  return FilterFeasible([&](const TransceiverConfig& c) {
    return budget.Evaluate(c.symbol_rate_gbd, osnr_tx_db, mode).snr_total_db;
  });
}

}  // namespace mwsplan

#endif  // MWSPLAN_PHYS_HPP_
