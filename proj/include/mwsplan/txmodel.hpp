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

// Transmit-side OSNR budget for single-wavelength sources (SWS) and the two
// multi-wavelength source (MWS) amplification architectures:
//
//   SWS:       laser -> I/Q modulator chain -> MUX -> booster (BA)
//   joint:     comb -> comb amplifier (CA) -> DEMUX -> modulators -> MUX -> BA
//   per-line:  comb -> DEMUX -> one CA per line -> modulators -> MUX -> BA
//
// Each contribution is referenced at its point of noise injection, so the
// transmit OSNR is the inverse-linear sum of the source OCNR, the CA OSNR
// (co-polarized noise, p = 1) and the BA OSNR (p = 2), all in 12.5 GHz.

#ifndef MWSPLAN_TXMODEL_HPP_
#define MWSPLAN_TXMODEL_HPP_

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mwsplan/units.hpp"

namespace mwsplan {

struct PhysicalConstants {
  double planck_constant = 6.62607015e-34;  // J s
  double reference_bandwidth_hz = 12.5e9;   // 0.1 nm
  double carrier_frequency_hz = 193.4e12;   // mid C-band
};

struct AmplifierSpec {
  double noise_figure_db = 5.0;
  // Total output power limit; unset means unbounded.
  std::optional<double> max_output_power_dbm;

  static AmplifierSpec CombAmplifier() { return {5.0, 26.0}; }
  static AmplifierSpec Booster() { return {5.0, std::nullopt}; }
};

struct LossBudget {
  double modulator_chain_loss_db = 23.0;
  double mux_loss_db = 5.0;
  double modulation_loss_db = 5.0;
  double demux_loss_db = 5.0;

  // Loss between the modulator input and the booster input.
  double TransmitChainLossDb() const {
    return modulator_chain_loss_db + mux_loss_db + modulation_loss_db;
  }
};

enum class SourceKind { kSws, kMws };
enum class FsrMode { kFixed, kFlexible };
enum class CombArchitecture { kJointAmplification, kPerLineAmplification };

struct SourceSpec {
  SourceKind kind = SourceKind::kSws;
  double ocnr_db = 55.0;
  // SWS: laser output power. MWS: power per comb line.
  double power_dbm = 16.0;
  // Per-line power wanted at the modulator input (the SWS output power).
  double target_line_power_dbm = 16.0;
  int n_lines = 1;
  FsrMode fsr_mode = FsrMode::kFlexible;
  CombArchitecture architecture = CombArchitecture::kPerLineAmplification;

  static SourceSpec Sws(double ocnr_db = 55.0, double p_out_dbm = 16.0) {
    SourceSpec s;
    s.ocnr_db = ocnr_db;
    s.power_dbm = p_out_dbm;
    s.target_line_power_dbm = p_out_dbm;
    return s;
  }

  static SourceSpec Mws(CombArchitecture architecture, int n_lines,
                        double ocnr_db = 45.0, double p_line_dbm = -10.0) {
    SourceSpec s;
    s.kind = SourceKind::kMws;
    s.architecture = architecture;
    s.n_lines = n_lines;
    s.ocnr_db = ocnr_db;
    s.power_dbm = p_line_dbm;
    return s;
  }

  void Validate() const {
    if (n_lines < 1) throw std::invalid_argument("source needs n_lines >= 1");
    if (kind == SourceKind::kSws && n_lines != 1) {
      throw std::invalid_argument("an SWS has exactly one line");
    }
    if (std::isnan(ocnr_db) || ocnr_db <= 0.0) {
      throw std::invalid_argument("OCNR must be positive in dB");
    }
  }
};

// The source is too strong for the loss chain: a stage would need negative
// gain to hit its target power.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OsnrContributions {
  double ocnr_db = kInfinity;
  double ca_db = kInfinity;  // infinite when there is no comb amplifier
  double ba_db = kInfinity;
};

struct TxBudgetResult {
  double osnr_tx_db = kInfinity;
  double g_ca_db = 0.0;
  double g_ba_db = 0.0;
  // Total CA output over all lines; -inf for an SWS.
  double ca_output_total_dbm = -kInfinity;
  bool clamped = false;
  OsnrContributions contributions;
};

// ASE power p*h*f_c*B_ref*F_n*(G-1)/2 in watts, in the reference bandwidth.
inline double AseNoisePower(int polarizations, double gain_db,
                            const AmplifierSpec& amp,
                            const PhysicalConstants& consts = {}) {
  if (polarizations != 1 && polarizations != 2) {
    throw std::domain_error("polarization count must be 1 or 2");
  }
  if (!(gain_db >= 0.0)) throw std::domain_error("amplifier gain must be >= 0 dB");
  const double gain = DbToLinear(gain_db);
  const double nf = DbToLinear(amp.noise_figure_db);
  return polarizations * consts.planck_constant * consts.carrier_frequency_hz *
         consts.reference_bandwidth_hz * nf * (gain - 1.0) / 2.0;
}

// Unclamped CA gain bringing one line from p_line (before the DEMUX) to
// p_out at the modulator input.
inline double CaGain(double p_out_dbm, double p_line_dbm, double demux_loss_db) {
  return p_out_dbm - (p_line_dbm - demux_loss_db);
}

inline double CaTotalOutput(double p_line_dbm, double g_ca_db, int n_lines) {
  if (n_lines < 1) throw std::domain_error("n_lines must be >= 1");
  return (p_line_dbm + g_ca_db) + 10.0 * std::log10(static_cast<double>(n_lines));
}

struct ClampedGain {
  double gain_db;
  bool clamped;
};

// Lowers the joint CA gain so the total output sits exactly at max_out_dbm.
inline ClampedGain ClampCaGain(double g_ca_db, double p_line_dbm, int n_lines,
                               double max_out_dbm) {
  if (CaTotalOutput(p_line_dbm, g_ca_db, n_lines) <= max_out_dbm) {
    return {g_ca_db, false};
  }
  const double clamped =
      max_out_dbm - p_line_dbm - 10.0 * std::log10(static_cast<double>(n_lines));
  return {clamped, true};
}

inline TxBudgetResult TxOsnr(const SourceSpec& source, const LossBudget& losses,
                             const AmplifierSpec& ca, const AmplifierSpec& ba,
                             double launch_per_channel_dbm = 0.0,
                             const PhysicalConstants& consts = {}) {
  source.Validate();
  TxBudgetResult r;
  r.contributions.ocnr_db = source.ocnr_db;

  double modulator_input_dbm = source.power_dbm;
  if (source.kind == SourceKind::kMws) {
    double ca_line_output_dbm = 0.0;
    double g_ca = CaGain(source.target_line_power_dbm, source.power_dbm,
                         losses.demux_loss_db);
    if (source.architecture == CombArchitecture::kJointAmplification) {
      if (ca.max_output_power_dbm) {
        const ClampedGain c = ClampCaGain(g_ca, source.power_dbm, source.n_lines,
                                          *ca.max_output_power_dbm);
        g_ca = c.gain_db;
        r.clamped = c.clamped;
      }
      ca_line_output_dbm = source.power_dbm + g_ca;
      modulator_input_dbm = ca_line_output_dbm - losses.demux_loss_db;
      r.ca_output_total_dbm = CaTotalOutput(source.power_dbm, g_ca, source.n_lines);
    } else {
      ca_line_output_dbm = source.target_line_power_dbm;
      modulator_input_dbm = ca_line_output_dbm;
      // One amplifier per line: its own output is a single line.
      r.ca_output_total_dbm = ca_line_output_dbm;
    }
    if (g_ca < 0.0) {
      throw ConfigurationError("comb amplifier would need negative gain (" +
                               std::to_string(g_ca) + " dB)");
    }
    r.g_ca_db = g_ca;
    if (g_ca > 0.0) {
      r.contributions.ca_db =
          ca_line_output_dbm - WattToDbm(AseNoisePower(1, g_ca, ca, consts));
    }
  }

  const double ba_input_dbm = modulator_input_dbm - losses.TransmitChainLossDb();
  const double g_ba = launch_per_channel_dbm - ba_input_dbm;
  if (g_ba < 0.0) {
    throw ConfigurationError("booster would need negative gain (" +
                             std::to_string(g_ba) + " dB)");
  }
  r.g_ba_db = g_ba;
  if (g_ba > 0.0) {
    r.contributions.ba_db =
        launch_per_channel_dbm - WattToDbm(AseNoisePower(2, g_ba, ba, consts));
  }
  r.osnr_tx_db = InverseSumDb({r.contributions.ocnr_db, r.contributions.ca_db,
                               r.contributions.ba_db});
  return r;
}

// --- Parameter sweeps -------------------------------------------------------

enum class SweepVariable { kPLine, kOcnr };

inline std::string_view SweepVariableName(SweepVariable v) {
  return v == SweepVariable::kPLine ? "p_line" : "ocnr";
}

struct TxCurvePoint {
  SweepVariable x_variable;
  double x_value;
  std::string architecture;  // "sws", "joint" or "per_line"
  int n_lines;
  double osnr_tx_db;
  bool clamped;
};

struct TxSweepSettings {
  // Template for the MWS; its architecture and n_lines are overridden.
  SourceSpec mws = SourceSpec::Mws(CombArchitecture::kJointAmplification, 4);
  SourceSpec sws = SourceSpec::Sws();
  std::vector<int> line_counts = {4, 8};
  LossBudget losses;
  AmplifierSpec ca = AmplifierSpec::CombAmplifier();
  AmplifierSpec ba = AmplifierSpec::Booster();
  double launch_per_channel_dbm = 0.0;
  PhysicalConstants consts;
};

// Number of grid points from `from` to `to` inclusive with spacing `step`.
inline int SweepPointCount(double from, double to, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("sweep step must be > 0");
  if (to < from) throw std::invalid_argument("sweep range is empty");
  return static_cast<int>(std::floor((to - from) / step + 1e-9)) + 1;
}

// One curve per (architecture, n_lines) plus the SWS reference, point-major.
inline std::vector<TxCurvePoint> SweepTxOsnr(const TxSweepSettings& settings,
                                             SweepVariable variable, double from,
                                             double to, double step) {
  const int n = SweepPointCount(from, to, step);
  std::vector<TxCurvePoint> out;
  for (int i = 0; i < n; ++i) {
    const double x = from + i * step;
    const TxBudgetResult ref =
        TxOsnr(settings.sws, settings.losses, settings.ca, settings.ba,
               settings.launch_per_channel_dbm, settings.consts);
    out.push_back({variable, x, "sws", 1, ref.osnr_tx_db, false});
    for (CombArchitecture arch : {CombArchitecture::kJointAmplification,
                                  CombArchitecture::kPerLineAmplification}) {
      for (int lines : settings.line_counts) {
        SourceSpec s = settings.mws;
        s.architecture = arch;
        s.n_lines = lines;
        if (variable == SweepVariable::kPLine) {
          s.power_dbm = x;
        } else {
          s.ocnr_db = x;
        }
        const TxBudgetResult r =
            TxOsnr(s, settings.losses, settings.ca, settings.ba,
                   settings.launch_per_channel_dbm, settings.consts);
        out.push_back({variable, x,
                       arch == CombArchitecture::kJointAmplification ? "joint"
                                                                      : "per_line",
                       lines, r.osnr_tx_db, r.clamped});
      }
    }
  }
  return out;
}

}  // namespace mwsplan

#endif  // MWSPLAN_TXMODEL_HPP_
