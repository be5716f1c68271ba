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

// mwsplan command line: transmitter OSNR curves, network planning sweeps and
// the MWS block cost bound.
//
// Exit codes: 0 success, 1 internal error, 2 usage or configuration error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mwsplan/metrics.hpp"
#include "mwsplan/netgraph.hpp"
#include "mwsplan/scenario.hpp"
#include "mwsplan/txmodel.hpp"

namespace {

using mwsplan::ConfigError;

constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

// Opens `dir/file`, or returns nullptr so the caller writes to stdout.
std::unique_ptr<std::ofstream> OpenOutput(const std::string& dir, const std::string& file) {
  if (dir.empty()) return nullptr;
  std::filesystem::create_directories(dir);
  const std::filesystem::path p = std::filesystem::path(dir) / file;
  auto out = std::make_unique<std::ofstream>(p, std::ios::binary);
  if (!*out) throw std::runtime_error("cannot write '" + p.string() + "'");
  return out;
}

std::ostream& Sink(const std::unique_ptr<std::ofstream>& f) {
  return f ? static_cast<std::ostream&>(*f) : std::cout;
}

struct TxOsnrArgs {
  std::string sweep;
  double from = 0.0;
  double to = 0.0;
  double step = 0.5;
  double ocnr_db = 45.0;
  double p_line_dbm = -10.0;
  std::string out;
};

int RunTxOsnr(const TxOsnrArgs& a) {
  const mwsplan::SweepVariable var = a.sweep == "p_line" ? mwsplan::SweepVariable::kPLine
                                                         : mwsplan::SweepVariable::kOcnr;
  mwsplan::TxSweepSettings settings;
  settings.mws.ocnr_db = a.ocnr_db;
  settings.mws.power_dbm = a.p_line_dbm;
  std::vector<mwsplan::TxCurvePoint> points;
  try {
    points = mwsplan::SweepTxOsnr(settings, var, a.from, a.to, a.step);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const mwsplan::ConfigurationError& e) {
    throw ConfigError(e.what());
  }
  const nlohmann::json resolved = {{"command", "txosnr"},
                                   {"sweep", a.sweep},
                                   {"from", a.from},
                                   {"to", a.to},
                                   {"step", a.step},
                                   {"ocnr_db", a.ocnr_db},
                                   {"p_line_dbm", a.p_line_dbm},
                                   {"line_counts", settings.line_counts}};
  auto file = OpenOutput(a.out, "txosnr_" + a.sweep + ".csv");
  mwsplan::WriteTxOsnrCsv(Sink(file), points, resolved);
  return 0;
}

int RunConfig(const mwsplan::ScenarioConfig& config, const std::string& out_dir,
              bool dump_plan) {
  if (dump_plan && out_dir.empty()) throw ConfigError("--dump-plan needs an output directory");
  mwsplan::Topology topology = [&] {
    try {
      return mwsplan::LoadTopology(config.resolved_topology);
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
  }();
  const mwsplan::ScenarioResult result = mwsplan::RunScenario(config, topology, dump_plan);
  auto metrics = OpenOutput(out_dir, "metrics.csv");
  mwsplan::WriteMetricsCsv(Sink(metrics), result.rows, config.resolved);
  if (dump_plan) {
    auto lps = OpenOutput(out_dir, "lightpaths.csv");
    mwsplan::WriteLightpathCsv(*lps, topology, result.plans, config.resolved);
  }
  return 0;
}

struct PlanArgs {
  std::string config;
  std::string topology;
  std::string out;
  bool dump_plan = false;
};

int RunPlan(const PlanArgs& a) {
  mwsplan::ScenarioConfig config = mwsplan::LoadScenarioConfig(a.config);
  if (!a.topology.empty()) {
    config.topology_path = a.topology;
    config.resolved_topology = a.topology;
    config.resolved = mwsplan::ResolvedConfigJson(config);
  }
  return RunConfig(config, a.out.empty() ? config.output_dir : a.out, a.dump_plan);
}

struct SweepArgs {
  std::string topology;
  std::string study = "flexible";
  double art_min = 20.0;
  double art_max = 200.0;
  double art_step = 10.0;
  std::vector<int> n_lines = {4, 8};
  std::vector<double> penalties = {1.0, 3.0, 5.0};
  double fixed_penalty = 1.0;
  std::string out;
  bool dump_plan = false;
};

int RunSweep(const SweepArgs& a) {
  nlohmann::json policies = nlohmann::json::array();
  policies.push_back({{"mode", "sws"}});
  if (a.study == "flexible" || a.study == "all") {
    policies.push_back(
        {{"mode", "flexible_fsr"}, {"penalty_db", a.penalties}, {"n_lines", a.n_lines}});
  }
  if (a.study == "fixed" || a.study == "all") {
    for (int n : a.n_lines) {
      policies.push_back({{"mode", "fixed_fsr"},
                          {"n_lines", n},
                          {"n_cutoff", "all"},
                          {"penalty_db", a.fixed_penalty}});
    }
  }
  const nlohmann::json doc = {
      {"topology", a.topology},
      {"art_sweep", {{"min", a.art_min}, {"max", a.art_max}, {"step", a.art_step}}},
      {"policies", policies}};
  return RunConfig(mwsplan::ParseScenarioConfig(doc.dump()), a.out, a.dump_plan);
}

struct CostArgs {
  std::string baseline;
  std::string mws;
  std::vector<double> shares;
  std::string aggregate = "min";
  std::string out;
};

std::vector<mwsplan::MetricsRow> ReadMetricsFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  return mwsplan::ReadMetricsCsv(in, path);
}

int RunCost(const CostArgs& a) {
  const std::vector<double> shares =
      a.shares.empty() ? mwsplan::DefaultLaserShares() : a.shares;
  for (double s : shares) {
    if (!(s > 0.0 && s < 1.0)) throw ConfigError("--s values must lie in (0, 1)");
  }
  const auto series =
      mwsplan::PairCostInputs(ReadMetricsFile(a.baseline), ReadMetricsFile(a.mws));
  const auto rows = mwsplan::CostTable(
      series, shares,
      a.aggregate == "max" ? mwsplan::CostAggregate::kMax : mwsplan::CostAggregate::kMin);
  const nlohmann::json resolved = {{"command", "cost"},
                                   {"baseline", a.baseline},
                                   {"mws", a.mws},
                                   {"s", shares},
                                   {"aggregate", a.aggregate}};
  auto file = OpenOutput(a.out, "cost.csv");
  mwsplan::WriteCostCsv(Sink(file), rows, resolved);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optical network planning with multi-wavelength sources"};
  app.require_subcommand(1);

  TxOsnrArgs tx;
  CLI::App* txosnr = app.add_subcommand("txosnr", "Transmit OSNR curves per architecture");
  txosnr->add_option("--sweep", tx.sweep, "Swept quantity")
      ->required()
      ->check(CLI::IsMember({"p_line", "ocnr"}));
  txosnr->add_option("--from", tx.from, "First value (dBm or dB)")->required();
  txosnr->add_option("--to", tx.to, "Last value (dBm or dB)")->required();
  txosnr->add_option("--step", tx.step, "Spacing")->capture_default_str();
  txosnr->add_option("--ocnr", tx.ocnr_db, "Comb OCNR when sweeping p_line (dB)")
      ->capture_default_str();
  txosnr->add_option("--p-line", tx.p_line_dbm, "Comb line power when sweeping ocnr (dBm)")
      ->capture_default_str();
  txosnr->add_option("--out", tx.out, "Output directory (stdout if omitted)");

  PlanArgs plan;
  CLI::App* plan_cmd = app.add_subcommand("plan", "Run a scenario file");
  plan_cmd->add_option("--config", plan.config, "Scenario JSON")->required();
  plan_cmd->add_option("--topology", plan.topology, "Override the scenario topology");
  plan_cmd->add_option("--out", plan.out, "Output directory");
  plan_cmd->add_flag("--dump-plan", plan.dump_plan, "Also write lightpaths.csv");

  SweepArgs sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run a standard ART sweep study");
  sweep_cmd->add_option("--topology", sweep.topology, "Topology JSON")->required();
  sweep_cmd->add_option("--study", sweep.study, "Which study")
      ->check(CLI::IsMember({"sws", "flexible", "fixed", "all"}))
      ->capture_default_str();
  sweep_cmd->add_option("--art-min", sweep.art_min, "Tbit/s")->capture_default_str();
  sweep_cmd->add_option("--art-max", sweep.art_max, "Tbit/s")->capture_default_str();
  sweep_cmd->add_option("--art-step", sweep.art_step, "Tbit/s")->capture_default_str();
  sweep_cmd->add_option("--n-lines", sweep.n_lines, "MWS line counts")->capture_default_str();
  sweep_cmd->add_option("--penalties", sweep.penalties, "Flexible-FSR penalties (dB)")
      ->capture_default_str();
  sweep_cmd->add_option("--fixed-penalty", sweep.fixed_penalty, "Fixed-FSR penalty (dB)")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "Output directory");
  sweep_cmd->add_flag("--dump-plan", sweep.dump_plan, "Also write lightpaths.csv");

  CostArgs cost;
  CLI::App* cost_cmd = app.add_subcommand("cost", "MWS block cost bound vs laser share");
  cost_cmd->add_option("--baseline", cost.baseline, "Metrics CSV with sws rows")->required();
  cost_cmd->add_option("--mws", cost.mws, "Metrics CSV with flexible_fsr rows")->required();
  cost_cmd->add_option("--s", cost.shares, "Laser shares (default 0.10..0.60 step 0.05)");
  cost_cmd->add_option("--aggregate", cost.aggregate, "Reduction over ART points")
      ->check(CLI::IsMember({"min", "max"}))
      ->capture_default_str();
  cost_cmd->add_option("--out", cost.out, "Output directory (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(txosnr)) return RunTxOsnr(tx);
    if (app.got_subcommand(plan_cmd)) return RunPlan(plan);
    if (app.got_subcommand(sweep_cmd)) return RunSweep(sweep);
    if (app.got_subcommand(cost_cmd)) return RunCost(cost);
  } catch (const ConfigError& e) {
    std::cerr << "mwsplan: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mwsplan::ParseError& e) {
    std::cerr << "mwsplan: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "mwsplan: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
