// Copyright 2026 The vContact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vcontact/detection.h"
#include "vcontact/errors.h"
#include "vcontact/evaluation.h"
#include "vcontact/exchange.h"
#include "vcontact/exchange_server.h"
#include "vcontact/processing.h"
#include "vcontact/profile_io.h"
#include "vcontact/report_io.h"
#include "vcontact/scenario.h"
#include "vcontact/simulator.h"
#include "vcontact/studies.h"

namespace vcontact::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kTokenEnv = "VCONTACT_UPLOAD_TOKEN";

// A file or endpoint problem that is not a scenario config error.
class CommandError : public Error {
 public:
  using Error::Error;
};

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << bytes;
  out.close();
  if (!out) throw CommandError("cannot write " + path.string());
}

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// CSV goes to csv_path when given, else to out ahead of the summary.
void Emit(std::ostream& out, const std::string& csv_path,
          const std::string& csv, const json& summary) {
  if (csv_path.empty()) {
    out << csv;
  } else {
    WriteFile(csv_path, csv);
  }
  out << summary.dump() << "\n";
}

// Median spacing of the profile's scans; 60 s if it has fewer than two.
Seconds MedianPeriod(const SignalProfile& profile) {
  std::vector<Seconds> gaps;
  const auto& v = profile.vectors();
  for (std::size_t i = 1; i < v.size(); ++i) {
    gaps.push_back(v[i].timestamp() - v[i - 1].timestamp());
  }
  if (gaps.empty()) return 60;
  std::nth_element(gaps.begin(), gaps.begin() + gaps.size() / 2, gaps.end());
  return gaps[gaps.size() / 2];
}

struct DetectionFlags {
  double alpha = 0.2;
  Seconds window = 600;
  Seconds min_exposure = 300;
  Seconds sampling_period = 0;

  void Add(CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "Similarity threshold")
        ->capture_default_str();
    cmd->add_option("--window", window, "Sliding window, seconds")
        ->capture_default_str();
    cmd->add_option("--min-exposure", min_exposure,
                    "Contact time needed inside a window, seconds")
        ->capture_default_str();
    cmd->add_option("--sampling-period", sampling_period,
                    "Seconds each positive scan counts for (default: the "
                    "user profile's median scan spacing)");
  }

  DetectionConfig For(const SignalProfile& user) const {
    DetectionConfig c;
    c.alpha = alpha;
    c.window_length = window;
    c.min_exposure = min_exposure;
    c.sampling_period = sampling_period > 0 ? sampling_period : MedianPeriod(user);
    c.Validate();
    return c;
  }
};

json MetricsJson(const eval::Metrics& m) {
  return {{"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1}};
}

int Calibrate(const std::string& config, const std::string& csv_path,
              std::ostream& out) {
  const eval::Scenario s = eval::LoadScenario(config);
  const auto grid = eval::DefaultAlphaGrid(s.study.alpha_step);
  std::string csv = "seed,alpha,precision,recall,f1\n";
  json seeds = json::array();
  for (const std::uint64_t seed : s.study.seeds) {
    eval::LabeledDataset data = eval::MakeProximityDataset(s.site, seed, s.study);
    eval::LabelWithin(data, s.calibrate_proximity);
    const eval::CalibrationCurve curve = eval::SweepThreshold(data, grid);
    std::istringstream lines(eval::CurveCsv(curve));
    std::string line;
    std::getline(lines, line);  // header
    while (std::getline(lines, line)) {
      csv += std::to_string(seed) + "," + line + "\n";
    }
    json point = MetricsJson(curve.intersection().metrics);
    point["seed"] = seed;
    point["alpha"] = curve.intersection_alpha;
    seeds.push_back(point);
  }
  Emit(out, csv_path, csv,
       {{"command", "calibrate"},
        {"site", s.site.name},
        {"proximity", s.calibrate_proximity},
        {"intersections", seeds}});
  return kExitOk;
}

int ProximityStudy(const std::string& config, const std::string& csv_path,
                   std::ostream& out) {
  const eval::Scenario s = eval::LoadScenario(config);
  const auto rows =
      eval::RunMethodComparison(s.site, s.proximities, s.study, s.methods);
  // Mean F1 per method and proximity across seeds.
  std::map<std::string, std::map<std::string, std::pair<double, int>>> acc;
  for (const auto& r : rows) {
    char k[32];
    std::snprintf(k, sizeof k, "%g", r.proximity);
    auto& cell = acc[r.method][k];
    cell.first += r.metrics.f1;
    ++cell.second;
  }
  json mean_f1 = json::object();
  for (const auto& [method, by_k] : acc) {
    for (const auto& [k, cell] : by_k) {
      mean_f1[method][k] = cell.first / cell.second;
    }
  }
  Emit(out, csv_path, eval::StudyCsv(rows),
       {{"command", "proximity-study"},
        {"site", s.site.name},
        {"rows", rows.size()},
        {"mean_f1", mean_f1}});
  return kExitOk;
}

int InOutStudy(const std::string& config, const std::string& csv_path,
               std::ostream& out) {
  const eval::Scenario s = eval::LoadScenario(config);
  std::string csv = "site,seed,alpha,inside,outside,precision,recall\n";
  double precision = 0;
  double recall = 0;
  for (const std::uint64_t seed : s.study.seeds) {
    const eval::InOutScenario scenario =
        eval::MakeInOutScenario(s.site, seed, s.inout);
    const eval::InOutResult r = eval::RunInOutStudy(
        scenario.area, scenario.inside, scenario.outside, s.inout_alpha);
    csv += s.site.name + "," + std::to_string(seed) + "," +
           Num(s.inout_alpha) + "," + std::to_string(r.inside) + "," +
           std::to_string(r.outside) + "," + Num(r.precision) + "," +
           Num(r.recall) + "\n";
    precision += r.precision;
    recall += r.recall;
  }
  const double n = static_cast<double>(s.study.seeds.size());
  Emit(out, csv_path, csv,
       {{"command", "inout-study"},
        {"site", s.site.name},
        {"alpha", s.inout_alpha},
        {"mean_precision", precision / n},
        {"mean_recall", recall / n}});
  return kExitOk;
}

int Robustness(const std::string& config, const std::string& csv_path,
               std::ostream& out) {
  const eval::Scenario s = eval::LoadScenario(config);
  const eval::RobustnessReport report =
      eval::RunRobustnessSuite(s.site, s.study, s.robustness);
  std::map<std::string, std::size_t> counts;
  for (const auto& row : report.rows) ++counts[row.knob];
  Emit(out, csv_path, eval::RobustnessCsv(report),
       {{"command", "robustness"},
        {"site", s.site.name},
        {"rows", report.rows.size()},
        {"tables", counts}});
  return kExitOk;
}

int Simulate(const std::string& config, const std::string& out_dir,
             std::ostream& out) {
  const eval::Scenario s = eval::LoadScenario(config);
  if (s.trajectories.empty()) {
    throw eval::ConfigError("trajectory", "simulate needs a [trajectory.<name>] section");
  }
  fs::create_directories(out_dir);
  std::vector<SignalProfile> profiles;
  json files = json::array();
  for (const auto& t : s.trajectories) {
    profiles.push_back(sim::SimulateProfile(s.site.env, t.trajectory,
                                            t.sampling_period, t.stream, t.name));
    const fs::path path = fs::path(out_dir) / (t.name + ".vsp");
    WriteFile(path, SerializeProfile(profiles.back()));
    files.push_back({{"name", t.name},
                     {"path", path.string()},
                     {"scans", profiles.back().size()}});
  }
  // Distance from each device to every other one at each of its own scans.
  std::string truth = "device,other,timestamp,distance\n";
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    for (std::size_t j = 0; j < profiles.size(); ++j) {
      if (i == j) continue;
      for (const SignalVector& scan : profiles[i].vectors()) {
        const Timestamp t = scan.timestamp();
        const double d =
            sim::Distance(s.trajectories[i].trajectory.PositionAt(t),
                          s.trajectories[j].trajectory.PositionAt(t));
        truth += s.trajectories[i].name + "," + s.trajectories[j].name + "," +
                 std::to_string(t) + "," + Num(d) + "\n";
      }
    }
  }
  WriteFile(fs::path(out_dir) / "ground_truth.csv", truth);
  out << json{{"command", "simulate"}, {"site", s.site.name}, {"profiles", files}}
             .dump()
      << "\n";
  return kExitOk;
}

int Process(const std::string& input, const std::string& output,
            Seconds lifespan, const std::string& label,
            const std::vector<Timestamp>& stay, std::ostream& out) {
  const SignalProfile profile = ParseSignalProfile(ReadFile(input));
  const ProcessedProfile processed =
      stay.empty() ? BuildCaseProfile(profile, LifespanSchedule(lifespan), label)
                   : BuildAreaProfile(profile, stay[0], stay[1], lifespan, label);
  WriteFile(output, SerializeProfile(processed));
  out << json{{"command", "process"},
              {"kind", stay.empty() ? "case" : "area"},
              {"scans", profile.size()},
              {"segments", processed.size()}}
             .dump()
      << "\n";
  return kExitOk;
}

int Match(const std::string& user_path, const std::vector<std::string>& published,
          const DetectionFlags& flags, std::ostream& out) {
  const SignalProfile user = ParseSignalProfile(ReadFile(user_path));
  std::vector<ProcessedProfile> profiles;
  for (const auto& path : published) {
    profiles.push_back(ParseProcessedProfile(ReadFile(path)));
  }
  const ContactReport report = MatchAndNotify(user, profiles, flags.For(user));
  json summary = ReportSummary(report);
  summary["command"] = "match";
  out << SerializeReport(report) << summary.dump() << "\n";
  return kExitOk;
}

std::optional<std::string> UploadToken() {
  const char* token = std::getenv(kTokenEnv);
  if (token == nullptr || *token == '\0') return std::nullopt;
  return std::string(token);
}

int Serve(const std::string& host, int port, const std::string& data_dir,
          int retention_days, std::ostream& out) {
  // Block the shutdown signals before any server thread starts so that only
  // sigwait below receives them.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  exchange::StoreOptions store_options;
  store_options.retention = Seconds{86400} * retention_days;
  exchange::RecordStore store(data_dir, store_options);
  exchange::ServerOptions options;
  options.upload_token = UploadToken();
  exchange::ExchangeServer server(store, options);
  const int bound = server.Start(host, port);
  out << json{{"command", "serve"}, {"host", host}, {"port", bound},
              {"latest_id", store.LatestId()}}
             .dump()
      << std::endl;
  int received = 0;
  sigwait(&signals, &received);
  server.Stop();
  return kExitOk;
}

int Publish(const std::string& file, const std::string& endpoint,
            std::ostream& out) {
  exchange::HttpTransport transport(endpoint);
  exchange::ExchangeClient client(transport);
  const exchange::RecordId id =
      client.Publish(ReadFile(file), UploadToken().value_or(""));
  out << json{{"command", "publish"}, {"record_id", id}}.dump() << "\n";
  return kExitOk;
}

int Sync(const std::string& endpoint, const std::string& profile_path,
         const std::string& state_dir, const DetectionFlags& flags,
         std::ostream& out) {
  const SignalProfile user = ParseSignalProfile(ReadFile(profile_path));
  exchange::HttpTransport transport(endpoint);
  exchange::ExchangeClient client(transport);
  const exchange::SyncResult result =
      exchange::ClientSync(state_dir, client, user, flags.For(user));
  json summary = ReportSummary(result.report);
  summary["command"] = "sync";
  summary["new_records"] = result.new_records;
  summary["cursor"] = result.cursor;
  out << SerializeReport(result.report) << summary.dump() << "\n";
  return kExitOk;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"vcontact: WiFi-based contact tracing", "vcontact"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string config;
  std::string csv_path;
  auto study_command = [&](const char* name, const char* help, auto fn) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("config", config, "Scenario file")->required();
    cmd->add_option("--csv", csv_path, "Write the CSV here instead of stdout");
    cmd->callback([&, fn] { action = [&, fn] { return fn(config, csv_path, out); }; });
  };
  study_command("calibrate", "Alpha sweep at the calibration proximity", Calibrate);
  study_command("proximity-study", "Calibrated metrics per proximity and method",
                ProximityStudy);
  study_command("inout-study", "In-out detection of an infected area", InOutStudy);
  study_command("robustness", "Filtering, noise, sampling and device tables",
                Robustness);

  std::string out_dir;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Write simulated signal profiles and ground truth");
  simulate->add_option("config", config, "Scenario file")->required();
  simulate->add_option("--out", out_dir, "Output directory")->required();
  simulate->callback([&] { action = [&] { return Simulate(config, out_dir, out); }; });

  std::string input;
  std::string output;
  Seconds lifespan = 1800;
  std::string label;
  std::vector<Timestamp> stay;
  CLI::App* process = app.add_subcommand(
      "process", "Turn a signal profile into a publishable processed profile");
  process->add_option("input", input, "Signal profile")->required();
  process->add_option("--out", output, "Processed profile to write")->required();
  process->add_option("--lifespan", lifespan, "Virus lifespan, seconds")
      ->capture_default_str();
  process->add_option("--label", label, "Case label");
  process->add_option("--area-stay", stay,
                      "START END: build an area profile for this stay")
      ->expected(2);
  process->callback([&] {
    action = [&] { return Process(input, output, lifespan, label, stay, out); };
  });

  std::vector<std::string> published;
  DetectionFlags detection;
  CLI::App* match =
      app.add_subcommand("match", "Match a user profile against processed profiles");
  match->add_option("user", input, "User signal profile")->required();
  match->add_option("published", published, "Processed profiles")->required();
  detection.Add(match);
  match->callback([&] {
    action = [&] { return Match(input, published, detection, out); };
  });

  std::string host = "127.0.0.1";
  int port = 8080;
  std::string data_dir;
  int retention_days = 28;
  CLI::App* serve = app.add_subcommand(
      "serve", std::string("Run the exchange server (upload token from ") +
                   kTokenEnv + ")");
  serve->add_option("--host", host)->capture_default_str();
  serve->add_option("--port", port)->capture_default_str();
  serve->add_option("--data-dir", data_dir, "Record log directory")->required();
  serve->add_option("--retention-days", retention_days)
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  serve->callback([&] {
    action = [&] { return Serve(host, port, data_dir, retention_days, out); };
  });

  std::string endpoint;
  CLI::App* publish = app.add_subcommand("publish", "Upload a processed profile");
  publish->add_option("file", input, "Processed profile")->required();
  publish->add_option("--endpoint", endpoint, "http://host:port")->required();
  publish->callback([&] { action = [&] { return Publish(input, endpoint, out); }; });

  std::string state_dir;
  CLI::App* sync = app.add_subcommand(
      "sync", "Fetch new profiles and match them against the local profile");
  sync->add_option("--endpoint", endpoint, "http://host:port")->required();
  sync->add_option("--profile", input, "User signal profile")->required();
  sync->add_option("--state", state_dir, "Local state directory")->required();
  detection.Add(sync);
  sync->callback([&] {
    action = [&] { return Sync(endpoint, input, state_dir, detection, out); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    return action();
  } catch (const eval::ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace vcontact::cli
