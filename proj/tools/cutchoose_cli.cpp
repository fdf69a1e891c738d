// cutchoose: command-line front end for the cut-and-choose threshold mechanism.
//
// Exit codes: 0 success, 1 domain error (or a failed `verify`), 2 usage error.

#include "cutchoose/analysis.hpp"
#include "cutchoose/election.hpp"
#include "cutchoose/error.hpp"
#include "cutchoose/json.hpp"
#include "cutchoose/solver.hpp"
#include "cutchoose/strategies.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fs = std::filesystem;
using namespace cutchoose;
using nlohmann::json;

namespace {

constexpr const char* kOutDirEnv = "CUTCHOOSE_OUT_DIR";

/// Relative output paths land under $CUTCHOOSE_OUT_DIR when it is set.
fs::path output_path(const std::string& given) {
  fs::path p(given);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutDirEnv); dir != nullptr && *dir != '\0') {
      return fs::path(dir) / p;
    }
  }
  return p;
}

void write_file(const std::string& given, const std::string& contents) {
  const auto path = output_path(given);
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgs, "cannot write '" + path.string() + "'");
  out << contents;
}

void emit(const json& j, const std::string& out_file) {
  const auto text = j.dump(2) + "\n";
  if (out_file.empty()) {
    std::cout << text;
  } else {
    write_file(out_file, text);
  }
}

/// Shared --districts/--n, --shares, --csv input.
struct ProfileInput {
  std::vector<std::int64_t> districts;
  std::int64_t n = 0;
  std::vector<std::string> shares;
  std::string csv;

  void attach(CLI::App* cmd, bool allow_csv = true) {
    auto* d = cmd->add_option("--districts", districts, "chooser votes per district, e.g. 0,4,4,4")->delimiter(',');
    cmd->add_option("--n", n, "voters per district (with --districts)");
    auto* s = cmd->add_option("--shares", shares, "chooser share per district, e.g. 0.63,1/3")->delimiter(',');
    d->excludes(s);
    if (allow_csv) {
      auto* c = cmd->add_option("--csv", csv, "CSV with header district,votes_a,votes_b");
      c->excludes(d);
      c->excludes(s);
    }
  }

  std::variant<Districting, ShareProfile> profile() const {
    if (!districts.empty()) {
      if (n <= 0) throw CLI::ValidationError("--n", "required and positive with --districts");
      return Districting(n, districts);
    }
    if (!shares.empty()) {
      std::vector<Ratio> parsed;
      for (const auto& s : shares) parsed.push_back(Ratio::parse(s));
      return ShareProfile(std::move(parsed));
    }
    if (!csv.empty()) return to_share_profile(load_csv(csv));
    throw CLI::RequiredError("one of --districts, --shares, --csv");
  }

  AnalysisReport analyze(const AnalysisOptions& options) const {
    if (!csv.empty()) return cutchoose::analyze(load_csv(csv), options);
    return std::visit(
        [&](const auto& p) -> AnalysisReport {
          if constexpr (std::is_same_v<std::decay_t<decltype(p)>, Districting>) {
            return cutchoose::analyze(p, options);
          } else {
            return cutchoose::analyze(p, std::nullopt, options);
          }
        },
        profile());
  }
};

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (auto v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cut-and-choose redistricting with threshold elections"};
  app.require_subcommand(1);

  // elect
  ProfileInput elect_in;
  std::string elect_m = "1/2";
  std::string elect_mode = "independent";
  std::optional<std::uint64_t> elect_seed;
  auto* elect = app.add_subcommand("elect", "run the threshold election on a districting");
  elect_in.attach(elect);
  elect->add_option("--m", elect_m, "threshold in [1/2, 1), as p/q or decimal")->capture_default_str();
  elect->add_option("--mode", elect_mode, "independent | paired")->capture_default_str();
  elect->add_option("--seed", elect_seed, "seed for realizing randomized districts");

  // best-response
  ProfileInput br_in;
  std::string br_cap = "1";
  auto* br = app.add_subcommand("best-response", "chooser's optimal thresholds for a districting");
  br_in.attach(br);
  br->add_option("--cap", br_cap, "stacking cap M; the chooser picks m in [1/2, M)")->capture_default_str();

  // cut
  std::int64_t cut_D = 0, cut_n = 0, cut_B = 0;
  auto* cut = app.add_subcommand("cut", "cutter's equilibrium districting");
  cut->add_option("--D", cut_D, "number of districts")->required();
  cut->add_option("--n", cut_n, "voters per district")->required();
  cut->add_option("--b-total", cut_B, "chooser voters in the state")->required();

  // solve
  std::int64_t solve_D = 0, solve_n = 0, solve_B = 0;
  std::string solve_cap = "1";
  bool solve_chooser_only = false;
  SolverOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "exhaustive minimax for one instance");
  solve->add_option("--D", solve_D, "number of districts")->required();
  solve->add_option("--n", solve_n, "voters per district")->required();
  solve->add_option("--b-total", solve_B, "chooser voters in the state")->required();
  solve->add_option("--cap", solve_cap, "stacking cap M")->capture_default_str();
  solve->add_flag("--cap-chooser-only", solve_chooser_only, "cap limits the chooser but not the cutter");
  solve->add_option("--limit", solve_opts.max_districtings, "enumeration guard")->capture_default_str();
  solve->add_option("--jobs", solve_opts.jobs, "OpenMP threads (0 = default)");

  // verify
  std::int64_t ver_dmin = 2, ver_dmax = 3, ver_nmin = 1, ver_nmax = 4;
  SolverOptions ver_opts;
  std::string ver_out;
  auto* verify = app.add_subcommand("verify", "sweep instances and check the equilibrium formulas");
  verify->add_option("--D-min", ver_dmin)->capture_default_str();
  verify->add_option("--D-max", ver_dmax)->capture_default_str();
  verify->add_option("--n-min", ver_nmin)->capture_default_str();
  verify->add_option("--n-max", ver_nmax)->capture_default_str();
  verify->add_option("--limit", ver_opts.max_districtings, "enumeration guard")->capture_default_str();
  verify->add_option("--jobs", ver_opts.jobs, "OpenMP threads (0 = default)");
  verify->add_option("--out", ver_out, "write the JSON table here instead of stdout");

  // analyze
  ProfileInput an_in;
  std::string an_out, an_svg, an_div = "1/100";
  int an_size = 480;
  auto* an = app.add_subcommand("analyze", "exploitability report for a districting or election data");
  an_in.attach(an);
  an->add_option("--out", an_out, "write the JSON report here instead of stdout");
  an->add_option("--svg", an_svg, "also write the staircase diagram");
  an->add_option("--size", an_size, "SVG size in pixels")->capture_default_str();
  an->add_option("--divergence", an_div, "turnout divergence threshold")->capture_default_str();

  // diagram
  ProfileInput dg_in;
  std::string dg_report, dg_format = "svg", dg_out, dg_m;
  int dg_size = 480;
  auto* dg = app.add_subcommand("diagram", "render a report or districting");
  dg_in.attach(dg);
  dg->add_option("--report", dg_report, "JSON report produced by analyze");
  dg->add_option("--format", dg_format, "svg | json")->capture_default_str();
  dg->add_option("--m", dg_m, "threshold to shade (default: best response)");
  dg->add_option("--size", dg_size, "SVG size in pixels")->capture_default_str();
  dg->add_option("--out", dg_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*elect) {
      const auto mode = parse_allocation_mode(elect_mode);
      const Ratio m = Ratio::parse(elect_m);
      json j;
      std::visit(
          [&](const auto& p) {
            Threshold t = Threshold::share(m);
            if constexpr (std::is_same_v<std::decay_t<decltype(p)>, Districting>) {
              t = canonicalize_threshold(m, p.voters_per_district());
            }
            j = run_election(p, t, mode, elect_seed);
            j["m"] = m;
            j["effective_threshold"] = t.effective() ? json(*t.effective()) : json(nullptr);
          },
          elect_in.profile());
      emit(j, "");
    } else if (*br) {
      const StackingCap cap{Ratio::parse(br_cap)};
      json j;
      std::visit(
          [&](const auto& p) {
            auto response = best_response(p, cap);
            j = response;
            j["seats_at_half"] = response.cells.front().chooser_seats;
            j["exploitability_delta"] = response.value - response.cells.front().chooser_seats;
            j["equalizing"] = is_equalizing(p);
          },
          br_in.profile());
      emit(j, "");
    } else if (*cut) {
      const auto plan = plan_cut(cut_D, cut_n, cut_B);
      const auto response = best_response(plan.districting);
      json j = plan.districting;
      j["value"] = response.value;
      j["contains_half"] = response.contains_half;
      j["optimal_intervals"] = response.optimal_intervals;
      j["target_share"] = plan.target_share;
      j["prediction"] = Ratio(cut_D) * plan.target_share;
      j["pretend_voters"] = plan.pretend_voters;
      j["pretend_plan"] = plan.pretend_plan;
      j["equalizing"] = is_equalizing(plan.districting);
      j["symmetric"] = check_symmetry(districting_function(plan.districting), plan.target_share);
      emit(j, "");
    } else if (*solve) {
      const StackingCap cap{Ratio::parse(solve_cap), !solve_chooser_only};
      emit(minimax(solve_D, solve_n, solve_B, cap, solve_opts), "");
    } else if (*verify) {
      const auto report = verify_theorems(range(ver_dmin, ver_dmax), range(ver_nmin, ver_nmax), ver_opts);
      emit(report, ver_out);
      if (!report.ok()) {
        std::cerr << "verify: " << report.failed << " of " << report.asserted << " asserted instances failed\n";
        return 1;
      }
    } else if (*an) {
      const auto report = an_in.analyze(AnalysisOptions{Ratio::parse(an_div)});
      const auto text = report_to_json(report);
      if (an_out.empty()) {
        std::cout << text;
      } else {
        write_file(an_out, text);
      }
      if (!an_svg.empty()) {
        write_file(an_svg, emit_diagram(report, DiagramFormat::Svg, DiagramOptions{.pixels = an_size, .threshold = std::nullopt}));
      }
    } else if (*dg) {
      const auto format = parse_diagram_format(dg_format);
      AnalysisReport report;
      if (!dg_report.empty()) {
        std::ifstream in(dg_report);
        if (!in) throw Error(ErrorKind::InvalidArgs, "cannot open '" + dg_report + "'");
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        report = report_from_json(text);
      } else {
        report = dg_in.analyze({});
      }
      DiagramOptions options{.pixels = dg_size, .threshold = std::nullopt};
      if (!dg_m.empty()) options.threshold = Ratio::parse(dg_m);
      const auto bytes = emit_diagram(report, format, options);
      if (dg_out.empty()) {
        std::cout << bytes;
      } else {
        write_file(dg_out, bytes);
      }
    }
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
