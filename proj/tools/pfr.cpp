// Command-line front end: validation, enumeration, function operations,
// spatial sweeps and the verification suite.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pfr/pfr.hpp"

namespace fs = std::filesystem;
using pfr::json;

namespace {

/// A frame argument is a JSON file (frame or space) or a name the registry knows.
pfr::FramePtr load_frame(const std::string& arg, pfr::Registry& reg) {
  if (!fs::exists(arg)) return reg.frame(arg);
  const json j = pfr::read_json_file(arg);
  if (j.contains("points")) {
    auto X = pfr::space_from_json(j);
    reg.add_space(X);
    return X->frame();
  }
  auto F = pfr::frame_from_json(j);
  reg.add(F);
  return F;
}

std::vector<pfr::Fn> load_fns(const std::string& path, pfr::Registry& reg) {
  const json j = pfr::read_json_file(path);
  std::vector<pfr::Fn> out;
  if (j.is_array()) {
    for (const auto& x : j) out.push_back(pfr::fn_from_json(x, reg));
  } else {
    out.push_back(pfr::fn_from_json(j, reg));
  }
  return out;
}

json frame_summary(const pfr::FiniteFrame& F) {
  const auto sub = pfr::is_subfit(F);
  json j{{"name", F.name()},
         {"size", F.size()},
         {"boolean", pfr::is_boolean(F)},
         {"subfit", sub.subfit},
         {"extremally_disconnected", pfr::is_extremally_disconnected(F).extremally_disconnected},
         {"completely_regular", pfr::is_completely_regular(F)}};
  if (sub.certificate) j["subfit_certificate"] = {F.name_of(sub.certificate->first), F.name_of(sub.certificate->second)};
  json regular = json::array();
  for (pfr::Elem a = 0; a < F.size(); ++a)
    if (F.pstar2(a) == a) regular.push_back(F.name_of(a));
  j["regular"] = regular;
  return j;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-model engine for frames, sublocales and real functions"};
  app.require_subcommand(1);
  std::vector<std::string> extra;
  app.add_option("--with", extra, "Extra frame or space files to register before loading functions");

  auto* validate = app.add_subcommand("validate", "Validate a frame or space file");
  std::string validate_path;
  validate->add_option("file", validate_path)->required();

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate frames up to isomorphism");
  std::size_t enum_max = 5;
  std::string enum_out;
  enumerate->add_option("--max-size", enum_max)->required();
  enumerate->add_option("--out", enum_out, "Directory for one JSON file per frame");

  auto* sublocales = app.add_subcommand("sublocales", "Sublocale frame coS(L)");
  std::string sub_frame;
  sublocales->add_option("frame", sub_frame, "Frame file or name")->required();

  auto* verify = app.add_subcommand("verify", "Run verification checks");
  std::string suite = "all", report_path;
  pfr::HarnessConfig cfg;
  std::vector<std::uint64_t> seeds;
  bool no_timing = false, list = false;
  verify->add_option("--suite", suite, "all or comma-separated check ids");
  verify->add_option("--max-size", cfg.max_size);
  verify->add_option("--sublocale-max", cfg.sublocale_max);
  verify->add_option("--samples", cfg.samples);
  verify->add_option("--seed", seeds, "Seed (repeatable); default 7, 11, 42");
  verify->add_option("--report", report_path);
  verify->add_flag("--no-timing", no_timing, "Omit timing from the report");
  verify->add_flag("--list", list, "List check ids and exit");

  auto* eval = app.add_subcommand("eval", "Evaluate a function at a rational");
  std::string eval_fn, eval_at;
  eval->add_option("fn", eval_fn)->required();
  eval->add_option("--at", eval_at)->required();

  auto* op = app.add_subcommand("op", "Apply an operation to function files");
  std::string op_name;
  std::vector<std::string> op_files;
  bool op_upper = false, op_pointwise = false;
  op->add_option("operation", op_name)
      ->required()
      ->check(CLI::IsMember({"join", "meet", "neg", "gamma", "delta", "psi", "phi", "regularize"}));
  op->add_option("files", op_files)->required();
  op->add_flag("--upper", op_upper, "regularize: upper regularization instead of lower");
  op->add_flag("--pointwise", op_pointwise, "join/meet: pointwise formulas instead of Hausdorff ones");

  auto* spatial = app.add_subcommand("spatial", "Point-set bridge");
  auto* sweep = spatial->add_subcommand("sweep", "Exhaustive grid sweep over a finite space");
  spatial->require_subcommand(1);
  std::string sweep_space, sweep_grid = "0,1/2,1";
  bool sweep_inf = false;
  sweep->add_option("space", sweep_space)->required();
  sweep->add_option("--grid", sweep_grid);
  sweep->add_flag("--infinities", sweep_inf, "Also allow the values ±∞");

  auto* replay = app.add_subcommand("replay", "Re-run one counterexample");
  std::string replay_path;
  replay->add_option("file", replay_path)->required();

  CLI11_PARSE(app, argc, argv);

  pfr::Registry reg;
  try {
    for (const auto& f : extra) load_frame(f, reg);

    if (*validate) {
      const json j = pfr::read_json_file(validate_path);
      if (j.contains("points")) {
        auto X = pfr::space_from_json(j);
        print({{"valid", true},
               {"space", X->name()},
               {"points", X->size()},
               {"T_D", pfr::is_TD(*X)},
               {"T1", pfr::is_T1(*X)},
               {"frame", frame_summary(*X->frame())}});
      } else {
        auto F = pfr::frame_from_json(j);
        if (auto bad = pfr::check_laws(*F)) {
          print({{"valid", false}, {"law", bad->law}, {"witness", bad->witness}});
          return 1;
        }
        json out = frame_summary(*F);
        out["valid"] = true;
        print(out);
      }
      return 0;
    }

    if (*enumerate) {
      auto frames = pfr::enumerate_frames(enum_max);
      json counts = json::object();
      for (const auto& [n, c] : pfr::count_by_size(frames)) counts[std::to_string(n)] = c;
      if (!enum_out.empty()) {
        fs::create_directories(enum_out);
        for (const auto& F : frames) std::ofstream(fs::path(enum_out) / (F->name() + ".json")) << pfr::frame_to_json(*F).dump(2) << "\n";
      }
      json names = json::array();
      for (const auto& F : frames) names.push_back(F->name());
      print({{"max_size", enum_max}, {"counts", counts}, {"frames", names}});
      return 0;
    }

    if (*sublocales) {
      auto F = load_frame(sub_frame, reg);
      print(pfr::sublocale_frame_to_json(*reg.sublocales(F->name())));
      return 0;
    }

    if (*verify) {
      if (list) {
        for (const auto& c : pfr::catalogue()) std::cout << c.id << "  " << c.anchor << "\n";
        return 0;
      }
      if (!seeds.empty()) cfg.seeds = seeds;
      std::vector<std::string> ids;
      if (suite != "all") {
        std::stringstream ss(suite);
        std::string id;
        while (std::getline(ss, id, ','))
          if (!id.empty()) ids.push_back(id);
      }
      const auto report = pfr::run_suite(ids, cfg);
      for (const auto& c : report.checks) {
        std::cout << (c.status == pfr::Status::pass ? "PASS" : c.status == pfr::Status::fail ? "FAIL" : "OBS ") << "  "
                  << c.id << "  (" << c.stats.value("instances", std::size_t(0)) << " instances)\n";
      }
      if (!report_path.empty()) std::ofstream(report_path) << report.to_json(!no_timing).dump(2) << "\n";
      return report.ok() ? 0 : 1;
    }

    if (*eval) {
      const auto fns = load_fns(eval_fn, reg);
      const pfr::Rational at = pfr::parse_rational(eval_at);
      json out = json::array();
      for (const auto& f : fns)
        out.push_back({{"at", pfr::to_string(at)}, {"lower", f.M().name_of(f.lower_at(at))}, {"upper", f.M().name_of(f.upper_at(at))}});
      print(out.size() == 1 ? out[0] : out);
      return 0;
    }

    if (*op) {
      std::vector<pfr::Fn> fns;
      for (const auto& p : op_files)
        for (auto& f : load_fns(p, reg)) fns.push_back(std::move(f));
      auto one = [&]() -> const pfr::Fn& {
        if (fns.size() != 1) throw pfr::Error(pfr::ErrorKind::SchemaError, op_name + " takes exactly one function");
        return fns.front();
      };
      std::optional<pfr::Fn> result;
      if (op_name == "join") {
        if (op_pointwise) {
          result = fns.at(0);
          for (std::size_t i = 1; i < fns.size(); ++i) result = pfr::join_pointwise(*result, fns[i]);
        } else {
          result = pfr::join_hausdorff(fns);
        }
      } else if (op_name == "meet") {
        if (op_pointwise) {
          result = fns.at(0);
          for (std::size_t i = 1; i < fns.size(); ++i) result = pfr::meet_pointwise(*result, fns[i]);
        } else {
          result = pfr::meet_hausdorff(fns);
        }
      } else if (op_name == "neg") {
        result = pfr::neg(one());
      } else if (op_name == "psi") {
        result = pfr::psi(one());
      } else if (op_name == "phi") {
        result = pfr::phi(one());
      } else if (op_name == "gamma") {
        result = pfr::gamma(one(), reg.booleanization(one().M().name()));
      } else if (op_name == "delta") {
        const std::string& name = one().M().name();
        if (name.rfind("B(", 0) != 0 || name.back() != ')')
          throw pfr::Error(pfr::ErrorKind::SchemaError, "delta expects a function valued in B(L)");
        result = pfr::delta(one(), reg.booleanization(name.substr(2, name.size() - 3)));
      } else {
        result = op_upper ? pfr::upper_regularization(one()) : pfr::lower_regularization(one());
      }
      print(pfr::fn_to_json(*result));
      return 0;
    }

    if (*sweep) {
      const json j = pfr::read_json_file(sweep_space);
      auto X = pfr::space_from_json(j);
      const auto rep = pfr::semicontinuity_transfer_check(X, pfr::grid_from_string(sweep_grid, sweep_inf));
      print({{"space", X->name()}, {"functions", rep.functions}, {"pairs", rep.pairs}, {"mismatches", rep.mismatches}});
      return rep.mismatches.empty() ? 0 : 1;
    }

    if (*replay) {
      const bool ok = pfr::replay(pfr::read_json_file(replay_path));
      std::cout << (ok ? "pass" : "fail") << "\n";
      return ok ? 0 : 1;
    }
  } catch (const pfr::Error& e) {
    std::cerr << pfr::error_to_json(e).dump() << "\n";
    return 2;
  }
  return 0;
}
