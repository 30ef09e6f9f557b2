// bring: command-line driver for the dessin, cell, cover and monodromy checks.
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bring/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out.flush()) throw io_error("write to '" + path + "' failed");
}

struct Options {
  std::string json_path;
  std::vector<std::string> only;
  std::optional<std::size_t> steps;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::optional<double> tol_residual, tol_match_ratio, tol_lambda;
  std::optional<double> base_t, radius0, radius1, radius_inf;
  std::optional<int> max_halvings;
  std::string config_path;
};

void add_tracking_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config_path, "JSON file with tracking config keys")->check(CLI::ExistingFile);
  cmd->add_option("--steps", o.steps, "steps per loop")->check(CLI::PositiveNumber);
  cmd->add_option("--base-t", o.base_t, "real base point");
  cmd->add_option("--radius0", o.radius0, "loop radius around 0");
  cmd->add_option("--radius1", o.radius1, "loop radius around 1");
  cmd->add_option("--radius-inf", o.radius_inf, "loop radius around infinity");
  cmd->add_option("--tol-residual", o.tol_residual, "root residual tolerance");
  cmd->add_option("--tol-match-ratio", o.tol_match_ratio, "minimum second-best/best matching ratio");
  cmd->add_option("--tol-lambda", o.tol_lambda, "tolerance on lambda^4 = 1");
  cmd->add_option("--max-halvings", o.max_halvings, "step halvings allowed before giving up");
}

bring::VerifyConfig make_config(const Options& o) {
  bring::VerifyConfig cfg;
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw io_error("cannot read '" + o.config_path + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("config: ") + e.what());
    }
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>(), j.erase("seed");
    if (j.contains("samples")) cfg.samples = j["samples"].get<std::size_t>(), j.erase("samples");
    bring::apply_json(cfg.track, j);
  }
  auto& t = cfg.track;
  if (o.steps) t.steps = *o.steps;
  if (o.base_t) t.base_t = *o.base_t;
  if (o.radius0) t.radius0 = *o.radius0;
  if (o.radius1) t.radius1 = *o.radius1;
  if (o.radius_inf) t.radius_inf = *o.radius_inf;
  if (o.tol_residual) t.tol_residual = *o.tol_residual;
  if (o.tol_match_ratio) t.tol_match_ratio = *o.tol_match_ratio;
  if (o.tol_lambda) t.tol_lambda = *o.tol_lambda;
  if (o.max_halvings) t.max_halvings = *o.max_halvings;
  if (o.seed) cfg.seed = *o.seed;
  if (o.samples) cfg.samples = *o.samples;
  cfg.only.insert(o.only.begin(), o.only.end());
  return cfg;
}

int emit_report(const bring::VerificationReport& rep, const Options& o) {
  std::cout << rep.summary();
  if (!o.json_path.empty()) write_file(o.json_path, rep.to_json().dump(2) + "\n");
  return rep.passed() ? kExitPass : kExitFail;
}

bring::Dessin build_target(const std::string& target, const bring::VerifyConfig& cfg) {
  if (target == "D") return bring::build_D();
  if (target == "I4") return bring::build_i4();
  if (target == "union") return bring::union_with_dual(bring::build_i4());
  if (target == "J") return bring::build_j();
  if (target == "icosahedron") return bring::build_icosahedron();
  return bring::sheet_constellation(bring::monodromy_triple(cfg.track));
}

const std::vector<std::string> kTargets{"D", "I4", "union", "J", "sheet", "icosahedron"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial and numerical checks for Bring's curve"};
  app.set_version_flag("--version", bring::kVersion);
  app.require_subcommand(1);

  Options o;
  int n = 0, k = -1;

  auto* verify = app.add_subcommand("verify-all", "run every check and report");
  verify->add_option("--json", o.json_path, "write the JSON report here");
  verify->add_option("--only", o.only, "restrict to modules")->check(CLI::IsMember(bring::verify_modules()));
  verify->add_option("--seed", o.seed, "seed for numerical sampling");
  verify->add_option("--samples", o.samples, "number of numerical samples");
  add_tracking_flags(verify, o);

  auto* cells = app.add_subcommand("cells", "cell census of the real moduli space");
  cells->add_option("--json", o.json_path, "write the report (or enumeration with --n) as JSON");
  cells->add_option("--n", n, "list the cells of this n instead of checking")->check(CLI::Range(3, 8));
  cells->add_option("--k", k, "restrict the listing to k diagonals")->check(CLI::NonNegativeNumber);

  auto* cover = app.add_subcommand("cover", "orientation cover of the n=5 complex and its dessin");
  cover->add_option("--json", o.json_path, "write the report as JSON");
  std::string dessin_out;
  bool reversed = false;
  cover->add_option("--dessin", dessin_out, "write the dessin D in text format");
  cover->add_flag("--reversed", reversed, "read the cover with the opposite orientation");

  auto* dessins = app.add_subcommand("dessins", "icosahedral dessins and their operations");
  dessins->add_option("--json", o.json_path, "write the report as JSON");
  std::string show;
  dessins->add_option("--show", show, "print a target dessin in text format")->check(CLI::IsMember(kTargets));
  add_tracking_flags(dessins, o);

  auto* mono = app.add_subcommand("monodromy", "numerical monodromy of the Bring quintic");
  mono->add_option("--json", o.json_path, "write the monodromy report as JSON");
  mono->add_option("--seed", o.seed, "seed for numerical sampling");
  mono->add_option("--samples", o.samples, "number of numerical samples");
  add_tracking_flags(mono, o);

  auto* exp = app.add_subcommand("export", "write a dessin as a DOT graph");
  std::string target, out_path, format = "dot";
  exp->add_option("--target", target, "dessin to export")->required()->check(CLI::IsMember(kTargets));
  exp->add_option("--out", out_path, "output path")->required();
  exp->add_option("--format", format, "dot or text")->check(CLI::IsMember({"dot", "text"}));
  add_tracking_flags(exp, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    auto cfg = make_config(o);
    if (*verify) return emit_report(bring::run_verify_all(cfg), o);

    if (*cells) {
      if (n == 0) {
        cfg.only = {"cells"};
        return emit_report(bring::run_verify_all(cfg), o);
      }
      std::vector<bring::CellClass> all;
      for (int kk = 0; kk <= n - 3; ++kk) {
        if (k >= 0 && kk != k) continue;
        auto part = bring::enumerate_cells(n, kk);
        all.insert(all.end(), part.begin(), part.end());
      }
      for (const auto& c : all) std::cout << c.to_string() << "\n";
      if (!o.json_path.empty()) write_file(o.json_path, bring::to_json(all).dump(2) + "\n");
      return kExitPass;
    }

    if (*cover) {
      const auto cov = bring::orientation_cover(bring::surface_from_complex5(bring::build_complex5()));
      std::cout << bring::cover_summary(cov).dump() << "\n";
      if (!dessin_out.empty()) write_file(dessin_out, bring::to_text(bring::cover_to_dessin(cov, reversed)));
      cfg.only = {"cover"};
      return emit_report(bring::run_verify_all(cfg), o);
    }

    if (*dessins) {
      if (!show.empty()) {
        const auto d = build_target(show, cfg);
        std::cout << bring::to_text(d) << "passport: " << d.passport().to_string() << "\n";
        return kExitPass;
      }
      cfg.only = {"dessins", "identify"};
      return emit_report(bring::run_verify_all(cfg), o);
    }

    if (*mono) {
      cfg.only = {"monodromy"};
      const auto rep = bring::run_verify_all(cfg);
      std::cout << rep.summary();
      nlohmann::json j{{"version", bring::kVersion}, {"config", rep.config}};
      try {
        j["monodromy"] = bring::to_json(bring::monodromy_triple(cfg.track));
      } catch (const std::exception& e) {
        j["monodromy"] = {{"error", e.what()}};
      }
      j["report"] = rep.to_json();
      if (!o.json_path.empty()) write_file(o.json_path, j.dump(2) + "\n");
      return rep.passed() ? kExitPass : kExitFail;
    }

    if (*exp) {
      const auto d = build_target(target, cfg);
      write_file(out_path, format == "dot" ? bring::to_dot(d, target) : bring::to_text(d));
      std::cout << "wrote " << out_path << " (" << d.dart_count() << " darts)\n";
      return kExitPass;
    }
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
