#ifndef BRING_VERIFY_HPP
#define BRING_VERIFY_HPP

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bring/cells.hpp"
#include "bring/dessin.hpp"
#include "bring/monodromy.hpp"
#include "bring/platonic.hpp"
#include "bring/surface.hpp"

namespace bring {

inline constexpr const char* kVersion = "1.0.0";

enum class CheckStatus { Pass, Fail, Info };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "info";
  }
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string observed;
  std::string expected;
  std::string anchor;
};

struct VerifyConfig {
  TrackConfig track;
  std::uint64_t seed = 20240;
  std::size_t samples = 100;
  std::set<std::string> only;  // empty = every module

  bool wants(const std::string& module) const { return only.empty() || only.count(module) != 0; }
};

inline const std::vector<std::string>& verify_modules() {
  static const std::vector<std::string> m{"cells", "cover", "dessins", "identify", "monodromy"};
  return m;
}

struct VerificationReport {
  std::string version = kVersion;
  nlohmann::json config;
  std::vector<CheckResult> checks;

  /// Pass iff every non-info check passes.
  bool passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::Fail; });
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["version"] = version;
    j["config"] = config;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
      j["checks"].push_back({{"name", c.name},
                             {"status", to_string(c.status)},
                             {"observed", c.observed},
                             {"expected", c.expected},
                             {"anchor", c.anchor}});
    j["status"] = passed() ? "pass" : "fail";
    return j;
  }

  std::string summary() const {
    std::ostringstream out;
    for (const auto& c : checks)
      out << "[" << to_string(c.status) << "] " << c.name << ": " << c.observed << " (expected " << c.expected
          << ")\n";
    out << "status: " << (passed() ? "pass" : "fail") << " (" << checks.size() << " checks)\n";
    return out.str();
  }
};

inline nlohmann::json to_json(const TrackConfig& t) {
  return {{"base_t", {t.base_t.real(), t.base_t.imag()}},
          {"radius0", t.radius0},
          {"radius1", t.radius1},
          {"radius_inf", t.radius_inf},
          {"steps", t.steps},
          {"tol_residual", t.tol_residual},
          {"tol_match_ratio", t.tol_match_ratio},
          {"tol_lambda", t.tol_lambda},
          {"max_halvings", t.max_halvings},
          {"branch", t.branch}};
}

/// Overrides fields present in `j`; unknown keys are rejected.
inline void apply_json(TrackConfig& t, const nlohmann::json& j) {
  for (const auto& [key, v] : j.items()) {
    if (key == "base_t") {
      t.base_t = v.is_array() ? cplx{v.at(0).get<double>(), v.at(1).get<double>()} : cplx{v.get<double>(), 0};
    } else if (key == "radius0") {
      t.radius0 = v.get<double>();
    } else if (key == "radius1") {
      t.radius1 = v.get<double>();
    } else if (key == "radius_inf") {
      t.radius_inf = v.get<double>();
    } else if (key == "steps") {
      t.steps = v.get<std::size_t>();
    } else if (key == "tol_residual") {
      t.tol_residual = v.get<double>();
    } else if (key == "tol_match_ratio") {
      t.tol_match_ratio = v.get<double>();
    } else if (key == "tol_lambda") {
      t.tol_lambda = v.get<double>();
    } else if (key == "max_halvings") {
      t.max_halvings = v.get<int>();
    } else if (key == "branch") {
      t.branch = v.get<int>();
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
}

inline nlohmann::json cover_summary(const OrientedCover& cov) {
  const auto& cx = cov.complex;
  const bool orientable = cov.components == 1 && is_orientable(cx);
  nlohmann::json j{{"faces", cx.faces.size()},
                   {"edges", cx.edges.size()},
                   {"vertices", cx.vertex_count},
                   {"components", cov.components},
                   {"orientable", orientable}};
  j["genus"] = orientable ? nlohmann::json(surface_genus(cx)) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json to_json(const TrackResult& r) {
  return {{"pi", r.pi.to_string()},
          {"lambda", {r.lambda.real(), r.lambda.imag()}},
          {"lambda_error", r.lambda_error},
          {"max_residual", r.max_residual},
          {"min_separation", r.min_separation},
          {"min_match_ratio", r.min_ratio},
          {"steps_used", r.steps_used},
          {"halvings", r.halvings}};
}

inline nlohmann::json to_json(const MonodromyTriple& m) {
  return {{"pi0", m.pi0.to_string()},
          {"pi1", m.pi1.to_string()},
          {"pi_inf", m.pi_inf.to_string()},
          {"inverted_convention", m.inverted_convention},
          {"direct_inf_matches", m.direct_inf_matches},
          {"loops", {{"0", to_json(m.loop0)}, {"1", to_json(m.loop1)}, {"inf", to_json(m.loop_inf)}}}};
}

inline nlohmann::json to_json(const std::vector<CellClass>& cells) {
  auto arr = nlohmann::json::array();
  for (const auto& c : cells) {
    auto diags = nlohmann::json::array();
    for (auto [a, b] : c.representative.diagonals) diags.push_back({a, b});
    arr.push_back({{"n", c.n()},
                   {"labels", c.representative.labels},
                   {"diags", diags},
                   {"dimension", c.dimension()},
                   {"orbit_size", c.orbit_size},
                   {"text", c.to_string()}});
  }
  return arr;
}

namespace detail {

inline std::string counts(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "/" : "") + std::to_string(v[i]);
  return s;
}

struct CheckSink {
  std::vector<CheckResult>& out;
  void add(std::string name, bool ok, std::string observed, std::string expected, std::string anchor) {
    out.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(observed),
                   std::move(expected), std::move(anchor)});
  }
  void info(std::string name, std::string observed, std::string expected, std::string anchor) {
    out.push_back({std::move(name), CheckStatus::Info, std::move(observed), std::move(expected), std::move(anchor)});
  }
  // Runs `body`; an exception becomes a failed check under `name`.
  void guarded(const std::string& name, const std::string& anchor, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(name, false, std::string("error: ") + e.what(), "no error", anchor);
    }
  }
};

inline std::string describe(const GroupClosure& g) { return std::to_string(g.order()) + " " + identify_group(g).to_string(); }

inline void cells_checks(CheckSink& sink) {
  sink.guarded("cells.census_n5", "cell counts of the n=5 decomposition", [&] {
    std::vector<std::size_t> c;
    for (int k = 0; k <= 2; ++k) c.push_back(enumerate_cells(5, k).size());
    sink.add("cells.census_n5", c == std::vector<std::size_t>{12, 30, 15}, counts(c), "12/30/15",
             "cell counts of the n=5 decomposition");
  });
  sink.guarded("cells.census_n4", "n=4 decomposition is a circle of 3+3 cells", [&] {
    std::vector<std::size_t> c{enumerate_cells(4, 0).size(), enumerate_cells(4, 1).size()};
    sink.add("cells.census_n4", c == std::vector<std::size_t>{3, 3}, counts(c), "3/3",
             "n=4 decomposition is a circle of 3+3 cells");
  });
  sink.guarded("cells.census_n6", "(n-1)!/2 top-dimensional cells", [&] {
    const auto c = enumerate_cells(6, 0).size();
    sink.add("cells.census_n6", c == 60, std::to_string(c), "60", "(n-1)!/2 top-dimensional cells");
  });
  sink.guarded("cells.refinement_law", "boundary cells add one diagonal", [&] {
    bool ok = true;
    std::size_t checked = 0;
    for (int k = 0; k <= 1; ++k) {
      for (const auto& c : enumerate_cells(5, k)) {
        const auto r = refinements(c);
        ok = ok && r.size() == (k == 0 ? 5u : 2u);
        for (const auto& x : r) ok = ok && x.dimension() == c.dimension() - 1;
        ++checked;
      }
    }
    sink.add("cells.refinement_law", ok, std::to_string(checked) + " cells, faces->5 edges, edges->2 vertices",
             "every refinement drops dimension by one", "boundary cells add one diagonal");
  });
}

inline void cover_checks(CheckSink& sink) {
  sink.guarded("cover.base_surface", "the compactified n=5 space is non-orientable", [&] {
    const auto s = surface_from_complex5(build_complex5());
    const auto chi = euler_characteristic(s);
    const bool orient = is_orientable(s);
    sink.add("cover.base_surface", chi == -3 && !orient,
             "chi=" + std::to_string(chi) + " orientable=" + (orient ? "true" : "false"), "chi=-3 orientable=false",
             "the compactified n=5 space is non-orientable");
  });
  sink.guarded("cover.orientation_cover", "orientation cover has genus 4", [&] {
    const auto j = cover_summary(orientation_cover(surface_from_complex5(build_complex5())));
    const nlohmann::json want{{"faces", 24}, {"edges", 60}, {"vertices", 30},
                              {"components", 1}, {"orientable", true}, {"genus", 4}};
    sink.add("cover.orientation_cover", j == want, j.dump(), want.dump(), "orientation cover has genus 4");
  });
  sink.guarded("cover.dessin_D", "D: 30 black of valency 4, 60 white, 24 faces", [&] {
    const auto d = build_D();
    const Passport want{CycleType::uniform(4, 30), CycleType::uniform(2, 60), CycleType::uniform(5, 24)};
    const bool ok = d.dart_count() == 120 && d.is_connected() && d.passport() == want && d.genus() == 4;
    sink.add("cover.dessin_D", ok,
             d.passport().to_string() + " darts=" + std::to_string(d.dart_count()) + " genus=" +
                 std::to_string(d.is_connected() ? d.genus() : -1),
             want.to_string() + " darts=120 genus=4", "D: 30 black of valency 4, 60 white, 24 faces");
  });
  sink.guarded("cover.D_regular", "S5 acts transitively on D; D is regular", [&] {
    const auto g = automorphism_group(build_D());
    const bool ok = g.order() == 120 && acts_freely(g) && identify_group(g).kind == GroupKind::S5;
    sink.add("cover.D_regular", ok, describe(g) + (acts_freely(g) ? " free" : " not free"), "120 S5 free",
             "S5 acts transitively on D; D is regular");
  });
}

inline void dessin_checks(CheckSink& sink) {
  sink.guarded("dessins.icosahedron", "icosahedron: 30 edges, 12 vertices, sphere", [&] {
    const auto d = build_icosahedron();
    const Passport want{CycleType::uniform(5, 12), CycleType::uniform(2, 30), CycleType::uniform(3, 20)};
    const auto g = automorphism_group(d);
    sink.add("dessins.icosahedron", d.passport() == want && d.genus() == 0 && g.order() == 60,
             d.passport().to_string() + " genus=" + std::to_string(d.genus()) + " aut=" + std::to_string(g.order()),
             want.to_string() + " genus=0 aut=60", "icosahedron: 30 edges, 12 vertices, sphere");
  });
  sink.guarded("dessins.i4", "I4 is regular of genus 4 with automorphism group A5", [&] {
    const auto d = build_i4();
    const Passport want{CycleType::uniform(5, 12), CycleType::uniform(2, 30), CycleType::uniform(5, 12)};
    const auto g = automorphism_group(d);
    const bool ok = d.passport() == want && d.genus() == 4 && g.order() == 60 &&
                    identify_group(g).kind == GroupKind::A5 && acts_freely(g);
    sink.add("dessins.i4", ok, d.passport().to_string() + " genus=" + std::to_string(d.genus()) + " aut=" + describe(g),
             want.to_string() + " genus=4 aut=60 A5", "I4 is regular of genus 4 with automorphism group A5");
  });
  sink.guarded("dessins.i4_self_dual", "I4 and its dual are isomorphic", [&] {
    const auto d = build_i4();
    const auto h = isomorphic(d, dual(d));
    const bool ok = h && is_isomorphism(d, dual(d), h->map);
    sink.add("dessins.i4_self_dual", ok, ok ? "isomorphism found" : "none", "isomorphism found",
             "I4 and its dual are isomorphic");
  });
  sink.guarded("dessins.union", "I4 u I4* has automorphism group S5", [&] {
    const auto d = union_with_dual(build_i4());
    const Passport want{CycleType::uniform(5, 24), CycleType::uniform(4, 30), CycleType::uniform(2, 60)};
    const auto g = automorphism_group(d);
    const bool ok = d.passport() == want && d.genus() == 4 && g.order() == 120 &&
                    identify_group(g).kind == GroupKind::S5;
    sink.add("dessins.union", ok, d.passport().to_string() + " genus=" + std::to_string(d.genus()) + " aut=" + describe(g),
             want.to_string() + " genus=4 aut=120 S5", "I4 u I4* has automorphism group S5");
  });
  sink.guarded("dessins.involutions", "recolouring, duality and mirror are involutions", [&] {
    bool ok = true;
    const std::vector<Dessin> all{build_icosahedron(), build_i4(), union_with_dual(build_i4()), build_j(), build_D()};
    for (const auto& d : all) ok = ok && dual(dual(d)) == d && recolor(recolor(d)) == d && mirror(mirror(d)) == d;
    sink.add("dessins.involutions", ok, std::to_string(all.size()) + " dessins", "exact involutions",
             "recolouring, duality and mirror are involutions");
  });
  sink.guarded("dessins.euler_consistency", "Euler formula on every constructed dessin", [&] {
    bool ok = true;
    const std::vector<Dessin> all{build_icosahedron(), build_i4(),  dual(build_i4()),   union_with_dual(build_i4()),
                                  build_j(),           build_D(),   subdivide(build_i4()), subdivide(build_icosahedron())};
    for (const auto& d : all) {
      const auto chi = d.euler_characteristic();
      ok = ok && d.is_connected() && chi <= 2 && chi % 2 == 0;
    }
    sink.add("dessins.euler_consistency", ok, std::to_string(all.size()) + " dessins", "chi even and <= 2",
             "Euler formula on every constructed dessin");
  });
}

inline void identify_checks(CheckSink& sink) {
  sink.guarded("identify.D_iso_J", "J is isomorphic to D", [&] {
    const auto d = build_D();
    const auto j = build_j();
    const auto h = isomorphic_up_to_mirror(d, j);
    const bool ok = h && is_isomorphism(d, h->mirrored ? mirror(j) : j, h->map);
    sink.add("identify.D_iso_J", ok, !h ? "none" : h->mirrored ? "isomorphic after mirror" : "isomorphic",
             "isomorphic (mirror allowed)", "J is isomorphic to D");
    if (h)
      sink.info("identify.D_iso_J_mirror_needed", h->mirrored ? "true" : "false", "false",
                "orientation-preserving identification of J with D");
  });
}

inline void monodromy_checks(CheckSink& sink, const VerifyConfig& cfg) {
  sink.guarded("monodromy.triple", "f is unramified outside 0, 1, infinity", [&] {
    const auto m = monodromy_triple(cfg.track);
    const bool types = m.pi0.cycle_type() == CycleType({5}) && m.pi1.cycle_type() == CycleType({4, 1}) &&
                       m.pi_inf.cycle_type() == CycleType({2, 1, 1, 1});
    sink.add("monodromy.cycle_types", types,
             m.pi0.cycle_type().to_string() + " " + m.pi1.cycle_type().to_string() + " " +
                 m.pi_inf.cycle_type().to_string(),
             "[5] [4,1] [2,1^3]", "f is unramified outside 0, 1, infinity");
    const bool product = (m.pi0 * m.pi1 * m.pi_inf).is_identity() && m.direct_inf_matches;
    sink.add("monodromy.product", product,
             std::string("pi0 pi1 pi_inf = id, direct infinity loop ") + (m.direct_inf_matches ? "agrees" : "disagrees"),
             "identity; direct loop agrees", "three critical values");
    const auto order = closure({m.pi0, m.pi1}).order();
    sink.add("monodromy.group_order", order == 120, std::to_string(order), "120", "degree of f is 120");

    double res = 0, lam = 0;
    for (const auto* r : {&m.loop0, &m.loop1, &m.loop_inf}) {
      res = std::max(res, r->max_residual);
      lam = std::max(lam, r->lambda_error);
    }
    std::ostringstream obs;
    obs << "max residual " << res << ", max |lambda^4-1| " << lam;
    sink.add("monodromy.numerics", res < 1e-9 && lam < 1e-8, obs.str(), "residual < 1e-9, |lambda^4-1| < 1e-8",
             "weighted equivalence of (a, b)");

    TrackConfig doubled = cfg.track;
    doubled.steps *= 2;
    const auto m2 = monodromy_triple(doubled);
    const bool same = m2.pi0 == m.pi0 && m2.pi1 == m.pi1 && m2.pi_inf == m.pi_inf;
    sink.add("monodromy.step_doubling", same, same ? "unchanged" : "changed", "unchanged",
             "homotopy invariance of monodromy");

    const auto s = sheet_constellation(m);
    const auto u = union_with_dual(build_i4());
    const auto h = isomorphic(s, u);
    sink.add("monodromy.belyi_pair", h && is_isomorphism(s, u, h->map),
             h ? "sheet dessin isomorphic to I4 u I4*" : "not isomorphic", "isomorphic",
             "Belyi pair of I4 u I4* is (B5, f)");
  });
  sink.guarded("monodromy.regular_rep_law", "left regular action of S5", [&] {
    const auto g = closure({Permutation::parse("(0 1)", 5), Permutation::parse("(0 1 2 3 4)", 5)});
    bool ok = true;
    for (const auto& e : g.elements)
      ok = ok && regular_representation(e, g).cycle_type() == CycleType::uniform(e.order(), 120 / e.order());
    sink.add("monodromy.regular_rep_law", ok, std::to_string(g.order()) + " elements",
             "|G|/ord(g) cycles of length ord(g)", "left regular action of S5");
  });
  sink.guarded("monodromy.bring_identities", "power sums vanish on the Bring curve", [&] {
    const auto r = verify_bring_identities(cfg.samples, cfg.seed);
    std::ostringstream o1, o2;
    o1 << r.samples << " samples, power sums " << r.max_power_sum << ", 1-1/f identity " << r.max_identity_error
       << ", symmetric form " << r.max_symmetric_error;
    sink.add("monodromy.bring_identities",
             r.samples >= 100 && r.max_power_sum < 1e-9 && r.max_identity_error < 1e-9 && r.max_symmetric_error < 1e-9,
             o1.str(), "all < 1e-9 over >= 100 samples", "power sums vanish on the Bring curve");
    o2 << "3125 (sum 1/x)^4 / (256 prod x) deviates by up to " << r.max_quartic_form_deviation
       << "; rescales by lambda^-9 (error " << r.max_quartic_form_scaling_error << "), invariant="
       << (r.quartic_form_invariant ? "true" : "false");
    sink.info("monodromy.quartic_form", o2.str(), "invariant under (a,b) ~ (l^4 a, l^5 b)",
              "closed form of 1 - 1/f in the roots");
  });
}

}  // namespace detail

/// Runs the selected modules' checks; checks are sorted by name.
inline VerificationReport run_verify_all(const VerifyConfig& cfg) {
  VerificationReport rep;
  rep.config = {{"track", to_json(cfg.track)}, {"seed", cfg.seed}, {"samples", cfg.samples}};
  rep.config["only"] = std::vector<std::string>(cfg.only.begin(), cfg.only.end());
  detail::CheckSink sink{rep.checks};
  if (cfg.wants("cells")) detail::cells_checks(sink);
  if (cfg.wants("cover")) detail::cover_checks(sink);
  if (cfg.wants("dessins")) detail::dessin_checks(sink);
  if (cfg.wants("identify")) detail::identify_checks(sink);
  if (cfg.wants("monodromy")) detail::monodromy_checks(sink, cfg);
  std::sort(rep.checks.begin(), rep.checks.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return rep;
}

}  // namespace bring

#endif  // BRING_VERIFY_HPP
