#include <complex>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ybx/bundle.hpp"
#include "ybx/io.hpp"
#include "ybx/massey.hpp"
#include "ybx/suite.hpp"
#include "ybx/surface.hpp"
#include "ybx/trig_solution.hpp"

using namespace ybx;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Globals {
  std::string field = "fp:" + std::to_string(kDefaultPrime);
  std::size_t points = 25;
  std::uint64_t seed = 7;
  int jet_order = 4;
  std::string format = "json";
  int rational_bits = 31;
};

// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input.
constexpr int kFail = 1;
constexpr int kBadInput = 2;

Sampling sampling_of(const Globals& g) { return Sampling{g.points, g.seed, g.rational_bits}; }

ABDStructure load_abd(const std::string& path) {
  const ParsedInput in = parse_inputs(read_file(path));
  if (!std::holds_alternative<ABDStructure>(in)) throw ParseError(path + " does not hold an ABD structure");
  return std::get<ABDStructure>(in);
}

std::vector<std::size_t> parse_points(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const long long v = std::stoll(item);
    if (v < 1) throw ParseError("points are numbered from 1");
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  return out;
}

std::complex<double> parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {std::stod(text), 0.0};
  return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

int emit_json(const ordered_json& j, bool pass) {
  std::cout << j.dump() << "\n";
  return pass ? 0 : kFail;
}

int emit_check(const CheckReport& c, const Globals& g) {
  std::cout << check_emit(c, parse_format(g.format)) << "\n";
  return c.pass() ? 0 : kFail;
}

ExactScalar scalar_or_sample(const std::string& text, const Field& field, std::size_t n, Rng& rng,
                             const Globals& g) {
  return text.empty() ? sample_q(field, n, rng, g.rational_bits) : field.parse_scalar(text);
}

ordered_json surface_json(const ABDStructure& abd) {
  const SquareTiledSurface s = build_surface(abd);
  const PunctureAnalysis pa = puncture_analysis(s);
  const Topology t = topological_invariants(s);
  ordered_json j;
  j["b"] = pa.b;
  ordered_json bk = ordered_json::object();
  for (const auto& [e, count] : pa.b_k) bk[std::to_string(e)] = count;
  j["b_k"] = bk;
  j["chi"] = t.chi;
  j["genus"] = t.genus;
  j["fillable"] = pa.unramified;
  j["connected"] = t.connected;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ybx: trigonometric solutions of the associative Yang-Baxter equation"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "Scalar backend: q or fp:<prime>");
  app.add_option("--points", g.points, "Sample points per check")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Root seed");
  app.add_option("--jet-order", g.jet_order, "Truncation order of Laurent jets")->check(CLI::Range(2, 64));
  app.add_option("--format", g.format, "Output format: json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--rational-bits", g.rational_bits, "Height of sampled rationals")->check(CLI::Range(2, 62));

  std::string abd_path, other_path, bundle_path, c1_text, c2_text, a_text, qu_text, qv_text, at_text;
  std::string u_text = "1", v_text = "1", checks_text, mutate_text;
  std::size_t n_opt = 0, catalog_n = 4;
  std::uint64_t point_seed = 7;
  int L = 60;
  bool mutate = false, literal = false, compare = false, emit_abd = false, no_timing = false;

  auto* validate = app.add_subcommand("validate", "Check the ABD axioms");
  validate->add_option("--abd", abd_path, "Structure JSON");
  validate->add_option("--c1", c1_text, "C1 in 1-based cycle notation");
  validate->add_option("--c2", c2_text, "C2 in 1-based cycle notation");
  validate->add_option("--a", a_text, "A as comma-separated 1-based points");
  validate->add_option("--n", n_opt, "Number of points");

  auto* surface = app.add_subcommand("surface", "Topology of the square-tiled surface");
  surface->add_option("--abd", abd_path, "Structure JSON")->required();

  auto* build_r = app.add_subcommand("build-r", "Evaluate r at (q_u, q_v) = (e^{u/2n}, e^{v/2n})");
  build_r->add_option("--abd", abd_path, "Structure JSON")->required();
  build_r->add_option("--qu", qu_text, "q_u as p/q or residue (sampled if omitted)");
  build_r->add_option("--qv", qv_text, "q_v as p/q or residue (sampled if omitted)");

  auto* aybe = app.add_subcommand("check-aybe", "Randomized AYBE check");
  aybe->add_option("--abd", abd_path, "Structure JSON")->required();
  aybe->add_flag("--mutate", mutate, "Corrupt one coefficient");

  auto* skew = app.add_subcommand("check-skew", "Randomized skew-symmetry check");
  skew->add_option("--abd", abd_path, "Structure JSON")->required();
  skew->add_flag("--mutate", mutate, "Corrupt one coefficient");

  auto* residues = app.add_subcommand("residues", "Laurent valuations and residues at u = 0 and v = 0");
  residues->add_option("--abd", abd_path, "Structure JSON")->required();
  residues->add_option("--at", at_text, "Value of the other q (sampled if omitted)");

  auto* cybe = app.add_subcommand("cybe", "CYBE for the projected constant term");
  cybe->add_option("--abd", abd_path, "Structure JSON")->required();
  cybe->add_flag("--mutate", mutate, "Corrupt one coefficient");

  auto* qybe = app.add_subcommand("qybe", "Unitarity and QYBE of the rescaled R");
  qybe->add_option("--abd", abd_path, "Structure JSON")->required();
  qybe->add_flag("--literal", literal, "Use R12(u,u) as the first factor");
  qybe->add_flag("--mutate", mutate, "Corrupt one coefficient");

  auto* hat = app.add_subcommand("hat", "Checks for the hat involution");
  hat->add_option("--abd", abd_path, "Structure JSON")->required();

  auto* massey = app.add_subcommand("massey", "Massey product assembly");
  massey->add_option("--abd", abd_path, "Structure JSON")->required();
  massey->add_option("--point-seed", point_seed, "Seed of the evaluation point");
  massey->add_flag("--compare", compare, "Compare with the closed form");

  auto* novikov = app.add_subcommand("novikov", "Novikov series against its closed form (n = 1)");
  novikov->add_option("--u", u_text, "u as re or re,im");
  novikov->add_option("--v", v_text, "v as re or re,im");
  novikov->add_option("--L", L, "Truncation")->check(CLI::NonNegativeNumber);

  auto* bundle = app.add_subcommand("bundle", "Simplicity, order and ABD structure of a bundle");
  bundle->add_option("--in", bundle_path, "Bundle JSON")->required();
  bundle->add_flag("--emit-abd", emit_abd, "Include the ABD structure");

  auto* iso = app.add_subcommand("abd-iso", "Isomorphism of two structures");
  iso->add_option("--abd", abd_path, "First structure JSON")->required();
  iso->add_option("--other", other_path, "Second structure JSON")->required();

  auto* suite = app.add_subcommand("suite", "Run the verification suite");
  suite->add_option("--abd", abd_path, "Structure JSON (default: built-in catalog)");
  suite->add_option("--checks", checks_text, "Comma-separated check names (default: all)");
  suite->add_option("--mutate", mutate_text, "Mutation mode")->check(CLI::IsMember({"one-coefficient"}));
  suite->add_option("--catalog-n", catalog_n, "Largest n in the catalog")->check(CLI::Range(1, 6));
  suite->add_flag("--no-timing", no_timing, "Omit timings so reports are byte-identical");

  CLI11_PARSE(app, argc, argv);

  try {
    const Field field = Field::parse(g.field);
    const Sampling smp = sampling_of(g);

    if (validate->parsed()) {
      ABDStructure abd;
      if (!abd_path.empty()) {
        abd = load_abd(abd_path);
      } else {
        if (c1_text.empty() || c2_text.empty()) throw ParseError("validate needs --abd or both --c1 and --c2");
        std::optional<std::size_t> n;
        if (n_opt) n = n_opt;
        Permutation c1 = parse_cycles(c1_text, n);
        Permutation c2 = parse_cycles(c2_text, c1.size());
        abd = ABDStructure(c1, c2, parse_points(a_text));
      }
      const ValidationReport rep = validate_abd(abd);
      ordered_json j;
      j["valid"] = rep.valid();
      j["violations"] = ordered_json::array();
      for (auto v : rep.violations) j["violations"].push_back(to_string(v));
      j["noncommuting"] = rep.noncommuting_points;
      return emit_json(j, rep.valid());
    }
    if (surface->parsed()) return emit_json(surface_json(load_abd(abd_path)), true);

    if (build_r->parsed()) {
      const TrigSolution sol(load_abd(abd_path), field);
      Rng rng = derive_rng(g.seed, 0);
      const ExactScalar qu = scalar_or_sample(qu_text, field, sol.n(), rng, g);
      const ExactScalar qv = scalar_or_sample(qv_text, field, sol.n(), rng, g);
      ordered_json j;
      j["n"] = sol.n();
      j["backend"] = field.name();
      j["qu"] = qu.to_string();
      j["qv"] = qv.to_string();
      j["r"] = ordered_json::parse(tensor_to_json(sol(qu, qv)).dump());
      return emit_json(j, true);
    }
    if (aybe->parsed() || skew->parsed() || cybe->parsed()) {
      SuiteConfig cfg;
      cfg.checks = {aybe->parsed() ? "aybe" : skew->parsed() ? "skew" : "cybe"};
      cfg.structures = {load_abd(abd_path)};
      cfg.field = field;
      cfg.sampling = smp;
      cfg.jet_order = g.jet_order;
      cfg.mutate = mutate;
      return emit_check(run_suite(cfg).checks.front(), g);
    }
    if (residues->parsed()) {
      const TrigSolution sol(load_abd(abd_path), field);
      Rng rng = derive_rng(g.seed, 0);
      const ExactScalar other = scalar_or_sample(at_text, field, sol.n(), rng, g);
      const LaurentData lu = laurent_expansion(sol, Variable::u, other, g.jet_order);
      const LaurentData lv = laurent_expansion(sol, Variable::v, other, g.jet_order);
      ordered_json j;
      j["at"] = other.to_string();
      j["valuation_u"] = lu.valuation;
      j["valuation_v"] = lv.valuation;
      j["residue_u_is_unit"] = lu.residue == Tensor2::unit(field, sol.n());
      j["residue_v_is_P"] = lv.residue == Tensor2::transposition_P(field, sol.n());
      j["residue_u"] = ordered_json::parse(tensor_to_json(lu.residue).dump());
      j["residue_v"] = ordered_json::parse(tensor_to_json(lv.residue).dump());
      const bool pass = lu.valuation == -1 && lv.valuation == -1 && j["residue_u_is_unit"] == true &&
                        j["residue_v_is_P"] == true;
      j["pass"] = pass;
      return emit_json(j, pass);
    }
    if (qybe->parsed()) {
      const TrigSolution sol(load_abd(abd_path), field);
      Evaluator r = sol.evaluator();
      if (mutate) r = mutate_one_coefficient(r);
      const QybeReports q = check_qybe_unitarity(r, smp, literal ? QybeReading::literal : QybeReading::fixed_u);
      Report rep;
      rep.checks = {q.unitarity, q.qybe};
      rep.structures = 1;
      std::cout << report_emit(rep, parse_format(g.format), false) << "\n";
      return rep.pass() ? 0 : kFail;
    }
    if (hat->parsed()) {
      SuiteConfig cfg;
      cfg.checks = {"hat-aybe", "hat-skew", "hat-hat"};
      cfg.structures = {load_abd(abd_path)};
      cfg.field = field;
      cfg.sampling = smp;
      const Report rep = run_suite(cfg);
      std::cout << report_emit(rep, parse_format(g.format), false) << "\n";
      return rep.pass() ? 0 : kFail;
    }
    if (massey->parsed()) {
      const ABDStructure abd = load_abd(abd_path);
      const SquareTiledSurface s = build_surface(abd);
      Rng rng = derive_rng(point_seed, 0);
      const ExactScalar qu = sample_q(field, abd.n, rng, g.rational_bits);
      const ExactScalar qv = sample_q(field, abd.n, rng, g.rational_bits);
      const MasseyTensor mt = massey_tensor(s, field, qu, qv);
      ordered_json j;
      j["qu"] = qu.to_string();
      j["qv"] = qv.to_string();
      j["families"] = ordered_json::array();
      for (const auto& t : mt.breakdown) {
        ordered_json f;
        f["kind"] = to_string(t.family.kind);
        f["k"] = t.family.k;
        f["m"] = t.family.m;
        f["base"] = t.family.base;
        f["sign"] = t.family.sign;
        f["holonomy"] = {t.family.hol_u, t.family.hol_v};
        f["target"] = t.family.target;
        f["mu3"] = t.mu3.to_string();
        f["h1"] = t.h1_correction.to_string();
        f["h2"] = t.h2_correction.to_string();
        f["mp"] = t.mp.to_string();
        f["contribution"] = t.contribution.to_string();
        j["families"].push_back(f);
      }
      bool pass = true;
      if (compare) {
        pass = mt.total == TrigSolution(abd, field)(qu, qv);
        j["equal"] = pass;
      }
      if (g.format == "text") {
        for (const auto& f : j["families"])
          std::cout << f["kind"].get<std::string>() << " k=" << f["k"] << " m=" << f["m"] << " base=" << f["base"]
                    << " sign=" << f["sign"] << " target=" << f["target"].dump() << " c=" << f["contribution"]
                    << "\n";
        if (compare) std::cout << (pass ? "massey tensor equals r" : "massey tensor DIFFERS from r") << "\n";
        return pass ? 0 : kFail;
      }
      return emit_json(j, pass);
    }
    if (novikov->parsed()) {
      const auto u = parse_complex(u_text), v = parse_complex(v_text);
      const NovikovResult res = novikov_check(u, v, L);
      bool monotone = true;
      double prev = novikov_check(u, v, 0).error;
      for (int l = 1; l <= L; ++l) {
        const double e = novikov_check(u, v, l).error;
        monotone = monotone && e <= prev + 1e-13;
        prev = e;
      }
      ordered_json j;
      j["L"] = L;
      j["partial_sum"] = {res.partial_sum.real(), res.partial_sum.imag()};
      j["closed_form"] = {res.closed_form.real(), res.closed_form.imag()};
      j["error"] = res.error;
      j["monotone"] = monotone;
      return emit_json(j, monotone);
    }
    if (bundle->parsed()) {
      const ParsedInput in = parse_inputs(read_file(bundle_path), field);
      if (!std::holds_alternative<BundleData>(in)) throw ParseError(bundle_path + " does not hold a bundle");
      const BundleData& b = std::get<BundleData>(in);
      const SimplicityReport sr = simplicity(b);
      ordered_json j;
      j["simple"] = sr.simple();
      if (!sr.simple()) j["detail"] = sr.detail;
      j["type"] = to_string(type_check(b));
      if (sr.simple()) {
        j["order"] = order_prec(b);
        if (emit_abd) j["abd"] = ordered_json::parse(abd_to_json(abd_of_bundle(b)).dump());
      }
      return emit_json(j, sr.simple());
    }
    if (iso->parsed()) {
      const auto sigma = abd_isomorphic(load_abd(abd_path), load_abd(other_path));
      ordered_json j;
      j["isomorphic"] = sigma.has_value();
      if (sigma) j["sigma"] = sigma->images();
      return emit_json(j, true);
    }
    if (suite->parsed()) {
      SuiteConfig cfg;
      if (checks_text.empty()) {
        cfg.checks = suite_check_names();
      } else {
        std::stringstream ss(checks_text);
        std::string item;
        while (std::getline(ss, item, ',')) cfg.checks.push_back(item);
      }
      if (!abd_path.empty()) cfg.structures = {load_abd(abd_path)};
      cfg.catalog_max_n = catalog_n;
      cfg.field = field;
      cfg.sampling = smp;
      cfg.jet_order = g.jet_order;
      cfg.mutate = mutate_text == "one-coefficient";
      const Report rep = run_suite(cfg);
      std::cout << report_emit(rep, parse_format(g.format), !no_timing) << "\n";
      return rep.pass() ? 0 : kFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "ybx: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
