#include "ybx/suite.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "ybx/massey.hpp"
#include "ybx/surface.hpp"

namespace ybx {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "text") return OutputFormat::text;
  throw std::invalid_argument("unknown format \"" + s + "\" (expected json or text)");
}

const std::vector<std::string>& suite_check_names() {
  static const std::vector<std::string> names = {
      "aybe",     "skew",     "residues",   "cybe",           "unitarity", "qybe",    "hat-aybe",
      "hat-skew", "hat-hat",  "nondegeneracy", "massey",      "rectangles", "surface"};
  return names;
}

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.pass(); });
}

std::vector<ABDStructure> builtin_catalog(std::size_t max_n) {
  std::vector<ABDStructure> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto level = all_abd_structures(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

void merge(CheckReport& total, const CheckReport& part) {
  total.points += part.points;
  total.failures += part.failures;
  total.max_nonzero = std::max(total.max_nonzero, part.max_nonzero);
}

// Tally of a check whose per-point verdict is computed directly.
struct Tally {
  CheckReport rep;
  void record(bool ok) {
    ++rep.points;
    if (!ok) ++rep.failures;
  }
};

Evaluator maybe_mutated(const Evaluator& r, bool mutate) { return mutate ? mutate_one_coefficient(r) : r; }

CheckReport run_one(const std::string& name, const std::vector<ABDStructure>& corpus, const SuiteConfig& cfg) {
  const Field& field = cfg.field;
  const Sampling& smp = cfg.sampling;
  CheckReport total;
  total.check = name;
  total.seed = smp.seed;
  total.backend = field.name();
  const auto start = Clock::now();
  Tally tally{total};

  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const ABDStructure& abd = corpus[idx];
    const TrigSolution sol(abd, field);
    const Evaluator r = maybe_mutated(sol.evaluator(), cfg.mutate);
    const std::size_t n = abd.n;

    if (name == "aybe") {
      merge(total, check_aybe(r, smp));
    } else if (name == "skew") {
      merge(total, check_skew(r, smp));
    } else if (name == "hat-aybe") {
      merge(total, check_aybe(hat_involution(r), smp));
    } else if (name == "hat-skew") {
      merge(total, check_skew(hat_involution(r), smp));
    } else if (name == "nondegeneracy") {
      merge(total, check_strong_nondegeneracy(r, smp));
    } else if (name == "unitarity" || name == "qybe") {
      const QybeReports q = check_qybe_unitarity(r, smp);
      merge(total, name == "unitarity" ? q.unitarity : q.qybe);
    } else if (name == "cybe") {
      ConstantTermFn rbar = projected_r0(sol, cfg.jet_order);
      if (cfg.mutate) {
        rbar = [rbar, n, field](const ExactScalar& qv) {
          Tensor2 t = rbar(qv);
          t.at(0, n - 1, n - 1, 0) += field.from_int(3);
          return t;
        };
      }
      merge(total, check_cybe(rbar, n, field, smp));
    } else if (name == "hat-hat") {
      const Evaluator twice = hat_involution(hat_involution(r));
      for (std::size_t t = 0; t < smp.points; ++t) {
        Rng rng = derive_rng(smp.seed, t);
        const ExactScalar qu = sample_q(field, n, rng, smp.rational_bits);
        const ExactScalar qv = sample_q(field, n, rng, smp.rational_bits);
        tally.record(twice(qu, qv) == r(qu, qv).flip());
      }
    } else if (name == "residues") {
      for (std::size_t t = 0; t < smp.points; ++t) {
        Rng rng = derive_rng(smp.seed, t);
        const ExactScalar other = sample_q(field, n, rng, smp.rational_bits);
        const LaurentData lu = laurent_expansion(sol, Variable::u, other, cfg.jet_order);
        const LaurentData lv = laurent_expansion(sol, Variable::v, other, cfg.jet_order);
        bool ok = lu.valuation == -1 && lv.valuation == -1;
        ok = ok && lu.residue == Tensor2::unit(field, n) && lv.residue == Tensor2::transposition_P(field, n);
        if (cfg.mutate) ok = ok && r(other, other) == sol(other, other);
        tally.record(ok);
      }
    } else if (name == "massey") {
      const SquareTiledSurface s = build_surface(abd);
      for (std::size_t t = 0; t < smp.points; ++t) {
        Rng rng = derive_rng(smp.seed, t);
        const ExactScalar qu = sample_q(field, n, rng, smp.rational_bits);
        const ExactScalar qv = sample_q(field, n, rng, smp.rational_bits);
        tally.record(massey_tensor(s, field, qu, qv).total == r(qu, qv));
      }
    } else if (name == "rectangles") {
      const SquareTiledSurface s = build_surface(abd);
      for (std::size_t k = 1; k < n; ++k)
        for (std::size_t m = 1; m < n; ++m) {
          const auto members = a_km(abd, k, m);
          for (std::size_t a = 0; a < n; ++a) {
            const bool in_formula = std::binary_search(members.begin(), members.end(), a);
            tally.record(develop_rectangle(s, a, k, m) == in_formula);
          }
        }
    } else if (name == "surface") {
      const SquareTiledSurface s = build_surface(abd);
      const Topology top = topological_invariants(s);
      const PunctureAnalysis pa = puncture_analysis(s);
      const long long nn = static_cast<long long>(n), b = static_cast<long long>(pa.b);
      const bool commuting = commutator(abd.c1, abd.c2).is_identity();
      bool ok = 2 - 2 * top.genus - b == -nn && top.chi == -nn && top.connected;
      ok = ok && ((top.genus == 1) == commuting) && ((pa.b == n) == commuting);
      tally.record(ok);
    } else {
      throw std::invalid_argument("unknown check \"" + name + "\"");
    }
  }
  merge(total, tally.rep);
  total.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return total;
}

}  // namespace

Report run_suite(const SuiteConfig& cfg) {
  if (cfg.sampling.points == 0) throw std::invalid_argument("points must be at least 1");
  if (cfg.jet_order < 2) throw std::invalid_argument("jet order must be at least 2");
  if (!cfg.field.is_rational() && static_cast<std::uint64_t>(cfg.jet_order) >= cfg.field.prime())
    throw std::invalid_argument("prime too small for the requested jet order");
  const auto& known = suite_check_names();
  for (const auto& c : cfg.checks)
    if (std::find(known.begin(), known.end(), c) == known.end())
      throw std::invalid_argument("unknown check \"" + c + "\"");

  Report report;
  if (cfg.checks.empty()) return report;
  const std::vector<ABDStructure> corpus =
      cfg.structures.empty() && cfg.use_catalog ? builtin_catalog(cfg.catalog_max_n) : cfg.structures;
  for (const auto& s : corpus) require_valid(s);
  report.structures = corpus.size();
  for (const auto& name : cfg.checks) report.checks.push_back(run_one(name, corpus, cfg));
  return report;
}

namespace {

ordered_json check_json(const CheckReport& c, bool include_timing) {
  ordered_json j;
  j["check"] = c.check;
  j["points"] = c.points;
  j["failures"] = c.failures;
  j["pass"] = c.pass();
  j["seed"] = c.seed;
  j["backend"] = c.backend;
  j["max_nonzero"] = c.max_nonzero;
  if (include_timing) j["seconds"] = c.seconds;
  if (!c.notes.empty()) j["notes"] = c.notes;
  return j;
}

std::string check_line(const CheckReport& c, bool include_timing) {
  std::ostringstream out;
  out << (c.pass() ? "PASS " : "FAIL ") << c.check << ": " << c.failures << "/" << c.points
      << " failing points, backend " << c.backend << ", seed " << c.seed;
  if (include_timing) out << ", " << c.seconds << " s";
  for (const auto& note : c.notes) out << "\n  note: " << note;
  return out.str();
}

}  // namespace

std::string check_emit(const CheckReport& c, OutputFormat format, bool include_timing) {
  if (format == OutputFormat::json) return check_json(c, include_timing).dump();
  return check_line(c, include_timing);
}

std::string report_emit(const Report& r, OutputFormat format, bool include_timing) {
  if (format == OutputFormat::json) {
    ordered_json j;
    j["checks"] = ordered_json::array();
    for (const auto& c : r.checks) j["checks"].push_back(check_json(c, include_timing));
    j["pass"] = r.pass();
    return j.dump();
  }
  std::ostringstream out;
  for (const auto& c : r.checks) out << check_line(c, include_timing) << "\n";
  out << (r.pass() ? "suite passed" : "suite FAILED") << " (" << r.checks.size() << " checks, " << r.structures
      << " structures)";
  return out.str();
}

}  // namespace ybx
