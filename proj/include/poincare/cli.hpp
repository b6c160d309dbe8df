#pragma once

// Command implementations behind the poincare_lab binary. Each command
// returns a Report; run() parses arguments and maps outcomes to exit codes
// (0 all pass, 1 a check failed, 2 usage error).

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "poincare/catalog.hpp"
#include "poincare/commutant.hpp"
#include "poincare/gridlab.hpp"
#include "poincare/localization.hpp"

namespace poincare::cli {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Report {
  std::string representation;
  std::optional<int> two_s;
  std::vector<CheckResult> checks;
  /// Summary line printed after the checks in text mode.
  std::string summary;

  void add(const RelationReport& r) { checks.insert(checks.end(), r.checks.begin(), r.checks.end()); }
  void sort() {
    std::stable_sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  }
  bool all_pass() const {
    return std::none_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::fail; });
  }
  int exit_code() const { return all_pass() ? 0 : 1; }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["representation"] = representation;
    j["two_s"] = two_s ? nlohmann::ordered_json(*two_s) : nlohmann::ordered_json(nullptr);
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks)
      j["checks"].push_back({{"name", c.name}, {"method", c.method}, {"status", to_string(c.status)}, {"detail", c.detail}});
    return j;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "representation: " << representation;
    if (two_s) os << "  two_s: " << *two_s;
    os << "\n";
    for (const auto& c : checks) {
      std::string tag = c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "NOTE";
      os << tag << "  [" << c.method << "] " << c.name << "  ->  " << c.detail << "\n";
    }
    const auto fails = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::fail; });
    os << checks.size() << " checks, " << fails << " failed\n";
    if (!summary.empty()) os << summary << "\n";
    return os.str();
  }
};

inline RepLabel parse_label(const std::string& token, int two_s) {
  if (token == "quad")
    throw UsageError(two_s != 0 ? "quad requires --two-s 0" : "quad needs a pi square sign: quad:+1 or quad:-1");
  auto label = RepLabel::parse(token);
  if (!label) throw UsageError("unknown representation label '" + token + "'");
  return *label;
}

inline RepSpec build_or_usage(const std::string& token, int two_s) {
  if (two_s < 0) throw UsageError("--two-s must be non-negative");
  try {
    return build(parse_label(token, two_s), SpinWeight(two_s));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

inline Report cmd_verify(const std::string& token, int two_s) {
  const RepSpec rep = build_or_usage(token, two_s);
  Report out{rep.label.token(), two_s, {}, {}};
  out.add(verify_lie_relations(rep));
  const RelationReport discrete = verify_discrete_relations(rep);
  out.add(discrete);
  out.add(verify_casimirs(rep));
  out.add(verify_self_adjoint(rep));
  if (rep.blocks <= 2) {
    RelationReport pos = verify_position_axioms(rep, newton_wigner(rep.spin, rep.blocks));
    if (!position_axioms_expected(rep.label))
      for (auto& c : pos.checks) {
        c.detail = std::string(c.status == CheckStatus::pass ? "holds" : "fails: " + c.detail);
        c.status = CheckStatus::recorded;
      }
    out.add(pos);
  }
  out.sort();
  std::ostringstream s;
  for (const auto& [k, v] : discrete.found) s << k << " = " << v.to_string() << "  ";
  out.summary = s.str();
  return out;
}

inline Report cmd_commutant(const std::string& token, int two_s) {
  const RepSpec rep = build_or_usage(token, two_s);
  Report out{rep.label.token(), two_s, {}, {}};
  const CommutantProblem prob = reduce_to_constant_blocks(rep);
  const CommutantBasis basis = commutant_basis(prob);
  const IrreducibilityVerdict verdict{basis.dimension == 1, basis.dimension};

  out.checks.push_back({"commutant.schur: spin-level commutant is scalar", "linear-solve",
                        prob.spin_commutant_dim == 1 ? CheckStatus::pass : CheckStatus::fail,
                        "dim " + std::to_string(prob.spin_commutant_dim)});
  bool verified = true;
  bool has_identity = false;
  std::string listing;
  for (const auto& b : basis.basis) {
    verified = verified && satisfies_constraints(prob, b);
    listing += (listing.empty() ? "" : " ; ") + b.to_string();
  }
  // Identity lies in the span iff adding it does not raise the rank.
  {
    const std::size_t n = prob.blocks;
    NumberMatrix cols(2 * n * n, basis.basis.size() + 1);
    for (std::size_t v = 0; v <= basis.basis.size(); ++v) {
      const NumberMatrix m = v < basis.basis.size() ? basis.basis[v] : NumberMatrix::identity(n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          cols(2 * (r * n + c), v) = m(r, c).real_part();
          cols(2 * (r * n + c) + 1, v) = m(r, c).imag_part();
        }
    }
    has_identity = rank(cols) == basis.basis.size();
  }
  out.checks.push_back({"commutant.basis: every basis element satisfies all constraints", "linear-solve",
                        verified ? CheckStatus::pass : CheckStatus::fail, listing});
  out.checks.push_back({"commutant.identity: Id lies in the commutant", "linear-solve",
                        has_identity ? CheckStatus::pass : CheckStatus::fail, has_identity ? "yes" : "no"});
  out.checks.push_back({"commutant.verdict: irreducible iff dim = 1", "linear-solve", CheckStatus::pass, verdict.to_string()});
  out.sort();
  out.summary = verdict.to_string();
  return out;
}

inline OperatorKind parse_kind(const std::string& s) {
  if (s == "unitary") return OperatorKind::unitary;
  if (s == "antiunitary" || s == "anti-unitary") return OperatorKind::antiunitary;
  throw UsageError("operator kind must be 'unitary' or 'antiunitary', got '" + s + "'");
}

inline std::string describe(const std::set<SpectrumClass>& s) {
  if (s == std::set<SpectrumClass>{SpectrumClass::up, SpectrumClass::down}) return "up or down spectrum only";
  if (s == std::set<SpectrumClass>{SpectrumClass::symmetric}) return "symmetric spectrum";
  std::string out;
  for (auto c : s) out += std::string(out.empty() ? "" : ", ") + to_string(c);
  return out;
}

inline Report cmd_classify(const std::string& theta, const std::string& pi) {
  const OperatorKind t = parse_kind(theta);
  const OperatorKind p = parse_kind(pi);
  const auto allowed = allowed_spectra(t, p);
  Report out{std::string("theta=") + to_string(t) + ",pi=" + to_string(p), std::nullopt, {}, {}};
  out.checks.push_back({"classify.spectrum: allowed momentum spectra", "symbolic", CheckStatus::pass, describe(allowed)});
  out.summary = describe(allowed);
  return out;
}

/// One representative instance per Lie relation family plus discrete relations.
inline std::vector<std::string> default_grid_relations() {
  return {"PP.12",    "JP.12",    "JJ.12", "JK.12", "KK.12", "KP.11", "PP0.1", "JP0.1",
          "KP0.1",    "theta.P0", "theta.P1", "theta.J1", "theta.K1", "pi.P0", "pi.P1", "pi.J1", "pi.K1"};
}

inline std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(4) << std::scientific << v;
  return os.str();
}

inline Report cmd_grid(const std::string& token, int two_s, double mu, const std::vector<int>& sizes, double extent,
                       std::vector<std::string> relations) {
  if (sizes.size() < 3) throw UsageError("grid: at least 3 grid sizes are required (e.g. --n 32,64,128)");
  for (int n : sizes)
    if (n < 8) throw UsageError("grid: points per axis below minimum of 8");
  if (!(mu > 0.0)) throw UsageError("grid: --mu must be positive");
  const RepSpec rep = build_or_usage(token, two_s);
  std::vector<Grid> grids;
  try {
    grids = grid_sequence(extent, sizes);
    for (std::size_t i = 1; i < grids.size(); ++i) {
      const double ratio = grids[i - 1].spacing() / grids[i].spacing();
      if (ratio < 1.9 || ratio > 2.1) throw std::invalid_argument("grid sizes must halve the spacing (e.g. 32,64,128)");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (relations.empty()) relations = default_grid_relations();
  for (const auto& id : relations)
    if (!find_relation(rep, id)) throw UsageError("grid: unknown relation id '" + id + "'");

  Report out{rep.label.token(), two_s, {}, {}};
  for (const auto& id : relations) {
    const NumericReport r = convergence_study(rep, id, grids, mu);
    std::ostringstream detail;
    detail << (r.exact ? "exact" : "slope " + format_double(r.slope)) << "; residuals";
    for (std::size_t i = 0; i < r.residuals.size(); ++i) detail << " N=" << r.points[i] << ":" << format_double(r.residuals[i]);
    const auto rel = find_relation(rep, id);
    out.checks.push_back({"grid." + id + ": " + rel->name, "numeric", r.pass() ? CheckStatus::pass : CheckStatus::fail,
                          detail.str()});
  }
  // Theta and Pi preserve the dnu norm.
  const GridState psi = study_state(rep, grids.back(), mu);
  for (const auto& [name, op] : {std::pair<std::string, const BlockOp*>{"theta", &rep.theta}, {"pi", &rep.pi}}) {
    const double dev = std::abs(norm(apply(*op, psi, mu), mu) - norm(psi, mu));
    out.checks.push_back({"grid." + name + ".norm: ||" + name + " psi|| = ||psi||", "numeric",
                          dev < 1e-12 ? CheckStatus::pass : CheckStatus::fail, "deviation " + format_double(dev)});
  }
  out.sort();
  return out;
}

inline Report cmd_catalog(int two_s) {
  if (two_s < 0) throw UsageError("--two-s must be non-negative");
  const SpinWeight w(two_s);
  Report out{"catalog", two_s, {}, {}};
  for (const auto& e : enumerate_catalog(w)) {
    const bool consistent = allowed_spectra(e.theta, e.pi).count(e.spectrum) > 0;
    std::string detail = std::string("theta ") + to_string(e.theta) + ", pi " + to_string(e.pi) + ", spectrum " +
                         to_string(e.spectrum) + ", " + to_string(e.sheet);
    out.checks.push_back({"catalog." + e.label.token(), "symbolic", consistent ? CheckStatus::pass : CheckStatus::fail,
                          detail});
  }
  out.summary = std::to_string(out.checks.size()) + " entries";
  return out;
}

inline std::vector<int> parse_sizes(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--n expects a comma-separated list of integers, got '" + s + "'");
    }
  }
  return out;
}

inline int emit(const Report& r, bool json, const std::string& out_file, std::ostream& out) {
  const std::string text = json ? r.to_json().dump(2) + "\n" : r.to_text();
  out << text;
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) throw UsageError("cannot write --out file '" + out_file + "'");
    f << text;
  }
  return r.exit_code();
}

/// Entry point shared by the binary and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification laboratory for positive-mass Poincare group representations"};
  app.require_subcommand(1);

  std::string rep = "up";
  int two_s = 0;
  bool json = false;
  std::string out_file;
  double mu = 1.0;
  double extent = 4.0;
  std::string sizes = "32,64,128";
  std::vector<std::string> relations;
  std::string theta_kind, pi_kind;

  auto common = [&](CLI::App* sub, bool with_rep) {
    if (with_rep) sub->add_option("--rep", rep, "representation label (up, down, sym1..sym6, newup:identity, ...)");
    sub->add_option("--two-s", two_s, "twice the spin, 2s >= 0");
    sub->add_flag("--json", json, "machine-readable output");
    sub->add_option("--out", out_file, "also write the report to FILE");
  };
  auto* verify = app.add_subcommand("verify", "exact relation, Casimir, adjoint and position checks");
  common(verify, true);
  auto* commutant = app.add_subcommand("commutant", "self-adjoint commutant and irreducibility verdict");
  common(commutant, true);
  auto* classify = app.add_subcommand("classify", "allowed momentum spectra for theta/pi kinds");
  classify->add_option("--theta", theta_kind, "unitary | antiunitary")->required();
  classify->add_option("--pi", pi_kind, "unitary | antiunitary")->required();
  classify->add_flag("--json", json, "machine-readable output");
  classify->add_option("--out", out_file, "also write the report to FILE");
  auto* grid = app.add_subcommand("grid", "finite-difference convergence study");
  common(grid, true);
  grid->add_option("--mu", mu, "numeric mass");
  grid->add_option("--n", sizes, "comma-separated points per axis");
  grid->add_option("--extent", extent, "half-width L of the momentum cube");
  grid->add_option("--relation", relations, "relation ids (default: one per family)");
  auto* catalog = app.add_subcommand("catalog", "list catalogued representations");
  catalog->add_option("--two-s", two_s, "twice the spin, 2s >= 0");
  catalog->add_flag("--json", json, "machine-readable output");
  catalog->add_option("--out", out_file, "also write the report to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    int code = 0;
    if (verify->parsed()) code = emit(cmd_verify(rep, two_s), json, out_file, out);
    if (commutant->parsed()) code = emit(cmd_commutant(rep, two_s), json, out_file, out);
    if (classify->parsed()) code = emit(cmd_classify(theta_kind, pi_kind), json, out_file, out);
    if (grid->parsed()) code = emit(cmd_grid(rep, two_s, mu, parse_sizes(sizes), extent, relations), json, out_file, out);
    if (catalog->parsed()) code = emit(cmd_catalog(two_s), json, out_file, out);
    err << "done in " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace poincare::cli
