#include "invstar_cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "invstar/json_io.hpp"

namespace invstar::cli {

namespace {

using Json = nlohmann::json;
namespace jio = invstar::json;

void parse_params_into(const std::vector<std::string>& items, std::map<std::string, Rational>& params) {
  for (const auto& item : items) parse_params(item, params);
}

struct Loaded {
  AlgebraPtr alg;
  bool from_builtin = false;
};

// The algebra named by the config, with a truncated builtin's window raised
// to `needed` when that is larger.
Loaded load(const RunConfig& cfg, int needed, std::ostream& err) {
  if (cfg.builtin.empty() == cfg.spec_path.empty()) throw SpecError("give exactly one of --builtin and --spec");
  if (!cfg.builtin.empty()) {
    auto params = cfg.params;
    if (cfg.builtin == "random" && params.count("seed") == 0) params.emplace("seed", Rational(static_cast<long>(cfg.seed)));
    AlgebraPtr alg = builtin::make(cfg.builtin, params, cfg.cutoff);
    if (alg->truncated() && needed > alg->cutoff()) {
      err << "notice: raising the cutoff of " << alg->name() << " from " << alg->cutoff() << " to " << needed << "\n";
      alg = builtin::make(cfg.builtin, params, needed);
    }
    return {alg, true};
  }
  if (cfg.cutoff) throw SpecError("--cutoff only applies to builtin algebras");
  std::ifstream in(cfg.spec_path);
  if (!in) throw SpecError("cannot read spec file '" + cfg.spec_path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw SpecError("spec file '" + cfg.spec_path + "' is not valid JSON: " + e.what());
  }
  return {jio::algebra_from_json(j), false};
}

void require_valid(const GradedLieAlgebra& alg) {
  const ValidationReport report = validate(alg);
  if (!report.ok()) {
    throw SpecError("algebra " + alg.name() + " fails validation: " + report.issues.front().message);
  }
}

int nonsingular_degrees(const GradedLieAlgebra& alg, int requested) {
  return alg.truncated() ? std::min(requested, alg.cutoff()) : requested;
}

int cmd_validate(const RunConfig& cfg, bool degree_given, std::ostream& out, std::ostream& err) {
  const Loaded loaded = load(cfg, degree_given ? cfg.max_degree : 0, err);
  const GradedLieAlgebra& alg = *loaded.alg;
  const ValidationReport report = validate(alg);
  const int degrees = degree_given ? nonsingular_degrees(alg, cfg.max_degree) : std::max(alg.cutoff(), alg.top_degree());
  std::vector<DegreeNonsingularity> rows;
  if (report.ok()) rows = check_nonsingular(alg, degrees);
  const bool nonsingular =
      report.ok() && std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.nondegenerate; });

  if (cfg.format == Format::json) {
    Json nons = Json::array();
    for (const auto& r : rows) {
      nons.push_back(Json{{"degree", r.degree}, {"minus_dim", r.minus_dim}, {"plus_dim", r.plus_dim},
                          {"nondegenerate", r.nondegenerate}});
    }
    Json j{{"algebra", alg.name()},
           {"structure", jio::to_json(alg, report)},
           {"nonsingular", nons},
           {"passed", report.ok() && nonsingular}};
    out << j.dump(2) << "\n";
  } else {
    out << "algebra: " << alg.name() << " (cutoff " << alg.cutoff() << ", " << alg.size() << " generators)\n";
    out << "structure: " << (report.ok() ? "pass" : "FAIL") << "\n";
    for (const auto& issue : report.issues) out << "  " << to_string(issue.kind) << ": " << issue.message << "\n";
    for (const auto& r : rows) {
      out << "nonsingular degree " << r.degree << ": " << (r.nondegenerate ? "pass" : "FAIL") << " (" << r.minus_dim
          << " x " << r.plus_dim << ")\n";
    }
    out << "result: " << (report.ok() && nonsingular ? "pass" : "FAIL") << "\n";
  }
  if (!report.ok()) return exit_spec;
  return nonsingular ? exit_ok : exit_singular_character;
}

std::string matrix_text(const auto& m) {
  std::string s;
  for (const auto& row : m) {
    s += " ";
    for (const auto& e : row) s += " [" + e.str() + "]";
    s += "\n";
  }
  return s;
}

int cmd_pairing(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.degree < 1) throw SpecError("--degree must be at least 1");
  const Loaded loaded = load(cfg, cfg.degree, err);
  require_valid(*loaded.alg);
  const GradedLieAlgebra& alg = *loaded.alg;
  const Shapovalov shapovalov(loaded.alg);
  const auto data = shapovalov.component(cfg.degree);
  if (cfg.format == Format::json) {
    Json j = jio::to_json(alg, *data);
    j["algebra"] = alg.name();
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  out << "algebra: " << alg.name() << "\ndegree: " << cfg.degree << "\n";
  for (std::size_t k = 0; k < data->basis.minus.size(); ++k) {
    out << "x" << k << " = " << data->basis.minus[k].str(alg) << "    y" << k << " = "
        << to_string(alg, data->basis.plus[k]) << "\n";
  }
  out << "M =\n" << matrix_text(data->pairing) << "M^-1 =\n" << matrix_text(data->inverse);
  return exit_ok;
}

int f_degree(const GradedLieAlgebra& alg, int hbar_order) {
  return alg.truncated() ? alg.cutoff() : required_degree(alg, hbar_order);
}

int cmd_star(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.hbar_order < 0) throw SpecError("--order must be non-negative");
  const Loaded loaded = load(cfg, 0, err);
  require_valid(*loaded.alg);
  const GradedLieAlgebra& alg = *loaded.alg;
  const Shapovalov shapovalov(loaded.alg);
  const CanonicalElement f = shapovalov.canonical_element(f_degree(alg, cfg.hbar_order), cfg.threads);
  const StarProduct b = star_series(f, cfg.hbar_order);
  if (!b.complete) err << "notice: B is restricted to slot degrees <= " << b.degree_window << "\n";
  if (cfg.format == Format::json) {
    out << jio::to_json(b).dump(2) << "\n";
    return exit_ok;
  }
  out << "algebra: " << alg.name() << "\norder: " << b.hbar_order << "\n";
  out << (b.complete ? std::string("complete") : "restricted to slot degrees <= " + std::to_string(b.degree_window))
      << "\n";
  for (int m = 0; m <= b.hbar_order; ++m) out << "B_" << m << " = " << to_string(alg, b[m]) << "\n";
  return exit_ok;
}

const std::vector<std::string> kChecks = {"assoc",         "invariance",    "closed-form",       "residue",
                                          "first-order",   "order-bounds",  "natural-order",     "pairing-structure",
                                          "oracle",        "canonicity",    "all"};

int cmd_verify(const RunConfig& cfg, const std::string& which, std::ostream& out, std::ostream& err) {
  if (std::find(kChecks.begin(), kChecks.end(), which) == kChecks.end()) throw SpecError("unknown check '" + which + "'");
  const int d = cfg.max_degree;
  if (d < 1) throw SpecError("--max-degree must be at least 1");
  const bool closed = which == "closed-form";
  const Loaded loaded = load(cfg, closed ? std::max(d, 2) : d, err);
  require_valid(*loaded.alg);
  const GradedLieAlgebra& alg = *loaded.alg;
  const Shapovalov shapovalov(loaded.alg);
  const int fdeg = alg.truncated() ? d : std::max(d, required_degree(alg, std::max(cfg.hbar_order, 1)));
  const CanonicalElement f = shapovalov.canonical_element(fdeg, cfg.threads);

  std::vector<VerificationReport> reports;
  auto want = [&](const char* name) { return which == name || which == "all"; };
  if (want("assoc")) reports.push_back(check_associativity(f, d, cfg.threads));
  if (want("invariance")) reports.push_back(check_invariance(f, d));
  const bool known_family = alg.name() == "heisenberg" || alg.name() == "sl2" || alg.name() == "virasoro";
  if (closed || (which == "all" && known_family)) reports.push_back(check_closed_forms(f, cfg.hbar_order));
  if (want("residue")) reports.push_back(check_residue(f));
  if (want("first-order")) reports.push_back(check_first_order(f, star_series(f, std::max(cfg.hbar_order, 1))));
  if (want("order-bounds")) reports.push_back(check_order_bounds(f));
  if (want("natural-order")) reports.push_back(check_natural_order(star_series(f, cfg.hbar_order)));
  if (want("pairing-structure")) reports.push_back(check_pairing_structure(f));
  if (want("oracle")) reports.push_back(check_oracle(shapovalov, d));
  if (want("canonicity")) reports.push_back(check_canonicity(loaded.alg, d));

  const bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  if (cfg.format == Format::json) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(jio::to_json(r));
    out << Json{{"passed", passed}, {"reports", arr}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << to_text(r) << "\n";
  }
  return passed ? exit_ok : exit_verification_failed;
}

int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Loaded loaded = load(cfg, 0, err);
  out << jio::algebra_to_json(*loaded.alg).dump(2) << "\n";
  return exit_ok;
}

void add_common(CLI::App* sub, RunConfig& cfg, std::vector<std::string>& params, std::string& format) {
  sub->add_option("--builtin", cfg.builtin, "heisenberg, sl2, virasoro or random");
  sub->add_option("--spec", cfg.spec_path, "algebra spec (JSON)");
  sub->add_option("--param", params, "k=v[,k=v...] builtin parameters (rationals)");
  sub->add_option("--cutoff", cfg.cutoff, "degree window of a builtin");
  sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--output", cfg.output, "write to this file instead of standard output");
  sub->add_option("--threads", cfg.threads, "worker threads");
  sub->add_option("--seed", cfg.seed, "seed for the random builtin");
}

}  // namespace

void parse_params(const std::string& text, std::map<std::string, Rational>& params) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw SpecError("parameter '" + item + "' is not of the form k=v");
    params[item.substr(0, eq)] = Rational::parse(item.substr(eq + 1));
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant star products from the Shapovalov pairing"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::vector<std::string> params;
  std::string format = "text";
  std::string which;

  auto* validate_cmd = app.add_subcommand("validate", "check the algebra and the nonsingularity of the character");
  add_common(validate_cmd, cfg, params, format);
  auto* max_degree_opt = validate_cmd->add_option("--max-degree", cfg.max_degree, "check degrees 1..D");

  auto* pairing_cmd = app.add_subcommand("pairing", "pairing matrix M^n(lambda) and its inverse");
  add_common(pairing_cmd, cfg, params, format);
  pairing_cmd->add_option("--degree", cfg.degree, "n")->required();

  auto* star_cmd = app.add_subcommand("star", "B_0 ... B_N");
  add_common(star_cmd, cfg, params, format);
  star_cmd->add_option("--order", cfg.hbar_order, "N");

  auto* verify_cmd = app.add_subcommand("verify", "run identity checks");
  add_common(verify_cmd, cfg, params, format);
  verify_cmd->add_option("check", which, "assoc, invariance, closed-form, residue, first-order, order-bounds, "
                                         "natural-order, pairing-structure, oracle, canonicity or all")
      ->required();
  verify_cmd->add_option("--max-degree", cfg.max_degree, "degree cutoff D (default 4)");
  verify_cmd->add_option("--order", cfg.hbar_order, "hbar order N (default 2)");

  auto* export_cmd = app.add_subcommand("export", "write the algebra as a JSON spec");
  add_common(export_cmd, cfg, params, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  std::ostringstream buffer;
  int code = exit_ok;
  try {
    parse_params_into(params, cfg.params);
    cfg.format = format == "json" ? Format::json : Format::text;
    if (cfg.threads == 0) cfg.threads = 1;
    if (*validate_cmd) code = cmd_validate(cfg, max_degree_opt->count() > 0, buffer, err);
    if (*pairing_cmd) code = cmd_pairing(cfg, buffer, err);
    if (*star_cmd) code = cmd_star(cfg, buffer, err);
    if (*verify_cmd) code = cmd_verify(cfg, which, buffer, err);
    if (*export_cmd) code = cmd_export(cfg, buffer, err);
  } catch (const SingularCharacterError& e) {
    err << "error: singular character: " << e.what() << "\n";
    return exit_singular_character;
  } catch (const WindowError& e) {
    err << "error: window too small: " << e.what() << "\n";
    return exit_window;
  } catch (const SpecError& e) {
    err << "error: bad spec: " << e.what() << "\n";
    return exit_spec;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  if (cfg.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << cfg.output << "'\n";
      return exit_usage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace invstar::cli
