#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "thom/chern.hpp"
#include "thom/enumerative.hpp"
#include "thom/errors.hpp"
#include "thom/golden.hpp"
#include "thom/poly_text.hpp"
#include "thom/registry.hpp"
#include "thom/solver.hpp"
#include "thom/verify.hpp"

namespace thomcli {

using thom::GradedPoly;
using ojson = nlohmann::ordered_json;

namespace {

struct Options {
  std::string registry_path;

  std::string pair, type, constraints = "auto", format = "text";

  std::string tables = "all";

  std::string pipeline, chars;
  std::optional<std::string> d1, d2, d;

  bool dump = false, validate = false;
  std::string load;
};

std::pair<int, int> parse_pair(const std::string& s) {
  int m = 0, n = 0;
  char comma = 0, extra = 0;
  std::istringstream in(s);
  if (!(in >> m >> comma >> n) || comma != ',' || (in >> extra)) throw thom::UsageError("--pair expects m,n");
  return {m, n};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    auto b = cur.find_first_not_of(' '), e = cur.find_last_not_of(' ');
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
  }
  return out;
}

std::string latex_type(const std::string& name) {
  if (name == "I22") return "I_{2,2}";
  auto pos = name.find_first_of("0123456789");
  if (pos == std::string::npos || pos == 0) return name;
  return name.substr(0, pos) + "_{" + name.substr(pos) + "}";
}

std::string format_diagnostics(const std::vector<thom::Diagnostic>& diags) {
  std::string s;
  for (const auto& d : diags) s += "\n  " + d.type + " " + d.field + ": " + d.message;
  return s;
}

// Built-in types, the environment override, then --registry; all validated.
thom::Registry load_registry(const Options& o) {
  thom::Registry reg = thom::default_registry();
  if (!o.registry_path.empty()) reg.merge(thom::load_registry(o.registry_path));
  if (auto diags = reg.validate_all(); !diags.empty())
    throw thom::ValidationError("registry failed validation:" + format_diagnostics(diags));
  return reg;
}

// --- solve ---------------------------------------------------------------

ojson report_json(const thom::SolveReport& r) {
  ojson j;
  j["basis"] = r.basis;
  j["constraints"] = r.constraints;
  ojson eqs = ojson::array();
  for (const auto& e : r.equations) {
    ojson q;
    q["label"] = e.label;
    q["source"] = e.source;
    q["role"] = e.role;
    q["torus_monomial"] = e.torus_text;
    q["equation"] = e.str();
    eqs.push_back(q);
  }
  j["equations"] = eqs;
  j["unknowns"] = r.unknowns;
  j["rank"] = r.rank;
  j["consistent"] = r.consistent;
  j["unique"] = r.unique;
  j["kernel_dim"] = r.kernel_dim;
  j["pivot_rows"] = r.pivot_rows;
  j["conflict"] = r.conflict ? ojson(*r.conflict) : ojson(nullptr);
  ojson sol = ojson::array();
  for (const auto& x : r.solution) sol.push_back(x.str());
  j["solution"] = sol;
  j["integral"] = r.integral;
  j["verified"] = r.verified;
  return j;
}

void print_report_text(const thom::SolveReport& r, std::ostream& out) {
  out << "basis:";
  for (std::size_t i = 0; i < r.basis.size(); ++i) out << (i ? ", " : " ") << "x" << i + 1 << "=" << r.basis[i];
  out << "\nconstraints:";
  for (const auto& c : r.constraints) out << " " << c;
  out << "\nequations:\n";
  for (const auto& e : r.equations)
    out << "  " << e.label << " [" << e.source << " @ " << e.torus_text << "] " << e.str() << "\n";
  out << "rank " << r.rank << " of " << r.unknowns << " unknowns, kernel " << r.kernel_dim
      << (r.consistent ? ", consistent" : ", inconsistent") << (r.unique ? ", unique" : "") << "\n";
  if (r.conflict) out << "conflict: " << *r.conflict << "\n";
}

std::vector<const thom::SingularityType*> resolve_constraints(const thom::Registry& reg, const thom::SingularityType& t,
                                                              const std::string& spec) {
  if (spec == "auto") return thom::default_constraints(reg, t);
  std::vector<const thom::SingularityType*> out;
  for (const auto& name : split(spec, ','))
    if (!name.empty()) out.push_back(&reg.get(name, t.pair()));
  return out;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  thom::Registry reg = load_registry(o);
  auto pair = parse_pair(o.pair);
  const thom::SingularityType& t = reg.get(o.type, pair);
  thom::SolveResult res;
  try {
    res = thom::solve_tp(t, resolve_constraints(reg, t, o.constraints));
  } catch (const thom::SolveFailure& f) {
    if (o.format == "json") {
      ojson j;
      j["type"] = t.name;
      j["pair"] = {pair.first, pair.second};
      j["error"] = f.what();
      j["report"] = report_json(f.report);
      out << j.dump(2) << "\n";
    } else {
      print_report_text(f.report, out);
    }
    err << "error: " << f.what() << "\n";
    return kSolverError;
  }
  std::optional<GradedPoly> golden;
  try {
    golden = thom::golden_tp(t.name, pair);
  } catch (const thom::UnknownName&) {
  }
  std::string verdict = golden ? (*golden == res.tp ? "PASS" : "FAIL") : "none";
  auto quotient = thom::to_quotient_form(res.tp, pair.first, pair.second);

  if (o.format == "json") {
    ojson j;
    j["type"] = t.name;
    j["pair"] = {pair.first, pair.second};
    j["tp"] = res.tp.str();
    j["tp_cbar"] = quotient ? ojson(quotient->str()) : ojson(nullptr);
    j["report"] = report_json(res.report);
    j["golden"] = golden ? ojson(verdict) : ojson(nullptr);
    out << j.dump(2) << "\n";
  } else if (o.format == "latex") {
    out << latex_type(t.name) << " & " << thom::render_latex(quotient ? *quotient : res.tp) << " \\\\\n";
  } else {
    out << "type: " << t.name << " (" << pair.first << "," << pair.second << "), codim " << t.codim << "\n";
    print_report_text(res.report, out);
    out << "Tp = " << res.tp.str() << "\n";
    if (quotient) out << "Tp (cbar) = " << quotient->str() << "\n";
    out << "golden: " << verdict << "\n";
    if (verdict == "FAIL") out << "  published: " << golden->str() << "\n";
  }
  return verdict == "FAIL" ? kMismatch : kOk;
}

// --- verify --------------------------------------------------------------

std::vector<std::string> parse_tables(const std::string& spec) {
  const auto& ids = thom::table_ids();
  if (spec == "all") return ids;
  std::vector<std::string> out;
  for (const auto& item : split(spec, ',')) {
    auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(item);
      continue;
    }
    int lo = 0, hi = 0;
    try {
      lo = std::stoi(item.substr(0, dots));
      hi = std::stoi(item.substr(dots + 2));
    } catch (const std::exception&) {
      throw thom::UnknownName("bad table range '" + item + "'");
    }
    for (int k = lo; k <= hi; ++k) out.push_back(std::to_string(k));
  }
  for (const auto& id : out)
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
      throw thom::UnknownName("unknown table '" + id + "' (expected 4..11 or all)");
  return out;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
  thom::Registry reg = load_registry(o);
  std::size_t total = 0, failed = 0;
  for (const auto& id : parse_tables(o.tables)) {
    for (const auto& r : thom::verify_table(id, reg)) {
      ++total;
      out << (r.passed ? "PASS" : "FAIL") << "  table " << r.table << "  " << r.row << "  (" << r.method << ")\n";
      if (!r.passed) {
        ++failed;
        out << "      got:  " << r.got << "\n      want: " << r.want << "\n";
      }
      if (!r.detail.empty() && (!r.passed || r.method == "identity")) out << "      note: " << r.detail << "\n";
    }
  }
  out << total << " rows, " << total - failed << " passed, " << failed << " failed\n";
  return failed ? kMismatch : kOk;
}

// --- enumerate -----------------------------------------------------------

std::pair<int, int> pipeline_pair(thom::Pipeline p) {
  if (p == thom::Pipeline::P3Surface) return {2, 2};
  if (p == thom::Pipeline::P4Surface) return {2, 3};
  return {3, 3};
}

thom::Rational parse_value(const std::string& key, const std::string& text) {
  try {
    return thom::Rational::parse(text);
  } catch (const std::exception&) {
    throw thom::ValidationError("malformed value for " + key + ": '" + text + "'");
  }
}

// Published Tp, else the registry's closed form, else the solver.
GradedPoly tp_for(const thom::Registry& reg, const thom::SingularityType& t) {
  try {
    return thom::golden_tp(t.name, t.pair());
  } catch (const thom::UnknownName&) {
  }
  if (auto k = thom::known_tp_poly(t)) return *k;
  return thom::solve_tp(reg, t).tp;
}

std::vector<std::string> var_names(const GradedPoly& p) {
  std::vector<std::string> out;
  for (const auto& v : p.vars().variables()) out.push_back(v.name);
  return out;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream&) {
  thom::Pipeline p = thom::parse_pipeline(o.pipeline);
  thom::Registry reg = load_registry(o);
  const thom::SingularityType& t = reg.get(o.type, pipeline_pair(p));
  GradedPoly formula = thom::locus_degree(tp_for(reg, t), p);

  std::map<std::string, thom::Rational> values;
  if (!o.chars.empty()) {
    for (const auto& kv : split(o.chars, ',')) {
      auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) throw thom::ValidationError("malformed character '" + kv + "'");
      std::string key = kv.substr(0, eq);
      if (values.count(key)) throw thom::ValidationError("character " + key + " given twice");
      values.emplace(key, parse_value(key, kv.substr(eq + 1)));
    }
  }
  if (o.d) values.emplace("d", parse_value("d", *o.d));
  if (o.d1 || o.d2) {
    if (p != thom::Pipeline::P4Surface) throw thom::ValidationError("--d1/--d2 apply to p4-surface only");
    if (!o.d1 || !o.d2) throw thom::ValidationError("--d1 and --d2 must be given together");
    if (!values.empty()) throw thom::ValidationError("--d1/--d2 exclude other characters");
    formula = thom::specialize(formula, thom::complete_intersection_chars());
    values.emplace("d1", parse_value("d1", *o.d1));
    values.emplace("d2", parse_value("d2", *o.d2));
  }
  bool ordinary = values.count("eps0") || values.count("C") || values.count("T");
  if (ordinary) {
    if (p != thom::Pipeline::P3Surface) throw thom::ValidationError("eps0, C, T apply to p3-surface only");
    formula = thom::ordinary_table(formula);
  }
  const auto names = var_names(formula);
  for (const auto& [key, v] : values)
    if (std::find(names.begin(), names.end(), key) == names.end())
      throw thom::ValidationError("character '" + key + "' does not apply to this formula (expected " +
                                  [&] {
                                    std::string s;
                                    for (const auto& n : names) s += (s.empty() ? "" : ", ") + n;
                                    return s;
                                  }() +
                                  ")");
  std::optional<thom::Rational> value;
  if (!values.empty()) {
    for (const auto& n : names)
      if (!values.count(n)) throw thom::ValidationError("missing character " + n);
    value = thom::evaluate_characters(formula, values);
  }

  if (o.format == "json") {
    ojson j;
    j["locus"] = t.name;
    j["pipeline"] = thom::pipeline_name(p);
    j["formula"] = formula.str();
    j["characters"] = names;
    if (value) j["value"] = value->str();
    out << j.dump(2) << "\n";
  } else if (o.format == "latex") {
    out << latex_type(t.name) << " & " << thom::render_latex(formula);
    if (value) out << " & " << value->str();
    out << " \\\\\n";
  } else {
    out << "locus: " << t.name << " (" << thom::pipeline_name(p) << ")\n";
    out << "formula: " << formula.str() << "\n";
    if (value) out << "value: " << value->str() << "\n";
  }
  return kOk;
}

// --- registry ------------------------------------------------------------

int cmd_registry(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.load.empty()) {
    auto types = thom::load_registry(o.load);
    if (o.validate) {
      std::size_t bad = 0;
      for (const auto& t : types)
        for (const auto& d : thom::validate(t)) {
          ++bad;
          err << o.load << ": " << d.type << " (" << t.source_dim << "," << t.target_dim << ") " << d.field << ": "
              << d.message << "\n";
        }
      if (bad) return kBadInput;
      out << o.load << ": " << types.size() << " types, valid\n";
      if (!o.dump) return kOk;
    }
    thom::Registry reg = load_registry(o);
    reg.merge(types);
    if (o.dump) {
      out << thom::dump_registry(reg.types());
    } else {
      for (const auto& t : reg.types())
        out << t.name << " (" << t.source_dim << "," << t.target_dim << ") codim " << t.codim
            << (t.solvable ? "" : " closed-form") << "\n";
    }
    return kOk;
  }
  if (o.dump) {
    out << thom::dump_registry(load_registry(o).types());
    return kOk;
  }
  err << "registry: give --dump or --load PATH\n";
  return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Thom polynomials of map-germs and enumerative formulas for projections"};
  app.set_help_all_flag("--help-all");
  app.require_subcommand(1, 1);
  app.add_option("--registry", o.registry_path, "extra registry JSON merged over the built-in one");

  auto* solve = app.add_subcommand("solve", "solve a Thom polynomial by restriction");
  solve->add_option("--pair", o.pair, "dimensions m,n")->required();
  solve->add_option("--type", o.type, "singularity type")->required();
  solve->add_option("--constraints", o.constraints, "auto or comma-separated type names");
  solve->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "latex"}));

  auto* verify = app.add_subcommand("verify", "check published tables");
  verify->add_option("--tables", o.tables, "4..11, a list such as 4,7, or all");

  auto* enumerate = app.add_subcommand("enumerate", "degree of a singular-projection locus");
  enumerate->add_option("--pipeline", o.pipeline, "p3-surface, p4-surface or p4-primal")->required();
  enumerate->add_option("--type", o.type, "singularity type")->required();
  enumerate->add_option("--chars", o.chars, "k=v,... in d, xi1, xi2, xi01 or d, eps0, C, T");
  enumerate->add_option("--d1", o.d1);
  enumerate->add_option("--d2", o.d2);
  enumerate->add_option("--d", o.d);
  enumerate->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "latex"}));

  auto* registry = app.add_subcommand("registry", "dump, load or validate registry files");
  registry->add_flag("--dump", o.dump);
  registry->add_option("--load", o.load);
  registry->add_flag("--validate", o.validate);

  std::vector<std::string> argv_store{"thomcalc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return cmd_solve(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
    if (*enumerate) return cmd_enumerate(o, out, err);
    return cmd_registry(o, out, err);
  } catch (const thom::UnknownName& e) {
    err << "error: " << e.what() << "\n";
    return kUnknownName;
  } catch (const thom::SolverError& e) {
    err << "error: " << e.what() << "\n";
    return kSolverError;
  } catch (const thom::DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kSolverError;
  } catch (const thom::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const thom::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const thom::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace thomcli
