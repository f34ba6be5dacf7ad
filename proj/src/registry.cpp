#include "thom/registry.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "thom/chern.hpp"
#include "thom/errors.hpp"
#include "thom/poly_text.hpp"

namespace thom {

using ojson = nlohmann::ordered_json;

bool SingularityType::has_modulus() const {
  return std::any_of(normal_weights.begin(), normal_weights.end(), [](const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
  });
}

VarTablePtr known_tp_table(int m, int n, int max_degree) {
  auto vars = chern_table(m, n)->variables();
  auto cb = indexed_vars("cb", std::max(max_degree, 1));
  vars.insert(vars.end(), cb.begin(), cb.end());
  return make_table(std::move(vars));
}

std::optional<GradedPoly> known_tp_poly(const SingularityType& t) {
  if (!t.known_tp) return std::nullopt;
  GradedPoly p = parse_poly(*t.known_tp, known_tp_table(t.source_dim, t.target_dim, t.codim));
  return expand_quotient_form(p, t.source_dim, t.target_dim);
}

namespace {

std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

const char* kSourceVars[] = {"x", "y", "z"};

void check_normal_form(const SingularityType& t, std::vector<Diagnostic>& out) {
  auto diag = [&](std::string field, std::string msg) { out.push_back({t.name, std::move(field), std::move(msg)}); };
  if (t.normal_form.empty()) return;
  if (static_cast<int>(t.normal_form.size()) != t.target_dim) {
    diag("normal_form", "has " + std::to_string(t.normal_form.size()) + " components, expected " +
                            std::to_string(t.target_dim));
    return;
  }
  if (t.source_dim > 3) {
    diag("normal_form", "normal forms are supported for source dimension <= 3");
    return;
  }
  if (static_cast<int>(t.source_weights.size()) != t.source_dim) return;
  for (const auto& w : t.source_weights)
    if (static_cast<int>(w.size()) != t.torus_rank) return;
  std::vector<Variable> sv;
  for (int i = 0; i < t.source_dim; ++i) sv.push_back({kSourceVars[i], 1});
  auto table = make_table(sv);
  for (int j = 0; j < t.target_dim; ++j) {
    const std::string& text = t.normal_form[j];
    GradedPoly comp(table);
    try {
      comp = parse_poly(text, table);
    } catch (const ParseError& e) {
      diag("normal_form", "component " + text + ": " + e.what());
      continue;
    }
    if (j >= static_cast<int>(t.target_weights.size())) continue;
    const Weight& want = t.target_weights[j];
    for (const auto& [e, c] : comp.terms()) {
      Weight got(t.torus_rank, 0);
      for (int i = 0; i < t.source_dim; ++i)
        for (int k = 0; k < t.torus_rank; ++k) got[k] += e[i] * t.source_weights[i][k];
      if (got != want) {
        std::string term = render(GradedPoly::monomial(table, e));
        diag("target_weights", "component " + text + " not homogeneous of degree " + weight_str(want) +
                                   " (term " + term + " has degree " + weight_str(got) + ")");
        break;
      }
    }
  }
}

}  // namespace

std::vector<Diagnostic> validate(const SingularityType& t) {
  std::vector<Diagnostic> out;
  auto diag = [&](std::string field, std::string msg) { out.push_back({t.name, std::move(field), std::move(msg)}); };
  if (t.name.empty()) diag("name", "empty name");
  if (t.source_dim < 1 || t.target_dim < t.source_dim) diag("source_dim", "need 1 <= source_dim <= target_dim");
  if (t.codim < 0) diag("codim", "negative codimension");
  if (t.torus_rank < 1) diag("torus_rank", "torus rank must be positive");

  auto check_list = [&](const char* field, const std::vector<Weight>& ws, std::optional<int> want_len) {
    if (want_len && static_cast<int>(ws.size()) != *want_len)
      diag(field, "has " + std::to_string(ws.size()) + " entries, expected " + std::to_string(*want_len));
    for (std::size_t i = 0; i < ws.size(); ++i)
      if (static_cast<int>(ws[i].size()) != t.torus_rank)
        diag(field, "entry " + std::to_string(i) + " has length " + std::to_string(ws[i].size()) +
                        ", torus rank is " + std::to_string(t.torus_rank));
  };
  check_list("source_weights", t.source_weights, t.source_dim);
  check_list("target_weights", t.target_weights, t.target_dim);
  check_list("unfolding_weights", t.unfolding_weights, std::nullopt);
  check_list("normal_weights", t.normal_weights, t.codim);
  check_normal_form(t, out);
  if (!out.empty()) return out;

  // Zero-dimensional locus: the normal slice is the source plus the unfolding.
  if (t.codim >= t.source_dim) {
    auto a = t.source_weights;
    a.insert(a.end(), t.unfolding_weights.begin(), t.unfolding_weights.end());
    auto b = t.normal_weights;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) diag("normal_weights", "must equal source_weights + unfolding_weights for a point locus");
  }

  if (t.known_tp) {
    try {
      GradedPoly p = parse_poly(*t.known_tp, known_tp_table(t.source_dim, t.target_dim, t.codim));
      if (!p.is_homogeneous(t.codim)) diag("known_tp", "not homogeneous of degree " + std::to_string(t.codim));
      GradedPoly e = known_tp_poly(t).value();
      if (!e.is_homogeneous(t.codim)) diag("known_tp", "expansion not homogeneous of degree " + std::to_string(t.codim));
    } catch (const std::exception& e) {
      diag("known_tp", e.what());
    }
  }
  return out;
}

namespace {

struct Alias {
  std::pair<int, int> pair;
  const char* alias;
  const char* name;
};

const Alias kAliases[] = {
    {{2, 2}, "A0", "Regular"},      {{2, 2}, "A1", "Fold"},         {{2, 2}, "A2", "Cusp"},
    {{2, 2}, "A3", "Swallowtail"},  {{2, 2}, "A4", "Butterfly"},    {{2, 2}, "I22", "Sharksfin"},
    {{2, 2}, "I2,2", "Sharksfin"},  {{2, 2}, "Lips", "Lips/Beaks"}, {{2, 2}, "Beaks", "Lips/Beaks"},
    {{2, 3}, "A0", "Immersion"},    {{2, 3}, "S1", "B1"},           {{2, 3}, "H1", "B1"},
    {{3, 3}, "I2,2", "I22"},
};

}  // namespace

std::string canonical_type_name(const std::string& name, std::optional<std::pair<int, int>> pair) {
  std::optional<std::string> hit;
  for (const auto& a : kAliases) {
    if (name != a.alias || (pair && *pair != a.pair)) continue;
    if (hit && *hit != a.name) return name;  // ambiguous without a pair
    hit = a.name;
  }
  return hit.value_or(name);
}

const SingularityType* Registry::lookup(const std::string& name, std::optional<std::pair<int, int>> pair) const {
  auto find_exact = [&](const std::string& n) {
    std::vector<const SingularityType*> hits;
    for (const auto& t : types_)
      if (t.name == n && (!pair || t.pair() == *pair)) hits.push_back(&t);
    return hits;
  };
  auto hits = find_exact(name);
  if (hits.empty()) {
    for (const auto& a : kAliases) {
      if (name != a.alias || (pair && *pair != a.pair)) continue;
      for (const auto& t : types_)
        if (t.name == a.name && t.pair() == a.pair) hits.push_back(&t);
    }
  }
  if (hits.size() > 1)
    throw UnknownName("type name " + name + " is ambiguous; give the pair");
  return hits.empty() ? nullptr : hits.front();
}

const SingularityType& Registry::get(const std::string& name, std::optional<std::pair<int, int>> pair) const {
  const SingularityType* t = lookup(name, pair);
  if (!t) {
    std::string where = pair ? " for pair (" + std::to_string(pair->first) + "," + std::to_string(pair->second) + ")" : "";
    throw UnknownName("unknown singularity type " + name + where);
  }
  return *t;
}

std::vector<const SingularityType*> Registry::of_pair(int m, int n) const {
  std::vector<const SingularityType*> out;
  for (const auto& t : types_)
    if (t.source_dim == m && t.target_dim == n) out.push_back(&t);
  return out;
}

void Registry::merge(const std::vector<SingularityType>& extra) {
  for (const auto& t : extra) {
    auto it = std::find_if(types_.begin(), types_.end(),
                           [&](const SingularityType& u) { return u.name == t.name && u.pair() == t.pair(); });
    if (it != types_.end()) *it = t;
    else types_.push_back(t);
  }
}

std::vector<Diagnostic> Registry::validate_all() const {
  std::vector<Diagnostic> out;
  for (const auto& t : types_) {
    auto d = validate(t);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

Registry default_registry() {
  Registry r = builtin_registry();
  if (const char* path = std::getenv(kRegistryEnv); path && *path) r.merge(load_registry(path));
  return r;
}

namespace {

ojson weights_json(const std::vector<Weight>& ws) {
  ojson a = ojson::array();
  for (const auto& w : ws) a.push_back(w);
  return a;
}

ojson type_json(const SingularityType& t) {
  ojson j;
  j["name"] = t.name;
  j["source_dim"] = t.source_dim;
  j["target_dim"] = t.target_dim;
  j["codim"] = t.codim;
  j["torus_rank"] = t.torus_rank;
  j["source_weights"] = weights_json(t.source_weights);
  j["target_weights"] = weights_json(t.target_weights);
  j["unfolding_weights"] = weights_json(t.unfolding_weights);
  j["normal_weights"] = weights_json(t.normal_weights);
  j["known_tp"] = t.known_tp ? ojson(*t.known_tp) : ojson(nullptr);
  j["solvable"] = t.solvable;
  j["notes"] = t.notes;
  if (!t.normal_form.empty()) j["normal_form"] = t.normal_form;
  return j;
}

const std::vector<std::string> kKeys = {"name",           "source_dim",        "target_dim",    "codim",
                                        "torus_rank",     "source_weights",    "target_weights", "unfolding_weights",
                                        "normal_weights", "known_tp",          "solvable",      "notes"};

SingularityType type_from_json(const ojson& j, std::size_t index) {
  std::string where = "record " + std::to_string(index);
  if (!j.is_object()) throw ParseError(where + " is not an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(kKeys.begin(), kKeys.end(), it.key()) == kKeys.end() && it.key() != "normal_form")
      throw ParseError(where + ": unknown key " + it.key());
  for (const auto& k : kKeys)
    if (!j.contains(k) && k != "known_tp") throw ParseError(where + ": missing key " + k);
  if (j["name"].is_string()) where += " (" + j["name"].get<std::string>() + ")";

  auto need = [&](const char* key, bool ok) {
    if (!ok) throw ParseError(where + ": field " + key + " has the wrong type");
  };
  auto integer = [&](const char* key) {
    need(key, j[key].is_number_integer());
    return j[key].get<int>();
  };
  auto weights = [&](const char* key) {
    const auto& a = j[key];
    need(key, a.is_array());
    std::vector<Weight> out;
    for (const auto& row : a) {
      need(key, row.is_array());
      Weight w;
      for (const auto& x : row) {
        need(key, x.is_number_integer());
        w.push_back(x.get<int>());
      }
      out.push_back(std::move(w));
    }
    return out;
  };

  SingularityType t;
  need("name", j["name"].is_string());
  t.name = j["name"].get<std::string>();
  t.source_dim = integer("source_dim");
  t.target_dim = integer("target_dim");
  t.codim = integer("codim");
  t.torus_rank = integer("torus_rank");
  t.source_weights = weights("source_weights");
  t.target_weights = weights("target_weights");
  t.unfolding_weights = weights("unfolding_weights");
  t.normal_weights = weights("normal_weights");
  if (j.contains("known_tp")) {
    need("known_tp", j["known_tp"].is_null() || j["known_tp"].is_string());
    if (j["known_tp"].is_string()) t.known_tp = j["known_tp"].get<std::string>();
  }
  need("solvable", j["solvable"].is_boolean());
  t.solvable = j["solvable"].get<bool>();
  need("notes", j["notes"].is_string());
  t.notes = j["notes"].get<std::string>();
  if (j.contains("normal_form")) {
    need("normal_form", j["normal_form"].is_array());
    for (const auto& c : j["normal_form"]) {
      need("normal_form", c.is_string());
      t.normal_form.push_back(c.get<std::string>());
    }
  }
  return t;
}

}  // namespace

std::string dump_registry(const std::vector<SingularityType>& types) {
  ojson a = ojson::array();
  for (const auto& t : types) a.push_back(type_json(t));
  return a.dump(2) + "\n";
}

std::vector<SingularityType> parse_registry(const std::string& json_text) {
  ojson j;
  try {
    j = ojson::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("registry is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("registry must be a JSON array of records");
  std::vector<SingularityType> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(type_from_json(j[i], i));
  return out;
}

std::vector<SingularityType> load_registry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open registry file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_registry(ss.str());
}

}  // namespace thom
