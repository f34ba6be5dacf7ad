#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thom/graded_poly.hpp"

namespace thom {

using Weight = std::vector<int>;  // one integer per torus coordinate

struct SingularityType {
  std::string name;
  int source_dim = 0;
  int target_dim = 0;
  int codim = 0;
  int torus_rank = 1;
  std::vector<Weight> source_weights;
  std::vector<Weight> target_weights;
  std::vector<Weight> unfolding_weights;
  std::vector<Weight> normal_weights;
  std::optional<std::string> known_tp;  // canonical text, (c, c') or cb variables
  bool solvable = false;
  std::string notes;
  std::vector<std::string> normal_form;  // components in x, y, z; optional

  std::pair<int, int> pair() const { return {source_dim, target_dim}; }
  bool has_modulus() const;  // a zero normal weight vector
};

struct Diagnostic {
  std::string type;
  std::string field;
  std::string message;
};

// Variables known_tp may use for a given pair: c, cp, and cb1..cb(max_degree).
VarTablePtr known_tp_table(int m, int n, int max_degree);

// known_tp expanded into chern_table(m, n).
std::optional<GradedPoly> known_tp_poly(const SingularityType& t);

std::vector<Diagnostic> validate(const SingularityType& t);

class Registry {
 public:
  Registry() = default;
  explicit Registry(std::vector<SingularityType> types) : types_(std::move(types)) {}

  const std::vector<SingularityType>& types() const { return types_; }

  // Exact name or alias; `pair` disambiguates names shared across pairs.
  const SingularityType* lookup(const std::string& name, std::optional<std::pair<int, int>> pair = {}) const;
  const SingularityType& get(const std::string& name, std::optional<std::pair<int, int>> pair = {}) const;
  std::vector<const SingularityType*> of_pair(int m, int n) const;

  // Records replace same-named records of the same pair, others are appended.
  void merge(const std::vector<SingularityType>& extra);

  std::vector<Diagnostic> validate_all() const;

 private:
  std::vector<SingularityType> types_;
};

// Canonical name for an alias within a pair; the input when not an alias.
std::string canonical_type_name(const std::string& name, std::optional<std::pair<int, int>> pair);

Registry builtin_registry();

// Builtin registry, merged with the file named by THOMCALC_REGISTRY if set.
Registry default_registry();
inline constexpr const char* kRegistryEnv = "THOMCALC_REGISTRY";

std::string dump_registry(const std::vector<SingularityType>& types);
std::vector<SingularityType> parse_registry(const std::string& json_text);  // throws ParseError
std::vector<SingularityType> load_registry(const std::string& path);

}  // namespace thom
