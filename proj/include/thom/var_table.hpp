#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace thom {

struct Variable {
  std::string name;
  int weight = 1;
  friend bool operator==(const Variable&, const Variable&) = default;
};

// Ordered, named, weighted variables. Weight 0 is reserved for numeric
// characters (d, xi1, ...) that carry no cohomological degree.
class VarTable {
 public:
  VarTable() = default;
  explicit VarTable(std::vector<Variable> vars);
  VarTable(std::initializer_list<Variable> vars) : VarTable(std::vector<Variable>(vars)) {}

  std::size_t size() const { return vars_.size(); }
  const Variable& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& variables() const { return vars_; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;  // throws UsageError
  bool contains(std::string_view name) const { return find(name).has_value(); }

  int weighted_degree(const std::vector<int>& exps) const;

  friend bool operator==(const VarTable& a, const VarTable& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<Variable> vars_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_table(std::vector<Variable> vars);

// c1..cm (weights 1..m) followed by cp1..cpn (weights 1..n).
VarTablePtr chern_table(int m, int n);

// Appends `extra` to the variables of `base`.
VarTablePtr extend_table(const VarTable& base, const std::vector<Variable>& extra);

// Variables named prefix1..prefixk with weights 1..k (or all `weight` if nonzero).
std::vector<Variable> indexed_vars(const std::string& prefix, int k, int weight = 0);

bool same_table(const VarTablePtr& a, const VarTablePtr& b);

}  // namespace thom
