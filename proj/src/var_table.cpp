#include "thom/var_table.hpp"

#include <set>

#include "thom/errors.hpp"

namespace thom {

VarTable::VarTable(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw UsageError("empty variable name");
    if (v.weight < 0) throw UsageError("negative weight for variable " + v.name);
    if (!seen.insert(v.name).second) throw UsageError("duplicate variable " + v.name);
  }
}

std::optional<std::size_t> VarTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::size_t VarTable::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw UsageError("unknown variable " + std::string(name));
  return *i;
}

int VarTable::weighted_degree(const std::vector<int>& exps) const {
  int d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) d += exps[i] * vars_[i].weight;
  return d;
}

VarTablePtr make_table(std::vector<Variable> vars) {
  return std::make_shared<const VarTable>(std::move(vars));
}

std::vector<Variable> indexed_vars(const std::string& prefix, int k, int weight) {
  std::vector<Variable> out;
  for (int i = 1; i <= k; ++i) out.push_back({prefix + std::to_string(i), weight ? weight : i});
  return out;
}

VarTablePtr chern_table(int m, int n) {
  auto vars = indexed_vars("c", m);
  auto primed = indexed_vars("cp", n);
  vars.insert(vars.end(), primed.begin(), primed.end());
  return make_table(std::move(vars));
}

VarTablePtr extend_table(const VarTable& base, const std::vector<Variable>& extra) {
  auto vars = base.variables();
  vars.insert(vars.end(), extra.begin(), extra.end());
  return make_table(std::move(vars));
}

bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace thom
