#include "affmult/multiplicity.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "affmult/paths.hpp"
#include "affmult/permutations.hpp"

namespace affmult {

void validate_query(const MultiplicityQuery& q) {
  if (q.k < 1 || q.a < 1 || q.b < 1 || q.ell < 1)
    throw std::invalid_argument("query: parameters must be positive");
  if (q.k < q.a + q.b) throw std::invalid_argument("query: need k >= a + b");
  if (std::max(q.a, q.b) > q.ell) throw std::invalid_argument("query: need max{a, b} <= ell");
  if (q.rank() < n_min(q.ell, q.a, q.b))
    throw std::invalid_argument("query: rank below the stable range");
}

BigInt formula_term(const MultiplicityQuery& q, const Partition& mu) {
  if (mu.weight() != q.ell) throw std::invalid_argument("formula_term: mu must partition ell");
  if (mu.length() < std::max(q.a, q.b) || mu.length() > q.k)
    throw std::invalid_argument("formula_term: need max{a, b} <= l(mu) <= k");
  BigInt left = 0, right = 0;
  for (const auto& tau : decrement_set(mu, q.a)) left += hook_count(tau);
  for (const auto& omega : decrement_set(mu, q.b)) right += hook_count(omega);
  return left * right;
}

BigInt mult_formula(const MultiplicityQuery& q) {
  validate_query(q);
  BigInt total = 0;
  for (const auto& mu : gen_partitions(q.ell, std::max(q.a, q.b), q.k))
    total += formula_term(q, mu);
  return total;
}

BigInt mult_permutations(const MultiplicityQuery& q) {
  validate_query(q);
  return count_admissible(Constraint(q.k, q.a, q.b, q.ell));
}

BigInt mult_paths(const MultiplicityQuery& q) {
  validate_query(q);
  Region region = build_region(q.ell, q.a, q.b);
  BigInt total = 0;
  for (const auto& mu : gen_partitions(q.ell, std::max(q.a, q.b), q.k))
    total += static_cast<long long>(enumerate_pairs(region, q.k, mu).size());
  return total;
}

BigInt mult_crystal(const MultiplicityQuery& q) {
  validate_query(q);
  return static_cast<long long>(
      enumerate_weight_space(q.rank(), q.k, q.ell, q.a, q.b).size());
}

MethodTable default_methods() {
  return {{"formula", mult_formula},
          {"permutations", mult_permutations},
          {"paths", mult_paths},
          {"crystal", mult_crystal}};
}

MultiplicityReport cross_check(const MultiplicityQuery& q,
                               const std::vector<std::string>& methods) {
  return cross_check(q, methods, default_methods());
}

MultiplicityReport cross_check(const MultiplicityQuery& q, const std::vector<std::string>& methods,
                               const MethodTable& table) {
  validate_query(q);
  if (methods.size() < 2)
    throw std::invalid_argument("cross_check: select at least two methods");
  for (const auto& name : methods)
    if (!table.count(name)) throw std::invalid_argument("cross_check: unknown method " + name);

  MultiplicityReport report{q, {}, true, {}};
  std::vector<std::pair<std::string, std::future<BigInt>>> futs;
  futs.reserve(methods.size());
  for (const auto& name : methods)
    futs.emplace_back(name, std::async(std::launch::async,
                                       [fn = table.at(name), q] { return fn(q); }));
  for (auto& [name, fut] : futs) report.values[name] = fut.get();
  for (const auto& [name, value] : report.values)
    report.agree = report.agree && value == report.values.begin()->second;
  for (const auto& mu : gen_partitions(q.ell, std::max(q.a, q.b), q.k))
    report.breakdown.emplace_back(mu, formula_term(q, mu));
  return report;
}

}  // namespace affmult
