#include "catalog.hpp"

#include <map>

#include "cluster/permutation.hpp"

namespace clusterx {

using cluster::ExchangeMatrix;
using cluster::IntegerRows;

namespace {

const std::map<std::string, IntegerRows>& table() {
  static const std::map<std::string, IntegerRows> t{
      {"A1", {{0}}},
      {"A2", {{0, 1}, {-1, 0}}},
      {"A3", {{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}},
      {"B2", {{0, 2}, {-1, 0}}},
      {"C2", {{0, 1}, {-2, 0}}},
      {"G2", {{0, 3}, {-1, 0}}},
      {"markov", {{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}},
  };
  return t;
}

}  // namespace

std::optional<ExchangeMatrix> named_matrix(const std::string& name) {
  const auto it = table().find(name);
  if (it == table().end()) return std::nullopt;
  return ExchangeMatrix(it->second);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [name, rows] : table()) out.push_back(name);
  return out;
}

ExchangeMatrix parity_example_start() { return ExchangeMatrix(IntegerRows{{0, 2, 0}, {-2, 0, 1}, {0, -1, 0}}); }

ExchangeMatrix parity_example_target() {
  return cluster::permute_matrix(cluster::Permutation::transposition(3, 0, 1), parity_example_start());
}

}  // namespace clusterx
