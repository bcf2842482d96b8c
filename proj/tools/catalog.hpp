#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cluster/exchange_matrix.hpp"

namespace clusterx {

/// Built-in exchange matrices: A1, A2, A3, B2, C2, G2, markov.
std::optional<cluster::ExchangeMatrix> named_matrix(const std::string& name);
std::vector<std::string> catalog_names();

/// The pair from the parity-obstruction example: start and its (1 2)-relocation.
cluster::ExchangeMatrix parity_example_start();
cluster::ExchangeMatrix parity_example_target();

}  // namespace clusterx
