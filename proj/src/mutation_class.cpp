#include "cluster/mutation_class.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cluster/errors.hpp"

namespace cluster {

std::string MutationClassGraph::truncation_reason() const {
  if (complete()) return "complete";
  if (seed_cap_hit_ && depth_cap_hit_) return "seed cap, depth cap";
  return seed_cap_hit_ ? "seed cap" : "depth cap";
}

std::optional<std::size_t> MutationClassGraph::neighbor(std::size_t i, std::size_t k) const {
  const std::size_t j = neighbors_.at(i).at(k);
  if (j == kUnresolved) return std::nullopt;
  return j;
}

std::vector<MutationEdge> MutationClassGraph::edges() const {
  std::vector<MutationEdge> out;
  for (std::size_t i = 0; i < seeds_.size(); ++i) {
    for (std::size_t k = 0; k < neighbors_[i].size(); ++k) {
      if (neighbors_[i][k] != kUnresolved) out.push_back({i, k, neighbors_[i][k]});
    }
  }
  return out;
}

MutationWord MutationClassGraph::word_to(std::size_t i) const {
  MutationWord w;
  while (i != 0) {
    w.push_back(parent_direction_[i]);
    i = parent_[i];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::optional<std::size_t> MutationClassGraph::find(const Seed& s) const {
  auto it = by_hash_.find(s.hash());
  if (it == by_hash_.end()) return std::nullopt;
  for (std::size_t j : it->second) {
    if (seeds_[j] == s) return j;
  }
  return std::nullopt;
}

MutationClassGraph explore(const Seed& start, const ExploreLimits& limits) {
  if (limits.max_seeds == 0 || limits.max_depth == 0) throw InvalidInput("exploration limits must be positive");
  MutationClassGraph g;
  const std::size_t n = start.rank();
  auto add = [&](Seed s, std::size_t parent, std::size_t direction, std::size_t depth) {
    const std::size_t index = g.seeds_.size();
    g.by_hash_[s.hash()].push_back(index);
    g.seeds_.push_back(std::move(s));
    g.neighbors_.emplace_back(n, MutationClassGraph::kUnresolved);
    g.depth_.push_back(depth);
    g.parent_.push_back(parent);
    g.parent_direction_.push_back(direction);
    return index;
  };
  add(start, 0, 0, 0);

  for (std::size_t i = 0; i < g.seeds_.size(); ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (g.neighbors_[i][k] != MutationClassGraph::kUnresolved) continue;
      Seed next = mutate_seed(g.seeds_[i], k);
      std::optional<std::size_t> j = g.find(next);
      if (!j) {
        if (g.depth_[i] >= limits.max_depth) {
          g.depth_cap_hit_ = true;
          continue;
        }
        if (g.seeds_.size() >= limits.max_seeds) {
          g.seed_cap_hit_ = true;
          continue;
        }
        j = add(std::move(next), i, k, g.depth_[i] + 1);
      }
      // Mutation is an involution, so the edge is resolved from both ends.
      g.neighbors_[i][k] = *j;
      g.neighbors_[*j][k] = i;
    }
  }
  return g;
}

MutationClassGraph explore(const ValuedQuiver& q, const ExploreLimits& limits) {
  return explore(initial_seed(q), limits);
}

std::vector<LaurentPoly> cluster_variables(const MutationClassGraph& g) {
  std::set<LaurentPoly> all;
  for (const Seed& s : g.seeds()) all.insert(s.cluster.begin(), s.cluster.end());
  return {all.begin(), all.end()};
}

std::size_t unlabeled_cluster_count(const MutationClassGraph& g) {
  std::set<std::vector<LaurentPoly>> clusters;
  for (const Seed& s : g.seeds()) {
    std::vector<LaurentPoly> sorted = s.cluster;
    std::sort(sorted.begin(), sorted.end());
    clusters.insert(std::move(sorted));
  }
  return clusters.size();
}

bool verify_positivity(const MutationClassGraph& g) {
  const auto vars = cluster_variables(g);
  return std::all_of(vars.begin(), vars.end(), [](const LaurentPoly& x) { return is_positive(x); });
}

bool check_cluster_determines_quiver(const MutationClassGraph& g) {
  std::map<std::vector<LaurentPoly>, const ExchangeMatrix*> seen;
  for (const Seed& s : g.seeds()) {
    auto [it, inserted] = seen.emplace(s.cluster, &s.matrix);
    if (!inserted && !(*it->second == s.matrix)) return false;
  }
  return true;
}

}  // namespace cluster
