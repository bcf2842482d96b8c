#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cluster/laurent.hpp"
#include "cluster/seed.hpp"
#include "cluster/valued_quiver.hpp"

namespace cluster {

struct ExploreLimits {
  std::size_t max_seeds = 20000;
  std::size_t max_depth = 64;
};

struct MutationEdge {
  std::size_t from;
  std::size_t direction;
  std::size_t to;
  friend bool operator==(const MutationEdge&, const MutationEdge&) = default;
};

/// Labeled seeds reachable from an initial seed, numbered in BFS order with
/// directions ascending. Seed 0 is the initial seed.
class MutationClassGraph {
 public:
  const std::vector<Seed>& seeds() const { return seeds_; }
  const Seed& seed(std::size_t i) const { return seeds_[i]; }
  std::size_t size() const { return seeds_.size(); }
  std::size_t rank() const { return seeds_.front().rank(); }
  std::size_t initial() const { return 0; }

  /// True iff every seed had all of its mutations resolved to seeds in the graph.
  bool complete() const { return !seed_cap_hit_ && !depth_cap_hit_; }
  bool seed_cap_hit() const { return seed_cap_hit_; }
  bool depth_cap_hit() const { return depth_cap_hit_; }
  /// "complete", "seed cap", "depth cap" or "seed cap, depth cap".
  std::string truncation_reason() const;

  std::optional<std::size_t> neighbor(std::size_t i, std::size_t k) const;
  /// Every resolved edge, in both orientations, sorted by (from, direction).
  std::vector<MutationEdge> edges() const;
  std::size_t depth(std::size_t i) const { return depth_[i]; }
  /// BFS-tree word taking the initial seed to seed i.
  MutationWord word_to(std::size_t i) const;
  std::optional<std::size_t> find(const Seed& s) const;

  friend MutationClassGraph explore(const Seed& start, const ExploreLimits& limits);

 private:
  static constexpr std::size_t kUnresolved = static_cast<std::size_t>(-1);

  std::vector<Seed> seeds_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> parent_direction_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash_;
  bool seed_cap_hit_ = false;
  bool depth_cap_hit_ = false;
};

/// Breadth-first closure under all mutations; never throws on infinite classes,
/// truncation is reported through complete().
MutationClassGraph explore(const Seed& start, const ExploreLimits& limits = {});
MutationClassGraph explore(const ValuedQuiver& q, const ExploreLimits& limits = {});

/// Distinct cluster entries over all seeds, in canonical order.
std::vector<LaurentPoly> cluster_variables(const MutationClassGraph& g);

/// Distinct clusters once the labeling is forgotten.
std::size_t unlabeled_cluster_count(const MutationClassGraph& g);

bool verify_positivity(const MutationClassGraph& g);

/// No two seeds share a labeled cluster while carrying different matrices.
bool check_cluster_determines_quiver(const MutationClassGraph& g);

}  // namespace cluster
