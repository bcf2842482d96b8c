#include "suites.hpp"

#include <functional>
#include <map>

#include "catalog.hpp"
#include "cluster/errors.hpp"
#include "cluster/exchange_map.hpp"
#include "cluster/mutation_class.hpp"
#include "cluster/parity.hpp"
#include "cluster/random.hpp"
#include "cluster/similarity.hpp"

namespace clusterx {

using namespace cluster;

namespace {

MutationClassGraph explore_named(const std::string& name) {
  return explore(initial_seed(*named_matrix(name)));
}

std::size_t pick(std::size_t requested, std::size_t fallback) { return requested ? requested : fallback; }

SuiteReport lemma312(const SuiteOptions& o) {
  SuiteReport r{"lemma312", 0, 0, {}};
  Rng rng(o.rng_seed);
  r.total = pick(o.trials, 1000);
  for (std::size_t t = 0; t < r.total; ++t) {
    const std::size_t n = 1 + uniform_index(rng, 5);
    const ExchangeMatrix b = random_skew_symmetrizable(rng, n, 9);
    const Permutation sigma = random_permutation(rng, n);
    bool ok = true;
    for (std::size_t k = 0; k < n; ++k) {
      ok = ok && permute_matrix(sigma, mutate_matrix(b, k)) == mutate_matrix(permute_matrix(sigma, b), sigma(k));
    }
    if (ok) {
      ++r.passed;
    } else if (r.notes.size() < 5) {
      r.notes.push_back("failed on " + b.to_string() + " sigma=" + sigma.to_string());
    }
  }
  return r;
}

SuiteReport laurent(const SuiteOptions&) {
  SuiteReport r{"laurent", 0, 0, {}};
  for (const char* name : {"A2", "A3", "B2", "G2"}) {
    ++r.total;
    try {
      const auto g = explore_named(name);
      const bool ok = g.complete() && verify_positivity(g);
      r.notes.push_back(std::string(name) + ": labeled=" + std::to_string(g.size()) +
                        " clusters=" + std::to_string(unlabeled_cluster_count(g)) +
                        " variables=" + std::to_string(cluster_variables(g).size()) +
                        " positive=" + (ok ? "true" : "false"));
      if (ok) ++r.passed;
    } catch (const LaurentPhenomenonViolation& e) {
      r.notes.push_back(std::string(name) + ": " + e.what());
    }
  }
  return r;
}

SuiteReport exchange_criterion(const SuiteOptions&) {
  SuiteReport r{"exchange-criterion", 0, 0, {}};
  for (const char* name : {"A2", "A3", "B2", "G2"}) {
    const auto g = explore_named(name);
    for (std::size_t p = 0; p < g.size(); ++p) {
      if (g.rank() > 2 && p != 0) break;
      for (std::size_t q = 0; q < g.size(); ++q) {
        for (const auto& sigma : Permutation::all(g.rank())) {
          ++r.total;
          const auto m = exchange_map_between(g, p, g, q, sigma);
          if (satisfies_lemma_311(m) == is_cluster_isomorphism(m)) {
            ++r.passed;
          } else if (r.notes.size() < 5) {
            r.notes.push_back(std::string(name) + ": seeds " + std::to_string(p) + " -> " + std::to_string(q) +
                              " sigma=" + sigma.to_string());
          }
        }
      }
    }
  }
  return r;
}

SuiteReport thm314_b2(const SuiteOptions&) {
  SuiteReport r{"thm314-b2", 0, 0, {}};
  const auto g = explore_named("B2");
  for (std::size_t p = 0; p < g.size(); ++p) {
    for (std::size_t q = 0; q < g.size(); ++q) {
      for (const auto& sigma : Permutation::all(2)) {
        ++r.total;
        const auto m = exchange_map_between(g, p, g, q, sigma);
        if (is_cluster_isomorphism(m) == verify_isomorphism_bruteforce(m, g, g).holds) {
          ++r.passed;
        } else if (r.notes.size() < 5) {
          r.notes.push_back("disagreement at seeds " + std::to_string(p) + ", " + std::to_string(q) +
                            " sigma=" + sigma.to_string());
        }
      }
    }
  }
  return r;
}

SuiteReport three_way(const SuiteOptions&) {
  SuiteReport r{"three-way", 0, 0, {}};
  for (const char* name : {"A2", "B2"}) {
    const auto g = explore_named(name);
    for (std::size_t p = 0; p < g.size(); ++p) {
      for (std::size_t q = 0; q < g.size(); ++q) {
        for (const auto& sigma : Permutation::all(g.rank())) {
          ++r.total;
          const auto m = exchange_map_between(g, p, g, q, sigma);
          const bool preserver = is_variable_preserver(m, g, g);
          const bool similar = is_cluster_isomorphism(m);
          const bool iso = verify_isomorphism_bruteforce(m, g, g).holds;
          if (preserver == similar && similar == iso) {
            ++r.passed;
          } else if (r.notes.size() < 5) {
            r.notes.push_back(std::string(name) + ": disagreement at seeds " + std::to_string(p) + ", " +
                              std::to_string(q) + " sigma=" + sigma.to_string());
          }
        }
      }
    }
  }
  return r;
}

SuiteReport word_transport(const SuiteOptions& o) {
  SuiteReport r{"word-transport", 0, 0, {}};
  Rng rng(o.rng_seed);
  std::vector<MutationClassGraph> classes;
  for (const char* name : {"A2", "A3", "B2", "G2"}) classes.push_back(explore_named(name));
  r.total = pick(o.trials, 200);
  for (std::size_t t = 0; t < r.total; ++t) {
    const auto& g = classes[uniform_index(rng, classes.size())];
    const std::size_t n = g.rank();
    const std::size_t p = uniform_index(rng, g.size());
    const Permutation sigma = random_permutation(rng, n);
    const Seed target = relabel_seed(sigma, g.seed(p));
    const ExchangeMap m{g.seed(p), target, sigma, g.word_to(p)};
    const MutationWord w = random_word(rng, n, uniform_index(rng, 7));
    MutationWord sw;
    for (std::size_t k : w) sw.push_back(sigma(k));

    const Seed source_w = apply_word(initial_seed(g.seed(p).matrix), w);
    const Seed target_w = apply_word(target, sw);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const auto image = apply_map(m, source_w.cluster[i]);
      ok = image && *image == target_w.cluster[sigma(i)];
    }
    if (ok) {
      ++r.passed;
    } else if (r.notes.size() < 5) {
      r.notes.push_back("failed at seed " + std::to_string(p) + " word " + word_to_string(w) +
                        " sigma=" + sigma.to_string());
    }
  }
  return r;
}

SuiteReport closure(const SuiteOptions& o) {
  SuiteReport r{"closure", 0, 0, {}};
  Rng rng(o.rng_seed);
  const std::size_t wanted = pick(o.trials, 2000);
  std::size_t attempts = 0;
  while (r.total < wanted && attempts < 200 * wanted) {
    ++attempts;
    const std::size_t n = 1 + uniform_index(rng, 5);
    const ExchangeMatrix b = random_skew_symmetrizable(rng, n, 9);
    const ParityPattern pattern = parity_of(b);
    if (!is_closed(pattern)) continue;
    ++r.total;
    bool ok = true;
    for (std::size_t k = 0; k < n; ++k) ok = ok && pattern.matches(mutate_matrix(b, k));
    if (ok) {
      ++r.passed;
    } else if (r.notes.size() < 5) {
      r.notes.push_back("pattern " + pattern.to_string() + " broken by " + b.to_string());
    }
  }
  r.notes.push_back(std::to_string(attempts) + " matrices sampled");
  return r;
}

SuiteReport certificate(const SuiteOptions&) {
  SuiteReport r{"certificate", 0, 0, {}};
  const auto start = parity_example_start();
  const auto target = parity_example_target();
  const auto cert = certify_unreachable(start, target);
  r.total = 2;
  if (cert && verify_certificate(*cert)) ++r.passed;
  const auto bfs = bounded_reachability(start, target, 8, 1000000);
  if (!bfs.reached) ++r.passed;
  r.notes.push_back("depth-8 search visited " + std::to_string(bfs.states) + " matrices");
  return r;
}

const std::map<std::string, std::function<SuiteReport(const SuiteOptions&)>>& registry() {
  static const std::map<std::string, std::function<SuiteReport(const SuiteOptions&)>> m{
      {"certificate", certificate}, {"closure", closure}, {"laurent", laurent},   {"exchange-criterion", exchange_criterion},
      {"lemma312", lemma312},       {"word-transport", word_transport},   {"thm314-b2", thm314_b2}, {"three-way", three_way},
  };
  return m;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

std::vector<SuiteReport> run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "all") {
    std::vector<SuiteReport> out;
    for (const auto& [n, fn] : registry()) out.push_back(fn(options));
    return out;
  }
  const auto it = registry().find(name);
  if (it == registry().end()) throw InvalidInput("unknown suite \"" + name + "\"");
  return {it->second(options)};
}

}  // namespace clusterx
