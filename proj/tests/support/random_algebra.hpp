#pragma once

// Seeded generators for property tests: random acyclic quivers with random
// admissible relation sets, random small matrices.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hh/algebra.hpp"
#include "hh/linalg.hpp"
#include "hh/quiver.hpp"

namespace hh::testgen {

struct RandomAlgebraOptions {
  std::size_t max_vertices = 8;
  std::size_t max_arrows = 10;
  std::size_t max_relations = 3;
  std::size_t max_paths = 60;
};

/// Vertices 0..n-1 with arrows only from lower to higher index (so the quiver
/// is acyclic), then up to `max_relations` random combinations of parallel
/// paths of length >= 2 with coefficients in {±1, ±2}.
inline BoundQuiverAlgebra random_algebra(std::mt19937_64& rng, const RandomAlgebraOptions& opt = {}) {
  std::uniform_int_distribution<std::size_t> nv_dist(2, opt.max_vertices);
  for (;;) {
    const std::size_t nv = nv_dist(rng);
    Quiver q;
    for (std::size_t v = 0; v < nv; ++v) q.add_vertex("v" + std::to_string(v));
    std::bernoulli_distribution edge(2.5 / static_cast<double>(nv));
    std::bernoulli_distribution doubled(0.25);
    for (std::size_t i = 0; i < nv && q.arrow_count() < opt.max_arrows; ++i) {
      for (std::size_t j = i + 1; j < nv && q.arrow_count() < opt.max_arrows; ++j) {
        if (!edge(rng)) continue;
        q.add_arrow("a" + std::to_string(q.arrow_count()), i, j);
        if (doubled(rng) && q.arrow_count() < opt.max_arrows) q.add_arrow("a" + std::to_string(q.arrow_count()), i, j);
      }
    }
    const auto paths = enumerate_paths(q);
    if (paths.size() > opt.max_paths) continue;

    std::vector<std::pair<VertexId, VertexId>> ends;
    for (const auto& p : paths)
      if (p.length() >= 2) ends.emplace_back(p.start, p.end);
    std::vector<Relation> rels;
    if (!ends.empty()) {
      std::uniform_int_distribution<std::size_t> count(0, opt.max_relations);
      const std::size_t nr = count(rng);
      const Rational coeffs[] = {1, -1, 2, -2};
      std::uniform_int_distribution<int> coeff(0, 3);
      for (std::size_t r = 0; r < nr; ++r) {
        const auto [s, t] = ends[std::uniform_int_distribution<std::size_t>(0, ends.size() - 1)(rng)];
        std::vector<Path> parallel;
        for (const auto& p : paths)
          if (p.length() >= 2 && p.start == s && p.end == t) parallel.push_back(p);
        std::shuffle(parallel.begin(), parallel.end(), rng);
        const std::size_t terms = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3, parallel.size()))(rng);
        PathVector body;
        for (std::size_t k = 0; k < terms; ++k) body.add(parallel[k], coeffs[coeff(rng)]);
        rels.push_back(make_relation(std::move(body)));
      }
    }
    return build_algebra(std::move(q), std::move(rels));
  }
}

inline RationalMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo = -3,
                                            int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

/// Product of random rows×k and k×cols integer matrices: rank at most k.
inline RationalMatrix random_low_rank_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t k) {
  return random_integer_matrix(rng, rows, k, -2, 2) * random_integer_matrix(rng, k, cols, -2, 2);
}

}  // namespace hh::testgen
