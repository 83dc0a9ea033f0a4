#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hh/algebra.hpp"
#include "hh/error.hpp"
#include "hh/linalg.hpp"
#include "hh/quiver.hpp"

namespace hh {

/// Weights a_1..a_n and points λ_3..λ_n; the first two points are fixed at
/// ∞ and 0.
struct CanonicalSpec {
  std::vector<std::int64_t> weights;
  std::vector<Rational> points;
};

/// λ_i = 1, 2, ..., n-2.
inline std::vector<Rational> default_points(std::size_t n) {
  std::vector<Rational> pts;
  for (std::size_t i = 2; i < n; ++i) pts.emplace_back(static_cast<long>(i - 1));
  return pts;
}

namespace detail {

inline void validate_points(const std::vector<std::int64_t>& weights, const std::vector<Rational>& points) {
  const std::size_t expected = weights.size() > 2 ? weights.size() - 2 : 0;
  if (points.size() != expected)
    throw Error(ErrorKind::InvalidWeights,
                "expected " + std::to_string(expected) + " points, got " + std::to_string(points.size()));
  std::set<Rational> seen;
  for (const auto& p : points) {
    if (p == 0) throw Error(ErrorKind::ZeroPoint, "point 0 is reserved for the second arm");
    if (!seen.insert(p).second) throw Error(ErrorKind::DuplicatePoints, "points must be pairwise distinct");
  }
}

}  // namespace detail

/// Rejects n < 2, weights below 1, weights of 1 when n > 2, and bad points.
inline void validate(const CanonicalSpec& spec) {
  if (spec.weights.size() < 2) throw Error(ErrorKind::InvalidWeights, "a canonical algebra needs at least two weights");
  for (auto w : spec.weights) {
    if (w < 1) throw Error(ErrorKind::InvalidWeights, "weights must be positive");
    if (spec.weights.size() > 2 && w < 2)
      throw Error(ErrorKind::InvalidWeights, "with more than two arms every weight must be at least 2");
  }
  detail::validate_points(spec.weights, spec.points);
}

/// The hammock quiver: source "0", sink "c", arm i a path of a_i arrows
/// X<i>_1..X<i>_{a_i} through vertices "<k>l<i>" (the point k·ℓ_i). For
/// i = 3..n the relation X_i^{a_i} − X_2^{a_2} + λ_i X_1^{a_1}.
inline BoundQuiverAlgebra canonical_algebra(const CanonicalSpec& spec) {
  validate(spec);
  Quiver q;
  const VertexId source = q.add_vertex("0");
  // arm interiors come before the sink so that the sink is the last vertex
  std::vector<std::vector<VertexId>> interior(spec.weights.size());
  for (std::size_t i = 0; i < spec.weights.size(); ++i) {
    for (std::int64_t k = 1; k < spec.weights[i]; ++k)
      interior[i].push_back(q.add_vertex(std::to_string(k) + "l" + std::to_string(i + 1)));
  }
  const VertexId sink = q.add_vertex("c");
  std::vector<Path> arm(spec.weights.size());
  for (std::size_t i = 0; i < spec.weights.size(); ++i) {
    VertexId prev = source;
    Path p = Path::trivial(source);
    for (std::size_t k = 0; k <= interior[i].size(); ++k) {
      const VertexId next = k < interior[i].size() ? interior[i][k] : sink;
      const ArrowId a = q.add_arrow("X" + std::to_string(i + 1) + "_" + std::to_string(k + 1), prev, next);
      p = compose(p, Path::of_arrow(q, a));
      prev = next;
    }
    arm[i] = std::move(p);
  }
  std::vector<Relation> rels;
  for (std::size_t i = 2; i < spec.weights.size(); ++i) {
    PathVector body(arm[i]);
    body.add(arm[1], -1);
    body.add(arm[0], spec.points[i - 2]);
    rels.push_back(make_relation(std::move(body)));
  }
  return build_algebra(std::move(q), std::move(rels));
}

/// Kronecker head a, b: h0 -> h1 and arm i a path x<i>_1..x<i>_{a_i - 1}
/// leaving h1. Relations a·x<1>_1, b·x<2>_1 and (λ_i a − b)·x<i>_1 for
/// i ≥ 3, each present only when its arm is nonempty.
inline BoundQuiverAlgebra squid_algebra(const CanonicalSpec& spec) {
  for (auto w : spec.weights)
    if (w < 1) throw Error(ErrorKind::InvalidWeights, "weights must be positive");
  detail::validate_points(spec.weights, spec.points);
  Quiver q;
  const VertexId h0 = q.add_vertex("h0");
  const VertexId h1 = q.add_vertex("h1");
  const ArrowId a = q.add_arrow("a", h0, h1);
  const ArrowId b = q.add_arrow("b", h0, h1);
  const Path pa = Path::of_arrow(q, a);
  const Path pb = Path::of_arrow(q, b);
  std::vector<Relation> rels;
  for (std::size_t i = 0; i < spec.weights.size(); ++i) {
    const std::size_t len = static_cast<std::size_t>(spec.weights[i] - 1);
    if (len == 0) continue;
    VertexId prev = h1;
    ArrowId first = 0;
    for (std::size_t k = 1; k <= len; ++k) {
      const VertexId next = q.add_vertex(std::to_string(k) + "s" + std::to_string(i + 1));
      const ArrowId x = q.add_arrow("x" + std::to_string(i + 1) + "_" + std::to_string(k), prev, next);
      if (k == 1) first = x;
      prev = next;
    }
    const Path px = Path::of_arrow(q, first);
    PathVector body;
    if (i == 0) {
      body.add(compose(pa, px), 1);
    } else if (i == 1) {
      body.add(compose(pb, px), 1);
    } else {
      body.add(compose(pa, px), spec.points[i - 2]);
      body.add(compose(pb, px), -1);
    }
    rels.push_back(make_relation(std::move(body)));
  }
  return build_algebra(std::move(q), std::move(rels));
}

/// Vertices 0..n, arrows X0..Xn from k to k+1 (ids "X<i>_<k>"), and the
/// commutativity relations X_i X_j − X_j X_i on consecutive steps.
inline BoundQuiverAlgebra beilinson_algebra(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidQuiver, "the Beilinson algebra needs n >= 1");
  Quiver q;
  for (std::size_t v = 0; v <= n; ++v) q.add_vertex(std::to_string(v));
  std::vector<std::vector<ArrowId>> step(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i <= n; ++i)
      step[k].push_back(q.add_arrow("X" + std::to_string(i) + "_" + std::to_string(k), k, k + 1));
  std::vector<Relation> rels;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        PathVector body(compose(Path::of_arrow(q, step[k][i]), Path::of_arrow(q, step[k + 1][j])));
        body.add(compose(Path::of_arrow(q, step[k][j]), Path::of_arrow(q, step[k + 1][i])), -1);
        rels.push_back(make_relation(std::move(body)));
      }
    }
  }
  return build_algebra(std::move(q), std::move(rels));
}

/// A_n: 1 -> 2 -> ... -> n with arrows a1..a_{n-1}. Each k in
/// `zero_relations` (1-based) imposes a_k a_{k+1} = 0.
inline BoundQuiverAlgebra linear_quiver_algebra(std::size_t n, const std::vector<std::size_t>& zero_relations = {}) {
  if (n < 1) throw Error(ErrorKind::InvalidQuiver, "the linear quiver needs n >= 1");
  Quiver q;
  for (std::size_t v = 1; v <= n; ++v) q.add_vertex(std::to_string(v));
  for (std::size_t k = 1; k < n; ++k) q.add_arrow("a" + std::to_string(k), k - 1, k);
  std::vector<Relation> rels;
  for (auto k : zero_relations) {
    if (k < 1 || k + 1 >= n)
      throw Error(ErrorKind::InvalidQuiver, "zero relation a" + std::to_string(k) + "a" + std::to_string(k + 1) +
                                                " is out of range");
    rels.push_back(make_relation(PathVector(compose(Path::of_arrow(q, k - 1), Path::of_arrow(q, k)))));
  }
  return build_algebra(std::move(q), std::move(rels));
}

}  // namespace hh
