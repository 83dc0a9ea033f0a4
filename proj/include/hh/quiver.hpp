#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "hh/error.hpp"
#include "hh/linalg.hpp"

namespace hh {

using VertexId = std::size_t;
using ArrowId = std::size_t;

struct Arrow {
  std::string id;
  VertexId source = 0;
  VertexId target = 0;
  std::string label;
};

/// Finite quiver. Vertices and arrows are addressed by their insertion index;
/// the string ids are kept for I/O and must be unique.
class Quiver {
 public:
  VertexId add_vertex(std::string name) {
    if (find_vertex(name)) throw Error(ErrorKind::InvalidQuiver, "duplicate vertex id '" + name + "'");
    vertices_.push_back(std::move(name));
    return vertices_.size() - 1;
  }

  ArrowId add_arrow(std::string id, VertexId source, VertexId target, std::string label = {}) {
    if (source >= vertices_.size() || target >= vertices_.size())
      throw Error(ErrorKind::InvalidQuiver, "arrow '" + id + "' references an unknown vertex");
    if (find_arrow(id)) throw Error(ErrorKind::InvalidQuiver, "duplicate arrow id '" + id + "'");
    arrows_.push_back({std::move(id), source, target, std::move(label)});
    return arrows_.size() - 1;
  }

  [[nodiscard]] std::size_t vertex_count() const noexcept { return vertices_.size(); }
  [[nodiscard]] std::size_t arrow_count() const noexcept { return arrows_.size(); }
  [[nodiscard]] const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  [[nodiscard]] const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
  [[nodiscard]] const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  [[nodiscard]] std::optional<VertexId> find_vertex(const std::string& name) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end()) return std::nullopt;
    return static_cast<VertexId>(it - vertices_.begin());
  }

  [[nodiscard]] std::optional<ArrowId> find_arrow(const std::string& id) const {
    auto it = std::find_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.id == id; });
    if (it == arrows_.end()) return std::nullopt;
    return static_cast<ArrowId>(it - arrows_.begin());
  }

  [[nodiscard]] std::size_t count_arrows(VertexId source, VertexId target) const {
    return static_cast<std::size_t>(std::count_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) {
      return a.source == source && a.target == target;
    }));
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A path "first arrows[0], then arrows[1], ...". The empty arrow list is the
/// trivial path at `start`.
struct Path {
  VertexId start = 0;
  VertexId end = 0;
  std::vector<ArrowId> arrows;

  static Path trivial(VertexId v) { return {v, v, {}}; }
  static Path of_arrow(const Quiver& q, ArrowId a) { return {q.arrow(a).source, q.arrow(a).target, {a}}; }

  [[nodiscard]] std::size_t length() const noexcept { return arrows.size(); }
  [[nodiscard]] bool is_trivial() const noexcept { return arrows.empty(); }

  /// Position of `a` in the path, if it occurs.
  [[nodiscard]] std::optional<std::size_t> find(ArrowId a) const {
    auto it = std::find(arrows.begin(), arrows.end(), a);
    if (it == arrows.end()) return std::nullopt;
    return static_cast<std::size_t>(it - arrows.begin());
  }

  /// Path order: length first, then arrow ids lexicographically; trivial
  /// paths are ordered by their vertex.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.arrows.size() <=> b.arrows.size(); c != 0) return c;
    if (a.arrows.empty()) return a.start <=> b.start;
    return a.arrows <=> b.arrows;
  }
  friend bool operator==(const Path& a, const Path& b) {
    return a.start == b.start && a.end == b.end && a.arrows == b.arrows;
  }
};

inline bool composable(const Path& p, const Path& q) noexcept { return p.end == q.start; }

/// p·q = first p, then q. Throws EndpointMismatch when end(p) != start(q),
/// which is the zero product in the path algebra.
inline Path compose(const Path& p, const Path& q) {
  if (!composable(p, q)) throw Error(ErrorKind::EndpointMismatch, "end of first path differs from start of second");
  Path r{p.start, q.end, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

/// Sub-path of arrows [from, to).
inline Path subpath(const Quiver& q, const Path& p, std::size_t from, std::size_t to) {
  if (from == to) {
    const VertexId v = from < p.length() ? q.arrow(p.arrows[from]).source : p.end;
    return Path::trivial(v);
  }
  Path r{q.arrow(p.arrows[from]).source, q.arrow(p.arrows[to - 1]).target, {}};
  r.arrows.assign(p.arrows.begin() + static_cast<std::ptrdiff_t>(from),
                  p.arrows.begin() + static_cast<std::ptrdiff_t>(to));
  return r;
}

/// Rational linear combination of paths; zero coefficients are never stored.
class PathVector {
 public:
  PathVector() = default;
  explicit PathVector(const Path& p, const Rational& c = 1) { add(p, c); }

  void add(const Path& p, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  [[nodiscard]] const std::map<Path, Rational>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

  /// All paths share one start vertex and one end vertex.
  [[nodiscard]] bool is_parallel() const {
    if (terms_.empty()) return true;
    const Path& first = terms_.begin()->first;
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
      return t.first.start == first.start && t.first.end == first.end;
    });
  }

  [[nodiscard]] std::size_t min_length() const {
    std::size_t m = SIZE_MAX;
    for (const auto& [p, c] : terms_) m = std::min(m, p.length());
    return m;
  }

  friend PathVector operator+(PathVector a, const PathVector& b) {
    for (const auto& [p, c] : b.terms_) a.add(p, c);
    return a;
  }
  friend PathVector operator*(const Rational& s, PathVector a) {
    if (s == 0) return {};
    for (auto& [p, c] : a.terms_) c *= s;
    return a;
  }
  friend bool operator==(const PathVector& a, const PathVector& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Path, Rational> terms_;
};

/// Left and right multiplication by a path; non-composable terms vanish.
inline PathVector compose(const Path& left, const PathVector& v, const Path& right) {
  PathVector out;
  for (const auto& [p, c] : v.terms()) {
    if (composable(left, p) && composable(p, right)) out.add(compose(compose(left, p), right), c);
  }
  return out;
}

inline std::vector<VertexId> topological_order(const Quiver& q) {
  std::vector<std::size_t> indegree(q.vertex_count(), 0);
  for (const auto& a : q.arrows()) ++indegree[a.target];
  std::queue<VertexId> ready;
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<VertexId> order;
  while (!ready.empty()) {
    const VertexId v = ready.front();
    ready.pop();
    order.push_back(v);
    for (const auto& a : q.arrows()) {
      if (a.source == v && --indegree[a.target] == 0) ready.push(a.target);
    }
  }
  return order;
}

inline bool is_acyclic(const Quiver& q) { return topological_order(q).size() == q.vertex_count(); }

/// All paths, trivial ones included, sorted by the path order.
inline std::vector<Path> enumerate_paths(const Quiver& q) {
  if (!is_acyclic(q)) throw Error(ErrorKind::NotAcyclic, "quiver has an oriented cycle");
  std::vector<Path> all;
  std::vector<Path> frontier;
  for (VertexId v = 0; v < q.vertex_count(); ++v) frontier.push_back(Path::trivial(v));
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    all.insert(all.end(), frontier.begin(), frontier.end());
    std::vector<Path> next;
    for (const auto& p : frontier) {
      for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        if (q.arrow(a).source == p.end) next.push_back(compose(p, Path::of_arrow(q, a)));
      }
    }
    frontier = std::move(next);
  }
  return all;
}

/// Connected components of the underlying undirected graph.
inline std::size_t connected_components(const Quiver& q) {
  std::vector<std::size_t> parent(q.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = q.vertex_count();
  for (const auto& a : q.arrows()) {
    const auto ra = find(a.source);
    const auto rb = find(a.target);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components;
}

}  // namespace hh
