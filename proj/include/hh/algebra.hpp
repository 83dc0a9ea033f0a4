#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hh/error.hpp"
#include "hh/linalg.hpp"
#include "hh/quiver.hpp"

namespace hh {

/// Sparse coordinates in the normal-form basis of an algebra.
using SparseElement = std::vector<std::pair<std::size_t, Rational>>;

/// A generator of the ideal: a combination of parallel paths of length >= 2.
struct Relation {
  PathVector body;
  VertexId source = 0;
  VertexId target = 0;
};

inline Relation make_relation(PathVector body) {
  if (body.empty()) throw Error(ErrorKind::NonParallelRelation, "relation has no terms");
  if (!body.is_parallel()) throw Error(ErrorKind::NonParallelRelation, "relation paths do not share endpoints");
  if (body.min_length() < 2) throw Error(ErrorKind::RelationTooShort, "relation contains a path of length < 2");
  const Path& first = body.terms().begin()->first;
  return {std::move(body), first.start, first.end};
}

class BoundQuiverAlgebra;
BoundQuiverAlgebra build_algebra(Quiver quiver, std::vector<Relation> generators);

/// A = kQ/I for an acyclic quiver Q. The basis consists of the paths that are
/// not leading terms of the ideal (leading = largest in the path order within
/// each block e_s kQ e_t); every other path is rewritten through the reduced
/// echelon basis of its ideal block.
class BoundQuiverAlgebra {
 public:
  using Element = Vector;

  [[nodiscard]] const Quiver& quiver() const noexcept { return quiver_; }
  [[nodiscard]] const std::vector<Relation>& generators() const noexcept { return generators_; }
  [[nodiscard]] std::size_t vertex_count() const noexcept { return quiver_.vertex_count(); }
  [[nodiscard]] std::size_t total_dim() const noexcept { return basis_.size(); }
  [[nodiscard]] std::size_t ideal_dim() const noexcept { return paths_.size() - basis_.size(); }
  [[nodiscard]] const std::vector<Path>& paths() const noexcept { return paths_; }

  /// Normal-form basis, ordered by the path order.
  [[nodiscard]] const std::vector<Path>& basis() const noexcept { return basis_; }
  [[nodiscard]] const Path& basis_path(std::size_t i) const { return basis_.at(i); }

  /// Basis indices spanning e_source A e_target (paths source -> target).
  [[nodiscard]] const std::vector<std::size_t>& block(VertexId source, VertexId target) const {
    static const std::vector<std::size_t> empty;
    auto it = blocks_.find({source, target});
    return it == blocks_.end() ? empty : it->second;
  }

  [[nodiscard]] std::size_t hom_dim(VertexId i, VertexId j) const { return block(i, j).size(); }

  [[nodiscard]] std::optional<std::size_t> basis_index(const Path& p) const {
    auto it = path_index_.find(p);
    if (it == path_index_.end() || !is_basis_[it->second]) return std::nullopt;
    return basis_of_path_[it->second];
  }

  [[nodiscard]] std::size_t vertex_index(VertexId v) const { return *basis_index(Path::trivial(v)); }

  [[nodiscard]] const SparseElement& normal_form(const Path& p) const { return normal_forms_.at(path_index_.at(p)); }

  [[nodiscard]] Element normal_form(const PathVector& v) const {
    Element out(total_dim());
    for (const auto& [p, c] : v.terms())
      for (const auto& [i, x] : normal_form(p)) out[i] += c * x;
    return out;
  }

  [[nodiscard]] bool in_ideal(const PathVector& v) const { return is_zero(normal_form(v)); }

  [[nodiscard]] PathVector to_path_vector(const Element& x) const {
    PathVector v;
    for (std::size_t i = 0; i < x.size(); ++i) v.add(basis_[i], x[i]);
    return v;
  }

  [[nodiscard]] Element basis_element(std::size_t i) const {
    Element e(total_dim());
    e.at(i) = 1;
    return e;
  }

  /// Sum of the trivial paths.
  [[nodiscard]] Element unit() const {
    Element e(total_dim());
    for (VertexId v = 0; v < vertex_count(); ++v) e[vertex_index(v)] = 1;
    return e;
  }

  /// Product of two basis elements (first i, then j) in normal form.
  [[nodiscard]] const SparseElement& multiply_basis(std::size_t i, std::size_t j) const {
    return products_[i * total_dim() + j];
  }

  [[nodiscard]] Element multiply(const Element& x, const Element& y) const {
    Element out(total_dim());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j] == 0) continue;
        for (const auto& [k, c] : multiply_basis(i, j)) out[k] += x[i] * y[j] * c;
      }
    }
    return out;
  }

  /// Spanning rows of the ideal block e_s I e_t, as path vectors.
  [[nodiscard]] std::vector<PathVector> ideal_block(VertexId s, VertexId t) const {
    std::vector<PathVector> out;
    auto it = ideal_rows_.find({s, t});
    if (it == ideal_rows_.end()) return out;
    const auto& paths = block_paths_.at({s, t});
    for (const auto& row : it->second) {
      PathVector v;
      for (std::size_t c = 0; c < row.size(); ++c) v.add(paths_[paths[paths.size() - 1 - c]], row[c]);
      out.push_back(std::move(v));
    }
    return out;
  }

  [[nodiscard]] std::vector<std::pair<VertexId, VertexId>> ideal_blocks() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const auto& [key, rows] : ideal_rows_) out.push_back(key);
    return out;
  }

  friend BoundQuiverAlgebra build_algebra(Quiver quiver, std::vector<Relation> generators);

 private:
  using Block = std::pair<VertexId, VertexId>;

  Quiver quiver_;
  std::vector<Relation> generators_;
  std::vector<Path> paths_;
  std::map<Path, std::size_t> path_index_;
  std::map<Block, std::vector<std::size_t>> block_paths_;  // path indices, ascending
  std::map<Block, std::vector<Vector>> ideal_rows_;         // columns: block paths, descending
  std::vector<bool> is_basis_;
  std::vector<std::size_t> basis_of_path_;
  std::vector<SparseElement> normal_forms_;
  std::vector<Path> basis_;
  std::map<Block, std::vector<std::size_t>> blocks_;
  std::vector<SparseElement> products_;
};

/// Coordinates of a parallel path vector in the descending column order of
/// its block.
namespace detail {
inline Vector block_coordinates(const std::vector<std::size_t>& block_paths,
                                const std::map<Path, std::size_t>& path_index, const PathVector& v) {
  Vector out(block_paths.size());
  for (const auto& [p, c] : v.terms()) {
    const std::size_t idx = path_index.at(p);
    const auto it = std::lower_bound(block_paths.begin(), block_paths.end(), idx);
    out[block_paths.size() - 1 - static_cast<std::size_t>(it - block_paths.begin())] = c;
  }
  return out;
}
}  // namespace detail

/// Builds kQ/I where I is the two-sided ideal spanned by all a·r·b.
inline BoundQuiverAlgebra build_algebra(Quiver quiver, std::vector<Relation> generators) {
  using Block = std::pair<VertexId, VertexId>;
  if (!is_acyclic(quiver)) throw Error(ErrorKind::NotAcyclic, "quiver has an oriented cycle");
  for (auto& r : generators) r = make_relation(std::move(r.body));

  BoundQuiverAlgebra a;
  a.quiver_ = std::move(quiver);
  a.generators_ = std::move(generators);
  a.paths_ = enumerate_paths(a.quiver_);
  for (std::size_t i = 0; i < a.paths_.size(); ++i) {
    a.path_index_.emplace(a.paths_[i], i);
    a.block_paths_[{a.paths_[i].start, a.paths_[i].end}].push_back(i);
  }

  std::map<Block, RowSpace> ideal;
  for (const auto& r : a.generators_) {
    for (const auto& left : a.paths_) {
      if (left.end != r.source) continue;
      for (const auto& right : a.paths_) {
        if (right.start != r.target) continue;
        const Block key{left.start, right.end};
        const auto& bp = a.block_paths_.at(key);
        auto [it, fresh] = ideal.try_emplace(key, RowSpace(bp.size()));
        it->second.insert(detail::block_coordinates(bp, a.path_index_, compose(left, r.body, right)));
      }
    }
  }

  a.is_basis_.assign(a.paths_.size(), true);
  a.normal_forms_.resize(a.paths_.size());
  std::map<std::size_t, Vector> leading_rows;  // path index -> reduced ideal row
  for (auto& [key, space] : ideal) {
    const auto& bp = a.block_paths_.at(key);
    auto rows = space.reduced_rows();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const std::size_t lead = bp[bp.size() - 1 - space.pivots()[k]];
      a.is_basis_[lead] = false;
      leading_rows.emplace(lead, rows[k]);
    }
    a.ideal_rows_.emplace(key, std::move(rows));
  }

  a.basis_of_path_.assign(a.paths_.size(), SIZE_MAX);
  for (std::size_t i = 0; i < a.paths_.size(); ++i) {
    if (!a.is_basis_[i]) continue;
    a.basis_of_path_[i] = a.basis_.size();
    a.blocks_[{a.paths_[i].start, a.paths_[i].end}].push_back(a.basis_.size());
    a.basis_.push_back(a.paths_[i]);
  }
  for (std::size_t i = 0; i < a.paths_.size(); ++i) {
    if (a.is_basis_[i]) {
      a.normal_forms_[i] = {{a.basis_of_path_[i], Rational(1)}};
      continue;
    }
    const auto& bp = a.block_paths_.at({a.paths_[i].start, a.paths_[i].end});
    const Vector& row = leading_rows.at(i);
    SparseElement nf;
    for (std::size_t c = bp.size(); c-- > 0;) {
      const std::size_t p = bp[bp.size() - 1 - c];
      if (p == i || row[c] == 0) continue;
      nf.emplace_back(a.basis_of_path_[p], -row[c]);
    }
    std::sort(nf.begin(), nf.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    a.normal_forms_[i] = std::move(nf);
  }

  const std::size_t n = a.basis_.size();
  a.products_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (composable(a.basis_[i], a.basis_[j])) {
        a.products_[i * n + j] = a.normal_form(compose(a.basis_[i], a.basis_[j]));
      }
    }
  }
  return a;
}

/// A subset of the generators whose classes form a basis of I/(JI + IJ),
/// J the arrow ideal. Generators are scanned in order and kept when they are
/// independent of the radical and of the generators kept so far.
inline std::vector<Relation> minimal_relations(const BoundQuiverAlgebra& a) {
  using Block = std::pair<VertexId, VertexId>;
  const Quiver& q = a.quiver();
  std::map<Path, std::size_t> path_index;
  std::map<Block, std::vector<std::size_t>> block_paths;
  for (std::size_t i = 0; i < a.paths().size(); ++i) {
    path_index.emplace(a.paths()[i], i);
    block_paths[{a.paths()[i].start, a.paths()[i].end}].push_back(i);
  }

  std::map<Block, RowSpace> radical;
  auto add = [&](const PathVector& v) {
    if (v.empty()) return;
    const Path& p = v.terms().begin()->first;
    const Block key{p.start, p.end};
    const auto& bp = block_paths.at(key);
    auto [it, fresh] = radical.try_emplace(key, RowSpace(bp.size()));
    it->second.insert(detail::block_coordinates(bp, path_index, v));
  };
  for (const auto& [s, t] : a.ideal_blocks()) {
    for (const auto& v : a.ideal_block(s, t)) {
      for (ArrowId arrow = 0; arrow < q.arrow_count(); ++arrow) {
        const Path alpha = Path::of_arrow(q, arrow);
        if (alpha.end == s) add(compose(alpha, v, Path::trivial(t)));
        if (alpha.start == t) add(compose(Path::trivial(s), v, alpha));
      }
    }
  }

  std::vector<Relation> kept;
  for (const auto& r : a.generators()) {
    const Block key{r.source, r.target};
    const auto& bp = block_paths.at(key);
    auto [it, fresh] = radical.try_emplace(key, RowSpace(bp.size()));
    if (it->second.insert(detail::block_coordinates(bp, path_index, r.body))) kept.push_back(r);
  }
  return kept;
}

inline BoundQuiverAlgebra::Element multiply(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra::Element& x,
                                            const BoundQuiverAlgebra::Element& y) {
  return a.multiply(x, y);
}

inline std::size_t hom_dim(const BoundQuiverAlgebra& a, VertexId i, VertexId j) { return a.hom_dim(i, j); }

}  // namespace hh
