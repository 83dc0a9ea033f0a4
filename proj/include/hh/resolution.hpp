#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hh/algebra.hpp"
#include "hh/linalg.hpp"

namespace hh {

/// A basic finite-dimensional algebra presented by a vertex-homogeneous basis:
/// every basis element b lies in e_left(b) · B · e_right(b) for a complete set
/// of primitive orthogonal idempotents e_v. The radical is spanned by the
/// non-idempotent basis elements and generated (as an ideal) by
/// `radical_generators`.
class FdAlgebra {
 public:
  using Product = std::function<SparseElement(std::size_t, std::size_t)>;

  FdAlgebra(std::size_t vertex_count, std::vector<VertexId> left, std::vector<VertexId> right,
            std::vector<std::size_t> idempotents, std::vector<std::size_t> radical_generators, Product product)
      : vertex_count_(vertex_count),
        left_(std::move(left)),
        right_(std::move(right)),
        idempotents_(std::move(idempotents)),
        radical_generators_(std::move(radical_generators)),
        product_(std::move(product)),
        by_right_(vertex_count_),
        position_(left_.size()),
        is_idempotent_(left_.size(), false) {
    for (std::size_t b = 0; b < left_.size(); ++b) {
      position_[b] = by_right_[right_[b]].size();
      by_right_[right_[b]].push_back(b);
    }
    for (auto e : idempotents_) is_idempotent_[e] = true;
  }

  [[nodiscard]] std::size_t vertex_count() const noexcept { return vertex_count_; }
  [[nodiscard]] std::size_t dim() const noexcept { return left_.size(); }
  [[nodiscard]] VertexId left_vertex(std::size_t b) const { return left_[b]; }
  [[nodiscard]] VertexId right_vertex(std::size_t b) const { return right_[b]; }
  [[nodiscard]] std::size_t idempotent(VertexId v) const { return idempotents_[v]; }
  [[nodiscard]] bool is_idempotent(std::size_t b) const { return is_idempotent_[b]; }
  [[nodiscard]] const std::vector<std::size_t>& radical_generators() const noexcept { return radical_generators_; }
  [[nodiscard]] SparseElement product(std::size_t x, std::size_t y) const { return product_(x, y); }

  /// Basis of B e_v, i.e. the elements whose right vertex is v.
  [[nodiscard]] const std::vector<std::size_t>& right_block(VertexId v) const { return by_right_[v]; }
  [[nodiscard]] std::size_t position_in_right_block(std::size_t b) const { return position_[b]; }

 private:
  std::size_t vertex_count_;
  std::vector<VertexId> left_;
  std::vector<VertexId> right_;
  std::vector<std::size_t> idempotents_;
  std::vector<std::size_t> radical_generators_;
  Product product_;
  std::vector<std::vector<std::size_t>> by_right_;
  std::vector<std::size_t> position_;
  std::vector<bool> is_idempotent_;
};

/// The bound quiver algebra viewed as an FdAlgebra: basis paths p sit in
/// e_{s(p)} A e_{e(p)}, and the arrows generate the radical.
inline FdAlgebra as_fd_algebra(const BoundQuiverAlgebra& a) {
  std::vector<VertexId> left, right;
  for (const auto& p : a.basis()) {
    left.push_back(p.start);
    right.push_back(p.end);
  }
  std::vector<std::size_t> idempotents;
  for (VertexId v = 0; v < a.vertex_count(); ++v) idempotents.push_back(a.vertex_index(v));
  std::vector<std::size_t> generators;
  for (ArrowId arrow = 0; arrow < a.quiver().arrow_count(); ++arrow)
    generators.push_back(*a.basis_index(Path::of_arrow(a.quiver(), arrow)));
  return FdAlgebra(a.vertex_count(), std::move(left), std::move(right), std::move(idempotents),
                   std::move(generators), [&a](std::size_t x, std::size_t y) { return a.multiply_basis(x, y); });
}

/// ⊕_k B e_{v_k}. Coordinates are pairs (generator k, basis element b of
/// B e_{v_k}); the coordinate sits at vertex left(b).
class FreeModule {
 public:
  FreeModule(const FdAlgebra& algebra, std::vector<VertexId> generators)
      : algebra_(&algebra), generators_(std::move(generators)) {
    for (std::size_t k = 0; k < generators_.size(); ++k) {
      offsets_.push_back(coord_vertex_.size());
      for (auto b : algebra.right_block(generators_[k])) {
        coord_vertex_.push_back(algebra.left_vertex(b));
        coord_generator_.push_back(k);
        coord_basis_.push_back(b);
      }
    }
  }

  [[nodiscard]] const FdAlgebra& algebra() const noexcept { return *algebra_; }
  [[nodiscard]] std::size_t dim() const noexcept { return coord_vertex_.size(); }
  [[nodiscard]] const std::vector<VertexId>& generators() const noexcept { return generators_; }
  [[nodiscard]] VertexId coord_vertex(std::size_t i) const { return coord_vertex_[i]; }
  [[nodiscard]] std::size_t coord_generator(std::size_t i) const { return coord_generator_[i]; }
  [[nodiscard]] std::size_t coord_basis(std::size_t i) const { return coord_basis_[i]; }

  [[nodiscard]] std::size_t coordinate(std::size_t generator, std::size_t b) const {
    return offsets_[generator] + algebra_->position_in_right_block(b);
  }

  /// The free generator k, i.e. e_{v_k} in the k-th summand.
  [[nodiscard]] Vector generator_vector(std::size_t k) const {
    Vector v(dim());
    v[coordinate(k, algebra_->idempotent(generators_[k]))] = 1;
    return v;
  }

  /// Left multiplication by basis element x.
  [[nodiscard]] Vector act(std::size_t x, const Vector& v) const {
    Vector out(dim());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      for (const auto& [b, c] : algebra_->product(x, coord_basis_[i])) {
        out[coordinate(coord_generator_[i], b)] += v[i] * c;
      }
    }
    return out;
  }

  /// Counts of generators per vertex.
  [[nodiscard]] std::vector<std::size_t> multiplicities() const {
    std::vector<std::size_t> m(algebra_->vertex_count(), 0);
    for (auto v : generators_) ++m[v];
    return m;
  }

 private:
  const FdAlgebra* algebra_;
  std::vector<VertexId> generators_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> coord_vertex_;
  std::vector<std::size_t> coord_generator_;
  std::vector<std::size_t> coord_basis_;
};

/// One step of a minimal resolution: the projective cover of a submodule
/// K of an ambient module W, and the kernel of the covering map.
struct CoverStep {
  FreeModule cover;
  std::vector<Vector> generator_images;  // image of each free generator, in W coordinates
  std::vector<Vector> syzygy;            // basis of the kernel, in cover coordinates
};

namespace detail {

template <class Ambient>
std::vector<std::vector<std::size_t>> coordinates_by_vertex(const Ambient& w, std::size_t vertex_count) {
  std::vector<std::vector<std::size_t>> out(vertex_count);
  for (std::size_t i = 0; i < w.dim(); ++i) out[w.coord_vertex(i)].push_back(i);
  return out;
}

template <class Ambient>
VertexId vector_vertex(const Ambient& w, const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return w.coord_vertex(i);
  }
  throw std::logic_error("zero vector has no vertex");
}

inline Vector restrict_to(const Vector& v, const std::vector<std::size_t>& coords) {
  Vector out(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) out[i] = v[coords[i]];
  return out;
}

}  // namespace detail

/// Projective cover of the submodule spanned by `k` (vertex-homogeneous
/// vectors in W) followed by its kernel. The top of K is K / rad(B)·K, and
/// rad(B)·K is the span of g·k over radical generators g, because that span
/// is already closed under the generators.
template <class Ambient>
CoverStep cover_step(const FdAlgebra& algebra, const Ambient& w, const std::vector<Vector>& k) {
  const std::size_t nv = algebra.vertex_count();
  const auto coords = detail::coordinates_by_vertex(w, nv);

  std::vector<RowSpace> radical;
  radical.reserve(nv);
  for (VertexId u = 0; u < nv; ++u) radical.emplace_back(coords[u].size());
  std::vector<std::vector<const Vector*>> k_at(nv);
  for (const auto& vec : k) {
    const VertexId v = detail::vector_vertex(w, vec);
    k_at[v].push_back(&vec);
    for (auto g : algebra.radical_generators()) {
      if (algebra.right_vertex(g) != v) continue;
      Vector image = w.act(g, vec);
      const VertexId u = algebra.left_vertex(g);
      radical[u].insert(detail::restrict_to(image, coords[u]));
    }
  }

  std::vector<VertexId> generators;
  std::vector<Vector> images;
  for (VertexId u = 0; u < nv; ++u) {
    RowSpace span = radical[u];
    for (const Vector* vec : k_at[u]) {
      if (span.insert(detail::restrict_to(*vec, coords[u]))) {
        generators.push_back(u);
        images.push_back(*vec);
      }
    }
  }

  FreeModule cover(algebra, generators);
  const auto cover_coords = detail::coordinates_by_vertex(cover, nv);
  std::vector<Vector> syzygy;
  std::size_t image_dim = 0;
  for (VertexId u = 0; u < nv; ++u) {
    const auto& cols = cover_coords[u];
    if (cols.empty()) continue;
    RationalMatrix map(coords[u].size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::size_t coord = cols[c];
      const Vector image = w.act(cover.coord_basis(coord), images[cover.coord_generator(coord)]);
      for (std::size_t r = 0; r < coords[u].size(); ++r) map(r, c) = image[coords[u][r]];
    }
    auto kernel = kernel_basis(map);
    image_dim += cols.size() - kernel.size();
    for (const auto& kv : kernel) {
      Vector full(cover.dim());
      for (std::size_t c = 0; c < cols.size(); ++c) full[cols[c]] = kv[c];
      syzygy.push_back(std::move(full));
    }
  }
  if (image_dim != k.size()) throw std::logic_error("projective cover is not onto the module");
  return {std::move(cover), std::move(images), std::move(syzygy)};
}

/// Minimal projective resolution P_0 <- P_1 <- ... of an ambient module.
/// `images[n][k]` is d_n applied to the k-th generator of P_n, expressed in
/// the coordinates of P_{n-1} (of the module itself for n = 0).
struct Resolution {
  std::vector<FreeModule> terms;
  std::vector<std::vector<Vector>> images;
  std::vector<std::vector<Vector>> syzygies;

  /// True when the last computed syzygy is zero, i.e. the resolution ended.
  [[nodiscard]] bool complete() const { return terms.empty() || syzygies.back().empty(); }
};

template <class Ambient>
Resolution resolve(const FdAlgebra& algebra, const Ambient& start, std::size_t max_terms) {
  Resolution res;
  std::vector<Vector> k;
  for (std::size_t i = 0; i < start.dim(); ++i) {
    Vector e(start.dim());
    e[i] = 1;
    k.push_back(std::move(e));
  }
  if (k.empty()) return res;
  res.terms.reserve(max_terms);
  {
    CoverStep step = cover_step(algebra, start, k);
    res.terms.push_back(std::move(step.cover));
    res.images.push_back(std::move(step.generator_images));
    res.syzygies.push_back(std::move(step.syzygy));
  }
  while (!res.syzygies.back().empty() && res.terms.size() < max_terms) {
    CoverStep step = cover_step(algebra, res.terms.back(), res.syzygies.back());
    res.terms.push_back(std::move(step.cover));
    res.images.push_back(std::move(step.generator_images));
    res.syzygies.push_back(std::move(step.syzygy));
  }
  return res;
}

/// Every kernel vector lies in the radical of the cover: it has no component
/// along any free generator e_{v_k}.
inline bool syzygy_in_radical(const FreeModule& cover, const std::vector<Vector>& syzygy) {
  for (const auto& v : syzygy) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0 && cover.algebra().is_idempotent(cover.coord_basis(i))) return false;
    }
  }
  return true;
}

}  // namespace hh
