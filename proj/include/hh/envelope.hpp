#pragma once

#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "hh/algebra.hpp"
#include "hh/error.hpp"
#include "hh/hochschild.hpp"
#include "hh/linalg.hpp"
#include "hh/resolution.hpp"

namespace hh {

inline constexpr std::size_t kDefaultOracleCap = 14;

/// HH_ORACLE_CAP when set to a positive integer, the default otherwise.
inline std::size_t oracle_cap() {
  if (const char* env = std::getenv("HH_ORACLE_CAP")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultOracleCap;
}

/// A^e = A ⊗ A^op with basis a⊗b (index a·N + b) and (a⊗b)(c⊗d) = ac ⊗ db.
/// Vertex (i, j) has idempotent e_i ⊗ e_j; a⊗b lies in
/// ε_(s(a), e(b)) A^e ε_(e(a), s(b)).
class EnvelopingAlgebra {
 public:
  explicit EnvelopingAlgebra(const BoundQuiverAlgebra& a) : a_(&a), n_(a.total_dim()), nv_(a.vertex_count()) {}

  [[nodiscard]] std::size_t index(std::size_t x, std::size_t y) const { return x * n_ + y; }
  [[nodiscard]] VertexId vertex(VertexId i, VertexId j) const { return i * nv_ + j; }

  [[nodiscard]] FdAlgebra as_fd_algebra() const {
    const auto& basis = a_->basis();
    std::vector<VertexId> left, right;
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        left.push_back(vertex(basis[x].start, basis[y].end));
        right.push_back(vertex(basis[x].end, basis[y].start));
      }
    }
    std::vector<std::size_t> idempotents(nv_ * nv_);
    for (VertexId i = 0; i < nv_; ++i)
      for (VertexId j = 0; j < nv_; ++j) idempotents[vertex(i, j)] = index(a_->vertex_index(i), a_->vertex_index(j));
    std::vector<std::size_t> generators;
    for (ArrowId arrow = 0; arrow < a_->quiver().arrow_count(); ++arrow) {
      const std::size_t g = *a_->basis_index(Path::of_arrow(a_->quiver(), arrow));
      for (VertexId v = 0; v < nv_; ++v) {
        generators.push_back(index(g, a_->vertex_index(v)));
        generators.push_back(index(a_->vertex_index(v), g));
      }
    }
    const BoundQuiverAlgebra* a = a_;
    const std::size_t n = n_;
    return FdAlgebra(nv_ * nv_, std::move(left), std::move(right), std::move(idempotents), std::move(generators),
                     [a, n](std::size_t x, std::size_t y) {
                       SparseElement out;
                       const auto& first = a->multiply_basis(x / n, y / n);
                       if (first.empty()) return out;
                       const auto& second = a->multiply_basis(y % n, x % n);
                       for (const auto& [p, c] : first)
                         for (const auto& [q, d] : second) out.emplace_back(p * n + q, c * d);
                       return out;
                     });
  }

  /// m ↦ a m b for the basis element a⊗b.
  [[nodiscard]] Vector act_left(std::size_t x, const Vector& m) const { return sandwich(x / n_, m, x % n_); }
  /// m ↦ b m a for the basis element a⊗b.
  [[nodiscard]] Vector act_right(std::size_t x, const Vector& m) const { return sandwich(x % n_, m, x / n_); }

  [[nodiscard]] const BoundQuiverAlgebra& base() const noexcept { return *a_; }

 private:
  [[nodiscard]] Vector sandwich(std::size_t left, const Vector& m, std::size_t right) const {
    Vector out(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      if (m[k] == 0) continue;
      for (const auto& [p, c] : a_->multiply_basis(left, k))
        for (const auto& [q, d] : a_->multiply_basis(p, right)) out[q] += m[k] * c * d;
    }
    return out;
  }

  const BoundQuiverAlgebra* a_;
  std::size_t n_;
  std::size_t nv_;
};

/// The diagonal bimodule A as a left A^e-module.
class DiagonalBimodule {
 public:
  explicit DiagonalBimodule(const EnvelopingAlgebra& e) : e_(&e) {}
  [[nodiscard]] std::size_t dim() const { return e_->base().total_dim(); }
  [[nodiscard]] VertexId coord_vertex(std::size_t m) const {
    const Path& p = e_->base().basis_path(m);
    return e_->vertex(p.start, p.end);
  }
  [[nodiscard]] Vector act(std::size_t x, const Vector& v) const { return e_->act_left(x, v); }

 private:
  const EnvelopingAlgebra* e_;
};

/// Ext and Tor of the diagonal bimodule over A^e from a minimal projective
/// resolution, in degrees 0..max_degree.
inline HochschildReport hh_envelope_oracle(const BoundQuiverAlgebra& a, std::size_t max_degree,
                                           std::optional<std::size_t> cap = std::nullopt) {
  const std::size_t limit = cap.value_or(oracle_cap());
  if (a.total_dim() > limit)
    throw Error(ErrorKind::DimensionCapExceeded, "total dimension " + std::to_string(a.total_dim()) +
                                                     " exceeds the oracle cap " + std::to_string(limit));
  const EnvelopingAlgebra env(a);
  const FdAlgebra ae = env.as_fd_algebra();
  const DiagonalBimodule diag(env);
  const Resolution res = resolve(ae, diag, max_degree + 2);
  const std::size_t nv = a.vertex_count();
  auto split = [nv](VertexId v) { return std::pair<VertexId, VertexId>{v / nv, v % nv}; };

  // Hom(P_n, A) = ⊕_k ε_{v_k} A, and N ⊗ P_n = ⊕_k A ε_{v_k}, with v_k = (i, j):
  // ε_(i,j) A = e_i A e_j and A ε_(i,j) = e_j A e_i.
  struct Term {
    std::vector<std::size_t> offsets;
    std::vector<const std::vector<std::size_t>*> blocks;
    std::size_t dim = 0;
  };
  auto layout = [&](std::size_t n, bool homology) {
    Term t;
    if (n >= res.terms.size()) return t;
    for (VertexId v : res.terms[n].generators()) {
      const auto [i, j] = split(v);
      t.offsets.push_back(t.dim);
      t.blocks.push_back(homology ? &a.block(j, i) : &a.block(i, j));
      t.dim += t.blocks.back()->size();
    }
    return t;
  };
  auto local = [](const std::vector<std::size_t>& block, std::size_t basis_index) {
    for (std::size_t i = 0; i < block.size(); ++i)
      if (block[i] == basis_index) return i;
    throw std::logic_error("element outside its block");
  };

  // δ_n : Hom(P_n, A) -> Hom(P_{n+1}, A), φ ↦ φ ∘ d_{n+1}
  auto coboundary_rank = [&](std::size_t n) -> std::size_t {
    if (n + 1 >= res.terms.size()) return 0;
    const Term src = layout(n, false);
    const Term dst = layout(n + 1, false);
    const FreeModule& pn = res.terms[n];
    RationalMatrix m(dst.dim, src.dim);
    for (std::size_t l = 0; l < res.images[n + 1].size(); ++l) {
      const Vector& dy = res.images[n + 1][l];
      for (std::size_t coord = 0; coord < dy.size(); ++coord) {
        if (dy[coord] == 0) continue;
        const std::size_t k = pn.coord_generator(coord);
        const std::size_t b = pn.coord_basis(coord);
        for (std::size_t c = 0; c < src.blocks[k]->size(); ++c) {
          Vector phi(a.total_dim());
          phi[(*src.blocks[k])[c]] = 1;
          const Vector img = env.act_left(b, phi);
          for (std::size_t e = 0; e < img.size(); ++e) {
            if (img[e] != 0) m(dst.offsets[l] + local(*dst.blocks[l], e), src.offsets[k] + c) += dy[coord] * img[e];
          }
        }
      }
    }
    return rank(m);
  };

  // ∂_n : N ⊗ P_n -> N ⊗ P_{n-1}, x ⊗ y_l ↦ Σ x·b ⊗ x_k
  auto boundary_rank = [&](std::size_t n) -> std::size_t {
    if (n == 0 || n >= res.terms.size()) return 0;
    const Term src = layout(n, true);
    const Term dst = layout(n - 1, true);
    const FreeModule& prev = res.terms[n - 1];
    RationalMatrix m(dst.dim, src.dim);
    for (std::size_t l = 0; l < res.images[n].size(); ++l) {
      const Vector& dy = res.images[n][l];
      for (std::size_t c = 0; c < src.blocks[l]->size(); ++c) {
        Vector x(a.total_dim());
        x[(*src.blocks[l])[c]] = 1;
        for (std::size_t coord = 0; coord < dy.size(); ++coord) {
          if (dy[coord] == 0) continue;
          const std::size_t k = prev.coord_generator(coord);
          const Vector img = env.act_right(prev.coord_basis(coord), x);
          for (std::size_t e = 0; e < img.size(); ++e) {
            if (img[e] != 0) m(dst.offsets[k] + local(*dst.blocks[k], e), src.offsets[l] + c) += dy[coord] * img[e];
          }
        }
      }
    }
    return rank(m);
  };

  HochschildReport r;
  r.method = HHMethod::EnvelopeOracle;
  std::vector<std::size_t> delta(max_degree + 1), partial(max_degree + 2);
  for (std::size_t n = 0; n <= max_degree; ++n) delta[n] = coboundary_rank(n);
  for (std::size_t n = 0; n <= max_degree + 1; ++n) partial[n] = boundary_rank(n);
  for (std::size_t n = 0; n <= max_degree; ++n) {
    const std::size_t before = n == 0 ? 0 : delta[n - 1];
    r.cohomology[static_cast<int>(n)] = layout(n, false).dim - delta[n] - before;
    r.homology[static_cast<int>(n)] = layout(n, true).dim - partial[n] - partial[n + 1];
  }
  r.hh0 = r.cohomology[0];
  r.hh1 = max_degree >= 1 ? r.cohomology[1] : 0;
  r.hh2 = max_degree >= 2 ? r.cohomology[2] : 0;
  r.higher_vanish = true;
  for (const auto& [deg, dim] : r.cohomology)
    if (deg > 2 && dim != 0) r.higher_vanish = false;
  return r;
}

}  // namespace hh
