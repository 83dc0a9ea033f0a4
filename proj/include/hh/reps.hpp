#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hh/algebra.hpp"
#include "hh/error.hpp"
#include "hh/linalg.hpp"
#include "hh/resolution.hpp"

namespace hh {

/// A left A-module as a vertex-graded vector space. For A = kQ/I with the
/// "first p, then q" product, the arrow α acts as a map from the fiber at
/// target(α) to the fiber at source(α): `action[α]` has shape
/// dims[source] x dims[target]. With this orientation Hom(P(v), M) = M_v.
struct Representation {
  std::vector<std::size_t> dims;
  std::vector<RationalMatrix> action;

  [[nodiscard]] std::size_t total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

  [[nodiscard]] std::vector<std::size_t> offsets() const {
    std::vector<std::size_t> off(dims.size());
    std::size_t acc = 0;
    for (std::size_t v = 0; v < dims.size(); ++v) {
      off[v] = acc;
      acc += dims[v];
    }
    return off;
  }

  /// Path p = α1 α2 ... αr acts as M_{α1} ∘ ... ∘ M_{αr}.
  [[nodiscard]] RationalMatrix path_action(const Path& p) const {
    RationalMatrix m = RationalMatrix::identity(dims[p.end]);
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) m = action[*it] * m;
    return m;
  }
};

/// Every relation acts as zero.
inline bool satisfies_relations(const BoundQuiverAlgebra& a, const Representation& m) {
  for (const auto& r : a.generators()) {
    RationalMatrix sum(m.dims[r.source], m.dims[r.target]);
    for (const auto& [p, c] : r.body.terms()) {
      const RationalMatrix pm = m.path_action(p);
      for (std::size_t i = 0; i < sum.rows(); ++i)
        for (std::size_t j = 0; j < sum.cols(); ++j) sum(i, j) += c * pm(i, j);
    }
    if (!sum.is_zero()) return false;
  }
  return true;
}

/// Adapter exposing a representation to the resolution engine.
class RepresentationModule {
 public:
  RepresentationModule(const BoundQuiverAlgebra& a, const Representation& m)
      : algebra_(&a), rep_(&m), offsets_(m.offsets()) {
    for (VertexId v = 0; v < m.dims.size(); ++v)
      for (std::size_t i = 0; i < m.dims[v]; ++i) coord_vertex_.push_back(v);
  }

  [[nodiscard]] std::size_t dim() const noexcept { return coord_vertex_.size(); }
  [[nodiscard]] VertexId coord_vertex(std::size_t i) const { return coord_vertex_[i]; }

  [[nodiscard]] Vector act(std::size_t b, const Vector& v) const {
    const Path& p = algebra_->basis_path(b);
    Vector fiber(rep_->dims[p.end]);
    for (std::size_t i = 0; i < fiber.size(); ++i) fiber[i] = v[offsets_[p.end] + i];
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) fiber = rep_->action[*it].apply(fiber);
    Vector out(dim());
    for (std::size_t i = 0; i < fiber.size(); ++i) out[offsets_[p.start] + i] = fiber[i];
    return out;
  }

 private:
  const BoundQuiverAlgebra* algebra_;
  const Representation* rep_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> coord_vertex_;
};

inline Representation zero_representation(const BoundQuiverAlgebra& a, std::vector<std::size_t> dims) {
  Representation m{std::move(dims), {}};
  for (const auto& arrow : a.quiver().arrows()) m.action.emplace_back(m.dims[arrow.source], m.dims[arrow.target]);
  return m;
}

inline Representation simple(const BoundQuiverAlgebra& a, VertexId v) {
  std::vector<std::size_t> dims(a.vertex_count(), 0);
  dims.at(v) = 1;
  return zero_representation(a, std::move(dims));
}

/// A free A-module as a representation: the fiber at w has the coordinates of
/// the free module that sit at w, in coordinate order.
inline Representation to_representation(const BoundQuiverAlgebra& a, const FreeModule& f) {
  std::vector<std::vector<std::size_t>> at(a.vertex_count());
  std::vector<std::size_t> local(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) {
    local[i] = at[f.coord_vertex(i)].size();
    at[f.coord_vertex(i)].push_back(i);
  }
  std::vector<std::size_t> dims;
  for (const auto& c : at) dims.push_back(c.size());
  Representation m = zero_representation(a, std::move(dims));
  for (ArrowId arrow = 0; arrow < a.quiver().arrow_count(); ++arrow) {
    const std::size_t g = *a.basis_index(Path::of_arrow(a.quiver(), arrow));
    const VertexId t = a.quiver().arrow(arrow).target;
    for (std::size_t c = 0; c < at[t].size(); ++c) {
      Vector e(f.dim());
      e[at[t][c]] = 1;
      const Vector img = f.act(g, e);
      for (std::size_t i = 0; i < img.size(); ++i) {
        if (img[i] != 0) m.action[arrow](local[i], c) = img[i];
      }
    }
  }
  return m;
}

/// P(v) = A e_v: the fiber at w is e_w A e_v (paths w -> v).
inline Representation projective(const BoundQuiverAlgebra& a, VertexId v) {
  const FdAlgebra fd = as_fd_algebra(a);
  return to_representation(a, FreeModule(fd, {v}));
}

/// Dimension of the space of A-module maps M -> N: vertex-wise linear maps
/// f_w with f_{s(α)} M_α = N_α f_{t(α)} for every arrow α.
inline std::size_t hom_space_dim(const BoundQuiverAlgebra& a, const Representation& m, const Representation& n) {
  const std::size_t nv = a.vertex_count();
  std::vector<std::size_t> offset(nv);
  std::size_t unknowns = 0;
  for (VertexId v = 0; v < nv; ++v) {
    offset[v] = unknowns;
    unknowns += n.dims[v] * m.dims[v];
  }
  auto var = [&](VertexId v, std::size_t i, std::size_t j) { return offset[v] + i * m.dims[v] + j; };

  std::vector<Vector> equations;
  for (ArrowId arrow = 0; arrow < a.quiver().arrow_count(); ++arrow) {
    const VertexId s = a.quiver().arrow(arrow).source;
    const VertexId t = a.quiver().arrow(arrow).target;
    const RationalMatrix& ma = m.action[arrow];  // m.dims[s] x m.dims[t]
    const RationalMatrix& na = n.action[arrow];  // n.dims[s] x n.dims[t]
    // (f_s M_α - N_α f_t)(i, j) = 0 for i < n.dims[s], j < m.dims[t]
    for (std::size_t i = 0; i < n.dims[s]; ++i) {
      for (std::size_t j = 0; j < m.dims[t]; ++j) {
        Vector eq(unknowns);
        for (std::size_t k = 0; k < m.dims[s]; ++k) eq[var(s, i, k)] += ma(k, j);
        for (std::size_t k = 0; k < n.dims[t]; ++k) eq[var(t, k, j)] -= na(i, k);
        if (!is_zero(eq)) equations.push_back(std::move(eq));
      }
    }
  }
  return unknowns - rank(RationalMatrix::from_rows(equations, unknowns));
}

struct ProjectiveCover {
  Representation cover;
  std::vector<VertexId> generators;       // vertex of each indecomposable summand P(v)
  std::vector<RationalMatrix> epimorphism;  // per vertex: cover.dims[w] -> m.dims[w]
  Representation kernel;                    // first syzygy, as a representation
};

inline ProjectiveCover projective_cover(const BoundQuiverAlgebra& a, const Representation& m) {
  if (m.total_dim() == 0) throw Error(ErrorKind::ZeroModule, "projective cover of the zero module");
  const FdAlgebra fd = as_fd_algebra(a);
  const RepresentationModule mod(a, m);
  std::vector<Vector> all;
  for (std::size_t i = 0; i < mod.dim(); ++i) {
    Vector e(mod.dim());
    e[i] = 1;
    all.push_back(std::move(e));
  }
  const CoverStep step = cover_step(fd, mod, all);

  ProjectiveCover out;
  out.cover = to_representation(a, step.cover);
  out.generators = step.cover.generators();
  const auto m_off = m.offsets();
  std::vector<std::vector<std::size_t>> at(a.vertex_count());
  for (std::size_t i = 0; i < step.cover.dim(); ++i) at[step.cover.coord_vertex(i)].push_back(i);
  for (VertexId w = 0; w < a.vertex_count(); ++w) {
    RationalMatrix e(m.dims[w], at[w].size());
    for (std::size_t c = 0; c < at[w].size(); ++c) {
      const std::size_t coord = at[w][c];
      const Vector img = mod.act(step.cover.coord_basis(coord), step.generator_images[step.cover.coord_generator(coord)]);
      for (std::size_t r = 0; r < m.dims[w]; ++r) e(r, c) = img[m_off[w] + r];
    }
    out.epimorphism.push_back(std::move(e));
  }

  // kernel as a representation: basis vectors grouped by vertex
  std::vector<std::size_t> local(step.cover.dim());
  for (VertexId w = 0; w < a.vertex_count(); ++w)
    for (std::size_t c = 0; c < at[w].size(); ++c) local[at[w][c]] = c;
  std::vector<std::vector<Vector>> ker_at(a.vertex_count());
  for (const auto& v : step.syzygy) ker_at[detail::vector_vertex(step.cover, v)].push_back(v);
  std::vector<std::size_t> kdims;
  for (const auto& k : ker_at) kdims.push_back(k.size());
  out.kernel = zero_representation(a, std::move(kdims));
  for (ArrowId arrow = 0; arrow < a.quiver().arrow_count(); ++arrow) {
    const VertexId s = a.quiver().arrow(arrow).source;
    const VertexId t = a.quiver().arrow(arrow).target;
    if (ker_at[s].empty() || ker_at[t].empty()) continue;
    RationalMatrix basis_s(at[s].size(), ker_at[s].size());
    for (std::size_t c = 0; c < ker_at[s].size(); ++c)
      for (std::size_t r = 0; r < at[s].size(); ++r) basis_s(r, c) = ker_at[s][c][at[s][r]];
    const std::size_t g = *a.basis_index(Path::of_arrow(a.quiver(), arrow));
    for (std::size_t c = 0; c < ker_at[t].size(); ++c) {
      const Vector img = step.cover.act(g, ker_at[t][c]);
      const auto coeffs = solve(basis_s, detail::restrict_to(img, at[s]));
      if (!coeffs) throw std::logic_error("syzygy is not a submodule");
      for (std::size_t r = 0; r < ker_at[s].size(); ++r) out.kernel.action[arrow](r, c) = (*coeffs)[r];
    }
  }
  return out;
}

/// Multiplicities mult[m][i][j] of P(j) in the m-th term of the minimal
/// projective resolution of S(i); by minimality mult[m][i][j] equals
/// dim Ext^m(S(i), S(j)).
struct ResolutionProfile {
  std::vector<std::vector<std::vector<std::size_t>>> mult;
  std::vector<std::size_t> projective_dims;
  std::size_t global_dim = 0;
};

/// Row of the profile for S(v): mult[m][j] for m = 0 .. pd(S(v)).
/// Resolutions longer than the number of vertices cannot occur for acyclic
/// quivers, so hitting that cap is an internal error.
inline std::vector<std::vector<std::size_t>> minimal_resolution(const BoundQuiverAlgebra& a, VertexId v) {
  const FdAlgebra fd = as_fd_algebra(a);
  const Representation s = simple(a, v);
  const RepresentationModule mod(a, s);
  const Resolution res = resolve(fd, mod, a.vertex_count() + 1);
  if (!res.complete()) throw std::logic_error("minimal resolution exceeded the vertex-count degree cap");
  std::vector<std::vector<std::size_t>> rows;
  for (const auto& term : res.terms) rows.push_back(term.multiplicities());
  return rows;
}

inline ResolutionProfile resolution_profile(const BoundQuiverAlgebra& a) {
  const std::size_t nv = a.vertex_count();
  ResolutionProfile prof;
  prof.projective_dims.assign(nv, 0);
  std::vector<std::vector<std::vector<std::size_t>>> rows(nv);
  std::size_t degrees = 0;
  for (VertexId i = 0; i < nv; ++i) {
    rows[i] = minimal_resolution(a, i);
    prof.projective_dims[i] = rows[i].size() - 1;
    degrees = std::max(degrees, rows[i].size());
  }
  prof.mult.assign(degrees, std::vector<std::vector<std::size_t>>(nv, std::vector<std::size_t>(nv, 0)));
  for (VertexId i = 0; i < nv; ++i)
    for (std::size_t m = 0; m < rows[i].size(); ++m) prof.mult[m][i] = rows[i][m];
  prof.global_dim = nv == 0 ? 0 : *std::max_element(prof.projective_dims.begin(), prof.projective_dims.end());
  return prof;
}

inline std::size_t ext_dim(const BoundQuiverAlgebra& a, std::size_t degree, VertexId i, VertexId j) {
  const auto rows = minimal_resolution(a, i);
  return degree < rows.size() ? rows[degree][j] : 0;
}

inline std::size_t global_dimension(const BoundQuiverAlgebra& a) { return resolution_profile(a).global_dim; }

}  // namespace hh
