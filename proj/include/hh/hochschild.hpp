#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hh/algebra.hpp"
#include "hh/error.hpp"
#include "hh/linalg.hpp"
#include "hh/quiver.hpp"
#include "hh/reps.hpp"

namespace hh {

enum class HHMethod { Complex, HereditaryFormula, EnvelopeOracle, CurveFormula };

inline std::string_view to_string(HHMethod m) {
  switch (m) {
    case HHMethod::Complex: return "complex";
    case HHMethod::HereditaryFormula: return "hereditary-formula";
    case HHMethod::EnvelopeOracle: return "envelope-oracle";
    case HHMethod::CurveFormula: return "curve-formula";
  }
  return "unknown";
}

struct HochschildReport {
  std::size_t hh0 = 0;
  std::size_t hh1 = 0;
  std::size_t hh2 = 0;
  bool higher_vanish = true;
  std::map<int, std::size_t> homology;     // degree -> dim HH_n; missing degrees are 0
  std::map<int, std::size_t> cohomology;   // degree -> dim HH^n, as far as computed
  HHMethod method = HHMethod::Complex;
};

/// One summand s(x) A e(x) of a cochain term, labelled by an arrow or a relation.
struct ComplexBlock {
  VertexId source = 0;
  VertexId target = 0;
  std::size_t offset = 0;              // first coordinate of this block
  std::vector<std::size_t> basis;      // A-basis indices spanning the block
};

/// k^{Q0} --f--> ⊕_α s(α)Ae(α) --g--> ⊕_ℓ s(r_ℓ)Ae(r_ℓ)
struct HHComplex {
  RationalMatrix f;
  RationalMatrix g;
  std::vector<ComplexBlock> arrow_blocks;     // one per arrow, in arrow order
  std::vector<ComplexBlock> relation_blocks;  // one per minimal relation
  std::vector<Relation> relations;
};

namespace detail {

inline std::vector<ComplexBlock> make_blocks(const BoundQuiverAlgebra& a,
                                             const std::vector<std::pair<VertexId, VertexId>>& ends) {
  std::vector<ComplexBlock> blocks;
  std::size_t offset = 0;
  for (const auto& [s, t] : ends) {
    ComplexBlock b{s, t, offset, a.block(s, t)};
    offset += b.basis.size();
    blocks.push_back(std::move(b));
  }
  return blocks;
}

inline std::size_t total_size(const std::vector<ComplexBlock>& blocks) {
  return blocks.empty() ? 0 : blocks.back().offset + blocks.back().basis.size();
}

inline std::size_t position_in_block(const ComplexBlock& b, std::size_t basis_index) {
  for (std::size_t i = 0; i < b.basis.size(); ++i)
    if (b.basis[i] == basis_index) return i;
  throw std::logic_error("basis element outside its block");
}

}  // namespace detail

inline HHComplex build_hh_complex(const BoundQuiverAlgebra& a) {
  if (global_dimension(a) > 2)
    throw Error(ErrorKind::GlobalDimensionTooHigh, "the two-step complex needs global dimension at most 2");
  const Quiver& q = a.quiver();
  HHComplex c;
  c.relations = minimal_relations(a);

  std::vector<std::pair<VertexId, VertexId>> ends;
  for (const auto& arrow : q.arrows()) ends.emplace_back(arrow.source, arrow.target);
  c.arrow_blocks = detail::make_blocks(a, ends);
  ends.clear();
  for (const auto& r : c.relations) ends.emplace_back(r.source, r.target);
  c.relation_blocks = detail::make_blocks(a, ends);

  const std::size_t c1 = detail::total_size(c.arrow_blocks);
  const std::size_t c2 = detail::total_size(c.relation_blocks);

  c.f = RationalMatrix(c1, a.vertex_count());
  for (ArrowId arrow = 0; arrow < q.arrow_count(); ++arrow) {
    const auto& blk = c.arrow_blocks[arrow];
    const std::size_t row = blk.offset + detail::position_in_block(blk, *a.basis_index(Path::of_arrow(q, arrow)));
    c.f(row, q.arrow(arrow).source) += 1;
    c.f(row, q.arrow(arrow).target) -= 1;
  }

  // x in the α-block goes to Σ λ_i q_i x q_i' where p_i = q_i α q_i'.
  c.g = RationalMatrix(c2, c1);
  for (ArrowId arrow = 0; arrow < q.arrow_count(); ++arrow) {
    const auto& ablk = c.arrow_blocks[arrow];
    for (std::size_t l = 0; l < c.relations.size(); ++l) {
      const auto& rblk = c.relation_blocks[l];
      for (const auto& [p, lambda] : c.relations[l].body.terms()) {
        const auto pos = p.find(arrow);
        if (!pos) continue;
        const Path left = subpath(q, p, 0, *pos);
        const Path right = subpath(q, p, *pos + 1, p.length());
        for (std::size_t col = 0; col < ablk.basis.size(); ++col) {
          const Path x = compose(compose(left, a.basis_path(ablk.basis[col])), right);
          for (const auto& [b, coeff] : a.normal_form(x))
            c.g(rblk.offset + detail::position_in_block(rblk, b), ablk.offset + col) += lambda * coeff;
        }
      }
    }
  }
  return c;
}

inline std::map<int, std::size_t> hh_homology_acyclic(const BoundQuiverAlgebra& a) {
  return {{0, a.vertex_count()}};
}

inline HochschildReport hh_cohomology(const BoundQuiverAlgebra& a) {
  const HHComplex c = build_hh_complex(a);
  const std::size_t rf = rank(c.f);
  const std::size_t rg = rank(c.g);
  HochschildReport r;
  r.hh0 = c.f.cols() - rf;
  r.hh1 = c.g.cols() - rg - rf;
  r.hh2 = c.g.rows() - rg;
  r.cohomology = {{0, r.hh0}, {1, r.hh1}, {2, r.hh2}};
  r.higher_vanish = true;
  r.homology = hh_homology_acyclic(a);
  r.method = HHMethod::Complex;
  return r;
}

/// dim Z(A): the commutant of the idempotents and arrows, which generate A.
inline std::size_t hh0_center_dim(const BoundQuiverAlgebra& a) {
  const std::size_t n = a.total_dim();
  std::vector<std::size_t> generators;
  for (VertexId v = 0; v < a.vertex_count(); ++v) generators.push_back(a.vertex_index(v));
  for (ArrowId arrow = 0; arrow < a.quiver().arrow_count(); ++arrow)
    generators.push_back(*a.basis_index(Path::of_arrow(a.quiver(), arrow)));

  std::vector<Vector> equations;
  for (auto x : generators) {
    // coefficient of basis element k in z·x − x·z, as a linear form in z
    std::vector<Vector> rows(n, Vector(n));
    for (std::size_t z = 0; z < n; ++z) {
      for (const auto& [k, c] : a.multiply_basis(z, x)) rows[k][z] += c;
      for (const auto& [k, c] : a.multiply_basis(x, z)) rows[k][z] -= c;
    }
    for (auto& row : rows)
      if (!is_zero(row)) equations.push_back(std::move(row));
  }
  return n - rank(RationalMatrix::from_rows(equations, n));
}

inline std::size_t hh1_hereditary(const BoundQuiverAlgebra& a) {
  if (global_dimension(a) > 1) throw Error(ErrorKind::NotHereditary, "global dimension exceeds 1");
  std::size_t nu = 0;
  for (const auto& arrow : a.quiver().arrows()) nu += a.hom_dim(arrow.source, arrow.target);
  return connected_components(a.quiver()) + nu - a.vertex_count();
}

}  // namespace hh
