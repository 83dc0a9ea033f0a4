#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hh/families.hpp"
#include "hh/reps.hpp"
#include "support/random_algebra.hpp"

using namespace hh;

namespace {

BoundQuiverAlgebra kronecker() { return canonical_algebra({{1, 1}, {}}); }

// Random representation of a relation-free algebra.
Representation random_rep(std::mt19937_64& rng, const BoundQuiverAlgebra& a) {
  std::uniform_int_distribution<std::size_t> dim(0, 2);
  std::vector<std::size_t> dims;
  for (VertexId v = 0; v < a.vertex_count(); ++v) dims.push_back(dim(rng));
  Representation m = zero_representation(a, dims);
  for (ArrowId arrow = 0; arrow < a.quiver().arrow_count(); ++arrow) {
    const auto& ar = a.quiver().arrow(arrow);
    m.action[arrow] = testgen::random_integer_matrix(rng, dims[ar.source], dims[ar.target], -2, 2);
  }
  return m;
}

std::size_t dim_sum(const std::vector<std::size_t>& v) { return std::accumulate(v.begin(), v.end(), std::size_t{0}); }

}  // namespace

TEST(Reps, SimpleExamples) {
  const auto c = canonical_algebra({{2, 3, 2}, {1}});
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    const auto s = simple(c, v);
    EXPECT_EQ(s.total_dim(), 1u);
    EXPECT_EQ(s.dims[v], 1u);
    EXPECT_TRUE(satisfies_relations(c, s));
    for (VertexId w = 0; w < c.vertex_count(); ++w) EXPECT_EQ(hom_space_dim(c, s, simple(c, w)), v == w ? 1u : 0u);
  }
}

TEST(Reps, ProjectiveExamples) {
  // P(v) = A e_v: its fiber at w is e_w A e_v, the paths w -> v.
  const auto k = kronecker();
  const VertexId source = 0, sink = 1;
  EXPECT_EQ(projective(k, sink).dims, (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(projective(k, source).dims, (std::vector<std::size_t>{1, 0}));

  const auto lin = linear_quiver_algebra(3);
  EXPECT_EQ(projective(lin, 2).total_dim(), 3u);
  EXPECT_EQ(projective(lin, 0).total_dim(), 1u);
  EXPECT_EQ(hom_space_dim(lin, projective(lin, 1), projective(lin, 2)), 1u);
  EXPECT_EQ(hom_space_dim(lin, projective(lin, 2), projective(lin, 1)), 0u);
}

TEST(Reps, ProjectiveCoverExamples) {
  const auto c = canonical_algebra({{2, 2, 3, 2}, {1, 3}});
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    const auto cs = projective_cover(c, simple(c, v));
    EXPECT_EQ(cs.generators, std::vector<VertexId>{v});
    // first syzygy of S(v): one P(s(α)) for each arrow α ending at v
    std::vector<std::size_t> expected(c.vertex_count(), 0);
    for (const auto& arrow : c.quiver().arrows())
      if (arrow.target == v) ++expected[arrow.source];
    if (cs.kernel.total_dim() == 0) {
      EXPECT_EQ(dim_sum(expected), 0u);
    } else {
      EXPECT_EQ(projective_cover(c, cs.kernel).cover.dims, [&] {
        std::vector<std::size_t> dims(c.vertex_count(), 0);
        for (VertexId u = 0; u < c.vertex_count(); ++u)
          for (std::size_t k = 0; k < expected[u]; ++k) {
            const auto p = projective(c, u);
            for (VertexId w = 0; w < c.vertex_count(); ++w) dims[w] += p.dims[w];
          }
        return dims;
      }());
    }
    const auto pc = projective_cover(c, projective(c, v));
    EXPECT_EQ(pc.generators, std::vector<VertexId>{v});
    EXPECT_EQ(pc.kernel.total_dim(), 0u);
  }
  try {
    projective_cover(c, zero_representation(c, std::vector<std::size_t>(c.vertex_count(), 0)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroModule);
  }
}

TEST(Reps, MinimalResolutionExamples) {
  for (auto a : {kronecker(), linear_quiver_algebra(4), canonical_algebra({{3, 4}, {}})}) {
    for (VertexId v = 0; v < a.vertex_count(); ++v) EXPECT_LE(minimal_resolution(a, v).size(), 2u);
  }
  for (auto w : std::vector<std::vector<std::int64_t>>{{2, 2, 2}, {2, 3, 4, 2}}) {
    const auto c = canonical_algebra({w, default_points(w.size())});
    const VertexId source = *c.quiver().find_vertex("0");
    const VertexId sink = *c.quiver().find_vertex("c");
    // with P(v) = A e_v the source simple is projective and the sink simple
    // has the length-2 resolution
    EXPECT_EQ(minimal_resolution(c, source).size(), 1u);
    EXPECT_EQ(minimal_resolution(c, sink).size(), 3u);
  }
}

TEST(Reps, ExtDimExamples) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto c = canonical_algebra({std::vector<std::int64_t>(n, 2), default_points(n)});
    const VertexId source = *c.quiver().find_vertex("0");
    const VertexId sink = *c.quiver().find_vertex("c");
    EXPECT_EQ(ext_dim(c, 2, sink, source), n - 2);
    for (VertexId i = 0; i < c.vertex_count(); ++i)
      for (VertexId j = 0; j < c.vertex_count(); ++j) {
        EXPECT_EQ(ext_dim(c, 0, i, j), i == j ? 1u : 0u);
        EXPECT_EQ(ext_dim(c, 1, i, j), c.quiver().count_arrows(j, i));
      }
  }
}

TEST(Reps, GlobalDimensionExamples) {
  EXPECT_EQ(global_dimension(kronecker()), 1u);
  EXPECT_EQ(global_dimension(linear_quiver_algebra(1)), 0u);
  EXPECT_EQ(global_dimension(linear_quiver_algebra(5)), 1u);
  EXPECT_EQ(global_dimension(linear_quiver_algebra(5, {1, 2, 3})), 4u);
  for (std::size_t n = 3; n <= 5; ++n)
    EXPECT_EQ(global_dimension(canonical_algebra({std::vector<std::int64_t>(n, 3), default_points(n)})), 2u);
  EXPECT_EQ(global_dimension(canonical_algebra({{2, 5}, {}})), 1u);
  EXPECT_EQ(global_dimension(beilinson_algebra(2)), 2u);
}

TEST(Reps, ResolutionProfileShape) {
  const auto c = canonical_algebra({{2, 3, 3}, {1}});
  const auto prof = resolution_profile(c);
  EXPECT_EQ(prof.global_dim, 2u);
  for (VertexId i = 0; i < c.vertex_count(); ++i)
    for (VertexId j = 0; j < c.vertex_count(); ++j) EXPECT_EQ(prof.mult[0][i][j], i == j ? 1u : 0u);
  EXPECT_EQ(prof.mult.size(), prof.global_dim + 1);
}

TEST(RepsProperty, YonedaForProjectives) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    const auto a = testgen::random_algebra(rng);
    // modules that satisfy the relations: projectives, simples and syzygies
    std::vector<Representation> modules;
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
      modules.push_back(projective(a, v));
      modules.push_back(simple(a, v));
      if (modules[modules.size() - 2].total_dim() > 1) modules.push_back(projective_cover(a, projective(a, v)).cover);
    }
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
      const auto s = projective_cover(a, simple(a, v));
      if (s.kernel.total_dim() > 0) modules.push_back(s.kernel);
    }
    if (a.generators().empty())
      for (int k = 0; k < 3; ++k) modules.push_back(random_rep(rng, a));
    for (const auto& m : modules) {
      ASSERT_TRUE(satisfies_relations(a, m));
      for (VertexId v = 0; v < a.vertex_count(); ++v) EXPECT_EQ(hom_space_dim(a, projective(a, v), m), m.dims[v]);
    }
  }
}

TEST(RepsProperty, ExtCorrespondences) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 60; ++t) {
    const auto a = testgen::random_algebra(rng);
    const auto rels = minimal_relations(a);
    for (VertexId i = 0; i < a.vertex_count(); ++i) {
      for (VertexId j = 0; j < a.vertex_count(); ++j) {
        EXPECT_EQ(ext_dim(a, 1, i, j), a.quiver().count_arrows(j, i));
        const auto nr = static_cast<std::size_t>(
            std::count_if(rels.begin(), rels.end(), [&](const Relation& r) { return r.source == j && r.target == i; }));
        EXPECT_EQ(ext_dim(a, 2, i, j), nr);
      }
    }
  }
}

TEST(RepsProperty, SyzygiesShrinkAndLieInTheRadical) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 40; ++t) {
    const auto a = testgen::random_algebra(rng);
    const FdAlgebra fd = as_fd_algebra(a);
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
      const auto s = simple(a, v);
      const RepresentationModule mod(a, s);
      const Resolution res = resolve(fd, mod, a.vertex_count() + 1);
      ASSERT_TRUE(res.complete());
      std::size_t module_dim = s.total_dim();
      for (std::size_t n = 0; n < res.terms.size(); ++n) {
        EXPECT_TRUE(syzygy_in_radical(res.terms[n], res.syzygies[n]));
        // 0 -> Ω^{n+1} -> P_n -> Ω^n -> 0 is exact
        EXPECT_EQ(res.syzygies[n].size() + module_dim, res.terms[n].dim());
        EXPECT_LT(res.syzygies[n].size(), res.terms[n].dim());
        module_dim = res.syzygies[n].size();
      }
    }
  }
}

TEST(RepsProperty, HomSelfIsNonzero) {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 30; ++t) {
    const auto a = testgen::random_algebra(rng);
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
      const auto p = projective(a, v);
      EXPECT_GE(hom_space_dim(a, p, p), 1u);
      // End(P(v)) = e_v A e_v, one-dimensional for acyclic quivers
      EXPECT_EQ(hom_space_dim(a, p, p), 1u);
    }
  }
}
