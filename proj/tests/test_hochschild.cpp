#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "hh/envelope.hpp"
#include "hh/families.hpp"
#include "hh/hochschild.hpp"
#include "support/random_algebra.hpp"

using namespace hh;

namespace {

BoundQuiverAlgebra kronecker() { return canonical_algebra({{1, 1}, {}}); }

BoundQuiverAlgebra two_kroneckers() {
  Quiver q;
  for (auto n : {"1", "2", "3", "4"}) q.add_vertex(n);
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 0, 1);
  q.add_arrow("c", 2, 3);
  q.add_arrow("d", 2, 3);
  return build_algebra(q, {});
}

BoundQuiverAlgebra point() {
  Quiver q;
  q.add_vertex("v");
  return build_algebra(q, {});
}

void expect_triple(const HochschildReport& r, std::size_t h0, std::size_t h1, std::size_t h2) {
  EXPECT_EQ(r.hh0, h0);
  EXPECT_EQ(r.hh1, h1);
  EXPECT_EQ(r.hh2, h2);
}

}  // namespace

TEST(Hochschild, ComplexShape) {
  const auto c = canonical_algebra({{2, 3, 2, 4}, {1, Rational(-1, 2)}});
  const HHComplex cx = build_hh_complex(c);
  EXPECT_EQ(cx.f.cols(), c.vertex_count());
  std::size_t nu = 0;
  for (const auto& a : c.quiver().arrows()) nu += c.hom_dim(a.source, a.target);
  EXPECT_EQ(cx.f.rows(), nu);
  std::size_t c2 = 0;
  for (const auto& r : cx.relations) c2 += c.hom_dim(r.source, r.target);
  EXPECT_EQ(cx.g.rows(), c2);
  EXPECT_TRUE((cx.g * cx.f).is_zero());
}

TEST(Hochschild, ComplexImageOfFirstArm) {
  // an X1 arrow goes to (λ_3 X1^{a1}, ..., λ_n X1^{a1}) across the relation blocks
  const std::vector<Rational> pts{3, Rational(1, 2), -2};
  const auto c = canonical_algebra({{3, 2, 2, 4, 2}, pts});
  const HHComplex cx = build_hh_complex(c);
  const auto& q = c.quiver();
  Path arm1 = Path::trivial(*q.find_vertex("0"));
  for (int k = 1; k <= 3; ++k) arm1 = compose(arm1, Path::of_arrow(q, *q.find_arrow("X1_" + std::to_string(k))));
  const Vector rho = c.normal_form(PathVector(arm1));
  for (int k = 1; k <= 3; ++k) {
    const ArrowId arrow = *q.find_arrow("X1_" + std::to_string(k));
    const auto& blk = cx.arrow_blocks[arrow];
    ASSERT_EQ(blk.basis.size(), 1u);
    for (std::size_t l = 0; l < cx.relation_blocks.size(); ++l) {
      const auto& rb = cx.relation_blocks[l];
      for (std::size_t i = 0; i < rb.basis.size(); ++i)
        EXPECT_EQ(cx.g(rb.offset + i, blk.offset), pts[l] * rho[rb.basis[i]]);
    }
  }
}

TEST(Hochschild, ComplexExamples) {
  EXPECT_EQ(build_hh_complex(kronecker()).g.rows(), 0u);
  EXPECT_EQ(build_hh_complex(linear_quiver_algebra(5)).g.rows(), 0u);
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto c = canonical_algebra({std::vector<std::int64_t>(n, 2), default_points(n)});
    EXPECT_EQ(rank(build_hh_complex(c).g), n - 1);
  }
  try {
    build_hh_complex(linear_quiver_algebra(4, {1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GlobalDimensionTooHigh);
  }
}

TEST(Hochschild, CohomologyExamples) {
  expect_triple(hh_cohomology(kronecker()), 1, 3, 0);
  for (std::int64_t a1 = 2; a1 <= 4; ++a1)
    for (std::int64_t a2 = 2; a2 <= 4; ++a2) expect_triple(hh_cohomology(canonical_algebra({{a1, a2}, {}})), 1, 1, 0);
  expect_triple(hh_cohomology(canonical_algebra({{2, 2, 2, 2}, {1, 2}})), 1, 0, 1);
  expect_triple(hh_cohomology(canonical_algebra({{2, 3, 4}, {Rational(7, 5)}})), 1, 0, 0);
  expect_triple(hh_cohomology(canonical_algebra({{2, 2, 3, 2, 2}, {1, 2, 3}})), 1, 0, 2);
  const auto r = hh_cohomology(kronecker());
  EXPECT_EQ(r.method, HHMethod::Complex);
  EXPECT_TRUE(r.higher_vanish);
}

TEST(Hochschild, HereditaryFormula) {
  EXPECT_EQ(hh1_hereditary(kronecker()), 3u);
  EXPECT_EQ(hh1_hereditary(linear_quiver_algebra(3)), 0u);
  EXPECT_EQ(hh1_hereditary(point()), 0u);
  try {
    hh1_hereditary(canonical_algebra({{2, 2, 2}, {1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHereditary);
  }
}

TEST(Hochschild, AcyclicHomology) {
  EXPECT_EQ(hh_homology_acyclic(kronecker()), (std::map<int, std::size_t>{{0, 2}}));
  for (auto w : std::vector<std::vector<std::int64_t>>{{2, 3}, {2, 2, 2}, {4, 2, 3, 2}}) {
    std::size_t expected = 2;
    for (auto a : w) expected += static_cast<std::size_t>(a - 1);
    EXPECT_EQ(hh_homology_acyclic(canonical_algebra({w, default_points(w.size())})).at(0), expected);
  }
  EXPECT_EQ(hh_homology_acyclic(build_algebra(Quiver{}, {})).at(0), 0u);
}

TEST(Hochschild, OracleBaseField) {
  const auto r = hh_envelope_oracle(point(), 4);
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(r.cohomology.at(n), n == 0 ? 1u : 0u);
    EXPECT_EQ(r.homology.at(n), n == 0 ? 1u : 0u);
  }
  EXPECT_EQ(r.method, HHMethod::EnvelopeOracle);
}

TEST(Hochschild, OracleKronecker) {
  const auto r = hh_envelope_oracle(kronecker(), 4);
  expect_triple(r, 1, 3, 0);
  EXPECT_TRUE(r.higher_vanish);
  EXPECT_EQ(r.homology, (std::map<int, std::size_t>{{0, 2}, {1, 0}, {2, 0}, {3, 0}, {4, 0}}));
}

TEST(Hochschild, OracleBeyondGlobalDimensionTwo) {
  // gl.dim 3 and 4 algebras of type A with zero relations: HH is that of a point
  for (auto zeros : std::vector<std::vector<std::size_t>>{{1, 2}, {1, 2, 3}, {1, 3}}) {
    const auto a = linear_quiver_algebra(5, zeros);
    const auto r = hh_envelope_oracle(a, 5);
    for (int n = 0; n <= 5; ++n) EXPECT_EQ(r.cohomology.at(n), n == 0 ? 1u : 0u);
    EXPECT_EQ(r.homology.at(0), 5u);
  }
}

TEST(Hochschild, OracleCap) {
  const auto big = canonical_algebra({{2, 2, 2, 2}, {1, 2}});
  ASSERT_GT(big.total_dim(), kDefaultOracleCap);
  try {
    hh_envelope_oracle(big, 2, kDefaultOracleCap);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionCapExceeded);
  }
  expect_triple(hh_envelope_oracle(big, 3, 16), 1, 0, 1);

  ::setenv("HH_ORACLE_CAP", "3", 1);
  EXPECT_EQ(oracle_cap(), 3u);
  EXPECT_THROW(hh_envelope_oracle(kronecker(), 2), Error);
  ::setenv("HH_ORACLE_CAP", "garbage", 1);
  EXPECT_EQ(oracle_cap(), kDefaultOracleCap);
  ::unsetenv("HH_ORACLE_CAP");
  EXPECT_EQ(oracle_cap(), kDefaultOracleCap);
}

TEST(Hochschild, CenterDimension) {
  EXPECT_EQ(hh0_center_dim(kronecker()), 1u);
  EXPECT_EQ(hh0_center_dim(two_kroneckers()), 2u);
  EXPECT_EQ(hh0_center_dim(canonical_algebra({{2, 3, 3}, {1}})), 1u);
  EXPECT_EQ(hh_envelope_oracle(two_kroneckers(), 2).hh0, 2u);
  expect_triple(hh_cohomology(two_kroneckers()), 2, 6, 0);
}

TEST(HochschildProperty, CompositeIsZero) {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int t = 0; t < 150; ++t) {
    const auto a = testgen::random_algebra(rng);
    if (global_dimension(a) > 2) continue;
    const auto cx = build_hh_complex(a);
    EXPECT_TRUE((cx.g * cx.f).is_zero());
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(HochschildProperty, OracleMatchesComplex) {
  std::mt19937_64 rng(42);
  int checked = 0;
  for (int t = 0; t < 200 && checked < 60; ++t) {
    const auto a = testgen::random_algebra(rng);
    if (global_dimension(a) > 2 || a.total_dim() > kDefaultOracleCap) continue;
    const auto c = hh_cohomology(a);
    const auto o = hh_envelope_oracle(a, 4, kDefaultOracleCap);
    expect_triple(o, c.hh0, c.hh1, c.hh2);
    EXPECT_TRUE(o.higher_vanish);
    for (const auto& [deg, dim] : o.homology) EXPECT_EQ(dim, deg == 0 ? a.vertex_count() : 0u);
    ++checked;
  }
  EXPECT_EQ(checked, 60);
}

TEST(HochschildProperty, HereditaryShortcutMatchesComplex) {
  std::mt19937_64 rng(43);
  testgen::RandomAlgebraOptions opt;
  opt.max_relations = 0;
  for (int t = 0; t < 60; ++t) {
    const auto a = testgen::random_algebra(rng, opt);
    ASSERT_LE(global_dimension(a), 1u);
    EXPECT_EQ(hh1_hereditary(a), hh_cohomology(a).hh1);
  }
}

TEST(HochschildProperty, CenterMatchesHH0AndComponents) {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 80; ++t) {
    const auto a = testgen::random_algebra(rng);
    const std::size_t z = hh0_center_dim(a);
    EXPECT_EQ(z, connected_components(a.quiver()));
    if (global_dimension(a) <= 2) {
      EXPECT_EQ(z, hh_cohomology(a).hh0);
    }
  }
}

TEST(HochschildProperty, PointIndependence) {
  const std::vector<std::vector<Rational>> point_sets{
      {1, 2}, {Rational(-3), Rational(1, 4)}, {Rational(9, 2), Rational(-1, 3)}};
  for (auto w : std::vector<std::vector<std::int64_t>>{{2, 2, 2, 2}, {2, 3, 4, 2}, {4, 4, 3, 3}}) {
    const auto base = hh_cohomology(canonical_algebra({w, point_sets[0]}));
    for (const auto& pts : point_sets) {
      const auto r = hh_cohomology(canonical_algebra({w, pts}));
      expect_triple(r, base.hh0, base.hh1, base.hh2);
    }
  }
}
