#include <gtest/gtest.h>

#include <functional>

#include "hh/families.hpp"
#include "hh/hochschild.hpp"
#include "hh/reps.hpp"

using namespace hh;

namespace {

std::size_t count_sources(const Quiver& q) {
  std::size_t n = 0;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    bool incoming = false;
    for (const auto& a : q.arrows()) incoming |= a.target == v;
    n += incoming ? 0 : 1;
  }
  return n;
}

std::size_t count_sinks(const Quiver& q) {
  std::size_t n = 0;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    bool outgoing = false;
    for (const auto& a : q.arrows()) outgoing |= a.source == v;
    n += outgoing ? 0 : 1;
  }
  return n;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::ParseError;
}

const std::vector<std::vector<std::int64_t>> kSpecs{{1, 1}, {1, 4}, {2, 2}, {3, 5},     {2, 2, 2},
                                                    {2, 3, 4}, {2, 2, 2, 2}, {3, 2, 4, 2}, {2, 2, 2, 2, 2}};

}  // namespace

TEST(Families, CanonicalExamples) {
  const auto k = canonical_algebra({{1, 1}, {}});
  EXPECT_EQ(k.vertex_count(), 2u);
  EXPECT_EQ(k.quiver().arrow_count(), 2u);
  EXPECT_EQ(k.quiver().count_arrows(0, 1), 2u);
  EXPECT_TRUE(k.generators().empty());

  const auto c = canonical_algebra({{2, 2, 3}, {1}});
  ASSERT_EQ(c.generators().size(), 1u);
  const auto& q = c.quiver();
  auto arm = [&](int i, int len) {
    Path p = Path::trivial(*q.find_vertex("0"));
    for (int k = 1; k <= len; ++k)
      p = compose(p, Path::of_arrow(q, *q.find_arrow("X" + std::to_string(i) + "_" + std::to_string(k))));
    return p;
  };
  PathVector expected(arm(3, 3));
  expected.add(arm(2, 2), -1);
  expected.add(arm(1, 2), 1);
  EXPECT_EQ(c.generators().front().body, expected);

  for (const auto& w : kSpecs) {
    const auto a = canonical_algebra({w, default_points(w.size())});
    std::size_t expected_vertices = 2;
    for (auto x : w) expected_vertices += static_cast<std::size_t>(x - 1);
    EXPECT_EQ(a.vertex_count(), expected_vertices);
    EXPECT_EQ(count_sources(a.quiver()), 1u);
    EXPECT_EQ(count_sinks(a.quiver()), 1u);
    EXPECT_EQ(a.generators().size(), w.size() - 2);
  }
}

TEST(Families, CanonicalValidation) {
  EXPECT_EQ(kind_of([] { canonical_algebra({{2}, {}}); }), ErrorKind::InvalidWeights);
  EXPECT_EQ(kind_of([] { canonical_algebra({{0, 2}, {}}); }), ErrorKind::InvalidWeights);
  EXPECT_EQ(kind_of([] { canonical_algebra({{1, 2, 2}, {1}}); }), ErrorKind::InvalidWeights);
  EXPECT_EQ(kind_of([] { canonical_algebra({{2, 2, 2}, {}}); }), ErrorKind::InvalidWeights);
  EXPECT_EQ(kind_of([] { canonical_algebra({{2, 2, 2, 2}, {1, 1}}); }), ErrorKind::DuplicatePoints);
  EXPECT_EQ(kind_of([] { canonical_algebra({{2, 2, 2}, {0}}); }), ErrorKind::ZeroPoint);
  EXPECT_NO_THROW(canonical_algebra({{1, 1}, {}}));
  EXPECT_NO_THROW(canonical_algebra({{2, 2, 2}, {Rational(-4, 3)}}));
}

TEST(Families, SquidExamples) {
  const auto k = squid_algebra({{}, {}});
  EXPECT_EQ(k.vertex_count(), 2u);
  EXPECT_EQ(k.quiver().count_arrows(0, 1), 2u);
  EXPECT_TRUE(k.generators().empty());

  const auto s = squid_algebra({{2, 2, 2}, {1}});
  EXPECT_EQ(s.vertex_count(), 5u);  // head 2 + one vertex per arm
  EXPECT_EQ(s.generators().size(), 3u);
  EXPECT_LE(global_dimension(s), 2u);

  for (const auto& w : kSpecs) {
    const auto a = squid_algebra({w, default_points(w.size())});
    std::size_t expected_vertices = 2;
    for (auto x : w) expected_vertices += static_cast<std::size_t>(x - 1);
    EXPECT_EQ(a.vertex_count(), expected_vertices);
    EXPECT_EQ(count_sources(a.quiver()), 1u);
  }
}

TEST(Families, SquidMatchesCanonical) {
  for (const auto& w : kSpecs) {
    const CanonicalSpec spec{w, default_points(w.size())};
    const auto s = squid_algebra(spec);
    const auto c = canonical_algebra(spec);
    EXPECT_LE(global_dimension(s), 2u);
    const auto rs = hh_cohomology(s);
    const auto rc = hh_cohomology(c);
    EXPECT_EQ(rs.hh0, rc.hh0);
    EXPECT_EQ(rs.hh1, rc.hh1);
    EXPECT_EQ(rs.hh2, rc.hh2);
    EXPECT_EQ(rs.homology, rc.homology);
  }
}

TEST(Families, Beilinson) {
  const auto b1 = beilinson_algebra(1);
  EXPECT_EQ(b1.vertex_count(), 2u);
  EXPECT_EQ(b1.quiver().arrow_count(), 2u);
  EXPECT_TRUE(b1.generators().empty());
  EXPECT_EQ(b1.total_dim(), 4u);

  const auto b2 = beilinson_algebra(2);
  EXPECT_EQ(b2.vertex_count(), 3u);
  EXPECT_EQ(b2.quiver().arrow_count(), 6u);
  EXPECT_EQ(b2.generators().size(), 3u);
  EXPECT_EQ(global_dimension(b2), 2u);
  // e_0 A e_2 is Sym^2 of a 3-dimensional space
  EXPECT_EQ(b2.hom_dim(0, 2), 6u);
  EXPECT_EQ(beilinson_algebra(3).hom_dim(0, 3), 20u);
  EXPECT_EQ(kind_of([] { beilinson_algebra(0); }), ErrorKind::InvalidQuiver);
}

TEST(Families, Linear) {
  EXPECT_EQ(linear_quiver_algebra(3).total_dim(), 6u);
  EXPECT_EQ(linear_quiver_algebra(3, {1}).total_dim(), 5u);
  const auto r = hh_cohomology(linear_quiver_algebra(3));
  EXPECT_EQ(r.hh0, 1u);
  EXPECT_EQ(r.hh1, 0u);
  EXPECT_EQ(r.hh2, 0u);
  EXPECT_EQ(kind_of([] { linear_quiver_algebra(3, {2}); }), ErrorKind::InvalidQuiver);
  EXPECT_EQ(kind_of([] { linear_quiver_algebra(0); }), ErrorKind::InvalidQuiver);
}

TEST(FamiliesProperty, CanonicalGlobalDimension) {
  for (std::int64_t a = 1; a <= 4; ++a)
    for (std::int64_t b = 1; b <= 4; ++b) EXPECT_EQ(global_dimension(canonical_algebra({{a, b}, {}})), 1u);
  for (const auto& w : kSpecs)
    if (w.size() >= 3) {
      EXPECT_EQ(global_dimension(canonical_algebra({w, default_points(w.size())})), 2u);
    }
}
