#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;
using refgeo::ConventionalPolytope;
using refgeo::Polygon;

namespace {

Poly seg(const Q& a, const Q& b) {
  return refgeo::lift(Piece{Carrier::whole(1), {AF({1}, -a), AF({-1}, b)}}, 1);
}

Poly tri(const V& a, const V& b, const V& c) { return refgeo::triangle_polytope(a, b, c); }

Poly quad(const V& a, const V& b, const V& c, const V& d) {
  return refgeo::polygon_polytope(Polygon<Q>{a, b, c, d});
}

Poly box(const Q& x0, const Q& y0, const Q& x1, const Q& y1) {
  return quad(V{x0, y0}, V{x1, y0}, V{x1, y1}, V{x0, y1});
}

}  // namespace

TEST(Union, SegmentsJoinSeamlessly) {
  Q a(0), c(3, 2), b(5);
  EXPECT_TRUE(refgeo::equals(refgeo::unite(seg(a, c), seg(c, b)), seg(a, b)));
  EXPECT_TRUE(refgeo::disjoint(seg(a, c), seg(c, b)));
  EXPECT_FALSE(seg(a, c).contains(RPoint(V{c}, {V{1}})));
  EXPECT_TRUE(seg(c, b).contains(RPoint(V{c}, {V{1}})));
  EXPECT_TRUE(seg(a, c).contains(RPoint(V{c}, {V{-1}})));
}

TEST(Union, EmptyIsNeutral) {
  Poly p = box(0, 0, 1, 1);
  EXPECT_TRUE(refgeo::equals(refgeo::unite(p, Poly(2, 2)), p));
  EXPECT_THROW(refgeo::unite(p, seg(0, 1)), refgeo::RankMismatch);
}

TEST(Union, TrianglesSharingAnEdgeFormTheQuadrilateral) {
  V a{0, 0}, b{4, 0}, c{5, 3}, d{1, 4};
  auto u = refgeo::unite(tri(a, b, c), tri(c, d, a));
  EXPECT_TRUE(refgeo::equals(u, quad(a, b, c, d)));
  EXPECT_TRUE(refgeo::disjoint(tri(a, b, c), tri(c, d, a)));
}

TEST(Intersect, Examples) {
  EXPECT_TRUE(refgeo::intersect(seg(0, 2), seg(2, 5)).is_empty());
  Poly p = tri(V{0, 0}, V{3, 0}, V{0, 3});
  EXPECT_TRUE(refgeo::equals(refgeo::intersect(p, p), p));
  auto sq = refgeo::intersect(box(0, 0, 2, 2), box(1, 1, 3, 3));
  EXPECT_TRUE(refgeo::equals(sq, box(1, 1, 2, 2)));
  EXPECT_TRUE(refgeo::intersect(p, Poly(2, 2)).is_empty());
}

TEST(Difference, Examples) {
  Q a(-1), c(1, 3), b(2);
  auto d = refgeo::difference(seg(a, b), seg(a, c));
  EXPECT_TRUE(refgeo::equals(d, seg(c, b)));
  EXPECT_TRUE(d.contains(RPoint(V{c}, {V{1}})));
  EXPECT_FALSE(d.contains(RPoint(V{c}, {V{-1}})));
  Poly sq = box(0, 0, 2, 2);
  EXPECT_TRUE(refgeo::difference(sq, sq).is_empty());
  auto rest = refgeo::difference(sq, tri(V{0, 0}, V{2, 0}, V{2, 2}));
  EXPECT_TRUE(refgeo::equals(rest, tri(V{0, 0}, V{2, 2}, V{0, 2})));
  // The diagonal itself is split: inward flags on either side land in exactly one part.
  RPoint on_diag(V{1, 1}, {V{1, 1}, V{-1, 1}});
  EXPECT_TRUE(rest.contains(on_diag));
  EXPECT_FALSE(tri(V{0, 0}, V{2, 0}, V{2, 2}).contains(on_diag));
}

TEST(ContainsPoint, TriangleVertexFlags) {
  V a{0, 0}, b{4, 0}, c{0, 4};
  Poly t = tri(a, b, c);
  EXPECT_TRUE(t.contains(RPoint(a, {V{1, 1}, V{-1, 1}})));
  EXPECT_FALSE(t.contains(RPoint(a, {V{-1, -1}, V{1, 0}})));
  EXPECT_FALSE(t.contains(RPoint(V{10, 10}, {V{1, 0}, V{0, 1}})));
  // Along the edge AB, turning inward.
  EXPECT_TRUE(t.contains(RPoint(a, {V{1, 0}, V{0, 1}})));
  EXPECT_FALSE(t.contains(RPoint(a, {V{1, 0}, V{0, -1}})));
  EXPECT_THROW(t.contains(RPoint(a, {V{1, 0}})), refgeo::DimensionMismatch);
}

TEST(Closing, Examples) {
  auto cl = refgeo::closing(seg(1, 3));
  ASSERT_EQ(cl.pieces.size(), 1u);
  EXPECT_TRUE(cl.contains(V{1}));
  EXPECT_TRUE(cl.contains(V{3}));
  EXPECT_FALSE(cl.contains(V{4}));
  EXPECT_TRUE(refgeo::closing(Poly(2, 2)).empty());

  // Boundary of a triangle as a refined 1-polytope: three segments.
  V a{0, 0}, b{4, 0}, c{0, 4};
  auto boundary = refgeo::unite(refgeo::unite(refgeo::segment_polytope(a, b), refgeo::segment_polytope(b, c)),
                                refgeo::segment_polytope(c, a));
  auto bc = refgeo::closing(boundary);
  for (const auto& x : {a, b, c, V{2, 0}, V{2, 2}, V{0, 1}}) EXPECT_TRUE(bc.contains(x));
  EXPECT_FALSE(bc.contains(V{1, 1}));
}

TEST(Lift, ValidatesPurity) {
  ConventionalPolytope<Q> bad{2, 2, {refgeo::convex_piece(Polygon<Q>{V{0, 0}, V{1, 1}, V{2, 2}})}};
  try {
    refgeo::lift(bad);
    FAIL() << "expected ImpurePolytope";
  } catch (const refgeo::ImpurePolytope& e) {
    EXPECT_EQ(e.piece_index, 0u);
    EXPECT_EQ(e.rank, 1);
  }
  // A rank-1 piece written in the plane is moved to its own line.
  Piece flat{Carrier::whole(2), {AF({0, 1}, Q(0)), AF({0, -1}, Q(0)), AF({1, 0}, Q(0)), AF({-1, 0}, Q(2))}};
  auto s = refgeo::lift(flat, 1);
  EXPECT_TRUE(refgeo::equals(s, refgeo::segment_polytope(V{0, 0}, V{2, 0})));
}

TEST(Subset, Examples) {
  Poly p = tri(V{0, 0}, V{3, 0}, V{0, 3});
  Poly q = box(1, 1, 4, 4);
  EXPECT_TRUE(refgeo::is_subset(p, refgeo::unite(p, q)));
  EXPECT_FALSE(refgeo::is_subset(q, p));
  auto w = refgeo::subset_witness(q, p);
  ASSERT_TRUE(w);
  EXPECT_TRUE(q.contains(*w));
  EXPECT_FALSE(p.contains(*w));
}

TEST(Disjoint, AgreesWithRankDrop) {
  V a{0, 0}, b{2, 0}, c{2, 2}, d{0, 2};
  EXPECT_TRUE(refgeo::disjoint(tri(a, b, c), tri(a, c, d)));
  EXPECT_TRUE(refgeo::rank_drop_check(tri(a, b, c), tri(a, c, d)));
  Poly p = box(0, 0, 1, 1);
  EXPECT_FALSE(refgeo::disjoint(p, p));
  EXPECT_FALSE(refgeo::rank_drop_check(p, p));
  Poly corner = box(1, 1, 2, 2);
  EXPECT_TRUE(refgeo::disjoint(p, corner));
  EXPECT_EQ(refgeo::closure_intersection_rank(p, corner), 0);
  EXPECT_EQ(refgeo::closure_intersection_rank(p, box(5, 5, 6, 6)), -1);
}

TEST(Partition, FigureExamples) {
  V a{0, 0}, b{4, 0}, c{5, 3}, d{1, 4};
  EXPECT_TRUE(refgeo::partition_check({tri(a, b, c), tri(c, d, a)}, quad(a, b, c, d)));
  Poly p = box(0, 0, 1, 1);
  EXPECT_TRUE(refgeo::partition_check({p}, p));
  V e{1, 1};
  V t1{0, 0}, t2{4, 0}, t3{0, 4};
  EXPECT_TRUE(refgeo::partition_check({tri(t1, t2, e), tri(t2, t3, e), tri(t3, t1, e)}, tri(t1, t2, t3)));
}

TEST(Partition, FailuresCarryWitnesses) {
  V a{0, 0}, b{4, 0}, c{5, 3}, d{1, 4};
  auto r = refgeo::partition_report<Q>({tri(a, b, c), tri(c, d, a), tri(a, b, d)}, quad(a, b, c, d));
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.overlap);
  ASSERT_TRUE(r.witness);
  auto r2 = refgeo::partition_report<Q>({tri(a, b, c)}, quad(a, b, c, d));
  EXPECT_FALSE(r2.ok);
  ASSERT_TRUE(r2.witness);
  EXPECT_TRUE(quad(a, b, c, d).contains(*r2.witness));
  EXPECT_FALSE(tri(a, b, c).contains(*r2.witness));
}

TEST(BooleanLaws, RandomizedExtensional) {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 30; ++it) {
    std::size_t d = 1 + it % 3;
    std::size_t k = (it % 4 == 3) ? d - 1 : d;
    if (k == 0) k = d;
    auto A = random_instance(rng, d, k, 2), B = random_instance(rng, d, k, 2), C = random_instance(rng, d, k, 2);
    Poly a = refgeo::lift(A.poly), b = refgeo::lift(B.poly), c = refgeo::lift(C.poly);
    auto samples = instance_samples(rng, {&A, &B, &C}, 200);
    auto ab = refgeo::unite(a, b), ba = refgeo::unite(b, a);
    auto i_ab = refgeo::intersect(a, b);
    auto left = refgeo::unite(refgeo::unite(a, b), c), right = refgeo::unite(a, refgeo::unite(b, c));
    auto dm1 = refgeo::difference(c, refgeo::unite(a, b));
    auto dm2 = refgeo::intersect(refgeo::difference(c, a), refgeo::difference(c, b));
    auto dm3 = refgeo::difference(c, i_ab);
    auto dm4 = refgeo::unite(refgeo::difference(c, a), refgeo::difference(c, b));
    auto recomposed = refgeo::unite(refgeo::difference(a, b), i_ab);
    for (const auto& p : samples) {
      bool in_a = oracle_contains(A.poly.pieces, p), in_b = oracle_contains(B.poly.pieces, p),
           in_c = oracle_contains(C.poly.pieces, p);
      EXPECT_EQ(a.contains(p), in_a);
      EXPECT_EQ(ab.contains(p), in_a || in_b);
      EXPECT_EQ(ba.contains(p), in_a || in_b);
      EXPECT_EQ(i_ab.contains(p), in_a && in_b);
      EXPECT_EQ(left.contains(p), right.contains(p));
      EXPECT_EQ(dm1.contains(p), in_c && !(in_a || in_b));
      EXPECT_EQ(dm2.contains(p), dm1.contains(p));
      EXPECT_EQ(dm3.contains(p), in_c && !(in_a && in_b));
      EXPECT_EQ(dm4.contains(p), dm3.contains(p));
      EXPECT_EQ(recomposed.contains(p), in_a);
    }
    EXPECT_TRUE(refgeo::equals(ab, ba));
    EXPECT_TRUE(refgeo::equals(dm1, dm2));
    EXPECT_TRUE(refgeo::equals(dm3, dm4));
    EXPECT_TRUE(refgeo::equals(recomposed, a));
  }
}

TEST(PartitionCheck, InvariantUnderReorderingAndRegrouping) {
  V a{0, 0}, b{6, 0}, c{6, 6}, d{0, 6}, m{3, 3};
  std::vector<Poly> parts{tri(a, b, m), tri(b, c, m), tri(c, d, m), tri(d, a, m)};
  Poly whole = quad(a, b, c, d);
  EXPECT_TRUE(refgeo::partition_check(parts, whole));
  std::vector<Poly> reordered{parts[2], parts[0], parts[3], parts[1]};
  EXPECT_TRUE(refgeo::partition_check(reordered, whole));
  std::vector<Poly> regrouped{refgeo::unite(parts[0], parts[1]), refgeo::unite(parts[2], parts[3])};
  EXPECT_TRUE(refgeo::partition_check(regrouped, whole));
}

TEST(Correspondence, ClosingAndLiftAreInverse) {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 30; ++it) {
    std::size_t d = 1 + it % 3, k = 1 + (it / 3) % d;
    auto A = random_instance(rng, d, k, 3);
    Poly a = refgeo::lift(A.poly);
    auto closed = refgeo::closing(a);
    EXPECT_TRUE(refgeo::equals(refgeo::lift(closed), a));
    for (const auto& p : instance_samples(rng, {&A}, 100)) {
      EXPECT_EQ(closed.contains(p.position), A.poly.contains(p.position));
      EXPECT_EQ(a.contains(p), oracle_contains(A.poly.pieces, p));
    }
    // Disjointness of the refined images is the rank drop of the closures.
    auto B = random_instance_on(rng, A, 2);
    Poly b = refgeo::lift(B.poly);
    EXPECT_EQ(refgeo::disjoint(a, b), refgeo::rank_drop_check(a, b));
  }
}
