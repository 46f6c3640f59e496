#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;
using refgeo::Cell;

namespace {

Cell<Q> segment_cell(const Q& a, const Q& b) {
  return Cell<Q>(Carrier::whole(1), {AF({1}, -a), AF({-1}, b)});
}

Cell<Q> triangle_cell(const V& a, const V& b, const V& c) {
  auto piece = refgeo::convex_piece(refgeo::Polygon<Q>{a, b, c});
  return Cell<Q>(piece.carrier, piece.constraints);
}

}  // namespace

TEST(CellContains, SegmentEndpoints) {
  Q a(1), b(4);
  auto seg = segment_cell(a, b);
  EXPECT_TRUE(seg.contains(RPoint(V{a}, {V{1}})));
  EXPECT_FALSE(seg.contains(RPoint(V{a}, {V{-1}})));
  EXPECT_FALSE(seg.contains(RPoint(V{b}, {V{1}})));
  EXPECT_TRUE(seg.contains(RPoint(V{b}, {V{-1}})));
  EXPECT_THROW(seg.contains(RPoint(V{a}, std::vector<V>{})), refgeo::DimensionMismatch);
}

TEST(CellContains, TriangleInteriorAnyFlag) {
  auto t = triangle_cell(V{0, 0}, V{4, 0}, V{0, 4});
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i)
    EXPECT_TRUE(t.contains(RPoint(V{1, 1}, random_flag(rng, Carrier::whole(2)))));
}

TEST(CellContains, OffCarrierIsFalse) {
  Carrier line(V{0, 0}, {V{1, 0}});
  Cell<Q> c(line, {AF({1}, Q(0))});
  EXPECT_TRUE(c.contains(RPoint(V{0, 0}, {V{1, 0}})));
  EXPECT_FALSE(c.contains(RPoint(V{0, 1}, {V{1, 0}})));
  EXPECT_FALSE(c.contains(RPoint(V{0, 0}, {V{1, 1}})));
}

TEST(Complement, ExamplesAndErrors) {
  AF xi({1}, Q(0));
  auto neg = refgeo::complement_halfspace(xi);
  Cell<Q> pos_side(Carrier::whole(1), {xi}), neg_side(Carrier::whole(1), {neg});
  EXPECT_TRUE(pos_side.contains(RPoint(V{0}, {V{1}})));
  EXPECT_FALSE(neg_side.contains(RPoint(V{0}, {V{1}})));
  EXPECT_TRUE(neg_side.contains(RPoint(V{0}, {V{-1}})));
  EXPECT_EQ(refgeo::complement_halfspace(neg), xi);
  EXPECT_THROW(refgeo::complement_halfspace(AF({0}, Q(1))), refgeo::NonRegularFunctional);
}

TEST(Complement, ExactlyOneSideContainsEachPoint) {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 600; ++it) {
    std::size_t d = 1 + it % 3;
    AF xi = random_regular(rng, d);
    Carrier whole = Carrier::whole(d);
    // Positions on the hyperplane half the time, to exercise the flag.
    V x = random_vector(rng, d, -3, 3, 2);
    if (it % 2) x = x - xi.linear * (xi(x) / refgeo::dot(xi.linear, xi.linear));
    std::vector<V> prefix;
    if (it % 4 == 1) {
      // Lead with a direction inside the hyperplane.
      for (std::size_t i = 0; i < d && prefix.empty(); ++i) {
        V e = V::unit(d, i);
        V w = e - xi.linear * (refgeo::dot(xi.linear, e) / refgeo::dot(xi.linear, xi.linear));
        if (!w.is_zero()) prefix.push_back(w);
      }
    }
    RPoint p(x, random_flag(rng, whole, prefix));
    Cell<Q> a(whole, {xi}), b(whole, {refgeo::complement_halfspace(xi)});
    EXPECT_NE(a.contains(p), b.contains(p));
  }
}

TEST(CellEmptiness, Examples) {
  EXPECT_TRUE(Cell<Q>(Carrier::whole(1), {AF({1}, Q(0)), AF({-1}, Q(0))}).is_empty());
  EXPECT_FALSE(segment_cell(Q(1), Q(3)).is_empty());
  Cell<Q> squeezed(Carrier::whole(2),
                   {AF({1, 0}, Q(0)), AF({0, 1}, Q(0)), AF({-1, -1}, Q(1)), AF({1, 1}, Q(-1))});
  EXPECT_TRUE(squeezed.is_empty());
  EXPECT_FALSE(Cell<Q>::full(Carrier::whole(3)).is_empty());
}

TEST(CellEmptiness, NonRegularRestrictionPolicy) {
  Carrier xaxis(V{0, 0}, {V{1, 0}});
  auto keep = Cell<Q>::from_ambient(xaxis, {AF({0, 1}, Q(1))});
  EXPECT_FALSE(keep.is_empty());
  EXPECT_TRUE(keep.constraints().empty());
  EXPECT_TRUE(Cell<Q>::from_ambient(xaxis, {AF({0, 1}, Q(0))}).is_empty());
  EXPECT_TRUE(Cell<Q>::from_ambient(xaxis, {AF({0, 1}, Q(-1))}).is_empty());
}

TEST(CellClosure, Examples) {
  auto seg = segment_cell(Q(1), Q(3));
  auto cl = seg.closure();
  EXPECT_TRUE(cl.contains(V{1}));
  EXPECT_TRUE(cl.contains(V{3}));
  EXPECT_FALSE(cl.contains(V{Q(7, 2)}));
  auto tri = triangle_cell(V{0, 0}, V{2, 0}, V{0, 2});
  auto verts = refgeo::piece_vertices(tri.closure());
  EXPECT_EQ(verts.size(), 3u);
  EXPECT_EQ(Cell<Q>::full(Carrier::whole(2)).closure().constraints.size(), 0u);
  Cell<Q> empty(Carrier::whole(1), {AF({1}, Q(0)), AF({-1}, Q(0))});
  EXPECT_THROW(empty.closure(), refgeo::EmptyCellError);
}

TEST(CellProperties, EmptinessSoundnessAndClosureConsistency) {
  std::mt19937_64 rng(101);
  int nonempty = 0, empty = 0;
  for (int it = 0; it < 200; ++it) {
    std::size_t d = 1 + it % 3;
    std::vector<AF> fs;
    for (int k = 0; k < 2 + it % 4; ++k) fs.push_back(random_regular(rng, d));
    Cell<Q> cell(Carrier::whole(d), fs);
    Piece piece{Carrier::whole(d), fs};
    if (cell.is_empty()) {
      ++empty;
      for (int s = 0; s < 40; ++s) {
        RPoint p(random_vector(rng, d, -4, 4, 3), random_flag(rng, Carrier::whole(d)));
        EXPECT_FALSE(cell.contains(p));
        EXPECT_FALSE(oracle_contains(piece, p));
      }
      continue;
    }
    ++nonempty;
    auto w = cell.witness();
    ASSERT_TRUE(w);
    EXPECT_TRUE(cell.contains(*w));
    auto cl = cell.closure();
    for (int s = 0; s < 40; ++s) {
      RPoint p(random_vector(rng, d, -4, 4, 3), random_flag(rng, Carrier::whole(d)));
      bool in = cell.contains(p);
      EXPECT_EQ(in, oracle_contains(piece, p));
      if (in) {
        EXPECT_TRUE(cl.contains(p.position));
        auto y = refgeo::step_into_interior(cell, p, Q(1, 2));
        ASSERT_TRUE(y);
        for (const auto& f : fs) EXPECT_GT(f(*y).sign(), 0);
      }
    }
    // Interior points of the closure lift with every flag.
    auto x = cell.interior_point();
    for (int s = 0; s < 5; ++s) EXPECT_TRUE(cell.contains(RPoint(*x, random_flag(rng, Carrier::whole(d)))));
  }
  EXPECT_GT(nonempty, 40);
  EXPECT_GT(empty, 20);
}

TEST(CellProperties, ClosureBoundaryPointsAreOccupiedByInwardFlags) {
  // A point of the closure is the position of some refined point of the cell:
  // step from it toward an interior point, then complete the flag.
  std::mt19937_64 rng(55);
  for (int it = 0; it < 60; ++it) {
    auto pts = random_simplex_points(rng, 2, 2, V{0, 0});
    auto piece = simplex_piece(pts);
    Cell<Q> cell(piece.carrier, piece.constraints);
    auto x = random_face_point(rng, pts);
    auto inner = *cell.interior_point();
    if (x == inner) continue;
    std::vector<V> flag = random_flag(rng, Carrier::whole(2), {inner - x});
    EXPECT_TRUE(cell.contains(RPoint(x, flag)));
  }
}
