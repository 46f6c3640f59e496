#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "support.hpp"

namespace sc = refgeo::scenario;
namespace fs = std::filesystem;
using refgeo::Scalar;
using VS = refgeo::Vector<Scalar>;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scenario_path(const std::string& name) { return fs::path(REFGEO_SCENARIO_DIR) / name; }

std::vector<fs::path> bundled() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(REFGEO_SCENARIO_DIR))
    if (e.path().extension() == ".scn") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

fs::path fresh_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("refgeo_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

template <class T>
std::vector<const T*> nodes(const sc::Scenario& s) {
  std::vector<const T*> out;
  for (const auto& st : s.statements)
    if (const T* x = std::get_if<T>(&st.node)) out.push_back(x);
  return out;
}

refgeo::ParseError parse_error(const std::string& text) {
  try {
    sc::parse_scenario(text);
  } catch (const refgeo::ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no diagnostic for:\n" << text;
  return refgeo::ParseError("", 0, 0);
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto k = hay.find(needle); k != std::string::npos; k = hay.find(needle, k + 1)) ++n;
  return n;
}

}  // namespace

TEST(ParseScenario, ElementsI35Declarations) {
  auto s = sc::parse_scenario(slurp(scenario_path("elements_I35.scn")));
  std::vector<std::string> names;
  for (const auto* d : nodes<sc::PolytopeDecl>(s)) names.push_back(d->name);
  for (const char* n : {"ABCD", "EBCF", "EAB", "FDC", "DGE", "GBC"})
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  // Triangle EAB is carried onto triangle FDC.
  bool found = false;
  for (const auto* a : nodes<sc::Assertion>(s))
    found = found || (a->kind == sc::Assertion::Kind::equals && a->polys[0]->kind == sc::PExpr::Kind::translate &&
                      a->polys[0]->lhs->name == "EAB" && a->polys[1]->name == "FDC");
  EXPECT_TRUE(found);
  ASSERT_EQ(nodes<sc::Wbg>(s).size(), 1u);
  EXPECT_EQ(nodes<sc::Wbg>(s)[0]->first, "ABCD");
}

TEST(ParseScenario, EmptyAndCommentOnlyFiles) {
  EXPECT_TRUE(sc::parse_scenario("").statements.empty());
  EXPECT_TRUE(sc::parse_scenario("# nothing here\n\n   # at all\n").statements.empty());
  EXPECT_EQ(sc::print(sc::parse_scenario("")), "");
}

TEST(ParseScenario, UndeclaredNameIsLocated) {
  auto e = parse_error("point A = (0, 0)\n\nassert nonempty  Ghost\n");
  EXPECT_EQ(e.line, 3);
  EXPECT_EQ(e.column, 18);
  EXPECT_NE(e.message.find("'Ghost'"), std::string::npos) << e.message;
  auto f = parse_error("polytope T = triangle (0,0) (1,0) P\n");
  EXPECT_EQ(f.line, 1);
  EXPECT_EQ(f.column, 35);
  EXPECT_NE(f.message.find("'P'"), std::string::npos) << f.message;
}

TEST(ParseScenario, RankMismatchIsLocated) {
  auto e = parse_error("polytope T = triangle (0,0) (2,0) (0,2)\npolytope S = segment (0,0) (1,1)\nassert equals T S\n");
  EXPECT_EQ(e.line, 3);
  EXPECT_NE(e.message.find("rank"), std::string::npos) << e.message;
  auto f = parse_error("polytope T = triangle (0,0) (2,0) (0,2)\npolytope U = T | segment (0,0) (1,1)\n");
  EXPECT_EQ(f.line, 2);
  EXPECT_NE(f.message.find("rank"), std::string::npos) << f.message;
}

TEST(ParseScenario, OtherDiagnostics) {
  EXPECT_NE(parse_error("point A = (0,0)\npoint A = (1,0)\n").message.find("already declared"), std::string::npos);
  EXPECT_NE(parse_error("polytope P = polygon (0,0) (2,2) (2,0) (0,2)\n").message.find("not simple"),
            std::string::npos);
  auto e = parse_error("point A = (0, 0\n");
  EXPECT_EQ(e.line, 2);
  auto g = parse_error("point A = (1, 2) $\n");
  EXPECT_EQ(g.line, 1);
  EXPECT_EQ(g.column, 18);
  EXPECT_NE(parse_error("scalar s = sqrt(-1)\n").message.find("negative"), std::string::npos);
}

TEST(PrintScenario, BundledRoundTrip) {
  for (const auto& p : bundled()) {
    auto s = sc::parse_scenario(slurp(p));
    auto printed = sc::print(s);
    auto again = sc::parse_scenario(printed);
    EXPECT_TRUE(again == s) << p;
    EXPECT_EQ(sc::print(again), printed) << p;
  }
}

namespace {

// Random scenario text over a fixed stock of points, exercising every
// statement form the grammar has.
std::string random_scenario(std::mt19937_64& rng) {
  using testing_support::rq;
  std::uniform_int_distribution<int> pick(0, 99);
  std::ostringstream s;
  std::vector<std::string> pts, polys2, angles;
  auto lit = [&](const testing_support::Q& q) { return q.str(); };
  s << "scalar k = " << lit(rq(rng, 0, 3, 4)) << " + sqrt(" << lit(rq(rng, 1, 5)) << ")\n";
  for (int i = 0; i < 4; ++i) {
    std::string n = "P" + std::to_string(i);
    s << "point " << n << " = (" << lit(rq(rng, -4, 4, 3)) << ", " << lit(rq(rng, -4, 4, 3)) << ")\n";
    pts.push_back(n);
  }
  s << "point R = (1/2, k) flag [(1, 0), (0, -1)]\n";
  for (int i = 0; i < 5; ++i) {
    std::string n = "T" + std::to_string(i);
    // Coordinates far apart enough to be non-degenerate.
    int x = pick(rng) % 7 - 3, y = pick(rng) % 7 - 3;
    if (i < 2) {
      s << "polytope " << n << " = triangle (" << x << ", " << y << ") (" << x + 3 << ", " << y << ") ("
        << x << ", " << y + 2 << ")\n";
    } else if (i == 2) {
      s << "polytope " << n << " = polygon (" << x << ", " << y << ") (" << x + 2 << ", " << y << ") (" << x + 2
        << ", " << y << " + k) (" << x << ", " << y << " + k + 1)\n";
    } else {
      const std::string& a = polys2[pick(rng) % polys2.size()];
      const std::string& b = polys2[pick(rng) % polys2.size()];
      const char* ops[] = {" | ", " & ", " - "};
      switch (pick(rng) % 4) {
        case 0:
          s << "polytope " << n << " = translate(" << a << ", P0 - P1)\n";
          break;
        case 1:
          s << "polytope " << n << " = halfturn(" << a << ", (1/2, -1/3))\n";
          break;
        default:
          s << "polytope " << n << " = (" << a << ops[pick(rng) % 3] << b << ")" << ops[pick(rng) % 3] << a
            << "\n";
      }
    }
    polys2.push_back(n);
  }
  s << "polytope L = lift 2 in 2 { piece { halfspace x - 1 >= 0; halfspace -x + 3 >= 0; halfspace y >= 0; "
       "halfspace 2 - y + 1/2 x >= 0 } }\n";
  s << "polytope S = segment P0 P1\n";
  s << "angle A0 = between (1, 0) (" << lit(rq(rng, -2, 2, 2)) << ", 1)\n";
  s << "angle A1 at P2 between P0 - P2 P0 - P2 + (1, 1)\n";
  s << "angle A2 = tangent(T0, P3) | negate(A0) & halfplane (0, 1)\n";
  s << "angle A3 = full 2 - A2\n";
  for (int i = 0; i < 6; ++i) {
    const std::string& a = polys2[pick(rng) % polys2.size()];
    const std::string& b = polys2[pick(rng) % polys2.size()];
    switch (pick(rng) % 10) {
      case 0:
        s << "assert equals " << a << " " << b << " | L\n";
        break;
      case 1:
        s << "assert subset " << a << " & " << b << " " << a << "\n";
        break;
      case 2:
        s << "assert disjoint " << a << " - " << b << " " << b << "\n";
        break;
      case 3:
        s << "assert partition [" << a << " & " << b << ", " << a << " - " << b << "] " << a << "\n";
        break;
      case 4:
        s << "assert area " << a << " = " << lit(rq(rng, 0, 9, 2)) << "\n";
        break;
      case 5:
        s << "assert contains " << a << " R\n";
        break;
      case 6:
        s << "assert angle_partition [A0, A3] full 2\n";
        break;
      case 7:
        s << "assert angle_equals A1 negate(A0)\n";
        break;
      case 8:
        s << "assert empty " << a << " - " << a << "\n";
        break;
      default:
        s << "render \"r" << i << ".svg\" " << a << " " << b << "\n";
    }
  }
  s << "wbg T0 T1\n";
  return s.str();
}

}  // namespace

TEST(PrintScenario, RandomRoundTrip) {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 60; ++it) {
    std::string text = random_scenario(rng);
    sc::Scenario s;
    try {
      s = sc::parse_scenario(text);
    } catch (const refgeo::ParseError& e) {
      FAIL() << e.what() << "\n" << text;
    }
    auto printed = sc::print(s);
    auto again = sc::parse_scenario(printed);
    EXPECT_TRUE(again == s) << text << "\n---\n" << printed;
    EXPECT_EQ(sc::print(again), printed);
  }
}

TEST(RunScenario, BundledReplaysPass) {
  for (const auto& p : bundled()) {
    if (p.filename().string().rfind("negative_", 0) == 0) continue;
    auto rep = sc::run_scenario(sc::parse_scenario(slurp(p)));
    EXPECT_TRUE(rep.ok()) << p << "\n" << rep.str();
    EXPECT_FALSE(rep.outcomes.empty()) << p;
  }
}

TEST(RunScenario, ShiftedCutFailsWithWitness) {
  auto s = sc::parse_scenario(slurp(scenario_path("negative_shifted_cut.scn")));
  auto rep = sc::run_scenario(s);
  ASSERT_EQ(rep.outcomes.size(), 1u);
  EXPECT_FALSE(rep.ok());
  EXPECT_NE(rep.outcomes[0].detail.find("witness"), std::string::npos) << rep.str();
  // The witness is genuine: re-read it and test it against both parts.
  std::smatch m;
  const std::string detail = rep.outcomes[0].detail;
  ASSERT_TRUE(std::regex_search(detail, m, std::regex(R"(witness point (\(.*?\)) flag \[(\(.*?\)), (\(.*?\))\])")));
  auto pos = sc::parse_vertex_list(m[1].str()).front();
  auto f = sc::parse_vertex_list(m[2].str() + " " + m[3].str());
  refgeo::RefinedPoint<Scalar> w(pos, {f[0], f[1]});
  EXPECT_TRUE(sc::evaluate_expression("BD", s).contains(w));
  EXPECT_TRUE(sc::evaluate_expression("DE", s).contains(w));
}

TEST(RunScenario, ReportsAreOrderedAndCounted) {
  auto s = sc::parse_scenario(
      "polytope T = triangle (0,0) (2,0) (0,2)\n"
      "assert area T = 2\n"
      "assert area T = 3\n"
      "assert empty T - T\n");
  auto rep = sc::run_scenario(s);
  ASSERT_EQ(rep.outcomes.size(), 3u);
  EXPECT_TRUE(rep.outcomes[0].ok);
  EXPECT_FALSE(rep.outcomes[1].ok);
  EXPECT_TRUE(rep.outcomes[2].ok);
  EXPECT_EQ(rep.outcomes[1].line, 3);
  EXPECT_NE(rep.str().find("2/3 checks passed"), std::string::npos);
}

TEST(RunScenario, WbgRejectsUnequalAreasWithGap) {
  auto s = sc::parse_scenario(
      "polytope A = polygon (0,0) (1,0) (1,1) (0,1)\n"
      "polytope B = triangle (0,0) (3,0) (0,1)\n"
      "wbg A B\n");
  auto rep = sc::run_scenario(s);
  ASSERT_EQ(rep.outcomes.size(), 1u);
  EXPECT_FALSE(rep.ok());
  EXPECT_NE(rep.outcomes[0].detail.find("-1/2"), std::string::npos) << rep.str();
}

TEST(RunScenario, OutputIsDeterministic) {
  auto s = sc::parse_scenario(slurp(scenario_path("elements_I35.scn")));
  auto d1 = fresh_dir("det1"), d2 = fresh_dir("det2");
  auto r1 = sc::run_scenario(s, {d1.string()});
  auto r2 = sc::run_scenario(s, {d2.string()});
  EXPECT_TRUE(r1.ok());
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(d1)) {
    ++files;
    EXPECT_EQ(slurp(e.path()), slurp(d2 / e.path().filename())) << e.path();
  }
  EXPECT_EQ(files, 2u);
  // Reports differ only in the directory name.
  auto strip = [](std::string t, const std::string& dir) {
    for (auto k = t.find(dir); k != std::string::npos; k = t.find(dir)) t.erase(k, dir.size());
    return t;
  };
  EXPECT_EQ(strip(r1.str(), d1.string()), strip(r2.str(), d2.string()));
}

TEST(EvaluateExpression, DifferenceOfTriangles) {
  auto p = sc::evaluate_expression("triangle (0,0) (2,0) (0,2) - triangle (0,0) (1,0) (0,1)");
  // Shoelace: 2 - 1/2.
  EXPECT_EQ(refgeo::area(p), Scalar(refgeo::Rational(3, 2)));
  EXPECT_TRUE(p.contains(refgeo::RefinedPoint<Scalar>(VS{Scalar(1), Scalar(0)}, {VS{Scalar(1), Scalar(1)}, VS{Scalar(0), Scalar(1)}})));
  EXPECT_FALSE(p.contains(refgeo::RefinedPoint<Scalar>(VS{Scalar(1), Scalar(0)}, {VS{Scalar(-1), Scalar(0)}, VS{Scalar(0), Scalar(1)}})));
  // Along the cut, turning upward: inside the difference.
  EXPECT_TRUE(p.contains(refgeo::RefinedPoint<Scalar>(VS{Scalar(1), Scalar(0)}, {VS{Scalar(-1), Scalar(1)}, VS{Scalar(0), Scalar(1)}})));
  // Vector arithmetic still works inside tuples lists.
  auto q = sc::evaluate_expression("translate(triangle (0,0) (1,0) (0,1), (1,0) + (0,1))");
  EXPECT_TRUE(refgeo::equals(q, refgeo::triangle_polytope(VS{Scalar(1), Scalar(1)}, VS{Scalar(2), Scalar(1)},
                                                           VS{Scalar(1), Scalar(2)})));
  auto ctx = sc::parse_scenario(slurp(scenario_path("elements_I35.scn")));
  EXPECT_TRUE(refgeo::equals(sc::evaluate_expression("ABGD | DGE", ctx), sc::evaluate_expression("EAB", ctx)));
  EXPECT_THROW(sc::evaluate_expression("Nope"), refgeo::ParseError);
}

TEST(VertexList, ParsesTuplesWithOptionalCommas) {
  auto p = sc::parse_vertex_list("(0,0), (1/2, 0) (1, sqrt(4))");
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[2], (VS{Scalar(1), Scalar(2)}));
  EXPECT_THROW(sc::parse_vertex_list("(0,0,1)"), refgeo::ParseError);
  EXPECT_THROW(sc::parse_vertex_list("(0,0) ("), refgeo::ParseError);
}

TEST(Svg, TriangleHasSectorsAndHalfDisks) {
  auto t = refgeo::triangle_polytope(VS{Scalar(0), Scalar(0)}, VS{Scalar(4), Scalar(0)}, VS{Scalar(1), Scalar(3)});
  auto doc = refgeo::svg::render<Scalar>({{t, "#336699", ""}});
  // One closure, three edge half-disks, three vertex sectors.
  EXPECT_EQ(count(doc, "<polygon"), 7u);
  EXPECT_EQ(count(doc, "fill-opacity=\"0.3\""), 1u);
  EXPECT_EQ(doc, refgeo::svg::render<Scalar>({{t, "#336699", ""}}));
  EXPECT_NE(doc.find("viewBox"), std::string::npos);
}

TEST(Svg, EmptyPolytopeIsAnEmptyGroup) {
  auto doc = refgeo::svg::render<Scalar>({{refgeo::RefinedPolytope<Scalar>(2, 2), "#336699", ""}});
  EXPECT_NE(doc.find("<g>\n</g>"), std::string::npos);
  EXPECT_EQ(count(doc, "<polygon"), 0u);
}

TEST(Svg, DecompositionPairsColours) {
  refgeo::Polygon<Scalar> p{VS{Scalar(0), Scalar(0)}, VS{Scalar(1), Scalar(0)}, VS{Scalar(1), Scalar(1)},
                            VS{Scalar(0), Scalar(1)}};
  refgeo::Polygon<Scalar> q{VS{Scalar(0), Scalar(0)}, VS{Scalar(2), Scalar(0)}, VS{Scalar(0), Scalar(1)}};
  auto d = refgeo::equidecompose(p, q);
  auto doc = refgeo::svg::render_decomposition(d);
  EXPECT_EQ(count(doc, "<g>"), 2 * d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    // Each colour's closure is drawn once on each side.
    EXPECT_GE(count(doc, "fill=\"" + refgeo::svg::palette(i) + "\" fill-opacity=\"0.3\""), 2u);
  }
  EXPECT_EQ(refgeo::svg::palette(0).size(), 7u);
  EXPECT_NE(refgeo::svg::palette(0), refgeo::svg::palette(1));
}

TEST(Svg, RoundsOnlyAtOutput) {
  EXPECT_EQ(refgeo::svg::number(1.0 / 3.0, 9), "0.333333333");
  EXPECT_EQ(refgeo::svg::number(2.5, 9), "2.5");
  EXPECT_EQ(refgeo::svg::number(-0.0000000001, 9), "0");
}
