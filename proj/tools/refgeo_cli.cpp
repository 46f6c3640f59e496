// refgeo: scenario checks, boolean operations and WBG decompositions from the
// command line.
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 on usage,
// parse or I/O errors. Relative output paths are resolved against
// $REFGEO_OUTPUT_DIR when it is set.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "refgeo/refgeo.hpp"

namespace fs = std::filesystem;
using refgeo::Rational;
using refgeo::Scalar;

namespace {

constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string output_dir() {
  const char* env = std::getenv("REFGEO_OUTPUT_DIR");
  return env ? env : "";
}

std::string output_path(const std::string& p) {
  fs::path path(p);
  std::string dir = output_dir();
  if (path.is_relative() && !dir.empty()) path = fs::path(dir) / path;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  return path.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw refgeo::Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw refgeo::Error("cannot write " + path);
}

// --------------------------------------------------------------- check

int cmd_check(const std::string& file) {
  refgeo::scenario::Scenario s;
  try {
    s = refgeo::scenario::parse_scenario(read_file(file));
  } catch (const refgeo::ParseError& e) {
    std::cerr << file << ":" << e.line << ":" << e.column << ": error: " << e.message << "\n";
    return kUsage;
  }
  refgeo::scenario::RunOptions opts;
  opts.output_dir = output_dir();
  if (opts.output_dir.empty()) opts.output_dir = ".";
  fs::create_directories(opts.output_dir);
  auto rep = refgeo::scenario::run_scenario(s, opts);
  std::cout << rep.str();
  return rep.ok() ? 0 : kFailed;
}

// --------------------------------------------------------------- op

void describe(const refgeo::RefinedPolytope<Scalar>& p) {
  std::cout << "rank " << p.rank() << " in dimension " << p.ambient_dim() << ", " << p.cells().size()
            << (p.cells().size() == 1 ? " cell" : " cells") << (p.is_empty() ? " (empty)" : "") << "\n";
  if (p.ambient_dim() != 2 || p.is_empty()) return;
  if (p.rank() == 2 && refgeo::is_bounded(p)) std::cout << "area " << refgeo::area(p).str() << "\n";
  for (const auto& c : p.cells()) {
    std::cout << "cell";
    for (const auto& v : refgeo::detail::cell_vertices(c)) std::cout << " " << v.str();
    std::cout << "\n";
  }
}

int cmd_op(const std::string& expr, const std::string& scenario_file, const std::string& emit) {
  refgeo::scenario::Scenario context;
  refgeo::RefinedPolytope<Scalar> p;
  try {
    if (!scenario_file.empty()) context = refgeo::scenario::parse_scenario(read_file(scenario_file));
  } catch (const refgeo::ParseError& e) {
    std::cerr << scenario_file << ":" << e.line << ":" << e.column << ": error: " << e.message << "\n";
    return kUsage;
  }
  try {
    p = refgeo::scenario::evaluate_expression(expr, context);
  } catch (const refgeo::ParseError& e) {
    std::cerr << "<expr>:" << e.line << ":" << e.column << ": error: " << e.message << "\n";
    return kUsage;
  }
  describe(p);
  if (!emit.empty()) {
    auto path = output_path(emit);
    refgeo::svg::write_file(path, refgeo::svg::render<Scalar>({{p, refgeo::svg::palette(0), ""}}));
    std::cout << "wrote " << path << "\n";
  }
  return 0;
}

// --------------------------------------------------------------- wbg

refgeo::Polygon<Scalar> polygon_arg(const std::string& arg) {
  std::error_code ec;
  std::string text = fs::is_regular_file(arg, ec) ? read_file(arg) : arg;
  return refgeo::scenario::parse_vertex_list(text);
}

int cmd_wbg(const std::string& a, const std::string& b, const std::string& emit, const std::string& emit_decomp) {
  refgeo::Polygon<Scalar> p, q;
  try {
    p = polygon_arg(a);
    q = polygon_arg(b);
  } catch (const refgeo::ParseError& e) {
    std::cerr << "error: bad vertex list: " << e.what() << "\n";
    return kUsage;
  }
  refgeo::Decomposition<Scalar> d;
  try {
    d = refgeo::equidecompose(p, q);
  } catch (const refgeo::AreaMismatch& e) {
    std::cout << "rejected: area " << e.first << " vs " << e.second << ", gap " << e.gap << "\n";
    return kFailed;
  } catch (const refgeo::NonSimplePolygon& e) {
    std::cout << "rejected: " << e.what() << "\n";
    return kFailed;
  }
  for (const auto& line : d.log) std::cout << line << "\n";
  auto report = refgeo::verify_decomposition(d, p, q);
  std::cout << report.str();
  if (!emit.empty()) {
    auto path = output_path(emit);
    refgeo::svg::write_file(path, refgeo::svg::render_decomposition(d));
    std::cout << "wrote " << path << "\n";
  }
  if (!emit_decomp.empty()) {
    auto path = output_path(emit_decomp);
    write_text(path, refgeo::decomposition_text(d, &p, &q));
    std::cout << "wrote " << path << "\n";
  }
  return report.ok() ? 0 : kFailed;
}

int cmd_verify(const std::string& file) {
  refgeo::DecompositionFile<Scalar> f;
  try {
    f = refgeo::parse_decomposition<Scalar>(read_file(file));
  } catch (const refgeo::ParseError& e) {
    std::cerr << file << ":" << e.line << ": error: " << e.message << "\n";
    return kUsage;
  }
  if (!f.p || !f.q) {
    std::cerr << file << ": error: the file does not record both polygons\n";
    return kUsage;
  }
  auto report = refgeo::verify_decomposition(f.decomposition, *f.p, *f.q);
  std::cout << f.decomposition.size() << " pieces\n" << report.str();
  return report.ok() ? 0 : kFailed;
}

// --------------------------------------------------------------- selftest

using Q = Rational;
using V = refgeo::Vector<Q>;

Q rq(std::mt19937_64& rng, int lo, int hi, int den = 1) {
  std::uniform_int_distribution<int> n(lo * den, hi * den);
  return Q(n(rng), den);
}

V random_vector(std::mt19937_64& rng, std::size_t d, int lo, int hi, int den = 1) {
  V v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = rq(rng, lo, hi, den);
  return v;
}

refgeo::Polygon<Q> random_polygon(std::mt19937_64& rng, std::size_t max_vertices) {
  std::uniform_int_distribution<std::size_t> count(3, max_vertices);
  for (;;) {
    refgeo::Polygon<Q> pts;
    for (std::size_t i = count(rng); i > 0; --i) {
      V p = random_vector(rng, 2, 0, 4);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    if (pts.size() < 3) continue;
    refgeo::sort_ccw(pts);
    pts = refgeo::remove_collinear(pts);
    if (pts.size() >= 3 && refgeo::is_simple(pts) && refgeo::signed_area(pts).sign() != 0) return pts;
  }
}

struct Tally {
  std::string name;
  long passed = 0, total = 0;
  void add(bool ok) {
    ++total;
    passed += ok;
  }
};

int cmd_selftest(std::uint64_t seed, long iters) {
  std::mt19937_64 rng(seed);
  Tally split{"seamless half-space split"}, lift{"closing/lift round trip"}, wbg{"equidecompose + verify"};
  auto t0 = std::chrono::steady_clock::now();
  for (long it = 0; it < iters; ++it) {
    // Exactly one of the opposite refined half-spaces holds a refined point.
    std::size_t d = 1 + static_cast<std::size_t>(it % 3);
    V lin = random_vector(rng, d, -3, 3);
    if (lin.is_zero()) lin[0] = Q(1);
    refgeo::AffineFunctional<Q> xi(lin, rq(rng, -3, 3, 2));
    V x = random_vector(rng, d, -3, 3, 2);
    std::vector<V> flag;
    while (flag.size() < d) {
      flag.push_back(random_vector(rng, d, -2, 2));
      if (refgeo::rank(flag) < flag.size()) flag.pop_back();
    }
    bool pos = refgeo::lex_positive(refgeo::eval_refinement(xi, x, flag));
    bool neg = refgeo::lex_positive(refgeo::eval_refinement(-xi, x, flag));
    split.add(pos != neg);

    // closing(lift(P)) = P for a random polygon.
    auto poly = random_polygon(rng, 6);
    auto refined = refgeo::polygon_polytope(poly);
    lift.add(refgeo::equals(refgeo::lift(refgeo::closing(refined)), refined));

    // WBG on an equal-area pair (the second scaled in x by an exact factor).
    auto p = random_polygon(rng, 5);
    auto q = random_polygon(rng, 5);
    Q factor = refgeo::abs_value(refgeo::signed_area(p)) / refgeo::abs_value(refgeo::signed_area(q));
    for (auto& v : q) v[0] = v[0] * factor;
    auto dec = refgeo::equidecompose(p, q);
    wbg.add(refgeo::verify_decomposition(dec, p, q).ok());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = true;
  for (const auto* t : {&split, &lift, &wbg}) {
    std::cout << (t->passed == t->total ? "PASS " : "FAIL ") << t->name << ": " << t->passed << "/" << t->total
              << "\n";
    ok = ok && t->passed == t->total;
  }
  std::cout << "seed " << seed << ", " << iters << " iterations, " << refgeo::svg::number(secs, 2) << " s\n";
  return ok ? 0 : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact refined polytopes, angles and polygon equidecompositions"};
  app.require_subcommand(1);

  std::string scenario_file;
  auto* check = app.add_subcommand("check", "Run the assertions of a scenario file");
  check->add_option("scenario", scenario_file, "Scenario file")->required();

  std::string expr, context, emit;
  auto* op = app.add_subcommand("op", "Evaluate a polytope expression");
  op->add_option("expr", expr, "Expression, e.g. \"triangle (0,0) (2,0) (0,2) - triangle (0,0) (1,0) (0,1)\"")
      ->required();
  op->add_option("--scenario", context, "Scenario whose declarations are in scope");
  op->add_option("--emit", emit, "Write an SVG drawing");

  std::string poly_a, poly_b, emit_decomp;
  auto* wbg = app.add_subcommand("wbg", "Equidecompose two equal-area simple polygons");
  wbg->add_option("polyA", poly_a, "Vertex list \"(x,y) (x,y) ...\" or a file holding one")->required();
  wbg->add_option("polyB", poly_b, "Vertex list or file")->required();
  wbg->add_option("--emit", emit, "Write an SVG of the paired pieces");
  wbg->add_option("--emit-decomp", emit_decomp, "Write the decomposition file");

  std::string decomp_file;
  auto* verify = app.add_subcommand("verify", "Re-verify a decomposition file");
  verify->add_option("file", decomp_file, "Decomposition file")->required();

  std::uint64_t seed = 1;
  long iters = 20;
  auto* selftest = app.add_subcommand("selftest", "Randomized exact self-checks");
  selftest->add_option("--seed", seed, "Random seed");
  selftest->add_option("--iters", iters, "Iterations")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    if (*check) return cmd_check(scenario_file);
    if (*op) return cmd_op(expr, context, emit);
    if (*wbg) return cmd_wbg(poly_a, poly_b, emit, emit_decomp);
    if (*verify) return cmd_verify(decomp_file);
    if (*selftest) return cmd_selftest(seed, iters);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
