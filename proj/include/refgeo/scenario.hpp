#pragma once

// Scenario files: declarations of scalars, points, refined polytopes and
// refined angles, followed by exact assertions about them. Evaluated in the
// quadratic tower, so literals may contain sqrt(...).
//
//   scalar h = 3/2
//   point A = (0, 0)
//   point X = (1, 0) flag [(0, 1), (1, 0)]
//   polytope T = triangle A B (0, h)
//   polytope S = lift 1 in 1 { piece { halfspace x1 - 1 >= 0; halfspace 3 - x1 >= 0 } }
//   polytope U = (T | S2) - translate(T, (1, 0))
//   angle a at A between B - A C - A
//   angle t = tangent(T, A)
//   assert equals U T
//   assert partition [P1, P2] W
//   render "t.svg" T
//   wbg P Q "pq.svg"

#include <cctype>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "refgeo/angles.hpp"
#include "refgeo/scalar.hpp"
#include "refgeo/svg.hpp"
#include "refgeo/wbg.hpp"

namespace refgeo::scenario {

using S = Scalar;
using Vec = Vector<Scalar>;
using Functional = AffineFunctional<Scalar>;

struct Token {
  enum Kind { ident, number, string, punct, end };
  Kind kind = end;
  std::string text;
  int line = 0, col = 0;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) advance(1);
      t.kind = Token::ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) advance(1);
      t.kind = Token::number;
    } else if (c == '"') {
      advance(1);
      while (i < src.size() && src[i] != '"' && src[i] != '\n') advance(1);
      if (i >= src.size() || src[i] != '"') throw ParseError("unterminated string", t.line, t.col);
      advance(1);
      t.kind = Token::string;
      t.text = std::string(src.substr(start + 1, i - start - 2));
      out.push_back(t);
      continue;
    } else if (src.substr(i, 2) == ">=") {
      advance(2);
      t.kind = Token::punct;
    } else if (std::string_view("()[]{},=+-*/|&;>").find(c) != std::string_view::npos) {
      advance(1);
      t.kind = Token::punct;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    t.text = std::string(src.substr(start, i - start));
    out.push_back(t);
  }
  Token e;
  e.line = line;
  e.col = col;
  out.push_back(e);
  return out;
}

/// A vector as written: a point name (kept for printing) and its value.
struct VecRef {
  std::string name;
  Vec value;
  friend bool operator==(const VecRef&, const VecRef&) = default;
};

struct PExpr;
using PExprPtr = std::shared_ptr<const PExpr>;

struct PExpr {
  enum class Kind { ref, triangle, polygon, segment, lift, unite, intersect, minus, translate, halfturn };
  Kind kind = Kind::ref;
  std::string name;
  std::vector<VecRef> points;
  std::size_t rank = 0, dim = 0;
  std::vector<std::vector<Functional>> pieces;
  PExprPtr lhs, rhs;
};

inline bool same(const PExprPtr& a, const PExprPtr& b) {
  if (!a || !b) return !a && !b;
  return a->kind == b->kind && a->name == b->name && a->points == b->points && a->rank == b->rank &&
         a->dim == b->dim && a->pieces == b->pieces && same(a->lhs, b->lhs) && same(a->rhs, b->rhs);
}

struct AExpr;
using AExprPtr = std::shared_ptr<const AExpr>;

struct AExpr {
  enum class Kind { ref, between, halfplane, full, tangent, unite, intersect, minus, negate };
  Kind kind = Kind::ref;
  std::string name;
  std::vector<VecRef> vecs;  // between: v1, v2[, apex]; halfplane: normal; tangent: point
  std::size_t dim = 0;
  PExprPtr body;
  AExprPtr lhs, rhs;
};

inline bool same(const AExprPtr& a, const AExprPtr& b) {
  if (!a || !b) return !a && !b;
  return a->kind == b->kind && a->name == b->name && a->vecs == b->vecs && a->dim == b->dim &&
         same(a->body, b->body) && same(a->lhs, b->lhs) && same(a->rhs, b->rhs);
}

struct ScalarDecl {
  std::string name;
  S value;
};
struct PointDecl {
  std::string name;
  Vec position;
  std::vector<Vec> flag;
  bool refined = false;
};
struct PolytopeDecl {
  std::string name;
  PExprPtr expr;
};
struct AngleDecl {
  std::string name;
  AExprPtr expr;
};
struct Assertion {
  enum class Kind { equals, subset, disjoint, partition, empty, nonempty, contains, excludes, area, angle_equals,
                    angle_partition };
  Kind kind = Kind::equals;
  std::vector<PExprPtr> polys;  // partition: parts then whole
  std::vector<AExprPtr> angles;
  std::string point;
  S value;
};
struct Render {
  std::string file;
  std::vector<std::string> names;
};
struct Wbg {
  std::string first, second;
  std::string file;
};

using Node = std::variant<ScalarDecl, PointDecl, PolytopeDecl, AngleDecl, Assertion, Render, Wbg>;

struct Statement {
  Node node;
  int line = 0;
};

inline bool same(const Node& a, const Node& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, ScalarDecl>) {
          return x.name == y.name && x.value == y.value;
        } else if constexpr (std::is_same_v<T, PointDecl>) {
          return x.name == y.name && x.position == y.position && x.flag == y.flag && x.refined == y.refined;
        } else if constexpr (std::is_same_v<T, PolytopeDecl>) {
          return x.name == y.name && same(x.expr, y.expr);
        } else if constexpr (std::is_same_v<T, AngleDecl>) {
          return x.name == y.name && same(x.expr, y.expr);
        } else if constexpr (std::is_same_v<T, Assertion>) {
          if (x.kind != y.kind || x.point != y.point || !(x.value == y.value)) return false;
          if (x.polys.size() != y.polys.size() || x.angles.size() != y.angles.size()) return false;
          for (std::size_t i = 0; i < x.polys.size(); ++i)
            if (!same(x.polys[i], y.polys[i])) return false;
          for (std::size_t i = 0; i < x.angles.size(); ++i)
            if (!same(x.angles[i], y.angles[i])) return false;
          return true;
        } else if constexpr (std::is_same_v<T, Render>) {
          return x.file == y.file && x.names == y.names;
        } else {
          return x.first == y.first && x.second == y.second && x.file == y.file;
        }
      },
      a);
}

struct Scenario {
  std::vector<Statement> statements;

  /// Structural equality; source lines are ignored.
  friend bool operator==(const Scenario& a, const Scenario& b) {
    if (a.statements.size() != b.statements.size()) return false;
    for (std::size_t i = 0; i < a.statements.size(); ++i)
      if (!same(a.statements[i].node, b.statements[i].node)) return false;
    return true;
  }
};

// ---------------------------------------------------------------- parsing

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Scenario scenario() {
    Scenario s;
    while (peek().kind != Token::end) s.statements.push_back(statement());
    return s;
  }

  /// A lone polytope expression (for the command line), with optional
  /// declarations already in scope.
  PExprPtr standalone_polytope() {
    auto e = pexpr().expr;
    if (peek().kind != Token::end) fail("unexpected '" + peek().text + "' after expression");
    return e;
  }

  /// A vertex list such as "(0,0) (1,0) (0,1)"; commas between tuples optional.
  std::vector<Vec> standalone_points() {
    std::vector<Vec> out;
    while (peek().kind != Token::end) {
      out.push_back(vexpr().value);
      accept(",");
    }
    return out;
  }

  void preload(const Scenario& s) {
    for (const auto& st : s.statements) declare_from(st.node);
  }

 private:
  enum class Sym { scalar, point, polytope, angle };
  struct Info {
    Sym kind;
    std::size_t rank = 0, dim = 0;
    S scalar;
    Vec position;
    bool polygon = false;  // declared directly as a triangle or polygon
  };
  struct Typed {
    PExprPtr expr;
    std::size_t rank, dim;
  };
  struct TypedAngle {
    AExprPtr expr;
    std::size_t rank, dim;
  };

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, Info> syms_;

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool is(const std::string& text, std::size_t k = 0) const {
    const Token& t = peek(k);
    return (t.kind == Token::punct || t.kind == Token::ident) && t.text == text;
  }
  bool accept(const std::string& text) {
    if (!is(text)) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg, const Token& at) const { throw ParseError(msg, at.line, at.col); }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, peek()); }
  Token expect(const std::string& text) {
    if (!is(text)) fail("expected '" + text + "', found '" + describe(peek()) + "'");
    return next();
  }
  static std::string describe(const Token& t) { return t.kind == Token::end ? "end of input" : t.text; }

  Token name_token() {
    if (peek().kind != Token::ident) fail("expected a name, found '" + describe(peek()) + "'");
    return next();
  }

  void declare(const Token& t, Info info) {
    if (syms_.count(t.text)) fail("name '" + t.text + "' is already declared", t);
    syms_[t.text] = std::move(info);
  }

  const Info& lookup(const Token& t, Sym kind, const char* what) const {
    auto it = syms_.find(t.text);
    if (it == syms_.end()) fail("unknown name '" + t.text + "'", t);
    if (it->second.kind != kind) fail("'" + t.text + "' is not " + std::string(what), t);
    return it->second;
  }

  // Keeps the symbol table in step when declarations come from elsewhere.
  void declare_from(const Node& n) {
    Token t;
    if (auto* d = std::get_if<ScalarDecl>(&n)) {
      t.text = d->name;
      declare(t, {Sym::scalar, 0, 0, d->value, {}, false});
    } else if (auto* p = std::get_if<PointDecl>(&n)) {
      t.text = p->name;
      declare(t, {Sym::point, 0, p->position.size(), S(0), p->position, false});
    } else if (auto* q = std::get_if<PolytopeDecl>(&n)) {
      t.text = q->name;
      auto [r, d] = shape(q->expr);
      declare(t, {Sym::polytope, r, d, S(0), {}, is_polygonal(q->expr)});
    } else if (auto* a = std::get_if<AngleDecl>(&n)) {
      t.text = a->name;
      auto [r, d] = shape(a->expr);
      declare(t, {Sym::angle, r, d, S(0), {}, false});
    }
  }

  std::pair<std::size_t, std::size_t> shape(const PExprPtr& e) const {
    switch (e->kind) {
      case PExpr::Kind::ref: {
        const auto& i = syms_.at(e->name);
        return {i.rank, i.dim};
      }
      case PExpr::Kind::triangle:
      case PExpr::Kind::polygon:
        return {2, e->points.front().value.size()};
      case PExpr::Kind::segment:
        return {1, e->points.front().value.size()};
      case PExpr::Kind::lift:
        return {e->rank, e->dim};
      default:
        return shape(e->lhs);
    }
  }

  std::pair<std::size_t, std::size_t> shape(const AExprPtr& e) const {
    switch (e->kind) {
      case AExpr::Kind::ref: {
        const auto& i = syms_.at(e->name);
        return {i.rank, i.dim};
      }
      case AExpr::Kind::between:
        return {2, 2};
      case AExpr::Kind::halfplane:
      case AExpr::Kind::full:
        return {e->dim, e->dim};
      case AExpr::Kind::tangent:
        return shape(e->body);
      case AExpr::Kind::negate:
        return shape(e->lhs);
      default:
        return shape(e->lhs);
    }
  }

  bool is_polygonal(const PExprPtr& e) const {
    if (e->kind == PExpr::Kind::triangle || e->kind == PExpr::Kind::polygon) return true;
    if (e->kind == PExpr::Kind::ref) return syms_.at(e->name).polygon;
    return false;
  }

  // --- scalars

  S sexpr() {
    S v = sterm();
    for (;;) {
      if (accept("+"))
        v = v + sterm();
      else if (accept("-"))
        v = v - sterm();
      else
        return v;
    }
  }

  S sterm() {
    S v = sfactor();
    for (;;) {
      if (accept("*")) {
        v = v * sfactor();
      } else if (is("/")) {
        Token op = next();
        S d = sfactor();
        if (d.is_zero()) fail("division by zero", op);
        v = v / d;
      } else {
        return v;
      }
    }
  }

  S sfactor() {
    if (accept("-")) return -sfactor();
    if (accept("+")) return sfactor();
    const Token& t = peek();
    if (t.kind == Token::number) {
      next();
      return S(Rational::parse(t.text));
    }
    if (accept("(")) {
      S v = sexpr();
      expect(")");
      return v;
    }
    if (t.kind == Token::ident && t.text == "sqrt") {
      next();
      expect("(");
      Token at = peek();
      S v = sexpr();
      expect(")");
      if (v.sign() < 0) fail("square root of a negative number", at);
      return S::sqrt(v);
    }
    if (t.kind == Token::ident) {
      next();
      return lookup(t, Sym::scalar, "a scalar").scalar;
    }
    fail("expected a number, found '" + describe(t) + "'");
  }

  // --- vectors

  bool starts_vector(std::size_t k = 0) const {
    if (is("(", k)) return true;
    const Token& t = peek(k);
    if (t.kind != Token::ident) return false;
    auto it = syms_.find(t.text);
    return it != syms_.end() && it->second.kind == Sym::point;
  }

  Vec tuple() {
    Token open = expect("(");
    std::vector<S> cs{sexpr()};
    while (accept(",")) cs.push_back(sexpr());
    expect(")");
    (void)open;
    return Vec(cs);
  }

  Vec vprimary(std::string* name) {
    if (is("(")) return tuple();
    Token t = name_token();
    if (name) *name = t.text;
    return lookup(t, Sym::point, "a point").position;
  }

  VecRef vexpr() {
    Token start = peek();
    bool negate = accept("-");
    std::string name;
    Vec v = vprimary(&name);
    bool compound = negate;
    if (negate) v = -v;
    for (;;) {
      int s = is("+") ? 1 : is("-") ? -1 : 0;
      // "... (0,2) - triangle ..." is a polytope difference, not vector arithmetic.
      if (!s || !starts_vector(1)) break;
      Token op = next();
      Vec w = vprimary(nullptr);
      if (w.size() != v.size()) fail("vectors of different dimensions", op);
      v = s > 0 ? v + w : v - w;
      compound = true;
    }
    return {compound ? "" : name, v};
  }

  // --- functionals

  int variable(const Token& t) const {
    if (t.kind != Token::ident || syms_.count(t.text)) return -1;
    if (t.text == "x") return 0;
    if (t.text == "y") return 1;
    if (t.text == "z") return 2;
    if (t.text.size() > 1 && t.text[0] == 'x' &&
        std::all_of(t.text.begin() + 1, t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      int k = std::stoi(t.text.substr(1));
      return k >= 1 ? k - 1 : -2;
    }
    return -1;
  }

  // One factor of a term: a variable or a scalar factor.
  void term_factor(std::size_t dim, S& coef, int& var) {
    Token t = peek();
    int v = variable(t);
    if (v == -2 || v >= static_cast<int>(dim))
      fail("variable '" + t.text + "' outside dimension " + std::to_string(dim), t);
    if (v < 0) {
      coef = coef * sfactor();
      return;
    }
    if (var >= 0) fail("nonlinear term", t);
    next();
    var = v;
  }

  // Sum of terms such as 2*x1, -x2, 1/2 x, sqrt(2)*y, 3.
  Functional functional(std::size_t dim) {
    Functional f(Vec(dim), S(0));
    bool first = true;
    for (;;) {
      S coef(1);
      if (accept("-"))
        coef = S(-1);
      else if (!accept("+") && !first)
        break;
      first = false;
      int var = -1;
      term_factor(dim, coef, var);
      for (;;) {
        if (accept("*")) {
          term_factor(dim, coef, var);
        } else if (is("/")) {
          Token op = next();
          S d = sfactor();
          if (d.is_zero()) fail("division by zero", op);
          coef = coef / d;
        } else if (variable(peek()) != -1) {
          term_factor(dim, coef, var);
        } else {
          break;
        }
      }
      if (var >= 0)
        f.linear[var] = f.linear[var] + coef;
      else
        f.constant = f.constant + coef;
    }
    return f;
  }

  // --- polytopes

  Typed pexpr() {
    Typed l = pterm();
    for (;;) {
      PExpr::Kind k;
      if (is("|"))
        k = PExpr::Kind::unite;
      else if (is("-"))
        k = PExpr::Kind::minus;
      else
        return l;
      Token op = next();
      Typed r = pterm();
      l = combine(k, l, r, op);
    }
  }

  Typed pterm() {
    Typed l = pprimary();
    while (is("&")) {
      Token op = next();
      Typed r = pprimary();
      l = combine(PExpr::Kind::intersect, l, r, op);
    }
    return l;
  }

  Typed combine(PExpr::Kind k, const Typed& l, const Typed& r, const Token& op) {
    if (l.rank != r.rank || l.dim != r.dim)
      fail("rank mismatch: rank " + std::to_string(l.rank) + " in " + std::to_string(l.dim) + "D vs rank " +
               std::to_string(r.rank) + " in " + std::to_string(r.dim) + "D",
           op);
    auto e = std::make_shared<PExpr>();
    e->kind = k;
    e->lhs = l.expr;
    e->rhs = r.expr;
    return {e, l.rank, l.dim};
  }

  Typed pprimary() {
    Token t = peek();
    auto e = std::make_shared<PExpr>();
    if (accept("(")) {
      Typed inner = pexpr();
      expect(")");
      return inner;
    }
    if (t.kind != Token::ident) fail("expected a polytope, found '" + describe(t) + "'");
    if (t.text == "triangle" || t.text == "segment" || t.text == "polygon") {
      next();
      e->kind = t.text == "triangle" ? PExpr::Kind::triangle
                : t.text == "segment" ? PExpr::Kind::segment
                                      : PExpr::Kind::polygon;
      std::size_t need = e->kind == PExpr::Kind::triangle ? 3 : e->kind == PExpr::Kind::segment ? 2 : 0;
      while ((need == 0 || e->points.size() < need) && starts_vector()) e->points.push_back(vexpr());
      bool short_of_points = need ? e->points.size() != need : e->points.size() < 3;
      if (short_of_points && peek().kind == Token::ident && !syms_.count(peek().text))
        fail("unknown name '" + peek().text + "'");
      if (need && e->points.size() != need) fail(t.text + " needs " + std::to_string(need) + " points");
      if (!need && e->points.size() < 3) fail("polygon needs at least 3 points");
      std::size_t d = e->points.front().value.size();
      for (const auto& p : e->points)
        if (p.value.size() != d) fail("points of different dimensions in " + t.text, t);
      if (e->kind != PExpr::Kind::segment && d != 2) fail(t.text + " must be planar", t);
      std::vector<Vec> pts;
      for (const auto& p : e->points) pts.push_back(p.value);
      if (e->kind == PExpr::Kind::segment && pts[0] == pts[1]) fail("degenerate segment", t);
      if (e->kind != PExpr::Kind::segment) {
        if (!is_simple(pts) || is_zero(signed_area(pts))) fail("polygon is not simple", t);
      }
      return {e, e->kind == PExpr::Kind::segment ? 1u : 2u, d};
    }
    if (t.text == "lift") {
      next();
      Token rk = peek();
      if (rk.kind != Token::number) fail("expected the rank after 'lift'");
      next();
      expect("in");
      Token dm = peek();
      if (dm.kind != Token::number) fail("expected the dimension after 'in'");
      next();
      e->kind = PExpr::Kind::lift;
      e->rank = std::stoul(rk.text);
      e->dim = std::stoul(dm.text);
      if (e->dim == 0 || e->rank > e->dim) fail("rank must be at most the dimension", rk);
      expect("{");
      while (accept("piece")) {
        expect("{");
        std::vector<Functional> fs;
        while (accept("halfspace")) {
          Token at = peek();
          Functional f = functional(e->dim);
          if (!accept(">=") && !accept(">")) fail("expected '>= 0'");
          Token zero = peek();
          if (zero.kind != Token::number || zero.text != "0") fail("expected '0'", zero);
          next();
          if (!f.is_regular()) fail("constraint has no variable part", at);
          fs.push_back(f);
          accept(";");
        }
        expect("}");
        e->pieces.push_back(fs);
      }
      expect("}");
      // Validate purity now so that mistakes carry a location.
      try {
        ConventionalPolytope<S> c{e->rank, e->dim, {}};
        for (const auto& fs : e->pieces) c.pieces.push_back({Carrier<S>::whole(e->dim), fs});
        (void)lift(c);
      } catch (const ImpurePolytope& err) {
        fail(std::string("rank mismatch: ") + err.what(), rk);
      }
      return {e, e->rank, e->dim};
    }
    if (t.text == "translate" || t.text == "halfturn") {
      next();
      expect("(");
      Typed inner = pexpr();
      Token comma = expect(",");
      VecRef v = vexpr();
      expect(")");
      if (v.value.size() != inner.dim) fail("vector dimension differs from the polytope's", comma);
      if (t.text == "halfturn" && inner.dim != 2) fail("halfturn is planar", t);
      e->kind = t.text == "translate" ? PExpr::Kind::translate : PExpr::Kind::halfturn;
      e->lhs = inner.expr;
      e->points = {v};
      return {e, inner.rank, inner.dim};
    }
    next();
    const Info& info = lookup(t, Sym::polytope, "a polytope");
    e->kind = PExpr::Kind::ref;
    e->name = t.text;
    return {e, info.rank, info.dim};
  }

  // --- angles

  TypedAngle aexpr() {
    TypedAngle l = aterm();
    for (;;) {
      AExpr::Kind k;
      if (is("|"))
        k = AExpr::Kind::unite;
      else if (is("-"))
        k = AExpr::Kind::minus;
      else
        return l;
      Token op = next();
      l = acombine(k, l, aterm(), op);
    }
  }

  TypedAngle aterm() {
    TypedAngle l = aprimary();
    while (is("&")) {
      Token op = next();
      l = acombine(AExpr::Kind::intersect, l, aprimary(), op);
    }
    return l;
  }

  TypedAngle acombine(AExpr::Kind k, const TypedAngle& l, const TypedAngle& r, const Token& op) {
    if (l.rank != r.rank || l.dim != r.dim) fail("rank mismatch between angles", op);
    auto e = std::make_shared<AExpr>();
    e->kind = k;
    e->lhs = l.expr;
    e->rhs = r.expr;
    return {e, l.rank, l.dim};
  }

  TypedAngle between_tail(std::optional<VecRef> apex) {
    auto e = std::make_shared<AExpr>();
    e->kind = AExpr::Kind::between;
    Token at = peek();
    VecRef v1 = vexpr(), v2 = vexpr();
    if (v1.value.size() != 2 || v2.value.size() != 2) fail("angle sides must be planar", at);
    if (is_zero(cross(v1.value, v2.value))) fail("angle sides are parallel", at);
    e->vecs = {v1, v2};
    if (!apex && accept("at")) apex = vexpr();
    if (apex) e->vecs.push_back(*apex);
    return {e, 2, 2};
  }

  TypedAngle aprimary() {
    Token t = peek();
    auto e = std::make_shared<AExpr>();
    if (accept("(")) {
      TypedAngle inner = aexpr();
      expect(")");
      return inner;
    }
    if (t.kind != Token::ident) fail("expected an angle, found '" + describe(t) + "'");
    if (accept("between")) return between_tail(std::nullopt);
    if (accept("halfplane")) {
      e->kind = AExpr::Kind::halfplane;
      VecRef v = vexpr();
      if (v.value.is_zero()) fail("zero normal", t);
      e->vecs = {v};
      e->dim = v.value.size();
      return {e, e->dim, e->dim};
    }
    if (accept("full")) {
      Token d = peek();
      if (d.kind != Token::number) fail("expected the dimension after 'full'");
      next();
      e->kind = AExpr::Kind::full;
      e->dim = std::stoul(d.text);
      if (e->dim == 0) fail("dimension must be positive", d);
      return {e, e->dim, e->dim};
    }
    if (accept("tangent")) {
      expect("(");
      Typed p = pexpr();
      Token comma = expect(",");
      VecRef x = vexpr();
      expect(")");
      if (x.value.size() != p.dim) fail("point dimension differs from the polytope's", comma);
      e->kind = AExpr::Kind::tangent;
      e->body = p.expr;
      e->vecs = {x};
      return {e, p.rank, p.dim};
    }
    if (accept("negate")) {
      expect("(");
      TypedAngle inner = aexpr();
      expect(")");
      e->kind = AExpr::Kind::negate;
      e->lhs = inner.expr;
      return {e, inner.rank, inner.dim};
    }
    next();
    const Info& info = lookup(t, Sym::angle, "an angle");
    e->kind = AExpr::Kind::ref;
    e->name = t.text;
    return {e, info.rank, info.dim};
  }

  // --- statements

  Statement statement() {
    Token kw = peek();
    if (kw.kind != Token::ident) fail("expected a statement, found '" + describe(kw) + "'");
    next();
    Statement st;
    st.line = kw.line;
    if (kw.text == "scalar") {
      Token n = name_token();
      expect("=");
      ScalarDecl d{n.text, sexpr()};
      declare(n, {Sym::scalar, 0, 0, d.value, {}, false});
      st.node = d;
    } else if (kw.text == "point") {
      Token n = name_token();
      expect("=");
      PointDecl d;
      d.name = n.text;
      d.position = vexpr().value;
      if (accept("flag")) {
        d.refined = true;
        Token open = expect("[");
        if (!is("]")) {
          d.flag.push_back(vexpr().value);
          while (accept(",")) d.flag.push_back(vexpr().value);
        }
        expect("]");
        for (const auto& v : d.flag)
          if (v.size() != d.position.size()) fail("flag vector dimension differs from the point's", open);
        if (rank(d.flag) != d.flag.size()) fail("flag vectors are dependent", open);
      }
      declare(n, {Sym::point, 0, d.position.size(), S(0), d.position, false});
      st.node = d;
    } else if (kw.text == "polytope") {
      Token n = name_token();
      expect("=");
      Typed e = pexpr();
      declare(n, {Sym::polytope, e.rank, e.dim, S(0), {}, is_polygonal(e.expr)});
      st.node = PolytopeDecl{n.text, e.expr};
    } else if (kw.text == "angle") {
      Token n = name_token();
      TypedAngle e;
      if (accept("at")) {
        VecRef apex = vexpr();
        expect("between");
        e = between_tail(apex);
      } else {
        expect("=");
        e = aexpr();
      }
      declare(n, {Sym::angle, e.rank, e.dim, S(0), {}, false});
      st.node = AngleDecl{n.text, e.expr};
    } else if (kw.text == "assert") {
      st.node = assertion();
    } else if (kw.text == "render") {
      Token f = next();
      if (f.kind != Token::string) fail("expected a quoted file name", f);
      Render r{f.text, {}};
      while (peek().kind == Token::ident && syms_.count(peek().text) && syms_.at(peek().text).kind == Sym::polytope) {
        Token n = next();
        if (syms_.at(n.text).dim != 2) fail("only planar polytopes can be drawn", n);
        r.names.push_back(n.text);
      }
      st.node = r;
    } else if (kw.text == "wbg") {
      Wbg w;
      for (std::string* slot : {&w.first, &w.second}) {
        Token n = name_token();
        const Info& i = lookup(n, Sym::polytope, "a polytope");
        if (!i.polygon) fail("'" + n.text + "' is not declared as a triangle or polygon", n);
        *slot = n.text;
      }
      if (peek().kind == Token::string) w.file = next().text;
      st.node = w;
    } else {
      fail("unknown statement '" + kw.text + "'", kw);
    }
    accept(";");
    return st;
  }

  Assertion assertion() {
    Token k = name_token();
    Assertion a;
    using K = Assertion::Kind;
    static const std::map<std::string, K> kinds{
        {"equals", K::equals},         {"subset", K::subset},     {"disjoint", K::disjoint},
        {"partition", K::partition},   {"empty", K::empty},       {"nonempty", K::nonempty},
        {"contains", K::contains},     {"excludes", K::excludes}, {"area", K::area},
        {"angle_equals", K::angle_equals}, {"angle_partition", K::angle_partition}};
    auto it = kinds.find(k.text);
    if (it == kinds.end()) fail("unknown assertion '" + k.text + "'", k);
    a.kind = it->second;
    auto pair_of = [&] {
      Typed x = pexpr();
      Token at = peek();
      Typed y = pexpr();
      if (x.rank != y.rank || x.dim != y.dim) fail("rank mismatch between the two sides", at);
      a.polys = {x.expr, y.expr};
    };
    switch (a.kind) {
      case K::equals:
      case K::subset:
      case K::disjoint:
        pair_of();
        break;
      case K::partition: {
        expect("[");
        std::vector<Typed> parts;
        if (!is("]")) {
          parts.push_back(pexpr());
          while (accept(",")) parts.push_back(pexpr());
        }
        expect("]");
        Token at = peek();
        Typed whole = pexpr();
        for (const auto& p : parts) {
          if (p.rank != whole.rank || p.dim != whole.dim) fail("rank mismatch between a part and the whole", at);
          a.polys.push_back(p.expr);
        }
        a.polys.push_back(whole.expr);
        break;
      }
      case K::empty:
      case K::nonempty:
        a.polys = {pexpr().expr};
        break;
      case K::contains:
      case K::excludes: {
        Typed p = pexpr();
        Token n = name_token();
        auto itp = syms_.find(n.text);
        if (itp == syms_.end()) fail("unknown name '" + n.text + "'", n);
        if (itp->second.kind != Sym::point) fail("'" + n.text + "' is not a point", n);
        if (itp->second.dim != p.dim) fail("point dimension differs from the polytope's", n);
        a.polys = {p.expr};
        a.point = n.text;
        break;
      }
      case K::area: {
        Typed p = pexpr();
        if (p.rank != 2 || p.dim != 2) fail("area needs a planar rank-2 polytope", k);
        expect("=");
        a.polys = {p.expr};
        a.value = sexpr();
        break;
      }
      case K::angle_equals: {
        TypedAngle x = aexpr();
        Token at = peek();
        TypedAngle y = aexpr();
        if (x.rank != y.rank || x.dim != y.dim) fail("rank mismatch between the two angles", at);
        a.angles = {x.expr, y.expr};
        break;
      }
      case K::angle_partition: {
        expect("[");
        std::vector<TypedAngle> parts;
        if (!is("]")) {
          parts.push_back(aexpr());
          while (accept(",")) parts.push_back(aexpr());
        }
        expect("]");
        Token at = peek();
        TypedAngle whole = aexpr();
        for (const auto& p : parts) {
          if (p.rank != whole.rank || p.dim != whole.dim) fail("rank mismatch between an angle and the whole", at);
          a.angles.push_back(p.expr);
        }
        a.angles.push_back(whole.expr);
        break;
      }
    }
    return a;
  }

  friend Scenario parse_scenario(std::string_view);
};

inline Scenario parse_scenario(std::string_view text) { return Parser(text).scenario(); }

// ---------------------------------------------------------------- printing

inline std::string print(const Vec& v) { return v.str(); }

inline std::string print(const VecRef& v) { return v.name.empty() ? print(v.value) : v.name; }

inline std::string print(const Functional& f) {
  std::string s;
  auto term = [&](const S& c, const std::string& var) {
    if (c.is_zero()) return;
    bool neg = c.is_rational() && c.sign() < 0;
    S mag = neg ? -c : c;
    std::string text;
    if (!mag.is_rational())
      text = "(" + mag.str() + ")" + (var.empty() ? "" : "*" + var);
    else if (var.empty())
      text = mag.str();
    else
      text = mag == S(1) ? var : mag.str() + "*" + var;
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    s += text;
  };
  for (std::size_t i = 0; i < f.linear.size(); ++i) term(f.linear[i], "x" + std::to_string(i + 1));
  term(f.constant, "");
  return s.empty() ? "0" : s;
}

inline std::string print(const PExprPtr& e);

inline std::string operand(const PExprPtr& e) {
  bool binary = e->kind == PExpr::Kind::unite || e->kind == PExpr::Kind::intersect || e->kind == PExpr::Kind::minus;
  bool open = e->kind == PExpr::Kind::triangle || e->kind == PExpr::Kind::polygon || e->kind == PExpr::Kind::segment;
  return binary || open ? "(" + print(e) + ")" : print(e);
}

inline std::string print(const PExprPtr& e) {
  switch (e->kind) {
    case PExpr::Kind::ref:
      return e->name;
    case PExpr::Kind::triangle:
    case PExpr::Kind::polygon:
    case PExpr::Kind::segment: {
      std::string s = e->kind == PExpr::Kind::triangle ? "triangle" : e->kind == PExpr::Kind::polygon ? "polygon" : "segment";
      for (const auto& p : e->points) s += " " + print(p);
      return s;
    }
    case PExpr::Kind::lift: {
      std::string s = "lift " + std::to_string(e->rank) + " in " + std::to_string(e->dim) + " {";
      for (const auto& piece : e->pieces) {
        s += " piece {";
        for (std::size_t i = 0; i < piece.size(); ++i) s += (i ? "; " : " ") + std::string("halfspace ") + print(piece[i]) + " >= 0";
        s += " }";
      }
      return s + " }";
    }
    case PExpr::Kind::unite:
      return operand(e->lhs) + " | " + operand(e->rhs);
    case PExpr::Kind::intersect:
      return operand(e->lhs) + " & " + operand(e->rhs);
    case PExpr::Kind::minus:
      return operand(e->lhs) + " - " + operand(e->rhs);
    case PExpr::Kind::translate:
      return "translate(" + print(e->lhs) + ", " + print(e->points.front()) + ")";
    case PExpr::Kind::halfturn:
      return "halfturn(" + print(e->lhs) + ", " + print(e->points.front()) + ")";
  }
  return "";
}

inline std::string print(const AExprPtr& e);

inline std::string operand(const AExprPtr& e) {
  bool wrap = e->kind == AExpr::Kind::unite || e->kind == AExpr::Kind::intersect || e->kind == AExpr::Kind::minus ||
              e->kind == AExpr::Kind::between || e->kind == AExpr::Kind::halfplane;
  return wrap ? "(" + print(e) + ")" : print(e);
}

inline std::string print(const AExprPtr& e) {
  switch (e->kind) {
    case AExpr::Kind::ref:
      return e->name;
    case AExpr::Kind::between: {
      std::string s = "between " + print(e->vecs[0]) + " " + print(e->vecs[1]);
      if (e->vecs.size() > 2) s += " at " + print(e->vecs[2]);
      return s;
    }
    case AExpr::Kind::halfplane:
      return "halfplane " + print(e->vecs[0]);
    case AExpr::Kind::full:
      return "full " + std::to_string(e->dim);
    case AExpr::Kind::tangent:
      return "tangent(" + print(e->body) + ", " + print(e->vecs[0]) + ")";
    case AExpr::Kind::negate:
      return "negate(" + print(e->lhs) + ")";
    case AExpr::Kind::unite:
      return operand(e->lhs) + " | " + operand(e->rhs);
    case AExpr::Kind::intersect:
      return operand(e->lhs) + " & " + operand(e->rhs);
    case AExpr::Kind::minus:
      return operand(e->lhs) + " - " + operand(e->rhs);
  }
  return "";
}

inline std::string print(const Node& n) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ScalarDecl>) {
          return "scalar " + x.name + " = " + x.value.str();
        } else if constexpr (std::is_same_v<T, PointDecl>) {
          std::string s = "point " + x.name + " = " + print(x.position);
          if (x.refined) {
            s += " flag [";
            for (std::size_t i = 0; i < x.flag.size(); ++i) s += (i ? ", " : "") + print(x.flag[i]);
            s += "]";
          }
          return s;
        } else if constexpr (std::is_same_v<T, PolytopeDecl>) {
          return "polytope " + x.name + " = " + print(x.expr);
        } else if constexpr (std::is_same_v<T, AngleDecl>) {
          return "angle " + x.name + " = " + print(x.expr);
        } else if constexpr (std::is_same_v<T, Assertion>) {
          using K = Assertion::Kind;
          auto list = [](const auto& xs, std::size_t n) {
            std::string s = "[";
            for (std::size_t i = 0; i < n; ++i) s += (i ? ", " : "") + print(xs[i]);
            return s + "]";
          };
          switch (x.kind) {
            case K::equals:
              return "assert equals " + operand(x.polys[0]) + " " + operand(x.polys[1]);
            case K::subset:
              return "assert subset " + operand(x.polys[0]) + " " + operand(x.polys[1]);
            case K::disjoint:
              return "assert disjoint " + operand(x.polys[0]) + " " + operand(x.polys[1]);
            case K::partition:
              return "assert partition " + list(x.polys, x.polys.size() - 1) + " " + operand(x.polys.back());
            case K::empty:
              return "assert empty " + operand(x.polys[0]);
            case K::nonempty:
              return "assert nonempty " + operand(x.polys[0]);
            case K::contains:
              return "assert contains " + operand(x.polys[0]) + " " + x.point;
            case K::excludes:
              return "assert excludes " + operand(x.polys[0]) + " " + x.point;
            case K::area:
              return "assert area " + operand(x.polys[0]) + " = " + x.value.str();
            case K::angle_equals:
              return "assert angle_equals " + operand(x.angles[0]) + " " + operand(x.angles[1]);
            case K::angle_partition:
              return "assert angle_partition " + list(x.angles, x.angles.size() - 1) + " " + operand(x.angles.back());
          }
          return "";
        } else if constexpr (std::is_same_v<T, Render>) {
          std::string s = "render \"" + x.file + "\"";
          for (const auto& n : x.names) s += " " + n;
          return s;
        } else {
          std::string s = "wbg " + x.first + " " + x.second;
          if (!x.file.empty()) s += " \"" + x.file + "\"";
          return s;
        }
      },
      n);
}

inline std::string print(const Scenario& s) {
  std::string out;
  for (const auto& st : s.statements) out += print(st.node) + "\n";
  return out;
}

// ---------------------------------------------------------------- running

struct Outcome {
  int line = 0;
  std::string statement;
  bool ok = true;
  std::string detail;
};

struct Report {
  std::vector<Outcome> outcomes;

  bool ok() const {
    return std::all_of(outcomes.begin(), outcomes.end(), [](const Outcome& o) { return o.ok; });
  }

  std::string str() const {
    std::string s;
    std::size_t passed = 0;
    for (const auto& o : outcomes) {
      passed += o.ok;
      s += std::string(o.ok ? "PASS" : "FAIL") + " line " + std::to_string(o.line) + ": " + o.statement;
      if (!o.detail.empty()) s += "\n     " + o.detail;
      s += "\n";
    }
    return s + std::to_string(passed) + "/" + std::to_string(outcomes.size()) + " checks passed\n";
  }
};

struct RunOptions {
  /// Directory for render and wbg outputs; empty disables writing files.
  std::string output_dir;
};

class Runner {
 public:
  explicit Runner(RunOptions opts = {}) : opts_(std::move(opts)) {}

  Report run(const Scenario& s) {
    Report rep;
    for (const auto& st : s.statements) step(st, rep);
    return rep;
  }

  void step(const Statement& st, Report& rep) {
    std::visit([&](const auto& x) { exec(x, st.line, rep); }, st.node);
  }

  RefinedPolytope<S> eval(const PExprPtr& e) const {
    switch (e->kind) {
      case PExpr::Kind::ref:
        return polys_.at(e->name);
      case PExpr::Kind::triangle:
      case PExpr::Kind::polygon:
        return polygon_polytope(make_ccw(vertices(e)));
      case PExpr::Kind::segment:
        return segment_polytope(e->points[0].value, e->points[1].value);
      case PExpr::Kind::lift: {
        ConventionalPolytope<S> c{e->rank, e->dim, {}};
        for (const auto& fs : e->pieces) c.pieces.push_back({Carrier<S>::whole(e->dim), fs});
        return lift(c);
      }
      case PExpr::Kind::unite:
        return unite(eval(e->lhs), eval(e->rhs));
      case PExpr::Kind::intersect:
        return intersect(eval(e->lhs), eval(e->rhs));
      case PExpr::Kind::minus:
        return difference(eval(e->lhs), eval(e->rhs));
      case PExpr::Kind::translate:
        return transform(Motion<S>::translate(e->points[0].value), eval(e->lhs));
      case PExpr::Kind::halfturn:
        return transform(Motion<S>::half_turn(e->points[0].value), eval(e->lhs));
    }
    throw Error("bad expression");
  }

  RefinedAngle<S> eval(const AExprPtr& e) const {
    switch (e->kind) {
      case AExpr::Kind::ref:
        return angles_.at(e->name);
      case AExpr::Kind::between:
        return RefinedAngle<S>::between(e->vecs[0].value, e->vecs[1].value);
      case AExpr::Kind::halfplane:
        return RefinedAngle<S>::halfplane(e->vecs[0].value);
      case AExpr::Kind::full:
        return RefinedAngle<S>::full(e->dim);
      case AExpr::Kind::tangent:
        return tangent_angle(eval(e->body), e->vecs[0].value).angle;
      case AExpr::Kind::negate:
        return eval(e->lhs).negated();
      case AExpr::Kind::unite:
        return eval(e->lhs).unite(eval(e->rhs));
      case AExpr::Kind::intersect:
        return eval(e->lhs).intersect(eval(e->rhs));
      case AExpr::Kind::minus:
        return eval(e->lhs).difference(eval(e->rhs));
    }
    throw Error("bad angle expression");
  }

  const std::map<std::string, RefinedPolytope<S>>& polytopes() const { return polys_; }

 private:
  RunOptions opts_;
  std::map<std::string, RefinedPolytope<S>> polys_;
  std::map<std::string, RefinedAngle<S>> angles_;
  std::map<std::string, RefinedPoint<S>> points_;
  std::map<std::string, Polygon<S>> polygons_;

  Polygon<S> vertices(const PExprPtr& e) const {
    if (e->kind == PExpr::Kind::ref) return polygons_.at(e->name);
    Polygon<S> out;
    for (const auto& p : e->points) out.push_back(p.value);
    return out;
  }

  std::string path(const std::string& file) const {
    std::filesystem::path p(file);
    if (p.is_absolute() || opts_.output_dir.empty()) return p.string();
    return (std::filesystem::path(opts_.output_dir) / p).string();
  }

  void exec(const ScalarDecl&, int, Report&) {}

  void exec(const PointDecl& d, int, Report&) {
    if (d.refined) points_[d.name] = RefinedPoint<S>(d.position, Flag<S>(d.position.size(), d.flag));
  }

  void exec(const PolytopeDecl& d, int, Report&) {
    polys_[d.name] = eval(d.expr);
    if (d.expr->kind == PExpr::Kind::triangle || d.expr->kind == PExpr::Kind::polygon ||
        (d.expr->kind == PExpr::Kind::ref && polygons_.count(d.expr->name)))
      polygons_[d.name] = vertices(d.expr);
  }

  void exec(const AngleDecl& d, int, Report&) { angles_[d.name] = eval(d.expr); }

  static std::string where(const std::optional<RefinedPoint<S>>& w, const std::string& prefix) {
    return w ? prefix + w->str() : "";
  }

  void exec(const Assertion& a, int line, Report& rep) {
    using K = Assertion::Kind;
    Outcome o{line, print(Node(a)), true, ""};
    try {
      switch (a.kind) {
        case K::equals: {
          auto x = eval(a.polys[0]), y = eval(a.polys[1]);
          if (auto w = equality_witness(x, y)) {
            o.ok = false;
            o.detail = std::string("refined point in ") + (x.contains(*w) ? "the first only: " : "the second only: ") + w->str();
          }
          break;
        }
        case K::subset: {
          if (auto w = subset_witness(eval(a.polys[0]), eval(a.polys[1]))) {
            o.ok = false;
            o.detail = "refined point of the first outside the second: " + w->str();
          }
          break;
        }
        case K::disjoint: {
          if (auto w = intersect(eval(a.polys[0]), eval(a.polys[1])).witness()) {
            o.ok = false;
            o.detail = "common refined point: " + w->str();
          }
          break;
        }
        case K::partition: {
          std::vector<RefinedPolytope<S>> parts;
          for (std::size_t i = 0; i + 1 < a.polys.size(); ++i) parts.push_back(eval(a.polys[i]));
          auto r = partition_report(parts, eval(a.polys.back()));
          if (!r.ok) {
            o.ok = false;
            o.detail = r.message + where(r.witness, "; witness ");
          }
          break;
        }
        case K::empty:
        case K::nonempty: {
          auto w = eval(a.polys[0]).witness();
          o.ok = (a.kind == K::empty) != w.has_value();
          if (!o.ok) o.detail = w ? "contains " + w->str() : "is empty";
          break;
        }
        case K::contains:
        case K::excludes: {
          auto it = points_.find(a.point);
          if (it == points_.end()) {
            o.ok = false;
            o.detail = "'" + a.point + "' has no flag";
            break;
          }
          bool in = eval(a.polys[0]).contains(it->second);
          o.ok = in == (a.kind == K::contains);
          if (!o.ok) o.detail = it->second.str() + (in ? " is inside" : " is outside");
          break;
        }
        case K::area: {
          S got = area(eval(a.polys[0]));
          if (got != a.value) {
            o.ok = false;
            o.detail = "area is " + got.str() + ", gap " + (got - a.value).str();
          }
          break;
        }
        case K::angle_equals: {
          if (auto w = angle_equality_witness(eval(a.angles[0]), eval(a.angles[1]))) {
            o.ok = false;
            o.detail = "flag in exactly one angle: " + w->str();
          }
          break;
        }
        case K::angle_partition: {
          std::vector<RefinedPolytope<S>> parts;
          for (std::size_t i = 0; i + 1 < a.angles.size(); ++i) parts.push_back(eval(a.angles[i]).body());
          auto r = partition_report(parts, eval(a.angles.back()).body());
          if (!r.ok) {
            o.ok = false;
            o.detail = r.message + where(r.witness, "; witness ");
          }
          break;
        }
      }
    } catch (const Error& e) {
      o.ok = false;
      o.detail = e.what();
    }
    rep.outcomes.push_back(o);
  }

  void exec(const Render& r, int line, Report& rep) {
    Outcome o{line, print(Node(r)), true, ""};
    if (opts_.output_dir.empty()) {
      o.detail = "not written (no output directory)";
      rep.outcomes.push_back(o);
      return;
    }
    try {
      std::vector<svg::Layer<S>> layers;
      for (std::size_t i = 0; i < r.names.size(); ++i)
        layers.push_back({polys_.at(r.names[i]), svg::palette(i), r.names[i]});
      std::string p = path(r.file);
      svg::write_file(p, svg::render(layers));
      o.detail = "wrote " + p;
    } catch (const Error& e) {
      o.ok = false;
      o.detail = e.what();
    }
    rep.outcomes.push_back(o);
  }

  void exec(const Wbg& w, int line, Report& rep) {
    Outcome o{line, print(Node(w)), true, ""};
    try {
      const auto& p = polygons_.at(w.first);
      const auto& q = polygons_.at(w.second);
      auto d = equidecompose(p, q);
      auto v = verify_decomposition(d, p, q);
      o.ok = v.ok();
      o.detail = std::to_string(d.size()) + " pieces";
      if (!o.ok) o.detail += "\n" + v.str();
      if (!w.file.empty() && !opts_.output_dir.empty()) {
        std::string path_out = path(w.file);
        svg::write_file(path_out, svg::render_decomposition(d));
        o.detail += ", wrote " + path_out;
      }
    } catch (const AreaMismatch& e) {
      o.ok = false;
      o.detail = std::string(e.what());
    } catch (const Error& e) {
      o.ok = false;
      o.detail = e.what();
    }
    rep.outcomes.push_back(o);
  }
};

inline Report run_scenario(const Scenario& s, const RunOptions& opts = {}) { return Runner(opts).run(s); }

/// Parses a polytope expression, with the declarations of `context` in scope,
/// and evaluates it.
inline RefinedPolytope<S> evaluate_expression(std::string_view text, const Scenario& context = {}) {
  Parser p(text);
  p.preload(context);
  auto e = p.standalone_polytope();
  Runner r;
  Report ignored;
  for (const auto& st : context.statements)
    if (!std::holds_alternative<Assertion>(st.node) && !std::holds_alternative<Render>(st.node) &&
        !std::holds_alternative<Wbg>(st.node))
      r.step(st, ignored);
  return r.eval(e);
}

inline Polygon<S> parse_vertex_list(std::string_view text) {
  auto pts = Parser(text).standalone_points();
  for (const auto& v : pts)
    if (v.size() != 2) throw ParseError("vertices must be planar", 0, 0);
  return Polygon<S>(pts.begin(), pts.end());
}

}  // namespace refgeo::scenario
