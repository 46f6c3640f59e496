#pragma once

// Text format for WBG decompositions. Every scalar is an exact literal that
// F::parse reads back. Layout:
//
//   refgeo-decomposition 1
//   polygon P <n>            then n lines "v <x> ; <y>"   (optional)
//   polygon Q <n>            (optional)
//   pieces <m>
//   piece <i>
//   source <cells>           then per cell "cell <n>" and n vertex lines
//   target <cells>
//   linear <a> ; <b> ; <c> ; <d>     row-major
//   translation <x> ; <y>
//
// A refined 2-cell of the plane is determined by its closure, so vertex lists
// describe the pieces exactly.

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "refgeo/wbg.hpp"

namespace refgeo {

inline constexpr const char* kDecompositionHeader = "refgeo-decomposition 1";

template <OrderedField F>
struct DecompositionFile {
  std::optional<Polygon<F>> p, q;
  Decomposition<F> decomposition;
};

namespace detail {

inline std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_fields(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto k = s.find(';', start);
    out.push_back(trim(s.substr(start, k == std::string::npos ? std::string::npos : k - start)));
    if (k == std::string::npos) return out;
    start = k + 1;
  }
}

template <OrderedField F>
void write_vertices(std::ostream& out, const Polygon<F>& pts) {
  for (const auto& v : pts) out << "v " << to_string(v[0]) << " ; " << to_string(v[1]) << "\n";
}

template <OrderedField F>
void write_piece(std::ostream& out, const char* tag, const RefinedPolytope<F>& p) {
  if (p.ambient_dim() != 2 || (!p.is_empty() && p.rank() != 2))
    throw DimensionMismatch("decomposition files hold planar 2-pieces");
  out << tag << " " << p.cells().size() << "\n";
  for (const auto& c : p.cells()) {
    auto pts = make_ccw(cell_vertices(c));
    out << "cell " << pts.size() << "\n";
    write_vertices(out, pts);
  }
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next non-blank, non-comment line split into keyword and rest.
  std::pair<std::string, std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      line = trim(line);
      if (line.empty() || line[0] == '#') continue;
      auto sp = line.find(' ');
      if (sp == std::string::npos) return {line, ""};
      return {line.substr(0, sp), trim(line.substr(sp + 1))};
    }
    return {"", ""};
  }

  std::string expect(const std::string& keyword) {
    auto [k, rest] = next();
    if (k != keyword) fail("expected '" + keyword + "', found '" + k + "'");
    return rest;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("decomposition file: " + what, static_cast<int>(number_), 1);
  }

  std::size_t count(const std::string& s) const {
    try {
      std::size_t used = 0;
      long v = std::stol(s, &used);
      if (used != s.size() || v < 0) throw std::invalid_argument(s);
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      fail("bad count '" + s + "'");
    }
  }

  template <OrderedField F>
  std::vector<F> scalars(const std::string& rest, std::size_t n) {
    auto fields = split_fields(rest);
    if (fields.size() != n) fail("expected " + std::to_string(n) + " scalars");
    std::vector<F> out;
    for (const auto& f : fields) {
      try {
        out.push_back(F::parse(f));
      } catch (const std::exception&) {
        fail("bad scalar '" + f + "'");
      }
    }
    return out;
  }

  template <OrderedField F>
  Polygon<F> vertices(std::size_t n) {
    Polygon<F> pts;
    for (std::size_t i = 0; i < n; ++i) {
      auto xy = scalars<F>(expect("v"), 2);
      pts.push_back(Vector<F>{xy[0], xy[1]});
    }
    return pts;
  }

  template <OrderedField F>
  RefinedPolytope<F> piece(const std::string& tag) {
    std::size_t cells = count(expect(tag));
    std::vector<Cell<F>> out;
    for (std::size_t i = 0; i < cells; ++i) {
      auto pts = vertices<F>(count(expect("cell")));
      if (pts.size() < 3 || !is_convex(pts) || sign(signed_area(pts)) == 0) fail("cell is not a convex polygon");
      auto cp = convex_piece(pts);
      out.emplace_back(cp.carrier, cp.constraints);
    }
    return RefinedPolytope<F>(2, 2, std::move(out));
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

}  // namespace detail

template <OrderedField F>
void write_decomposition(std::ostream& out, const Decomposition<F>& d, const Polygon<F>* p = nullptr,
                         const Polygon<F>* q = nullptr) {
  out << kDecompositionHeader << "\n";
  if (p) {
    out << "polygon P " << p->size() << "\n";
    detail::write_vertices(out, *p);
  }
  if (q) {
    out << "polygon Q " << q->size() << "\n";
    detail::write_vertices(out, *q);
  }
  out << "pieces " << d.size() << "\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    out << "piece " << i << "\n";
    detail::write_piece(out, "source", d.pieces_p[i]);
    detail::write_piece(out, "target", d.pieces_q[i]);
    const auto& m = d.motions[i];
    out << "linear " << to_string(m.linear(0, 0)) << " ; " << to_string(m.linear(0, 1)) << " ; "
        << to_string(m.linear(1, 0)) << " ; " << to_string(m.linear(1, 1)) << "\n";
    out << "translation " << to_string(m.translation[0]) << " ; " << to_string(m.translation[1]) << "\n";
  }
}

template <OrderedField F>
std::string decomposition_text(const Decomposition<F>& d, const Polygon<F>* p = nullptr,
                               const Polygon<F>* q = nullptr) {
  std::ostringstream s;
  write_decomposition(s, d, p, q);
  return s.str();
}

template <OrderedField F>
DecompositionFile<F> read_decomposition(std::istream& in) {
  detail::LineReader r(in);
  DecompositionFile<F> f;
  auto [k, rest] = r.next();
  if (k + " " + rest != kDecompositionHeader) r.fail("missing header '" + std::string(kDecompositionHeader) + "'");
  for (;;) {
    std::tie(k, rest) = r.next();
    if (k != "polygon") break;
    std::istringstream words(rest);
    std::string which, n;
    words >> which >> n;
    if (which != "P" && which != "Q") r.fail("polygon must be P or Q");
    (which == "P" ? f.p : f.q) = r.vertices<F>(r.count(n));
  }
  if (k != "pieces") r.fail("expected 'pieces', found '" + k + "'");
  std::size_t m = r.count(rest);
  auto& d = f.decomposition;
  for (std::size_t i = 0; i < m; ++i) {
    if (r.count(r.expect("piece")) != i) r.fail("pieces out of order");
    d.pieces_p.push_back(r.piece<F>("source"));
    d.pieces_q.push_back(r.piece<F>("target"));
    auto a = r.scalars<F>(r.expect("linear"), 4);
    auto t = r.scalars<F>(r.expect("translation"), 2);
    d.motions.emplace_back(Matrix<F>::from_rows({{a[0], a[1]}, {a[2], a[3]}}), Vector<F>{t[0], t[1]});
  }
  if (!r.next().first.empty()) r.fail("trailing content");
  return f;
}

template <OrderedField F>
DecompositionFile<F> parse_decomposition(const std::string& text) {
  std::istringstream in(text);
  return read_decomposition<F>(in);
}

}  // namespace refgeo
