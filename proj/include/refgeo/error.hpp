#pragma once

#include <stdexcept>
#include <string>

namespace refgeo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error { using Error::Error; };
struct NegativeRadicand : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct RankMismatch : Error { using Error::Error; };
struct NonRegularFunctional : Error { using Error::Error; };
struct DependentFlag : Error { using Error::Error; };
struct EmptyCellError : Error { using Error::Error; };
struct UnboundedError : Error { using Error::Error; };
struct DegenerateInput : Error { using Error::Error; };

/// Raised by lift() when a convex piece does not have full rank.
struct ImpurePolytope : Error {
  ImpurePolytope(std::size_t piece, int piece_rank, int expected)
      : Error("convex piece " + std::to_string(piece) + " has rank " +
              std::to_string(piece_rank) + ", expected " + std::to_string(expected)),
        piece_index(piece), rank(piece_rank) {}
  std::size_t piece_index;
  int rank;
};

struct NonSimplePolygon : Error { using Error::Error; };

/// Equidecomposition requested for polygons of different area; the exact
/// areas and their difference are kept as scalar literals.
struct AreaMismatch : Error {
  AreaMismatch(std::string area_p, std::string area_q, std::string difference)
      : Error("areas differ: " + area_p + " vs " + area_q + " (gap " + difference + ")"),
        first(std::move(area_p)), second(std::move(area_q)), gap(std::move(difference)) {}
  std::string first;
  std::string second;
  std::string gap;
};

struct ParseError : Error {
  ParseError(const std::string& what, int line_no, int column_no)
      : Error(line_no > 0 ? std::to_string(line_no) + ":" + std::to_string(column_no) + ": " + what
                          : what),
        line(line_no), column(column_no), message(what) {}
  int line;
  int column;
  std::string message;
};

}  // namespace refgeo
