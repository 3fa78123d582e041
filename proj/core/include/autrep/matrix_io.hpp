#pragma once

#include "autrep/matrix.hpp"

#include <string>
#include <variant>
#include <vector>

namespace autrep {

/// Ring-erased matrix for the file-format boundary. All math code is
/// templated on the concrete ring; parsing dispatches on the "ring" tag.
using AnyMatrix = std::variant<RatMat, GaussMat, LaurentMat>;

struct AnyTuple {
  std::size_t rank = 0;
  std::size_t dim = 0;
  std::variant<std::vector<RatMat>, std::vector<GaussMat>, std::vector<LaurentMat>> mats;
};

/// {"ring":"rational"|"gaussian"|"laurent","dim":d,"entries":[[...]]}
AnyMatrix parse_matrix_json(const std::string& text);
std::string matrix_to_json(const AnyMatrix& m, int indent = -1);

/// {"ring":...,"dim":d,"mats":[entries,...]}  (rank = number of mats)
AnyTuple parse_tuple_json(const std::string& text);
std::string tuple_to_json(const AnyTuple& t, int indent = -1);

const char* ring_name(const AnyMatrix& m);

template <class R>
std::vector<std::vector<std::string>> entries_as_strings(const Mat<R>& m) {
  std::vector<std::vector<std::string>> rows(m.dim(), std::vector<std::string>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) rows[i][j] = Ring<R>::str(m.at(i, j));
  return rows;
}

}  // namespace autrep
