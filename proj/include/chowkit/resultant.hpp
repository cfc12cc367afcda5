#pragma once

#include <string_view>
#include <vector>

#include "chowkit/multipoly.hpp"

namespace chowkit {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Sylvester matrix of f and g with respect to one variable. The first
/// deg(g) rows hold shifted copies of f's coefficients (highest power first),
/// the remaining deg(f) rows hold g's. Entries live in the remaining variables.
struct SylvesterMatrix {
  PolyMatrix entries;
  std::size_t dimension() const { return entries.size(); }
};

/// Throws std::invalid_argument if f or g has degree zero in `eliminated`.
SylvesterMatrix sylvester_matrix(const MultiPoly& f, const MultiPoly& g,
                                 std::string_view eliminated);

/// Fraction-free (Bareiss) determinant. Each elimination step updates the
/// trailing submatrix in parallel with OpenMP; divisions are exact.
MultiPoly bareiss_determinant(PolyMatrix matrix);

/// Single-threaded reference for bareiss_determinant.
MultiPoly bareiss_determinant_serial(PolyMatrix matrix);

/// res_var(f, g) = det(sylvester_matrix(f, g, var)).
MultiPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g, std::string_view eliminated);

}  // namespace chowkit
