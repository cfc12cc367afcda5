#include "chowkit/resultant.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

namespace chowkit {

SylvesterMatrix sylvester_matrix(const MultiPoly& f, const MultiPoly& g,
                                 std::string_view eliminated) {
  const int deg_f = f.degree_in(eliminated);
  const int deg_g = g.degree_in(eliminated);
  if (deg_f <= 0 || deg_g <= 0) {
    throw std::invalid_argument("resultant needs positive degree in '" + std::string(eliminated) + "'");
  }

  std::vector<std::string> universe;
  for (const auto* p : {&f, &g}) {
    for (const auto& v : p->variables()) {
      if (v != eliminated && std::find(universe.begin(), universe.end(), v) == universe.end()) {
        universe.push_back(v);
      }
    }
  }
  auto coefficients = [&](const MultiPoly& p) {
    auto coeffs = p.coefficients_in(eliminated);
    std::reverse(coeffs.begin(), coeffs.end());  // highest power first
    for (auto& c : coeffs) c = c.with_variables(universe);
    return coeffs;
  };
  const auto fc = coefficients(f);
  const auto gc = coefficients(g);

  const auto n = static_cast<std::size_t>(deg_f + deg_g);
  SylvesterMatrix m{PolyMatrix(n, std::vector<MultiPoly>(n, MultiPoly(universe)))};
  for (std::size_t row = 0; row < static_cast<std::size_t>(deg_g); ++row) {
    for (std::size_t j = 0; j < fc.size(); ++j) m.entries[row][row + j] = fc[j];
  }
  for (std::size_t row = 0; row < static_cast<std::size_t>(deg_f); ++row) {
    for (std::size_t j = 0; j < gc.size(); ++j) m.entries[deg_g + row][row + j] = gc[j];
  }
  return m;
}

namespace {

// Brings a nonzero entry to (k, k) by a row swap. Returns false when the
// whole column below the diagonal is zero, i.e. the determinant vanishes.
bool pivot(PolyMatrix& m, std::size_t k, int& sign) {
  if (!m[k][k].is_zero()) return true;
  for (std::size_t i = k + 1; i < m.size(); ++i) {
    if (!m[i][k].is_zero()) {
      std::swap(m[i], m[k]);
      sign = -sign;
      return true;
    }
  }
  return false;
}

MultiPoly zero_like(const PolyMatrix& m) {
  return m.empty() ? MultiPoly() : MultiPoly(m[0][0].variables());
}

void check_square(const PolyMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw std::invalid_argument("determinant of a non-square matrix");
  }
}

}  // namespace

MultiPoly bareiss_determinant(PolyMatrix m) {
  check_square(m);
  const auto n = static_cast<long>(m.size());
  if (n == 0) return MultiPoly::constant(1);
  int sign = 1;
  MultiPoly previous = MultiPoly::constant(1);
  for (long k = 0; k + 1 < n; ++k) {
    if (!pivot(m, static_cast<std::size_t>(k), sign)) return zero_like(m);
    const MultiPoly& diag = m[k][k];
    std::atomic<bool> inexact{false};
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        const auto numerator = m[i][j] * diag - m[i][k] * m[k][j];
        auto quotient = divide_exact(numerator, previous);
        if (!quotient) {
          inexact = true;
          continue;
        }
        m[i][j] = std::move(*quotient);
      }
    }
    if (inexact) throw std::logic_error("Bareiss step produced an inexact division");
    previous = m[k][k];
  }
  auto det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

MultiPoly bareiss_determinant_serial(PolyMatrix m) {
  check_square(m);
  const auto n = m.size();
  if (n == 0) return MultiPoly::constant(1);
  int sign = 1;
  MultiPoly previous = MultiPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!pivot(m, k, sign)) return zero_like(m);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto quotient = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], previous);
        if (!quotient) throw std::logic_error("Bareiss step produced an inexact division");
        m[i][j] = std::move(*quotient);
      }
    }
    previous = m[k][k];
  }
  auto det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

MultiPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g, std::string_view eliminated) {
  return bareiss_determinant(sylvester_matrix(f, g, eliminated).entries);
}

}  // namespace chowkit
