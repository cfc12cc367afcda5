#pragma once

#include <vector>

#include "chowkit/chow.hpp"

namespace chowkit {

/// A vector bundle on a cyclic base, known through its rank and Chern classes.
struct BundleData {
  RingRef ring;
  int rank = 0;
  std::vector<ChowClass> chern;  // c_1 .. c_rank

  /// Throws std::invalid_argument for rank < 1, a wrong number of classes,
  /// or a c_i that is not pure of codimension i.
  BundleData(RingRef ring, int rank, std::vector<ChowClass> chern);

  /// c_i = units[i-1] * (generator of A^i); entries above the base dimension
  /// are dropped, and zero units never consult the lattice scale.
  static BundleData from_generator_units(RingRef ring, const std::vector<Integer>& units);

  /// c_0 = 1, c_i for 1 <= i <= rank, zero otherwise.
  ChowClass c(int i) const;
};

/// sum_i terms[i] t^i, truncated at the base dimension.
struct ClassSeries {
  RingRef ring;
  std::vector<ChowClass> terms;

  const ChowClass& operator[](std::size_t i) const { return terms.at(i); }
  std::size_t size() const { return terms.size(); }
};

/// Inverse of a series with constant term 1, to max_index terms.
ClassSeries invert_series(const ClassSeries& series, int max_index);
/// Product of two series, truncated to max_index.
ClassSeries multiply_series(const ClassSeries& lhs, const ClassSeries& rhs, int max_index);
/// sum (-1)^i terms[i] t^i
ClassSeries alternate_signs(ClassSeries series);

/// Segre classes with the convention s_i = pi_*(xi^{r-1+i}); equivalently
/// sum (-1)^i s_i t^i = (sum c_i t^i)^{-1}, so s_1 = c_1.
ClassSeries segre_from_chern(const BundleData& bundle, int max_index);

/// Inverse of segre_from_chern: c_t = (sum (-1)^i s_i t^i)^{-1}.
ClassSeries chern_from_segre(const ClassSeries& segre, int max_index);

/// d_i = sum_{j=0}^{i} C(r-1+i, r-1+j) r^j s_j (-s_1)^{i-j}, which makes
/// pi_*((-K_pi)^{r-1+i}) = r^{r-1} d_i with -K_pi = r xi - c_1.
/// Always d_0 = 1 and d_1 = 0.
ClassSeries d_series(const BundleData& bundle, int max_index);

/// Coefficients of Delta_t = d_{-t}^{-1}.
ClassSeries delta_series(const BundleData& bundle, int max_index);

/// sum_{k=0}^{i} (-1)^{i-k} C(r-k, i-k) r^k c_k c_1^{i-k} for i <= r, zero
/// above the rank. Agrees with delta_series term by term.
ChowClass delta_closed_form(const BundleData& bundle, int i);

struct LowRankReductionReport {
  bool passed = false;
  ChowClass residual_d4;  // d_4 - d_2^2
  ChowClass residual_d5;  // d_5 - 2 d_2 d_3
};

/// For rank 3: checks d_4 = d_2^2 and d_5 = 2 d_2 d_3. Throws
/// std::invalid_argument for other ranks or bases of dimension < 5.
LowRankReductionReport verify_low_rank_reductions(const BundleData& bundle);

}  // namespace chowkit
