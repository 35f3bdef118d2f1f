#pragma once

#include "iads/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace iads {

/// Dense matrix over arbitrary-precision integers. All normal-form routines
/// are fraction-free; nothing in this header touches floating point.
class IMat {
 public:
  IMat() = default;
  IMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static IMat identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IMat from_rows(const std::vector<std::vector<Int>>& rows);

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }

  Int& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  friend bool operator==(const IMat& x, const IMat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  [[nodiscard]] IMat mul(const IMat& o) const;
  [[nodiscard]] std::vector<Int> apply(const std::vector<Int>& v) const;
  [[nodiscard]] IMat pow(const Int& n) const;
  [[nodiscard]] IMat hstack(const IMat& o) const;
  [[nodiscard]] Int det() const;  // fraction-free Gaussian elimination

  void swap_cols(int i, int j);
  void swap_rows(int i, int j);

  [[nodiscard]] std::string str() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

/// Result of the Smith decomposition U*A*V = S with U, V unimodular and S
/// diagonal, s_1 | s_2 | ... | s_r, s_i >= 0.
struct SmithResult {
  IMat u, s, v;
  int rank = 0;
  [[nodiscard]] std::vector<Int> invariant_factors() const;  // factors > 1
};

SmithResult smith_normal_form(IMat a);

/// Column-style Hermite normal form of a full-column-rank lattice basis:
/// returns the unique lower-triangular H = A*U with positive diagonal and
/// 0 <= h_ij < h_ii for j < i. Requires the column span of A to have full
/// rank rows(); columns beyond the rank are dropped.
IMat column_hnf(IMat a);

/// One solution x of A x = b over the integers, if any.
std::optional<std::vector<Int>> solve_integer(const IMat& a, const std::vector<Int>& b);

/// Reusable integer solver for a fixed matrix: one Smith decomposition,
/// then each solve is a pair of matrix-vector products plus divisions.
class SnfSolver {
 public:
  explicit SnfSolver(IMat a) : rows_(a.rows()), cols_(a.cols()), sr_(smith_normal_form(std::move(a))) {}

  [[nodiscard]] std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;

 private:
  int rows_, cols_;
  SmithResult sr_;
};

/// Basis (as columns) of the integer kernel of A.
IMat integer_kernel(const IMat& a);

/// Whether v lies in the column lattice of A (A of full column rank or not).
bool in_column_lattice(const IMat& a, const std::vector<Int>& v);

/// Exact test that every root of the characteristic polynomial of T lies
/// strictly outside the unit circle (so backward orbits of T leave every
/// ball). Boundary cases return false.
bool all_eigenvalues_outside_unit_circle(const IMat& t);

}  // namespace iads
