#pragma once

/*
 * Dense exact linear algebra over Q(i).
 *
 * Pivoting is purely positional: the pivot of each column is the first
 * nonzero entry at or below the current row. Exact arithmetic needs no
 * magnitude pivoting, and positional pivoting makes every result a function
 * of the input order alone.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mlinv/exactfield.hpp"
#include "mlinv/formspace.hpp"

namespace mlinv {

class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> data);

  // Stacks the vectors as rows. All must share one degree.
  static ExactMatrix from_rows(std::span<const CoeffVector> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  const std::optional<std::vector<std::string>>& row_labels() const noexcept { return labels_; }
  void set_row_labels(std::vector<std::string> labels);

  void swap_rows(std::size_t a, std::size_t b);
  ExactMatrix transpose() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<GaussianRational> data_;
  std::optional<std::vector<std::string>> labels_;
};

struct RrefResult {
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
  // row_permutation[k] is the input row that ended up at row k.
  std::vector<std::size_t> row_permutation;
};

RrefResult rref(ExactMatrix m);

// Rows kept in echelon form with unit pivots, stored sparsely. Each row is
// also recorded as a combination of the vectors that were inserted, so
// membership tests can return coordinates.
class EchelonSpan {
 public:
  explicit EchelonSpan(int f) : f_(f) {}

  std::size_t rank() const noexcept { return rows_.size(); }
  int degree() const noexcept { return f_; }

  // Adds v if it is outside the current span; returns whether it was added.
  bool insert(const CoeffVector& v);

  // Coordinates of v over the inserted (independent) vectors in insertion
  // order, or nullopt when v is outside the span.
  std::optional<std::vector<GaussianRational>> coordinates(const CoeffVector& v) const;

  bool contains(const CoeffVector& v) const { return coordinates(v).has_value(); }

 private:
  using SparseRow = std::vector<std::pair<std::size_t, GaussianRational>>;

  struct Row {
    std::size_t pivot;
    SparseRow entries;                     // pivot entry equals 1
    std::vector<GaussianRational> combo;  // over inserted vectors
  };

  // Reduces v against all rows; returns the residual and the combination
  // subtracted from it.
  std::pair<std::vector<GaussianRational>, std::vector<GaussianRational>> reduce(
      const CoeffVector& v) const;

  int f_;
  std::vector<Row> rows_;
};

struct Selection {
  std::vector<std::size_t> kept;
  std::size_t rank = 0;
};

// Greedy scan in input order; a row is kept iff it is independent of the
// rows kept before it.
Selection select_independent(std::span<const CoeffVector> rows);

// Unique c with sum_j c_j basis_j = target. Throws Error(DependentBasis)
// for a dependent basis and Error(NotInSpan) when target is outside the
// span. The result is re-substituted and checked before returning.
std::vector<GaussianRational> solve_in_span(std::span<const CoeffVector> basis,
                                            const CoeffVector& target);

// Solves many targets against one basis.
class SpanSolver {
 public:
  explicit SpanSolver(std::span<const CoeffVector> basis);

  std::vector<GaussianRational> solve(const CoeffVector& target) const;

 private:
  std::vector<CoeffVector> basis_;
  EchelonSpan span_;
};

// sum_j c_j basis_j
CoeffVector linear_combination(std::span<const CoeffVector> basis,
                               std::span<const GaussianRational> coeffs);

}  // namespace mlinv
