#include "mlinv/exactla.hpp"

#include <numeric>

#include "mlinv/error.hpp"

namespace mlinv {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::InvalidArgument, "matrix data length must equal rows*cols");
  }
}

ExactMatrix ExactMatrix::from_rows(std::span<const CoeffVector> rows) {
  if (rows.empty()) return {0, 0};
  const int f = rows.front().degree();
  ExactMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].degree() != f) throw Error(ErrorCode::InvalidArgument, "mixed degrees");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

void ExactMatrix::set_row_labels(std::vector<std::string> labels) {
  if (labels.size() != rows_) {
    throw Error(ErrorCode::InvalidArgument, "row label count must equal row count");
  }
  labels_ = std::move(labels);
}

void ExactMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
  if (labels_) std::swap((*labels_)[a], (*labels_)[b]);
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RrefResult rref(ExactMatrix m) {
  RrefResult res{m, {}, 0, {}};
  res.row_permutation.resize(m.rows());
  std::iota(res.row_permutation.begin(), res.row_permutation.end(), std::size_t{0});

  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(lead, p);
    std::swap(res.row_permutation[lead], res.row_permutation[p]);

    const GaussianRational scale = m(lead, c).inv();
    for (std::size_t k = c; k < m.cols(); ++k) {
      if (!m(lead, k).is_zero()) m(lead, k) *= scale;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c).is_zero()) continue;
      const GaussianRational factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (!m(lead, k).is_zero()) m(r, k).sub_product(factor, m(lead, k));
      }
    }
    res.pivot_columns.push_back(c);
    ++lead;
  }
  res.rank = lead;
  res.reduced = std::move(m);
  return res;
}

std::pair<std::vector<GaussianRational>, std::vector<GaussianRational>> EchelonSpan::reduce(
    const CoeffVector& v) const {
  if (v.degree() != f_) throw Error(ErrorCode::InvalidArgument, "degree mismatch");
  std::vector<GaussianRational> residual(v.coeffs().begin(), v.coeffs().end());
  std::vector<GaussianRational> combo(rows_.size() + 1);
  // Row s is zero at the pivots of rows inserted before it, so one pass in
  // insertion order clears every pivot column.
  for (const Row& row : rows_) {
    if (residual[row.pivot].is_zero()) continue;
    const GaussianRational factor = residual[row.pivot];
    for (const auto& [col, val] : row.entries) residual[col].sub_product(factor, val);
    for (std::size_t k = 0; k < row.combo.size(); ++k) combo[k].add_product(factor, row.combo[k]);
  }
  return {std::move(residual), std::move(combo)};
}

bool EchelonSpan::insert(const CoeffVector& v) {
  auto [residual, combo] = reduce(v);
  std::size_t pivot = residual.size();
  for (std::size_t c = 0; c < residual.size(); ++c) {
    if (!residual[c].is_zero()) {
      pivot = c;
      break;
    }
  }
  if (pivot == residual.size()) return false;

  // residual = v - sum combo_k * inserted_k; express it over inserted vectors.
  const std::size_t idx = rows_.size();
  std::vector<GaussianRational> expr(idx + 1);
  for (std::size_t k = 0; k < idx; ++k) expr[k] = -combo[k];
  expr[idx] = 1;

  const GaussianRational scale = residual[pivot].inv();
  Row row{pivot, {}, {}};
  for (std::size_t c = pivot; c < residual.size(); ++c) {
    if (!residual[c].is_zero()) row.entries.emplace_back(c, residual[c] * scale);
  }
  for (auto& e : expr) e *= scale;
  row.combo = std::move(expr);
  rows_.push_back(std::move(row));
  return true;
}

std::optional<std::vector<GaussianRational>> EchelonSpan::coordinates(const CoeffVector& v) const {
  auto [residual, combo] = reduce(v);
  for (const auto& x : residual) {
    if (!x.is_zero()) return std::nullopt;
  }
  combo.resize(rows_.size());
  return combo;
}

Selection select_independent(std::span<const CoeffVector> rows) {
  Selection sel;
  if (rows.empty()) return sel;
  EchelonSpan span(rows.front().degree());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (span.insert(rows[k])) sel.kept.push_back(k);
  }
  sel.rank = span.rank();
  return sel;
}

CoeffVector linear_combination(std::span<const CoeffVector> basis,
                               std::span<const GaussianRational> coeffs) {
  if (basis.size() != coeffs.size() || basis.empty()) {
    throw Error(ErrorCode::InvalidArgument, "basis and coefficient counts differ");
  }
  CoeffVector out(basis.front().degree());
  for (std::size_t j = 0; j < basis.size(); ++j) out.add_scaled(coeffs[j], basis[j]);
  return out;
}

SpanSolver::SpanSolver(std::span<const CoeffVector> basis)
    : basis_(basis.begin(), basis.end()),
      span_(basis.empty() ? 1 : basis.front().degree()) {
  if (basis_.empty()) throw Error(ErrorCode::InvalidArgument, "empty basis");
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    if (!span_.insert(basis_[j])) {
      throw Error(ErrorCode::DependentBasis,
                  "basis vector " + std::to_string(j + 1) + " depends on the preceding ones");
    }
  }
}

std::vector<GaussianRational> SpanSolver::solve(const CoeffVector& target) const {
  auto c = span_.coordinates(target);
  if (!c) throw Error(ErrorCode::NotInSpan, "target is not in the span of the basis");
  CoeffVector check = linear_combination(basis_, *c);
  if (!(check == target)) {
    throw Error(ErrorCode::Internal, "re-substitution of solved coordinates failed");
  }
  return std::move(*c);
}

std::vector<GaussianRational> solve_in_span(std::span<const CoeffVector> basis,
                                            const CoeffVector& target) {
  return SpanSolver(basis).solve(target);
}

}  // namespace mlinv
