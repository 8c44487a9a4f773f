#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "mlinv/exactfield.hpp"

namespace mlinv {

// 2x2 matrix over Q(i), entries indexed from 0.
class Mat2 {
 public:
  Mat2() = default;
  Mat2(GaussianRational a00, GaussianRational a01, GaussianRational a10, GaussianRational a11)
      : e_{std::move(a00), std::move(a01), std::move(a10), std::move(a11)} {}

  static Mat2 identity() { return {1, 0, 0, 1}; }

  const GaussianRational& operator()(int r, int c) const { return e_[2 * r + c]; }
  GaussianRational& operator()(int r, int c) { return e_[2 * r + c]; }

  GaussianRational det() const;
  bool is_identity() const { return *this == identity(); }
  Mat2 scaled(const GaussianRational& s) const;

  friend bool operator==(const Mat2& a, const Mat2& b) { return a.e_ == b.e_; }

  std::size_t hash() const noexcept;

 private:
  std::array<GaussianRational, 4> e_{};
};

Mat2 mat_mul(const Mat2& a, const Mat2& b);
// Adjugate over determinant. Throws Error(SingularMatrix) when det = 0.
Mat2 mat_inv(const Mat2& a);

inline Mat2 operator*(const Mat2& a, const Mat2& b) { return mat_mul(a, b); }

struct Mat2Hash {
  std::size_t operator()(const Mat2& m) const noexcept { return m.hash(); }
};

// T = (1+i)/2 * [[1, 1], [1, -1]]
Mat2 generator_t();
// D = diag(1, i)
Mat2 generator_d();

class GroupTable {
 public:
  GroupTable(std::vector<Mat2> elements, std::vector<std::size_t> inverse_index)
      : elements_(std::move(elements)), inverse_index_(std::move(inverse_index)) {}

  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Mat2>& elements() const noexcept { return elements_; }
  const Mat2& operator[](std::size_t k) const { return elements_[k]; }
  std::size_t inverse_of(std::size_t k) const { return inverse_index_[k]; }
  const std::vector<std::size_t>& inverse_index() const noexcept { return inverse_index_; }

  // Position of m in the table, or order() when absent.
  std::size_t find(const Mat2& m) const;

 private:
  std::vector<Mat2> elements_;
  std::vector<std::size_t> inverse_index_;
};

inline constexpr std::size_t kDefaultClosureCap = 1000;

// Breadth-first closure from the identity: each dequeued element x is
// right-multiplied by the generators in the order given. Throws
// Error(CapExceeded) once more than `cap` elements are found and
// Error(SingularMatrix) for a non-invertible generator.
GroupTable closure(std::span<const Mat2> generators, std::size_t cap = kDefaultClosureCap);

// closure([T, D]); built once and cached.
const GroupTable& default_group();

}  // namespace mlinv
