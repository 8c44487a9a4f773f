#pragma once

/*
 * Coordinates for multilinear forms of degree f in f row vectors xi^(j) and
 * f column vectors y^(j), each in C^2.
 *
 * A form  L = sum b(i_1..i_f; k_1..k_f) xi^(1)_{i_1}..xi^(f)_{i_f} y^(1)_{k_1}..y^(f)_{k_f}
 * is stored as a dense vector of its 4^f coefficients. The monomial
 * (i_1..i_f; k_1..k_f) lives at the position whose 2f-bit big-endian binary
 * expansion is i_1..i_f k_1..k_f with digit 1 -> bit 0 and digit 2 -> bit 1.
 *
 * The group acts by xi -> xi A^{-1}, y -> A y. Under this action the
 * coefficient of xi_a y_b picked up from xi_i y_k in a single factor is
 * K(A)[(a,b),(i,k)] = (A^{-1})_{a,i} * A_{k,b}; the f-fold form transforms by
 * the f-th tensor power of K(A).
 */

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mlinv/exactfield.hpp"
#include "mlinv/matgroup.hpp"

namespace mlinv {

// Largest degree the coordinate encoding accepts (4^f positions).
inline constexpr int kMaxDegree = 12;

void check_degree(int f);

inline std::size_t form_dimension(int f) { return std::size_t{1} << (2 * f); }

class MonomialIndex {
 public:
  // Digits are 1 or 2; both parts must have the same length f >= 1.
  MonomialIndex(std::vector<std::uint8_t> row_part, std::vector<std::uint8_t> col_part);

  int degree() const noexcept { return static_cast<int>(row_.size()); }
  const std::vector<std::uint8_t>& row_part() const noexcept { return row_; }
  const std::vector<std::uint8_t>& col_part() const noexcept { return col_; }

  // "121,112"
  std::string to_string() const;
  // Accepts "121,112" (surrounding whitespace ignored). Throws Error(Parse).
  static MonomialIndex parse(std::string_view text);

  friend bool operator==(const MonomialIndex&, const MonomialIndex&) = default;

 private:
  std::vector<std::uint8_t> row_;
  std::vector<std::uint8_t> col_;
};

std::size_t encode(const MonomialIndex& m);
MonomialIndex decode(std::size_t position, int f);

class Permutation {
 public:
  // One-line notation (beta_1..beta_f), values 1..f. Throws
  // Error(InvalidPermutation) if not a bijection on {1..f}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int f);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  // 1-based: image(k) = beta_k.
  int image(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  // (p.compose(q))(k) = p(q(k))
  Permutation compose(const Permutation& q) const;

  // "12354" for f <= 9, otherwise dot separated.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

// All permutations of 1..f in lexicographic order.
std::vector<Permutation> all_permutations(int f);

class CoeffVector {
 public:
  explicit CoeffVector(int f);
  CoeffVector(int f, std::vector<GaussianRational> coeffs);

  static CoeffVector unit(const MonomialIndex& m);

  int degree() const noexcept { return f_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const GaussianRational& operator[](std::size_t t) const { return coeffs_[t]; }
  GaussianRational& operator[](std::size_t t) { return coeffs_[t]; }
  std::span<const GaussianRational> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  std::size_t nonzero_count() const;

  // this += s * other
  void add_scaled(const GaussianRational& s, const CoeffVector& other);
  CoeffVector& operator-=(const CoeffVector& other);

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;

 private:
  int f_;
  std::vector<GaussianRational> coeffs_;
};

// K(A) as a 4x4 table indexed [2*(a-1)+(b-1)][2*(i-1)+(k-1)].
std::array<GaussianRational, 16> single_factor_table(const Mat2& a);

// Coefficient vector of L(xi A^{-1}, ...; A y, ...) for L given by v.
// Throws Error(SingularMatrix) when A is not invertible.
CoeffVector act(const CoeffVector& v, const Mat2& a);

// Reynolds average of the elementary form prod_j xi^(j)_{i_j} y^(j)_{k_j}.
CoeffVector average_monomial(const MonomialIndex& m, const GroupTable& g);

// Reynolds averages of the given monomials, optionally spread over
// `workers` threads; the result is identical for every worker count.
std::vector<CoeffVector> average_monomials(std::span<const MonomialIndex> ms,
                                           const GroupTable& g, unsigned workers = 1);

// (1/|G|) sum_A act(v, A)
CoeffVector reynolds_apply(const CoeffVector& v, const GroupTable& g);

// W(id; beta) = prod_k <xi^(k), y^(beta_k)>.
CoeffVector expand_typical(const Permutation& beta, int f);

// W(alpha; beta) = prod_k <xi^(alpha_k), y^(beta_k)>.
CoeffVector expand_typical(const Permutation& alpha, const Permutation& beta);

// MLINV_WORKERS if set to a positive integer, otherwise 1.
unsigned workers_from_env();

}  // namespace mlinv
