#include "mlinv/formspace.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <thread>

#include "mlinv/error.hpp"

namespace mlinv {

void check_degree(int f) {
  if (f < 1 || f > kMaxDegree) {
    throw Error(ErrorCode::InvalidArgument,
                "degree must be in 1.." + std::to_string(kMaxDegree) + ", got " +
                    std::to_string(f));
  }
}

// ---------------------------------------------------------------- indices

MonomialIndex::MonomialIndex(std::vector<std::uint8_t> row_part,
                             std::vector<std::uint8_t> col_part)
    : row_(std::move(row_part)), col_(std::move(col_part)) {
  if (row_.size() != col_.size() || row_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "monomial parts must have equal nonzero length");
  }
  check_degree(static_cast<int>(row_.size()));
  auto ok = [](std::uint8_t d) { return d == 1 || d == 2; };
  if (!std::all_of(row_.begin(), row_.end(), ok) || !std::all_of(col_.begin(), col_.end(), ok)) {
    throw Error(ErrorCode::InvalidArgument, "monomial digits must be 1 or 2");
  }
}

std::string MonomialIndex::to_string() const {
  std::string s;
  for (auto d : row_) s += static_cast<char>('0' + d);
  s += ',';
  for (auto d : col_) s += static_cast<char>('0' + d);
  return s;
}

MonomialIndex MonomialIndex::parse(std::string_view text) {
  auto fail = [&](const char* why) -> MonomialIndex {
    throw Error(ErrorCode::Parse, "cannot parse monomial '" + std::string(text) + "': " + why);
  };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto comma = text.find(',');
  if (comma == std::string_view::npos) return fail("expected 'row,col'");
  auto digits = [&](std::string_view s) {
    std::vector<std::uint8_t> out;
    for (char c : s) {
      if (c != '1' && c != '2') fail("digits must be 1 or 2");
      out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
  };
  auto row = digits(text.substr(0, comma));
  auto col = digits(text.substr(comma + 1));
  if (row.empty() || row.size() != col.size()) return fail("parts must have equal nonzero length");
  if (row.size() > static_cast<std::size_t>(kMaxDegree)) return fail("degree too large");
  return {std::move(row), std::move(col)};
}

std::size_t encode(const MonomialIndex& m) {
  std::size_t t = 0;
  for (auto d : m.row_part()) t = (t << 1) | static_cast<std::size_t>(d - 1);
  for (auto d : m.col_part()) t = (t << 1) | static_cast<std::size_t>(d - 1);
  return t;
}

MonomialIndex decode(std::size_t position, int f) {
  check_degree(f);
  if (position >= form_dimension(f)) {
    throw Error(ErrorCode::InvalidArgument, "monomial position out of range");
  }
  std::vector<std::uint8_t> row(static_cast<std::size_t>(f)), col(static_cast<std::size_t>(f));
  for (int j = f - 1; j >= 0; --j) {
    col[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(1 + (position & 1));
    position >>= 1;
  }
  for (int j = f - 1; j >= 0; --j) {
    row[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(1 + (position & 1));
    position >>= 1;
  }
  return {std::move(row), std::move(col)};
}

namespace {

// Bit offsets (from the least significant end) of i_j and k_j, j 0-based.
inline int row_bit(int f, int j) { return 2 * f - 1 - j; }
inline int col_bit(int f, int j) { return f - 1 - j; }

// Slot code p = 2*(i-1) + (k-1) of factor j at position t.
inline unsigned slot_code(std::size_t t, int f, int j) {
  return static_cast<unsigned>((((t >> row_bit(f, j)) & 1) << 1) | ((t >> col_bit(f, j)) & 1));
}

}  // namespace

// ---------------------------------------------------------- permutations

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int f = static_cast<int>(images_.size());
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > f || seen[static_cast<std::size_t>(v - 1)]) {
      throw Error(ErrorCode::InvalidPermutation, "not a permutation of 1.." + std::to_string(f));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int f) {
  std::vector<int> id(static_cast<std::size_t>(f));
  std::iota(id.begin(), id.end(), 1);
  return Permutation(std::move(id));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k + 1);
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& q) const {
  if (q.size() != size()) {
    throw Error(ErrorCode::InvalidPermutation, "composing permutations of different sizes");
  }
  std::vector<int> out(images_.size());
  for (int k = 1; k <= size(); ++k) out[static_cast<std::size_t>(k - 1)] = image(q.image(k));
  return Permutation(std::move(out));
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_.size() > 9 && k > 0) s += '.';
    s += std::to_string(images_[k]);
  }
  return s;
}

std::vector<Permutation> all_permutations(int f) {
  check_degree(f);
  std::vector<int> p(static_cast<std::size_t>(f));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// --------------------------------------------------------- coefficients

CoeffVector::CoeffVector(int f) : f_(f) {
  check_degree(f);
  coeffs_.resize(form_dimension(f));
}

CoeffVector::CoeffVector(int f, std::vector<GaussianRational> coeffs)
    : f_(f), coeffs_(std::move(coeffs)) {
  check_degree(f);
  if (coeffs_.size() != form_dimension(f)) {
    throw Error(ErrorCode::InvalidArgument, "coefficient vector must have length 4^f");
  }
}

CoeffVector CoeffVector::unit(const MonomialIndex& m) {
  CoeffVector v(m.degree());
  v[encode(m)] = 1;
  return v;
}

bool CoeffVector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& x) { return x.is_zero(); });
}

std::size_t CoeffVector::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const auto& x) { return !x.is_zero(); }));
}

void CoeffVector::add_scaled(const GaussianRational& s, const CoeffVector& other) {
  if (other.f_ != f_) throw Error(ErrorCode::InvalidArgument, "degree mismatch");
  if (s.is_zero()) return;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) coeffs_[t].add_product(s, other.coeffs_[t]);
}

CoeffVector& CoeffVector::operator-=(const CoeffVector& other) {
  if (other.f_ != f_) throw Error(ErrorCode::InvalidArgument, "degree mismatch");
  for (std::size_t t = 0; t < coeffs_.size(); ++t) coeffs_[t] -= other.coeffs_[t];
  return *this;
}

// ---------------------------------------------------------------- action

std::array<GaussianRational, 16> single_factor_table(const Mat2& a) {
  const Mat2 ainv = mat_inv(a);
  std::array<GaussianRational, 16> k;
  for (int ra = 0; ra < 2; ++ra)
    for (int cb = 0; cb < 2; ++cb)
      for (int ri = 0; ri < 2; ++ri)
        for (int ck = 0; ck < 2; ++ck)
          k[static_cast<std::size_t>(4 * (2 * ra + cb) + (2 * ri + ck))] = ainv(ra, ri) * a(ck, cb);
  return k;
}

namespace {

// Applies K to every factor slot in turn: the f-th tensor power of K.
CoeffVector apply_tensor_power(const CoeffVector& v, const std::array<GaussianRational, 16>& k) {
  const int f = v.degree();
  CoeffVector cur = v;
  CoeffVector next(f);
  const std::size_t n = cur.size();
  for (int j = 0; j < f; ++j) {
    const std::size_t rmask = std::size_t{1} << row_bit(f, j);
    const std::size_t cmask = std::size_t{1} << col_bit(f, j);
    const std::size_t offs[4] = {0, cmask, rmask, rmask | cmask};
    for (std::size_t base = 0; base < n; ++base) {
      if (base & (rmask | cmask)) continue;
      bool all_zero = true;
      for (int p = 0; p < 4 && all_zero; ++p) all_zero = cur[base + offs[p]].is_zero();
      if (all_zero) {
        for (int q = 0; q < 4; ++q) next[base + offs[q]] = GaussianRational();
        continue;
      }
      for (int q = 0; q < 4; ++q) {
        GaussianRational s;
        for (int p = 0; p < 4; ++p) s.add_product(k[static_cast<std::size_t>(4 * q + p)], cur[base + offs[p]]);
        next[base + offs[q]] = std::move(s);
      }
    }
    std::swap(cur, next);
  }
  return cur;
}

struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;
};

inline GaussInt gmul(GaussInt x, GaussInt y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

// K(A) for every group element, scaled by a common integer denominator so
// that all entries are Gaussian integers. Empty when that is not possible
// without risking int64 overflow at degree f.
struct ScaledKernel {
  std::vector<std::array<GaussInt, 16>> tables;
  mpz_class scale;  // common denominator
};

bool build_scaled_kernel(const GroupTable& g, int f, ScaledKernel& out) {
  std::vector<std::array<GaussianRational, 16>> exact;
  exact.reserve(g.order());
  mpz_class den = 1;
  for (const auto& a : g.elements()) {
    exact.push_back(single_factor_table(a));
    for (const auto& x : exact.back()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.re().get_den_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.im().get_den_mpz_t());
    }
  }
  mpz_class bound = 0;
  out.tables.assign(exact.size(), {});
  for (std::size_t a = 0; a < exact.size(); ++a) {
    for (std::size_t e = 0; e < 16; ++e) {
      mpq_class re = exact[a][e].re() * den;
      mpq_class im = exact[a][e].im() * den;
      mpz_class mag = abs(re.get_num()) + abs(im.get_num());
      if (mag > bound) bound = mag;
      if (!re.get_num().fits_slong_p() || !im.get_num().fits_slong_p()) return false;
      out.tables[a][e] = {re.get_num().get_si(), im.get_num().get_si()};
    }
  }
  // |re|,|im| of a product of f entries is at most bound^f; the sum adds |G| of them.
  mpz_class worst;
  mpz_pow_ui(worst.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(f));
  worst *= static_cast<unsigned long>(g.order());
  if (worst >= (mpz_class(1) << 62)) return false;
  out.scale = den;
  return true;
}

CoeffVector average_with_kernel(const MonomialIndex& m, const ScaledKernel& kern,
                                std::size_t group_order) {
  const int f = m.degree();
  const std::size_t n = form_dimension(f);
  std::vector<unsigned> in_code(static_cast<std::size_t>(f));
  for (int j = 0; j < f; ++j) {
    in_code[static_cast<std::size_t>(j)] = static_cast<unsigned>(
        2 * (m.row_part()[static_cast<std::size_t>(j)] - 1) + (m.col_part()[static_cast<std::size_t>(j)] - 1));
  }
  std::vector<GaussInt> acc(n);
  for (const auto& table : kern.tables) {
    // Column of K(A) selected by the input slot code, per factor.
    for (std::size_t t = 0; t < n; ++t) {
      GaussInt prod{1, 0};
      for (int j = 0; j < f; ++j) {
        const GaussInt e = table[4 * slot_code(t, f, j) + in_code[static_cast<std::size_t>(j)]];
        if (e.re == 0 && e.im == 0) {
          prod = {0, 0};
          break;
        }
        prod = gmul(prod, e);
      }
      acc[t].re += prod.re;
      acc[t].im += prod.im;
    }
  }
  mpz_class total_den;
  mpz_pow_ui(total_den.get_mpz_t(), kern.scale.get_mpz_t(), static_cast<unsigned long>(f));
  total_den *= static_cast<unsigned long>(group_order);
  CoeffVector out(f);
  for (std::size_t t = 0; t < n; ++t) {
    if (acc[t].re == 0 && acc[t].im == 0) continue;
    mpq_class re(mpz_class(static_cast<long>(acc[t].re)), total_den);
    mpq_class im(mpz_class(static_cast<long>(acc[t].im)), total_den);
    out[t] = GaussianRational(std::move(re), std::move(im));
  }
  return out;
}

}  // namespace

CoeffVector act(const CoeffVector& v, const Mat2& a) {
  return apply_tensor_power(v, single_factor_table(a));
}

CoeffVector reynolds_apply(const CoeffVector& v, const GroupTable& g) {
  CoeffVector sum(v.degree());
  for (const auto& a : g.elements()) {
    sum.add_scaled(1, act(v, a));
  }
  const GaussianRational scale(mpq_class(1, static_cast<unsigned long>(g.order())));
  for (std::size_t t = 0; t < sum.size(); ++t) {
    if (!sum[t].is_zero()) sum[t] *= scale;
  }
  return sum;
}

CoeffVector average_monomial(const MonomialIndex& m, const GroupTable& g) {
  ScaledKernel kern;
  if (build_scaled_kernel(g, m.degree(), kern)) {
    return average_with_kernel(m, kern, g.order());
  }
  return reynolds_apply(CoeffVector::unit(m), g);
}

std::vector<CoeffVector> average_monomials(std::span<const MonomialIndex> ms,
                                           const GroupTable& g, unsigned workers) {
  if (ms.empty()) return {};
  const int f = ms.front().degree();
  for (const auto& m : ms) {
    if (m.degree() != f) throw Error(ErrorCode::InvalidArgument, "mixed monomial degrees");
  }
  ScaledKernel kern;
  const bool fast = build_scaled_kernel(g, f, kern);
  auto one = [&](const MonomialIndex& m) {
    return fast ? average_with_kernel(m, kern, g.order()) : reynolds_apply(CoeffVector::unit(m), g);
  };

  std::vector<CoeffVector> out(ms.size(), CoeffVector(f));
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(ms.size())));
  if (workers == 1) {
    for (std::size_t k = 0; k < ms.size(); ++k) out[k] = one(ms[k]);
    return out;
  }
  // Strided assignment; each slot of `out` is written by exactly one thread.
  std::vector<std::jthread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t k = w; k < ms.size(); k += workers) out[k] = one(ms[k]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  pool.clear();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

// ------------------------------------------------------- typical forms

CoeffVector expand_typical(const Permutation& alpha, const Permutation& beta) {
  const int f = beta.size();
  check_degree(f);
  if (alpha.size() != f) {
    throw Error(ErrorCode::InvalidPermutation, "alpha and beta must have the same length");
  }
  CoeffVector out(f);
  // Factor k pairs xi^(alpha_k) with y^(beta_k) through a shared digit a_k.
  for (std::size_t digits = 0; digits < (std::size_t{1} << f); ++digits) {
    std::size_t t = 0;
    for (int k = 1; k <= f; ++k) {
      const std::size_t bit = (digits >> (f - k)) & 1;
      t |= bit << row_bit(f, alpha.image(k) - 1);
      t |= bit << col_bit(f, beta.image(k) - 1);
    }
    out[t] = 1;
  }
  return out;
}

CoeffVector expand_typical(const Permutation& beta, int f) {
  if (beta.size() != f) {
    throw Error(ErrorCode::InvalidPermutation,
                "permutation length " + std::to_string(beta.size()) + " does not match degree " +
                    std::to_string(f));
  }
  return expand_typical(Permutation::identity(f), beta);
}

unsigned workers_from_env() {
  const char* s = std::getenv("MLINV_WORKERS");
  if (s == nullptr || *s == '\0') return 1;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v < 1) return 1;
  return static_cast<unsigned>(std::min<long>(v, 256));
}

}  // namespace mlinv
