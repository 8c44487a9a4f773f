#pragma once

// Test-only oracles. Forms are checked by evaluating them at points instead
// of comparing coefficient bookkeeping: a coefficient vector is evaluated as
// a polynomial, and group actions are applied to the vectors xi^(j), y^(j)
// themselves.

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "mlinv/error.hpp"
#include "mlinv/exactfield.hpp"
#include "mlinv/formspace.hpp"
#include "mlinv/matgroup.hpp"

namespace oracle {

using mlinv::GaussianRational;
using Vec2 = std::array<GaussianRational, 2>;

struct Point {
  std::vector<Vec2> xi;  // row vectors
  std::vector<Vec2> y;   // column vectors
};

// Error code thrown by fn, Ok when it returns normally.
inline mlinv::ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const mlinv::Error& e) {
    return e.code();
  }
  return mlinv::ErrorCode::Ok;
}

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

inline GaussianRational small_gaussian(std::mt19937_64& rng) {
  const long re = static_cast<long>(draw(rng, 11)) - 5;
  const long im = static_cast<long>(draw(rng, 11)) - 5;
  const unsigned long den = 1 + draw(rng, 3);
  return GaussianRational::from_ratio(re, den, im, 1);
}

inline Point random_point(int f, std::mt19937_64& rng) {
  Point p;
  for (int j = 0; j < f; ++j) {
    p.xi.push_back({small_gaussian(rng), small_gaussian(rng)});
    p.y.push_back({small_gaussian(rng), small_gaussian(rng)});
  }
  return p;
}

// Digits (0/1) of position t: i_1..i_f then k_1..k_f, most significant first.
inline std::vector<int> digits_of(std::size_t t, int f) {
  std::vector<int> d(static_cast<std::size_t>(2 * f));
  for (int b = 2 * f - 1; b >= 0; --b) {
    d[static_cast<std::size_t>(b)] = static_cast<int>(t & 1);
    t >>= 1;
  }
  return d;
}

inline GaussianRational evaluate(const mlinv::CoeffVector& v, const Point& p) {
  const int f = v.degree();
  GaussianRational total;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t].is_zero()) continue;
    const auto d = digits_of(t, f);
    GaussianRational term = v[t];
    for (int j = 0; j < f; ++j) {
      term *= p.xi[static_cast<std::size_t>(j)][static_cast<std::size_t>(d[static_cast<std::size_t>(j)])];
      term *= p.y[static_cast<std::size_t>(j)][static_cast<std::size_t>(d[static_cast<std::size_t>(f + j)])];
    }
    total += term;
  }
  return total;
}

// (xi A^{-1}, A y) applied to every vector of the point.
inline Point transform(const Point& p, const mlinv::Mat2& a) {
  const mlinv::Mat2 ainv = mlinv::mat_inv(a);
  Point q;
  for (std::size_t j = 0; j < p.xi.size(); ++j) {
    Vec2 xi, y;
    for (int c = 0; c < 2; ++c) {
      xi[static_cast<std::size_t>(c)] = p.xi[j][0] * ainv(0, c) + p.xi[j][1] * ainv(1, c);
      y[static_cast<std::size_t>(c)] = a(c, 0) * p.y[j][0] + a(c, 1) * p.y[j][1];
    }
    q.xi.push_back(xi);
    q.y.push_back(y);
  }
  return q;
}

// prod_j xi^(j)_{i_j} y^(j)_{k_j} for digits in {1,2}.
inline GaussianRational evaluate_elementary(const mlinv::MonomialIndex& m, const Point& p) {
  GaussianRational r = 1;
  for (int j = 0; j < m.degree(); ++j) {
    r *= p.xi[static_cast<std::size_t>(j)][m.row_part()[static_cast<std::size_t>(j)] - 1u];
    r *= p.y[static_cast<std::size_t>(j)][m.col_part()[static_cast<std::size_t>(j)] - 1u];
  }
  return r;
}

// (1/|G|) sum_A L(xi A^{-1}; A y) for the elementary form L of m.
inline GaussianRational evaluate_averaged(const mlinv::MonomialIndex& m, const mlinv::GroupTable& g,
                                          const Point& p) {
  GaussianRational s;
  for (const auto& a : g.elements()) s += evaluate_elementary(m, transform(p, a));
  return s / GaussianRational(static_cast<long>(g.order()));
}

// prod_k <xi^(alpha_k), y^(beta_k)>
inline GaussianRational evaluate_typical(const mlinv::Permutation& alpha, const mlinv::Permutation& beta,
                                         const Point& p) {
  GaussianRational r = 1;
  for (int k = 1; k <= beta.size(); ++k) {
    const Vec2& xi = p.xi[static_cast<std::size_t>(alpha.image(k) - 1)];
    const Vec2& y = p.y[static_cast<std::size_t>(beta.image(k) - 1)];
    r *= xi[0] * y[0] + xi[1] * y[1];
  }
  return r;
}

inline mlinv::CoeffVector random_vector(int f, std::mt19937_64& rng, std::size_t nonzeros) {
  mlinv::CoeffVector v(f);
  for (std::size_t k = 0; k < nonzeros; ++k) v[draw(rng, v.size())] = small_gaussian(rng);
  return v;
}

}  // namespace oracle
