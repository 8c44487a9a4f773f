#include "mlinv/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "mlinv/error.hpp"
#include "mlinv/exactla.hpp"
#include "mlinv/invariant_spaces.hpp"
#include "mlinv/reference_orders.hpp"

namespace mlinv {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

constexpr std::uint64_t kSeed = 0x6d6c696e76ULL;

// Modulo reduction of raw engine output keeps the stream identical across
// standard libraries, unlike the <random> distributions.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

CoeffVector random_vector(int f, std::mt19937_64& rng, std::size_t nonzeros) {
  CoeffVector v(f);
  for (std::size_t k = 0; k < nonzeros; ++k) {
    const long re = static_cast<long>(draw(rng, 7)) - 3;
    const long im = static_cast<long>(draw(rng, 7)) - 3;
    const unsigned long den = 1 + draw(rng, 4);
    v[draw(rng, v.size())] = GaussianRational::from_ratio(re, den, im, 1);
  }
  return v;
}

std::vector<std::size_t> sample_indices(std::size_t n, std::size_t count, std::mt19937_64& rng) {
  std::vector<std::size_t> all(n);
  for (std::size_t k = 0; k < n; ++k) all[k] = k;
  if (count >= n) return all;
  // Partial Fisher-Yates.
  for (std::size_t k = 0; k < count; ++k) std::swap(all[k], all[k + draw(rng, n - k)]);
  all.resize(count);
  std::sort(all.begin(), all.end());
  return all;
}

struct Runner {
  VerifyReport& report;

  void check(std::string name, const std::function<std::pair<bool, std::string>()>& body) {
    CheckResult r{std::move(name), false, {}};
    try {
      auto [ok, detail] = body();
      r.passed = ok;
      r.detail = std::move(detail);
    } catch (const Error& e) {
      r.detail = std::string(error_code_name(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    report.checks.push_back(std::move(r));
  }
};

std::string count_detail(std::size_t got, std::uint64_t want) {
  return "computed " + std::to_string(got) + ", expected " + std::to_string(want);
}

}  // namespace

VerifyReport run_verify(int f, const GroupTable& g, unsigned workers) {
  check_degree(f);
  VerifyReport report{f, {}};
  Runner run{report};
  std::mt19937_64 rng(kSeed + static_cast<std::uint64_t>(f));
  const auto& elems = g.elements();

  run.check("group_order", [&] {
    return std::pair{g.order() == 96, std::to_string(g.order()) + " elements"};
  });
  run.check("group_closed", [&] {
    for (const auto& a : elems) {
      for (const auto& b : elems) {
        if (g.find(a * b) == g.order()) return std::pair{false, std::string("product escapes the table")};
      }
    }
    for (std::size_t k = 0; k < g.order(); ++k) {
      if (!(elems[k] * elems[g.inverse_of(k)]).is_identity()) {
        return std::pair{false, "inverse index wrong at " + std::to_string(k)};
      }
    }
    return std::pair{true, std::string("closed under product and inverse")};
  });
  run.check("element_orders_divide_group_order", [&] {
    for (const auto& a : elems) {
      Mat2 p = a;
      std::size_t n = 1;
      while (!p.is_identity() && n <= g.order()) {
        p = p * a;
        ++n;
      }
      if (g.order() % n != 0) return std::pair{false, "element of order " + std::to_string(n)};
    }
    return std::pair{true, std::string()};
  });
  run.check("schur_orthogonality", [&] {
    GaussianRational off, diag;
    for (std::size_t k = 0; k < g.order(); ++k) {
      const Mat2& a = elems[k];
      const Mat2& ainv = elems[g.inverse_of(k)];
      off.add_product(ainv(0, 0), a(1, 0));
      diag.add_product(ainv(0, 0), a(0, 0));
    }
    const GaussianRational half(static_cast<long>(g.order() / 2));
    return std::pair{off.is_zero() && diag == half,
                     "sum a'11 a21 = " + off.to_string() + ", sum a'11 a11 = " + diag.to_string()};
  });
  run.check("encode_decode_bijective", [&] {
    const std::size_t n = form_dimension(f);
    for (std::size_t t = 0; t < n; ++t) {
      if (encode(decode(t, f)) != t) return std::pair{false, "mismatch at " + std::to_string(t)};
    }
    return std::pair{true, std::to_string(n) + " positions"};
  });

  const auto order = reference_v_order(f);
  std::optional<BasisReport> v, w;
  std::optional<RelationReport> rel;
  run.check("dim_V", [&] {
    v = build_v_basis(f, g, order, BuildOptions{workers});
    return std::pair{v->dimension() == dim_v_formula(f), count_detail(v->dimension(), dim_v_formula(f))};
  });
  run.check("dim_W", [&] {
    w = build_w_basis(f);
    return std::pair{w->dimension() == catalan(f), count_detail(w->dimension(), catalan(f))};
  });
  if (!v || !w) return report;

  run.check("W_subset_V", [&] {
    rel = relate(*v, *w);
    return std::pair{true, std::to_string(w->dimension()) + " rows solved"};
  });
  if (f <= 3) {
    run.check("W_equals_V", [&] {
      return std::pair{spans_contain(*w, *v) && spans_contain(*v, *w), std::string("mutual containment")};
    });
  } else {
    run.check("W_proper_subspace", [&] {
      return std::pair{w->dimension() < v->dimension(),
                       "codimension " + std::to_string(v->dimension() - w->dimension())};
    });
  }
  if (rel) {
    run.check("relations_resubstitute", [&] {
      return std::pair{relations_resubstitute(*rel), std::string("sum a_j L_j - N_i = 0")};
    });
    run.check("coefficients_even", [&] {
      return std::pair{check_even(*rel), std::string("every a_ij in 2Z")};
    });
  }

  run.check("completion", [&] {
    if (f == 4) {
      auto ranks = single_extension_ranks(*v, *w);
      const bool ok = std::all_of(ranks.begin(), ranks.end(),
                                  [&](std::size_t r) { return r == v->dimension(); });
      return std::pair{ok, std::to_string(ranks.size()) + " single extensions checked"};
    }
    auto candidates = reference_completion(f);
    auto extra = complete_basis(f, *v, *w, candidates, g);
    return std::pair{w->dimension() + extra.size() == v->dimension(),
                     std::to_string(extra.size()) + " added to reach " + std::to_string(v->dimension())};
  });

  run.check("typical_invariants_fixed_by_group", [&] {
    auto perms = all_permutations(f);
    auto which = sample_indices(perms.size(), f <= 3 ? perms.size() : 6, rng);
    auto group_sample = sample_indices(g.order(), f <= 3 ? g.order() : 8, rng);
    for (std::size_t p : which) {
      const CoeffVector x = expand_typical(perms[p], f);
      for (std::size_t a : group_sample) {
        if (!(act(x, elems[a]) == x)) return std::pair{false, "W(id;" + perms[p].to_string() + ") moved"};
      }
    }
    return std::pair{true, std::to_string(which.size()) + " permutations x " +
                               std::to_string(group_sample.size()) + " elements"};
  });
  run.check("reynolds_fixes_typical_invariants", [&] {
    auto perms = all_permutations(f);
    auto which = sample_indices(perms.size(), f <= 3 ? perms.size() : 3, rng);
    for (std::size_t p : which) {
      const CoeffVector x = expand_typical(perms[p], f);
      if (!(reynolds_apply(x, g) == x)) return std::pair{false, perms[p].to_string()};
    }
    return std::pair{true, std::to_string(which.size()) + " permutations"};
  });
  run.check("averaged_forms_invariant", [&] {
    auto group_sample = sample_indices(g.order(), f <= 2 ? g.order() : 8, rng);
    for (std::size_t j = 0; j < v->dimension(); ++j) {
      for (std::size_t a : group_sample) {
        if (!(act(v->vectors[j], elems[a]) == v->vectors[j])) {
          return std::pair{false, "L_" + std::to_string(j + 1) + " moved"};
        }
      }
    }
    return std::pair{true, std::to_string(v->dimension()) + " basis vectors x " +
                               std::to_string(group_sample.size()) + " elements"};
  });
  run.check("reynolds_idempotent", [&] {
    const std::size_t count = f <= 4 ? 20 : 2;
    for (std::size_t k = 0; k < count; ++k) {
      const CoeffVector x = random_vector(f, rng, 3);
      const CoeffVector once = reynolds_apply(x, g);
      if (!(reynolds_apply(once, g) == once)) return std::pair{false, "vector " + std::to_string(k)};
    }
    return std::pair{true, std::to_string(count) + " random vectors"};
  });
  run.check("reynolds_matches_monomial_average", [&] {
    auto which = sample_indices(form_dimension(f), 4, rng);
    for (std::size_t t : which) {
      const MonomialIndex m = decode(t, f);
      if (!(reynolds_apply(CoeffVector::unit(m), g) == average_monomial(m, g))) {
        return std::pair{false, m.to_string()};
      }
    }
    return std::pair{true, std::to_string(which.size()) + " monomials"};
  });
  return report;
}

}  // namespace mlinv
