#include "mlinv/invariant_spaces.hpp"

#include <algorithm>
#include <string>

#include "mlinv/error.hpp"
#include "mlinv/exactla.hpp"

namespace mlinv {

namespace {

std::uint64_t to_count(const mpq_class& q, const char* what) {
  if (q.get_den() != 1 || sgn(q) < 0 || !q.get_num().fits_ulong_p()) {
    throw Error(ErrorCode::Internal, std::string(what) + " is not a non-negative integer");
  }
  return q.get_num().get_ui();
}

mpq_class pow2(int e) {
  mpq_class q(1);
  if (e >= 0) {
    q = mpz_class(1) << e;
  } else {
    q = mpq_class(1, mpz_class(1) << -e);
    q.canonicalize();
  }
  return q;
}

[[noreturn]] void dimension_mismatch(const char* space, int f, std::size_t got, std::uint64_t want) {
  throw Error(ErrorCode::DimensionMismatch,
              std::string("dim ") + space + "_" + std::to_string(f) + ": computed rank " +
                  std::to_string(got) + ", expected " + std::to_string(want));
}

// Number of monomials averaged per batch; bounds peak memory at high degree.
constexpr std::size_t kAverageBatch = 64;

}  // namespace

std::uint64_t dim_v_formula(int f) {
  check_degree(f);
  mpq_class d = pow2(f - 2) + pow2(2 * f - 3) / 3 + mpq_class(1, 3);
  d.canonicalize();
  return to_count(d, "dim V formula");
}

std::uint64_t catalan(int f) {
  check_degree(f);
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * f), static_cast<unsigned long>(f));
  mpq_class c(binom, f + 1);
  c.canonicalize();
  return to_count(c, "Catalan number");
}

std::string provenance_label(const Provenance& p) {
  if (const auto* m = std::get_if<MonomialIndex>(&p)) return m->to_string();
  return std::get<Permutation>(p).to_string();
}

BasisReport build_v_basis(int f, const GroupTable& g,
                          const std::optional<std::vector<MonomialIndex>>& forced_order,
                          BuildOptions opts) {
  check_degree(f);
  const std::size_t n = form_dimension(f);
  std::vector<MonomialIndex> order;
  std::vector<bool> taken(n, false);
  if (forced_order) {
    for (const auto& m : *forced_order) {
      if (m.degree() != f) {
        throw Error(ErrorCode::InvalidArgument,
                    "forced monomial " + m.to_string() + " has degree " + std::to_string(m.degree()) +
                        ", expected " + std::to_string(f));
      }
      const std::size_t t = encode(m);
      if (taken[t]) continue;
      taken[t] = true;
      order.push_back(m);
    }
  }
  for (std::size_t t = 0; t < n; ++t) {
    if (!taken[t]) order.push_back(decode(t, f));
  }

  BasisReport rep{f, SpaceTag::V, {}, {}};
  EchelonSpan span(f);
  for (std::size_t start = 0; start < order.size(); start += kAverageBatch) {
    const std::size_t stop = std::min(order.size(), start + kAverageBatch);
    std::span<const MonomialIndex> batch(order.data() + start, stop - start);
    auto averaged = average_monomials(batch, g, opts.workers);
    for (std::size_t k = 0; k < averaged.size(); ++k) {
      if (averaged[k].is_zero()) continue;
      if (span.insert(averaged[k])) {
        rep.vectors.push_back(std::move(averaged[k]));
        rep.provenance.emplace_back(batch[k]);
      }
    }
  }
  if (rep.dimension() != dim_v_formula(f)) dimension_mismatch("V", f, rep.dimension(), dim_v_formula(f));
  return rep;
}

BasisReport build_w_basis(int f) {
  check_degree(f);
  BasisReport rep{f, SpaceTag::W, {}, {}};
  EchelonSpan span(f);
  for (auto& beta : all_permutations(f)) {
    CoeffVector v = expand_typical(beta, f);
    if (span.insert(v)) {
      rep.vectors.push_back(std::move(v));
      rep.provenance.emplace_back(std::move(beta));
    }
  }
  if (rep.dimension() != catalan(f)) dimension_mismatch("W", f, rep.dimension(), catalan(f));
  return rep;
}

RelationReport relate(const BasisReport& v, const BasisReport& w) {
  if (v.f != w.f) throw Error(ErrorCode::InvalidArgument, "V and W bases have different degrees");
  RelationReport rep;
  rep.f = v.f;
  rep.v_basis = v;
  rep.w_basis = w;
  SpanSolver solver(v.vectors);
  for (std::size_t i = 0; i < w.vectors.size(); ++i) {
    try {
      rep.rows.push_back(solver.solve(w.vectors[i]));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotInSpan) throw;
      throw Error(ErrorCode::NotInSpan, "N_" + std::to_string(i + 1) + " (" +
                                            provenance_label(w.provenance[i]) +
                                            ") is not in the span of the V basis");
    }
  }
  rep.all_even = check_even(rep);

  EchelonSpan span(v.f);
  for (const auto& x : w.vectors) span.insert(x);
  for (std::size_t j = 0; j < v.vectors.size() && span.rank() < v.dimension(); ++j) {
    if (span.insert(v.vectors[j])) {
      if (const auto* m = std::get_if<MonomialIndex>(&v.provenance[j])) rep.extra_invariants.push_back(*m);
    }
  }
  return rep;
}

std::vector<MonomialIndex> complete_basis(int f, const BasisReport& v, const BasisReport& w,
                                          const std::optional<std::vector<MonomialIndex>>& candidates,
                                          const GroupTable& g) {
  if (v.f != f || w.f != f) throw Error(ErrorCode::InvalidArgument, "basis degree mismatch");
  if (w.dimension() > v.dimension()) {
    throw Error(ErrorCode::InvalidArgument, "W basis is larger than V basis");
  }
  EchelonSpan span(f);
  for (const auto& x : w.vectors) {
    if (!span.insert(x)) throw Error(ErrorCode::DependentBasis, "W basis is not independent");
  }

  std::vector<MonomialIndex> accepted;
  if (candidates) {
    for (const auto& m : *candidates) {
      if (m.degree() != f) throw Error(ErrorCode::InvalidArgument, "candidate degree mismatch");
    }
    auto averaged = average_monomials(*candidates, g);
    for (std::size_t k = 0; k < averaged.size(); ++k) {
      if (!span.insert(averaged[k])) {
        throw Error(ErrorCode::InsufficientCandidates,
                    "candidate " + (*candidates)[k].to_string() +
                        " is dependent on the W basis and earlier candidates");
      }
      accepted.push_back((*candidates)[k]);
    }
    if (span.rank() != v.dimension()) {
      throw Error(ErrorCode::InsufficientCandidates,
                  "candidates reach rank " + std::to_string(span.rank()) + ", need " +
                      std::to_string(v.dimension()));
    }
    return accepted;
  }

  for (std::size_t j = 0; j < v.vectors.size() && span.rank() < v.dimension(); ++j) {
    if (span.insert(v.vectors[j])) {
      const auto* m = std::get_if<MonomialIndex>(&v.provenance[j]);
      if (m == nullptr) throw Error(ErrorCode::InvalidArgument, "V basis lacks monomial provenance");
      accepted.push_back(*m);
    }
  }
  if (span.rank() != v.dimension()) {
    throw Error(ErrorCode::InsufficientCandidates, "V basis does not complete W");
  }
  return accepted;
}

bool is_even_integer(const GaussianRational& x) {
  return x.is_real() && x.re().get_den() == 1 && mpz_even_p(x.re().get_num_mpz_t()) != 0;
}

bool check_even(const RelationReport& r) {
  for (const auto& row : r.rows) {
    if (!std::all_of(row.begin(), row.end(), is_even_integer)) return false;
  }
  return true;
}

bool spans_contain(const BasisReport& b, const BasisReport& a) {
  EchelonSpan span(b.f);
  for (const auto& x : b.vectors) span.insert(x);
  return std::all_of(a.vectors.begin(), a.vectors.end(),
                     [&](const CoeffVector& x) { return span.contains(x); });
}

std::vector<std::size_t> single_extension_ranks(const BasisReport& v, const BasisReport& w) {
  EchelonSpan base(w.f);
  for (const auto& x : w.vectors) base.insert(x);
  std::vector<std::size_t> ranks;
  for (const auto& x : v.vectors) {
    EchelonSpan ext = base;
    ext.insert(x);
    ranks.push_back(ext.rank());
  }
  return ranks;
}

bool relations_resubstitute(const RelationReport& r) {
  if (r.rows.size() != r.w_basis.vectors.size()) return false;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    if (!(linear_combination(r.v_basis.vectors, r.rows[i]) == r.w_basis.vectors[i])) return false;
  }
  return true;
}

}  // namespace mlinv
