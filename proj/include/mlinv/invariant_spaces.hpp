#pragma once

/*
 * The two invariant spaces of degree f and how they relate.
 *
 *   V_f  span of the Reynolds averages of all 4^f elementary forms,
 *        dim V_f = 2^{f-2} + 2^{2f-3}/3 + 1/3.
 *   W_f  span of the typical invariants W(id; beta), beta in S_f,
 *        dim W_f = Catalan(f).
 *
 * W_f is a subspace of V_f; the relation report expresses each W basis
 * vector N_i over the V basis and, when W_f is smaller, names averaged
 * monomials that complete the W basis to a basis of V_f.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mlinv/exactfield.hpp"
#include "mlinv/formspace.hpp"
#include "mlinv/matgroup.hpp"

namespace mlinv {

std::uint64_t dim_v_formula(int f);
std::uint64_t catalan(int f);

enum class SpaceTag { V, W };

using Provenance = std::variant<MonomialIndex, Permutation>;

std::string provenance_label(const Provenance& p);

struct BasisReport {
  int f = 0;
  SpaceTag space = SpaceTag::V;
  std::vector<CoeffVector> vectors;
  std::vector<Provenance> provenance;

  std::size_t dimension() const noexcept { return vectors.size(); }
};

struct RelationReport {
  int f = 0;
  BasisReport v_basis;
  BasisReport w_basis;
  // rows[i][j]: coefficient of the j-th V basis vector in N_{i+1}.
  std::vector<std::vector<GaussianRational>> rows;
  bool all_even = false;
  std::vector<MonomialIndex> extra_invariants;
};

struct BuildOptions {
  unsigned workers = 1;
};

// Averages the forced monomials first, then every other monomial in encoding
// order, keeping a greedy independent subset. Throws
// Error(DimensionMismatch) if the rank differs from dim_v_formula(f).
BasisReport build_v_basis(int f, const GroupTable& g,
                          const std::optional<std::vector<MonomialIndex>>& forced_order = std::nullopt,
                          BuildOptions opts = {});

// Typical invariants for all beta in lexicographic order, greedy independent
// subset. Throws Error(DimensionMismatch) if the rank differs from catalan(f).
BasisReport build_w_basis(int f);

// Expresses each W basis vector over the V basis. Throws Error(NotInSpan)
// if some N_i lies outside the span of the V basis. extra_invariants is
// filled by a greedy completion over the V basis provenance.
RelationReport relate(const BasisReport& v, const BasisReport& w);

// Monomials whose averages extend the W basis to a basis of V_f.
//
// With `candidates`, every listed monomial must raise the rank and the final
// rank must reach dim v; otherwise Error(InsufficientCandidates). Without
// candidates, the V basis provenance is scanned greedily.
std::vector<MonomialIndex> complete_basis(int f, const BasisReport& v, const BasisReport& w,
                                          const std::optional<std::vector<MonomialIndex>>& candidates,
                                          const GroupTable& g);

// im = 0, denominator 1, numerator divisible by 2.
bool is_even_integer(const GaussianRational& x);

bool check_even(const RelationReport& r);

// Every vector of `a` lies in the span of `b`.
bool spans_contain(const BasisReport& b, const BasisReport& a);

// For each V basis vector, the rank of the W basis with that one vector appended.
std::vector<std::size_t> single_extension_ranks(const BasisReport& v, const BasisReport& w);

// Re-substitutes every relation row; true iff sum_j a_ij L_j == N_i exactly.
bool relations_resubstitute(const RelationReport& r);

}  // namespace mlinv
