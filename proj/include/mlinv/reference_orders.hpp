#pragma once

// Basis orders under which the standard coefficient tables for f <= 5 are
// reproduced, and the standard completion of W_5.

#include <optional>
#include <string_view>
#include <vector>

#include "mlinv/formspace.hpp"

namespace mlinv {

// Ordered V basis monomials for f = 1..5, nullopt otherwise.
//
// f = 2 lists L(12,12) before L(11,11); with that order the W_2 rows are
// N_1 = [2, 2], N_2 = [-2, 4]. For f = 4 and f = 5 the order equals the
// greedy encoding-order basis.
std::optional<std::vector<MonomialIndex>> reference_v_order(int f);

// Monomials completing W_f to V_f: f = 5 gives the nine standard ones,
// f <= 3 an empty list, nullopt otherwise (f = 4 accepts any V basis vector).
std::optional<std::vector<MonomialIndex>> reference_completion(int f);

// One monomial "i..i,k..k" per line; blank lines and '#' comments ignored.
// Throws Error(Parse) with the offending line number.
std::vector<MonomialIndex> parse_monomial_list(std::string_view text);

}  // namespace mlinv
