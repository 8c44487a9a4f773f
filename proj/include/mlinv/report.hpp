#pragma once

// Text renderings of library results: compact JSON (one line), a
// human-readable table, and CSV. Coefficients are always exact strings.

#include <string>
#include <vector>

#include "mlinv/invariant_spaces.hpp"
#include "mlinv/matgroup.hpp"
#include "mlinv/verify.hpp"

namespace mlinv {

enum class OutputFormat { Json, Table, Csv };

// Parses "json" | "table" | "csv"; throws Error(InvalidArgument).
OutputFormat parse_output_format(const std::string& name);

struct DimsReport {
  int f = 0;
  std::size_t dim_v = 0;
  std::size_t dim_w = 0;
};

struct CompletionReport {
  int f = 0;
  std::size_t dim_v = 0;
  std::size_t dim_w = 0;
  std::string source;  // "candidates" | "reference" | "greedy"
  std::vector<MonomialIndex> accepted;
};

// {"f":n,"coeffs":[{"pos":t,"val":"..."}, ...]} with nonzero positions only.
std::string coeff_vector_json(const CoeffVector& v);

std::string render(const GroupTable& g, OutputFormat fmt);
std::string render(const DimsReport& d, OutputFormat fmt);
std::string render(const BasisReport& b, OutputFormat fmt);
std::string render(const RelationReport& r, OutputFormat fmt);
std::string render(const CompletionReport& c, OutputFormat fmt);
std::string render(const VerifyReport& v, OutputFormat fmt);

// {"error":{"code":"...","message":"..."}}
std::string error_json(const std::string& code, const std::string& message);

}  // namespace mlinv
