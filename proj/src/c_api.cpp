#include "mlinv/mlinv.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "mlinv/error.hpp"
#include "mlinv/invariant_spaces.hpp"
#include "mlinv/reference_orders.hpp"
#include "mlinv/report.hpp"
#include "mlinv/verify.hpp"

struct mlinv_group {
  mlinv::GroupTable table;
};

struct mlinv_basis {
  mlinv::BasisReport report;
};

struct mlinv_relation {
  mlinv::RelationReport report;
};

namespace {

thread_local std::string g_last_error;

mlinv_status fail(mlinv_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Runs body, mapping exceptions onto status codes.
template <class F>
mlinv_status guarded(F&& body) {
  try {
    body();
    return MLINV_OK;
  } catch (const mlinv::Error& e) {
    return fail(static_cast<mlinv_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MLINV_E_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(MLINV_E_INTERNAL, e.what());
  } catch (...) {
    return fail(MLINV_E_INTERNAL, "unknown exception");
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(bool cond, const char* what) {
  if (!cond) throw mlinv::Error(mlinv::ErrorCode::InvalidArgument, what);
}

mlinv::OutputFormat to_format(mlinv_format f) {
  switch (f) {
    case MLINV_FORMAT_JSON: return mlinv::OutputFormat::Json;
    case MLINV_FORMAT_TABLE: return mlinv::OutputFormat::Table;
    case MLINV_FORMAT_CSV: return mlinv::OutputFormat::Csv;
  }
  throw mlinv::Error(mlinv::ErrorCode::InvalidArgument, "unknown output format");
}

std::string monomial_lines(const std::vector<mlinv::MonomialIndex>& ms) {
  std::string s;
  for (const auto& m : ms) s += m.to_string() + "\n";
  return s;
}

}  // namespace

extern "C" {

const char* mlinv_version(void) { return "1.0.0"; }

const char* mlinv_status_name(mlinv_status status) {
  return mlinv::error_code_name(static_cast<mlinv::ErrorCode>(static_cast<int>(status)));
}

const char* mlinv_last_error(void) { return g_last_error.c_str(); }

void mlinv_string_free(char* s) { std::free(s); }

mlinv_status mlinv_gr_normalize(const char* x, char** out) {
  return guarded([&] {
    require(x && out, "null argument");
    *out = dup_string(mlinv::GaussianRational::parse(x).to_string());
  });
}

mlinv_status mlinv_gr_add(const char* x, const char* y, char** out) {
  return guarded([&] {
    require(x && y && out, "null argument");
    *out = dup_string(mlinv::add(mlinv::GaussianRational::parse(x), mlinv::GaussianRational::parse(y)).to_string());
  });
}

mlinv_status mlinv_gr_mul(const char* x, const char* y, char** out) {
  return guarded([&] {
    require(x && y && out, "null argument");
    *out = dup_string(mlinv::mul(mlinv::GaussianRational::parse(x), mlinv::GaussianRational::parse(y)).to_string());
  });
}

mlinv_status mlinv_gr_inv(const char* x, char** out) {
  return guarded([&] {
    require(x && out, "null argument");
    *out = dup_string(mlinv::inv(mlinv::GaussianRational::parse(x)).to_string());
  });
}

mlinv_status mlinv_dim_v_formula(int f, uint64_t* out) {
  return guarded([&] {
    require(out, "null argument");
    *out = mlinv::dim_v_formula(f);
  });
}

mlinv_status mlinv_catalan(int f, uint64_t* out) {
  return guarded([&] {
    require(out, "null argument");
    *out = mlinv::catalan(f);
  });
}

mlinv_status mlinv_group_create_default(mlinv_group** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = new mlinv_group{mlinv::default_group()};
  });
}

mlinv_status mlinv_group_create(const char* const* entries, size_t generator_count, size_t cap,
                                mlinv_group** out) {
  return guarded([&] {
    require(out && (entries || generator_count == 0), "null argument");
    std::vector<mlinv::Mat2> gens;
    for (size_t k = 0; k < generator_count; ++k) {
      const char* const* e = entries + 4 * k;
      require(e[0] && e[1] && e[2] && e[3], "null matrix entry");
      gens.emplace_back(mlinv::GaussianRational::parse(e[0]), mlinv::GaussianRational::parse(e[1]),
                        mlinv::GaussianRational::parse(e[2]), mlinv::GaussianRational::parse(e[3]));
    }
    *out = new mlinv_group{mlinv::closure(gens, cap)};
  });
}

void mlinv_group_destroy(mlinv_group* g) { delete g; }

size_t mlinv_group_order(const mlinv_group* g) { return g ? g->table.order() : 0; }

mlinv_status mlinv_group_render(const mlinv_group* g, mlinv_format format, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = dup_string(mlinv::render(g->table, to_format(format)));
  });
}

mlinv_status mlinv_vbasis_build(const mlinv_group* g, int f, const char* forced_order,
                                unsigned workers, mlinv_basis** out) {
  return guarded([&] {
    require(g && out, "null argument");
    std::optional<std::vector<mlinv::MonomialIndex>> forced;
    if (forced_order != nullptr) forced = mlinv::parse_monomial_list(forced_order);
    *out = new mlinv_basis{mlinv::build_v_basis(f, g->table, forced, mlinv::BuildOptions{workers})};
  });
}

mlinv_status mlinv_wbasis_build(int f, mlinv_basis** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = new mlinv_basis{mlinv::build_w_basis(f)};
  });
}

void mlinv_basis_destroy(mlinv_basis* b) { delete b; }

size_t mlinv_basis_dimension(const mlinv_basis* b) { return b ? b->report.dimension() : 0; }

int mlinv_basis_degree(const mlinv_basis* b) { return b ? b->report.f : 0; }

mlinv_status mlinv_basis_label(const mlinv_basis* b, size_t index, char** out) {
  return guarded([&] {
    require(b && out, "null argument");
    require(index < b->report.dimension(), "basis index out of range");
    *out = dup_string(mlinv::provenance_label(b->report.provenance[index]));
  });
}

mlinv_status mlinv_basis_vector_json(const mlinv_basis* b, size_t index, char** out) {
  return guarded([&] {
    require(b && out, "null argument");
    require(index < b->report.dimension(), "basis index out of range");
    *out = dup_string(mlinv::coeff_vector_json(b->report.vectors[index]));
  });
}

mlinv_status mlinv_basis_render(const mlinv_basis* b, mlinv_format format, char** out) {
  return guarded([&] {
    require(b && out, "null argument");
    *out = dup_string(mlinv::render(b->report, to_format(format)));
  });
}

mlinv_status mlinv_reference_v_order(int f, char** out) {
  return guarded([&] {
    require(out, "null argument");
    auto order = mlinv::reference_v_order(f);
    require(order.has_value(), "no reference order for this degree");
    *out = dup_string(monomial_lines(*order));
  });
}

mlinv_status mlinv_relate(const mlinv_basis* v, const mlinv_basis* w, mlinv_relation** out) {
  return guarded([&] {
    require(v && w && out, "null argument");
    require(v->report.space == mlinv::SpaceTag::V && w->report.space == mlinv::SpaceTag::W,
            "relate expects a V basis and a W basis");
    *out = new mlinv_relation{mlinv::relate(v->report, w->report)};
  });
}

void mlinv_relation_destroy(mlinv_relation* r) { delete r; }

int mlinv_relation_all_even(const mlinv_relation* r) { return r && r->report.all_even ? 1 : 0; }

size_t mlinv_relation_rows(const mlinv_relation* r) { return r ? r->report.rows.size() : 0; }

size_t mlinv_relation_cols(const mlinv_relation* r) { return r ? r->report.v_basis.dimension() : 0; }

mlinv_status mlinv_relation_coefficient(const mlinv_relation* r, size_t row, size_t col, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    require(row < r->report.rows.size() && col < r->report.v_basis.dimension(), "index out of range");
    *out = dup_string(r->report.rows[row][col].to_string());
  });
}

mlinv_status mlinv_relation_render(const mlinv_relation* r, mlinv_format format, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = dup_string(mlinv::render(r->report, to_format(format)));
  });
}

mlinv_status mlinv_complete(const mlinv_group* g, const mlinv_basis* v, const mlinv_basis* w,
                            const char* candidates, mlinv_format format, char** out) {
  return guarded([&] {
    require(g && v && w && out, "null argument");
    const int f = v->report.f;
    std::optional<std::vector<mlinv::MonomialIndex>> list;
    if (candidates != nullptr) list = mlinv::parse_monomial_list(candidates);
    mlinv::CompletionReport rep{f, v->report.dimension(), w->report.dimension(),
                                list ? "candidates" : "greedy", {}};
    rep.accepted = mlinv::complete_basis(f, v->report, w->report, list, g->table);
    *out = dup_string(mlinv::render(rep, to_format(format)));
  });
}

mlinv_status mlinv_dims_render(const mlinv_group* g, int f, unsigned workers, mlinv_format format,
                               char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    mlinv::DimsReport d{f, mlinv::build_v_basis(f, g->table, std::nullopt, mlinv::BuildOptions{workers}).dimension(),
                        mlinv::build_w_basis(f).dimension()};
    *out = dup_string(mlinv::render(d, to_format(format)));
  });
}

mlinv_status mlinv_verify(const mlinv_group* g, int f, unsigned workers, mlinv_format format,
                          char** out, int* all_passed) {
  return guarded([&] {
    require(g && out && all_passed, "null argument");
    mlinv::VerifyReport rep = mlinv::run_verify(f, g->table, workers);
    *out = dup_string(mlinv::render(rep, to_format(format)));
    *all_passed = rep.passed() ? 1 : 0;
  });
}

}  // extern "C"
