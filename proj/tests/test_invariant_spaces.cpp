#include <doctest.h>

#include "mlinv/exactla.hpp"
#include "mlinv/invariant_spaces.hpp"
#include "mlinv/reference_orders.hpp"
#include "oracle.hpp"
#include "tables.hpp"

using mlinv::BasisReport;
using mlinv::ErrorCode;
using mlinv::GaussianRational;
using mlinv::MonomialIndex;
using oracle::code_of;

namespace {

MonomialIndex mi(const char* s) { return MonomialIndex::parse(s); }

std::vector<MonomialIndex> mis(const std::vector<const char*>& xs) {
  std::vector<MonomialIndex> out;
  for (const char* s : xs) out.push_back(mi(s));
  return out;
}

std::vector<std::vector<GaussianRational>> exact(const tables::Rows& rows) {
  std::vector<std::vector<GaussianRational>> out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

std::vector<std::string> labels(const BasisReport& b) {
  std::vector<std::string> out;
  for (const auto& p : b.provenance) out.push_back(mlinv::provenance_label(p));
  return out;
}

mlinv::RelationReport relate_forced(int f, const std::vector<MonomialIndex>& order) {
  const auto& g = mlinv::default_group();
  return mlinv::relate(mlinv::build_v_basis(f, g, order), mlinv::build_w_basis(f));
}

}  // namespace

TEST_CASE("dimension formulas") {
  const std::vector<std::uint64_t> v{1, 2, 5, 15, 51, 187};
  const std::vector<std::uint64_t> w{1, 2, 5, 14, 42, 132};
  for (int f = 1; f <= 6; ++f) {
    CHECK(mlinv::dim_v_formula(f) == v[static_cast<std::size_t>(f - 1)]);
    CHECK(mlinv::catalan(f) == w[static_cast<std::size_t>(f - 1)]);
  }
  CHECK(mlinv::catalan(12) == 208012);
  CHECK(code_of([] { (void)mlinv::dim_v_formula(0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { (void)mlinv::catalan(-1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("V and W bases for small degrees") {
  const auto& g = mlinv::default_group();
  const BasisReport v1 = mlinv::build_v_basis(1, g);
  CHECK(labels(v1) == std::vector<std::string>{"1,1"});
  CHECK(labels(mlinv::build_w_basis(1)) == std::vector<std::string>{"1"});
  CHECK(labels(mlinv::build_w_basis(2)) == std::vector<std::string>{"12", "21"});
  CHECK(labels(mlinv::build_v_basis(2, g)) == std::vector<std::string>{"11,11", "12,12"});

  const BasisReport v3 = mlinv::build_v_basis(3, g, mis(tables::kV3Order));
  CHECK(labels(v3) == std::vector<std::string>(tables::kV3Order.begin(), tables::kV3Order.end()));
  CHECK(labels(mlinv::build_w_basis(3)) == std::vector<std::string>{"123", "132", "213", "231", "312"});

  // duplicates in a forced order are skipped
  const BasisReport dup = mlinv::build_v_basis(2, g, mis({"12,12", "12,12"}));
  CHECK(labels(dup) == std::vector<std::string>{"12,12", "11,11"});
  CHECK(code_of([&] { (void)mlinv::build_v_basis(2, g, mis({"1,1"})); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("degree four bases follow encoding order") {
  const auto& g = mlinv::default_group();
  const BasisReport v4 = mlinv::build_v_basis(4, g);
  CHECK(labels(v4) == std::vector<std::string>(tables::kV4Order.begin(), tables::kV4Order.end()));
  const BasisReport w4 = mlinv::build_w_basis(4);
  CHECK(labels(w4) == std::vector<std::string>(tables::kW4Betas.begin(), tables::kW4Betas.end()));
}

TEST_CASE("workers give the same basis") {
  const auto& g = mlinv::default_group();
  const BasisReport a = mlinv::build_v_basis(3, g, std::nullopt, {1});
  const BasisReport b = mlinv::build_v_basis(3, g, std::nullopt, {4});
  CHECK(a.vectors == b.vectors);
  CHECK(labels(a) == labels(b));
}

TEST_CASE("relation tables") {
  const auto r1 = relate_forced(1, mis({"1,1"}));
  CHECK(r1.rows == exact(tables::kRows1));

  const auto r2 = relate_forced(2, mis({"12,12", "11,11"}));
  CHECK(r2.rows == exact(tables::kRows2));
  const auto r2_listed = relate_forced(2, mis({"11,11", "12,12"}));
  CHECK(r2_listed.rows == exact({{2, 2}, {4, -2}}));

  const auto r3 = relate_forced(3, mis(tables::kV3Order));
  CHECK(r3.rows == exact(tables::kRows3));
  CHECK(r3.extra_invariants.empty());

  const auto r4 = relate_forced(4, mis(tables::kV4Order));
  CHECK(r4.rows == exact(tables::kRows4));
  CHECK(r4.extra_invariants.size() == 1);

  for (const auto* r : {&r1, &r2, &r3, &r4}) {
    CHECK(r->all_even);
    CHECK(mlinv::check_even(*r));
    CHECK(mlinv::relations_resubstitute(*r));
  }
}

TEST_CASE("relate rejects vectors outside V") {
  const auto& g = mlinv::default_group();
  BasisReport v = mlinv::build_v_basis(2, g);
  v.vectors.pop_back();
  v.provenance.pop_back();
  CHECK(code_of([&] { (void)mlinv::relate(v, mlinv::build_w_basis(2)); }) == ErrorCode::NotInSpan);
  CHECK(code_of([&] { (void)mlinv::relate(mlinv::build_v_basis(1, g), mlinv::build_w_basis(2)); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("subspace relations") {
  const auto& g = mlinv::default_group();
  for (int f = 1; f <= 4; ++f) {
    const BasisReport v = mlinv::build_v_basis(f, g);
    const BasisReport w = mlinv::build_w_basis(f);
    CHECK(mlinv::spans_contain(v, w));
    CHECK(mlinv::spans_contain(w, v) == (f <= 3));
  }
}

TEST_CASE("completion") {
  const auto& g = mlinv::default_group();
  const BasisReport v3 = mlinv::build_v_basis(3, g);
  const BasisReport w3 = mlinv::build_w_basis(3);
  CHECK(mlinv::complete_basis(3, v3, w3, std::nullopt, g).empty());
  CHECK(mlinv::complete_basis(3, v3, w3, std::vector<MonomialIndex>{}, g).empty());

  const BasisReport v4 = mlinv::build_v_basis(4, g);
  const BasisReport w4 = mlinv::build_w_basis(4);
  for (const char* m : tables::kV4Order) {
    CAPTURE(m);
    CHECK(mlinv::complete_basis(4, v4, w4, mis({m}), g) == mis({m}));
  }
  CHECK(mlinv::single_extension_ranks(v4, w4) == std::vector<std::size_t>(15, 15));
  CHECK(mlinv::complete_basis(4, v4, w4, std::nullopt, g) == mis({"1111,1111"}));

  CHECK(code_of([&] { (void)mlinv::complete_basis(4, v4, w4, std::vector<MonomialIndex>{}, g); }) ==
        ErrorCode::InsufficientCandidates);
  // a monomial with zero average cannot help
  CHECK(mlinv::average_monomial(mi("1111,1112"), g).is_zero());
  CHECK(code_of([&] { (void)mlinv::complete_basis(4, v4, w4, mis({"1111,1112"}), g); }) ==
        ErrorCode::InsufficientCandidates);
  CHECK(code_of([&] { (void)mlinv::complete_basis(4, v4, w4, mis({"1111,1111", "1111,2222"}), g); }) ==
        ErrorCode::InsufficientCandidates);
}

TEST_CASE("even integers") {
  CHECK(mlinv::is_even_integer(GaussianRational(2)));
  CHECK(mlinv::is_even_integer(GaussianRational(0)));
  CHECK(mlinv::is_even_integer(GaussianRational(-4)));
  CHECK(!mlinv::is_even_integer(GaussianRational(3)));
  CHECK(!mlinv::is_even_integer(GaussianRational::from_ratio(1, 2)));
  CHECK(!mlinv::is_even_integer(GaussianRational::from_ratio(0, 1, 2, 1)));
  CHECK(!mlinv::is_even_integer(GaussianRational::from_ratio(2, 1, 2, 1)));
}

TEST_CASE("monomial lists") {
  const auto ms = mlinv::parse_monomial_list("# header\n121,112\n\n  111,111  # trailing\r\n");
  CHECK(ms == mis({"121,112", "111,111"}));
  try {
    (void)mlinv::parse_monomial_list("11,11\n12,3\n");
    FAIL("expected a parse error");
  } catch (const mlinv::Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  for (int f = 1; f <= 5; ++f) {
    const auto order = mlinv::reference_v_order(f);
    REQUIRE(order.has_value());
    CHECK(order->size() == mlinv::dim_v_formula(f));
  }
  CHECK(!mlinv::reference_v_order(6).has_value());
  CHECK(mlinv::reference_completion(5)->size() == 9);
}
