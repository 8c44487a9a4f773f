#include "mlinv/reference_orders.hpp"

#include <initializer_list>
#include <string>

#include "mlinv/error.hpp"

namespace mlinv {

namespace {

std::vector<MonomialIndex> parse_all(std::initializer_list<const char*> labels) {
  std::vector<MonomialIndex> out;
  out.reserve(labels.size());
  for (const char* s : labels) out.push_back(MonomialIndex::parse(s));
  return out;
}

}  // namespace

std::optional<std::vector<MonomialIndex>> reference_v_order(int f) {
  switch (f) {
    case 1:
      return parse_all({"1,1"});
    case 2:
      return parse_all({"12,12", "11,11"});
    case 3:
      return parse_all({"121,121", "121,112", "112,121", "112,112", "111,111"});
    case 4:
      return parse_all({"1111,1111", "1111,2222", "1112,1112", "1112,1121", "1112,1211",
                        "1121,1112", "1121,1121", "1121,1211", "1122,1122", "1122,1212",
                        "1211,1112", "1211,1121", "1211,1211", "1212,1122", "1212,1212"});
    case 5:
      return parse_all({
          "11111,11111", "11111,12222", "11111,21222", "11111,22122", "11111,22212",
          "11111,22221", "11112,11112", "11112,11121", "11112,11211", "11112,12111",
          "11112,21111", "11121,11112", "11121,11121", "11121,11211", "11121,12111",
          "11121,21111", "11122,11122", "11122,11212", "11122,11221", "11122,12112",
          "11122,12121", "11211,11112", "11211,11121", "11211,11211", "11211,12111",
          "11211,21111", "11212,11122", "11212,11212", "11212,11221", "11212,12112",
          "11212,12121", "11221,11122", "11221,11212", "11221,11221", "11221,12112",
          "11221,12121", "12111,11112", "12111,11121", "12111,11211", "12111,12111",
          "12111,21111", "12112,11122", "12112,11212", "12112,11221", "12112,12112",
          "12112,12121", "12121,11122", "12121,11212", "12121,11221", "12121,12112",
          "12121,12121",
      });
    default:
      return std::nullopt;
  }
}

std::optional<std::vector<MonomialIndex>> reference_completion(int f) {
  if (f >= 1 && f <= 3) return std::vector<MonomialIndex>{};
  if (f == 5) {
    return parse_all({"11111,11111", "11111,12222", "11111,21222", "11111,22122", "11111,22212",
                      "11112,11112", "11121,11112", "11211,11112", "12111,11112"});
  }
  return std::nullopt;
}

std::vector<MonomialIndex> parse_monomial_list(std::string_view text) {
  std::vector<MonomialIndex> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      out.push_back(MonomialIndex::parse(line));
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace mlinv
