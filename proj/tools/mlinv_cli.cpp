// mlinv: command-line front end over the libmlinv C API.
//
//   mlinv group   [--format F]
//   mlinv dims    --f N
//   mlinv vbasis  --f N [--basis FILE | --encoding-order]
//   mlinv wbasis  --f N
//   mlinv relate  --f N [--basis FILE | --encoding-order]
//   mlinv complete --f N [--candidates FILE]
//   mlinv verify  --f N
//
// Every command accepts --format json|table|csv (default json) and
// --output FILE (default stdout). MLINV_WORKERS sets the number of averaging
// threads. Failures print {"error":{...}} on stderr and exit with status 1.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mlinv/mlinv.h"

namespace {

struct RunConfig {
  std::string command;
  int f = 0;
  std::string forced_basis_path;
  std::string candidates_path;
  bool encoding_order = false;
  bool allow_large = false;
  std::string format = "json";
  std::string output_path;
};

// Raised for failures detected in the CLI itself; carries the status name.
struct CliError {
  std::string code;
  std::string message;
};

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void check(mlinv_status s) {
  if (s != MLINV_OK) throw CliError{mlinv_status_name(s), mlinv_last_error()};
}

struct StringFree {
  void operator()(char* p) const { mlinv_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringFree>;

struct GroupFree {
  void operator()(mlinv_group* g) const { mlinv_group_destroy(g); }
};
struct BasisFree {
  void operator()(mlinv_basis* b) const { mlinv_basis_destroy(b); }
};
struct RelationFree {
  void operator()(mlinv_relation* r) const { mlinv_relation_destroy(r); }
};
using Group = std::unique_ptr<mlinv_group, GroupFree>;
using Basis = std::unique_ptr<mlinv_basis, BasisFree>;
using Relation = std::unique_ptr<mlinv_relation, RelationFree>;

std::string take(char* p) {
  OwnedString owned(p);
  return owned ? std::string(owned.get()) : std::string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{"io_error", "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

mlinv_format parse_format(const std::string& name) {
  if (name == "json") return MLINV_FORMAT_JSON;
  if (name == "table") return MLINV_FORMAT_TABLE;
  if (name == "csv") return MLINV_FORMAT_CSV;
  throw CliError{"invalid_argument", "unknown format '" + name + "'"};
}

unsigned workers_from_env() {
  const char* s = std::getenv("MLINV_WORKERS");
  if (s == nullptr || *s == '\0') return 1;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v < 1) throw CliError{"invalid_argument", "MLINV_WORKERS must be a positive integer"};
  return static_cast<unsigned>(v > 256 ? 256 : v);
}

void validate(const RunConfig& cfg) {
  if (cfg.command == "group") return;
  if (cfg.f < 1) throw CliError{"invalid_argument", "--f must be at least 1"};
  if (cfg.f > 6 && !cfg.allow_large) {
    throw CliError{"resource_limit", "f = " + std::to_string(cfg.f) +
                                         " needs 4^f-dimensional exact elimination; pass --allow-large"};
  }
  if (cfg.f >= 6) {
    std::cerr << "warning: f = " << cfg.f << " is expensive (4^" << cfg.f << " coordinates)\n";
  }
  if (!cfg.forced_basis_path.empty() && cfg.command != "vbasis" && cfg.command != "relate") {
    throw CliError{"invalid_argument", "--basis is only valid for vbasis and relate"};
  }
  if (!cfg.forced_basis_path.empty() && cfg.encoding_order) {
    throw CliError{"invalid_argument", "--basis and --encoding-order are exclusive"};
  }
}

// Forced V order: --basis file, else the reference order when one exists.
std::optional<std::string> forced_order(const RunConfig& cfg) {
  if (!cfg.forced_basis_path.empty()) return read_file(cfg.forced_basis_path);
  if (cfg.encoding_order) return std::nullopt;
  char* text = nullptr;
  if (mlinv_reference_v_order(cfg.f, &text) != MLINV_OK) return std::nullopt;
  return take(text);
}

Basis build_v(const mlinv_group* g, const RunConfig& cfg, unsigned workers) {
  auto order = forced_order(cfg);
  mlinv_basis* b = nullptr;
  check(mlinv_vbasis_build(g, cfg.f, order ? order->c_str() : nullptr, workers, &b));
  return Basis(b);
}

Basis build_w(const RunConfig& cfg) {
  mlinv_basis* b = nullptr;
  check(mlinv_wbasis_build(cfg.f, &b));
  return Basis(b);
}

// Returns the artifact text and the exit status.
std::pair<std::string, int> run(const RunConfig& cfg) {
  validate(cfg);
  const mlinv_format fmt = parse_format(cfg.format);
  const unsigned workers = workers_from_env();

  mlinv_group* raw_group = nullptr;
  check(mlinv_group_create_default(&raw_group));
  Group group(raw_group);
  char* out = nullptr;

  if (cfg.command == "group") {
    check(mlinv_group_render(group.get(), fmt, &out));
    return {take(out), 0};
  }
  if (cfg.command == "dims") {
    check(mlinv_dims_render(group.get(), cfg.f, workers, fmt, &out));
    return {take(out), 0};
  }
  if (cfg.command == "vbasis") {
    Basis v = build_v(group.get(), cfg, workers);
    check(mlinv_basis_render(v.get(), fmt, &out));
    return {take(out), 0};
  }
  if (cfg.command == "wbasis") {
    Basis w = build_w(cfg);
    check(mlinv_basis_render(w.get(), fmt, &out));
    return {take(out), 0};
  }
  if (cfg.command == "relate") {
    Basis v = build_v(group.get(), cfg, workers);
    Basis w = build_w(cfg);
    mlinv_relation* raw = nullptr;
    check(mlinv_relate(v.get(), w.get(), &raw));
    Relation rel(raw);
    check(mlinv_relation_render(rel.get(), fmt, &out));
    std::string text = take(out);
    if (!mlinv_relation_all_even(rel.get())) {
      throw CliError{"odd_coefficient", "a relation coefficient is not an even integer"};
    }
    return {text, 0};
  }
  if (cfg.command == "complete") {
    Basis v = build_v(group.get(), cfg, workers);
    Basis w = build_w(cfg);
    std::optional<std::string> candidates;
    if (!cfg.candidates_path.empty()) candidates = read_file(cfg.candidates_path);
    check(mlinv_complete(group.get(), v.get(), w.get(), candidates ? candidates->c_str() : nullptr, fmt,
                         &out));
    return {take(out), 0};
  }
  if (cfg.command == "verify") {
    int passed = 0;
    check(mlinv_verify(group.get(), cfg.f, workers, fmt, &out, &passed));
    return {take(out), passed ? 0 : 1};
  }
  throw CliError{"invalid_argument", "unknown command '" + cfg.command + "'"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multilinear invariants of the order-96 reflection group generated by T and D"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool needs_degree) {
    if (needs_degree) sub->add_option("--f", cfg.f, "degree f >= 1")->required();
    sub->add_option("--format", cfg.format, "json | table | csv")
        ->check(CLI::IsMember({"json", "table", "csv"}));
    sub->add_option("-o,--output", cfg.output_path, "write the artifact to FILE");
    sub->add_flag("--allow-large", cfg.allow_large, "permit f > 6");
  };

  auto* group = app.add_subcommand("group", "dump the 96-element group table");
  add_common(group, false);
  auto* dims = app.add_subcommand("dims", "dimensions of V_f and W_f");
  add_common(dims, true);
  auto* vbasis = app.add_subcommand("vbasis", "basis of V_f from averaged monomials");
  add_common(vbasis, true);
  auto* wbasis = app.add_subcommand("wbasis", "basis of W_f from typical invariants");
  add_common(wbasis, true);
  auto* relate = app.add_subcommand("relate", "express the W_f basis over the V_f basis");
  add_common(relate, true);
  auto* complete = app.add_subcommand("complete", "monomials completing W_f to V_f");
  add_common(complete, true);
  auto* verify = app.add_subcommand("verify", "run the invariant suite for degree f");
  add_common(verify, true);

  for (auto* sub : {vbasis, relate}) {
    sub->add_option("--basis", cfg.forced_basis_path, "forced V order, one 'i..i,k..k' per line");
    sub->add_flag("--encoding-order", cfg.encoding_order, "plain encoding order, no reference order");
  }
  complete->add_option("--candidates", cfg.candidates_path, "candidate monomials, one per line");

  CLI11_PARSE(app, argc, argv);
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    auto [text, status] = run(cfg);
    if (cfg.output_path.empty()) {
      std::cout << text;
      std::cout.flush();
    } else {
      std::ofstream os(cfg.output_path, std::ios::binary);
      if (!os || !(os << text)) throw CliError{"io_error", "cannot write '" + cfg.output_path + "'"};
    }
    return status;
  } catch (const CliError& e) {
    std::cerr << "{\"error\":{\"code\":\"" << json_escape(e.code) << "\",\"message\":\""
              << json_escape(e.message) << "\"}}\n";
    return 1;
  }
}
