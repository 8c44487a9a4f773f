#include "mlinv/report.hpp"

#include <sstream>

#include <json.hpp>

#include "mlinv/error.hpp"

namespace mlinv {

using json = nlohmann::ordered_json;

namespace {

std::string dump_line(const json& j) { return j.dump() + "\n"; }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string w_label(const Permutation& beta) {
  return "W(" + Permutation::identity(beta.size()).to_string() + ";" + beta.to_string() + ")";
}

std::string basis_symbol(SpaceTag t) { return t == SpaceTag::V ? "L" : "N"; }

std::string provenance_display(const Provenance& p) {
  if (const auto* m = std::get_if<MonomialIndex>(&p)) return "L~(" + m->to_string() + ")";
  return w_label(std::get<Permutation>(p));
}

json provenance_json(const Provenance& p) {
  json j;
  if (const auto* m = std::get_if<MonomialIndex>(&p)) {
    j["monomial"] = m->to_string();
  } else {
    j["beta"] = std::get<Permutation>(p).to_string();
  }
  return j;
}

json coeffs_json(const CoeffVector& v) {
  json arr = json::array();
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t].is_zero()) continue;
    arr.push_back(json{{"pos", t}, {"val", v[t].to_string()}});
  }
  return json{{"f", v.degree()}, {"coeffs", std::move(arr)}};
}

// "2 L_1 - 4 L_3 + (1+i) L_4"
std::string expansion(const std::vector<GaussianRational>& row, const std::string& sym) {
  std::string out;
  for (std::size_t j = 0; j < row.size(); ++j) {
    const GaussianRational& c = row[j];
    if (c.is_zero()) continue;
    const std::string term = sym + "_" + std::to_string(j + 1);
    std::string mag;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      const mpq_class a = abs(c.re());
      if (a != 1) mag = a.get_str() + " ";
    } else {
      mag = "(" + c.to_string() + ") ";
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + mag + term;
    } else {
      out += (negative ? " - " : " + ") + mag + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "table") return OutputFormat::Table;
  if (name == "csv") return OutputFormat::Csv;
  throw Error(ErrorCode::InvalidArgument, "unknown output format '" + name + "'");
}

std::string coeff_vector_json(const CoeffVector& v) { return coeffs_json(v).dump(); }

std::string error_json(const std::string& code, const std::string& message) {
  return dump_line(json{{"error", json{{"code", code}, {"message", message}}}});
}

std::string render(const GroupTable& g, OutputFormat fmt) {
  const auto& el = g.elements();
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Json: {
      json elems = json::array();
      for (const auto& m : el) {
        elems.push_back(json::array({json::array({m(0, 0).to_string(), m(0, 1).to_string()}),
                                     json::array({m(1, 0).to_string(), m(1, 1).to_string()})}));
      }
      return dump_line(json{{"order", g.order()}, {"elements", std::move(elems)},
                            {"inverse_index", g.inverse_index()}});
    }
    case OutputFormat::Table:
      os << "# group of order " << g.order() << "\n";
      for (std::size_t k = 0; k < el.size(); ++k) {
        os << k << ": [[" << el[k](0, 0) << ", " << el[k](0, 1) << "], [" << el[k](1, 0) << ", "
           << el[k](1, 1) << "]]  inverse " << g.inverse_of(k) << "\n";
      }
      return os.str();
    case OutputFormat::Csv:
      os << "index,a11,a12,a21,a22,inverse\n";
      for (std::size_t k = 0; k < el.size(); ++k) {
        os << k << "," << el[k](0, 0) << "," << el[k](0, 1) << "," << el[k](1, 0) << ","
           << el[k](1, 1) << "," << g.inverse_of(k) << "\n";
      }
      return os.str();
  }
  return {};
}

std::string render(const DimsReport& d, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Json:
      return dump_line(json{{"f", d.f}, {"dim_V", d.dim_v}, {"dim_W", d.dim_w}});
    case OutputFormat::Table:
      return "f = " + std::to_string(d.f) + ": dim V = " + std::to_string(d.dim_v) +
             ", dim W = " + std::to_string(d.dim_w) + "\n";
    case OutputFormat::Csv:
      return "f,dim_V,dim_W\n" + std::to_string(d.f) + "," + std::to_string(d.dim_v) + "," +
             std::to_string(d.dim_w) + "\n";
  }
  return {};
}

std::string render(const BasisReport& b, OutputFormat fmt) {
  const std::string sym = basis_symbol(b.space);
  const char* space = b.space == SpaceTag::V ? "V" : "W";
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Json: {
      json basis = json::array();
      for (std::size_t j = 0; j < b.vectors.size(); ++j) {
        basis.push_back(json{{"index", j + 1}, {"provenance", provenance_json(b.provenance[j])},
                             {"vector", coeffs_json(b.vectors[j])}});
      }
      return dump_line(json{{"f", b.f}, {"space", space}, {"dimension", b.dimension()},
                            {"basis", std::move(basis)}});
    }
    case OutputFormat::Table:
      os << "# basis of " << space << "_" << b.f << ", dimension " << b.dimension() << "\n";
      for (std::size_t j = 0; j < b.vectors.size(); ++j) {
        os << sym << "_" << j + 1 << " = " << provenance_display(b.provenance[j]) << "  ("
           << b.vectors[j].nonzero_count() << " nonzero coefficients)\n";
      }
      return os.str();
    case OutputFormat::Csv:
      os << "index,provenance,pos,monomial,val\n";
      for (std::size_t j = 0; j < b.vectors.size(); ++j) {
        const auto& v = b.vectors[j];
        for (std::size_t t = 0; t < v.size(); ++t) {
          if (v[t].is_zero()) continue;
          os << j + 1 << "," << csv_quote(provenance_label(b.provenance[j])) << "," << t << ","
             << csv_quote(decode(t, b.f).to_string()) << "," << v[t] << "\n";
        }
      }
      return os.str();
  }
  return {};
}

std::string render(const RelationReport& r, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Json: {
      json vlab = json::array(), wlab = json::array(), rows = json::array(), extra = json::array();
      for (const auto& p : r.v_basis.provenance) vlab.push_back(provenance_label(p));
      for (const auto& p : r.w_basis.provenance) wlab.push_back(provenance_label(p));
      for (const auto& row : r.rows) {
        json jr = json::array();
        for (const auto& x : row) jr.push_back(x.to_string());
        rows.push_back(std::move(jr));
      }
      for (const auto& m : r.extra_invariants) extra.push_back(m.to_string());
      return dump_line(json{{"f", r.f},
                            {"dim_V", r.v_basis.dimension()},
                            {"dim_W", r.w_basis.dimension()},
                            {"v_basis", std::move(vlab)},
                            {"w_basis", std::move(wlab)},
                            {"rows", std::move(rows)},
                            {"all_even", r.all_even},
                            {"extra_invariants", std::move(extra)}});
    }
    case OutputFormat::Table:
      os << "# f = " << r.f << ", dim V = " << r.v_basis.dimension()
         << ", dim W = " << r.w_basis.dimension() << "\n";
      for (std::size_t j = 0; j < r.v_basis.dimension(); ++j) {
        os << "L_" << j + 1 << " = " << provenance_display(r.v_basis.provenance[j]) << "\n";
      }
      for (std::size_t i = 0; i < r.w_basis.dimension(); ++i) {
        os << "N_" << i + 1 << " = " << provenance_display(r.w_basis.provenance[i]) << "\n";
      }
      os << "\n";
      for (std::size_t i = 0; i < r.rows.size(); ++i) {
        os << "N_" << i + 1 << " = " << expansion(r.rows[i], "L") << "\n";
      }
      os << "\nall coefficients even integers: " << (r.all_even ? "yes" : "no") << "\n";
      if (!r.extra_invariants.empty()) {
        os << "completion of W to V:";
        for (const auto& m : r.extra_invariants) os << " L~(" << m.to_string() << ")";
        os << "\n";
      }
      return os.str();
    case OutputFormat::Csv:
      os << "N,beta";
      for (std::size_t j = 0; j < r.v_basis.dimension(); ++j) os << ",L_" << j + 1;
      os << "\n";
      for (std::size_t i = 0; i < r.rows.size(); ++i) {
        os << i + 1 << "," << provenance_label(r.w_basis.provenance[i]);
        for (const auto& x : r.rows[i]) os << "," << x;
        os << "\n";
      }
      return os.str();
  }
  return {};
}

std::string render(const CompletionReport& c, OutputFormat fmt) {
  std::ostringstream os;
  const std::size_t final_rank = c.dim_w + c.accepted.size();
  switch (fmt) {
    case OutputFormat::Json: {
      json added = json::array();
      for (const auto& m : c.accepted) added.push_back(m.to_string());
      return dump_line(json{{"f", c.f}, {"dim_V", c.dim_v}, {"dim_W", c.dim_w}, {"source", c.source},
                            {"added", std::move(added)}, {"final_rank", final_rank}});
    }
    case OutputFormat::Table:
      os << "# completing W_" << c.f << " (dim " << c.dim_w << ") to V_" << c.f << " (dim " << c.dim_v
         << "), " << c.source << "\n";
      for (const auto& m : c.accepted) os << "L~(" << m.to_string() << ")\n";
      os << "final rank " << final_rank << "\n";
      return os.str();
    case OutputFormat::Csv:
      os << "index,monomial\n";
      for (std::size_t k = 0; k < c.accepted.size(); ++k) {
        os << k + 1 << "," << csv_quote(c.accepted[k].to_string()) << "\n";
      }
      return os.str();
  }
  return {};
}

std::string render(const VerifyReport& v, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Json: {
      json checks = json::array();
      for (const auto& c : v.checks) {
        checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      }
      return dump_line(json{{"f", v.f}, {"passed", v.passed()}, {"checks", std::move(checks)}});
    }
    case OutputFormat::Table:
      os << "# verify f = " << v.f << "\n";
      for (const auto& c : v.checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
      }
      os << (v.passed() ? "all checks passed" : "some checks FAILED") << "\n";
      return os.str();
    case OutputFormat::Csv:
      os << "name,passed,detail\n";
      for (const auto& c : v.checks) {
        os << c.name << "," << (c.passed ? "true" : "false") << "," << csv_quote(c.detail) << "\n";
      }
      return os.str();
  }
  return {};
}

}  // namespace mlinv
