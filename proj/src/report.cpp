#include "quintic/report.hpp"

#include <sstream>

namespace quintic {

namespace {

std::string errata_note(const std::vector<Erratum>& errata) {
  std::string out;
  for (const auto& e : errata) {
    if (!out.empty()) out += "; ";
    out += e.column + " printed " + e.printed + ", corrected " + e.corrected;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json json_integer(const Integer& x) {
  if (mpz_fits_slong_p(x.get_mpz_t())) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Json json_element(const CyclotomicInt& a) {
  if (a.is_rational()) return json_integer(a[0]);
  return a.to_string();
}

Json to_json(const FormClassification& c) {
  Json j;
  j["n"] = json_integer(c.n);
  j["form"] = std::string(to_string(c.form));
  if (c.supported()) {
    j["q1"] = json_integer(c.q1);
    j["e1"] = c.e1;
    if (c.q2 != 0) j["q2"] = json_integer(c.q2);
  } else {
    j["reason"] = c.reason;
  }
  Json factors = Json::array();
  for (const auto& [p, e] : c.factors) factors.push_back(Json{{"p", json_integer(p)}, {"e", e}});
  j["factors"] = factors;
  Json cong = Json::array();
  for (const auto& pc : c.congruences)
    cong.push_back(Json{{"q", json_integer(pc.q)},
                        {"mod5", pc.mod5},
                        {"mod25", pc.mod25},
                        {"pm2_mod5", pc.pm2_mod5},
                        {"pm7_mod25", pc.pm7_mod25}});
  j["congruences"] = cong;
  j["n_mod25"] = c.n_mod25;
  j["lambda_ramified"] = lambda_ramified(c.n);
  if (!c.hypothesis_flags.empty()) {
    Json flags = Json::array();
    for (const auto& h : c.hypothesis_flags)
      flags.push_back(Json{{"claim", h.claim}, {"computed", h.computed}, {"holds", h.holds}});
    j["hypothesis_flags"] = flags;
  }
  return j;
}

Json to_json(const AmbiguousRankReport& r) {
  Json j;
  Json ramified = Json::array();
  for (const auto& p : r.ramified) ramified.push_back(p.label());
  j["ramified"] = ramified;
  j["d"] = r.d;
  j["q_star"] = r.q_star;
  j["r"] = r.r;
  j["o"] = r.o;
  j["t"] = r.t;
  Json s = Json::array();
  for (const auto& ij : r.norm_unit_subgroup) s.push_back(Json::array({ij[0], ij[1]}));
  j["norm_unit_subgroup"] = s;
  j["zeta_is_norm"] = r.zeta_is_norm;
  if (r.zeta_residue_criterion)
    j["zeta_residue_criterion"] = *r.zeta_residue_criterion;
  else
    j["zeta_residue_criterion"] = nullptr;
  return j;
}

Json to_json(const Prediction& p) {
  Json j;
  j["h_gamma5"] = p.h_gamma5 ? Json(*p.h_gamma5) : Json(nullptr);
  j["h_k5"] = p.h_k5 ? Json(*p.h_k5) : Json(nullptr);
  j["rank_bound_gamma"] = p.rank_bound_gamma;
  j["exact"] = p.exact;
  return j;
}

Json to_json(const DiscrepancyFlag& f) {
  return Json{{"code", f.code}, {"claim", f.claim}, {"instance", f.instance}, {"computed", f.computed}};
}

Json to_json(const DerivationStep& s) {
  Json j{{"symbol", s.symbol}, {"instance", s.instance}, {"claim", s.claim}, {"computed", s.computed}};
  j["expected"] = s.expected ? Json(*s.expected) : Json(nullptr);
  j["holds"] = s.holds;
  return j;
}

Json matrix_json(const GenusRankReport& r) {
  Json j;
  j["x1"] = json_element(r.x1);
  j["pi1"] = json_integer(r.pi1);
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back(Json{{"prime", e.label},
                           {"symbol", e.symbol},
                           {"engine", e.engine.value()},
                           {"reduction", e.reduction.value()},
                           {"routes_agree", e.engine == e.reduction}});
  j["entries"] = entries;
  j["s"] = r.s;
  return j;
}

Json to_json(const Table& t) {
  Json j;
  j["table"] = t.which;
  j["title"] = t.title;
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r;
    r["q1"] = json_integer(row.q1);
    r["q1_mod25"] = row.q1_mod25;
    if (row.q2) {
      r["q2"] = json_integer(*row.q2);
      r["q2_mod25"] = *row.q2_mod25;
    }
    r["n"] = json_integer(row.n);
    r["form"] = std::string(to_string(row.form));
    r["h_k5"] = row.h_k5;
    r["h_gamma5"] = row.h_gamma5;
    Json errata = Json::array();
    for (const auto& e : row.errata)
      errata.push_back(Json{{"column", e.column}, {"printed", e.printed}, {"corrected", e.corrected}});
    r["errata"] = errata;
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j;
}

Json error_json(ErrorKind kind, const std::string& message) {
  return Json{{"error", Json{{"kind", std::string(to_string(kind))}, {"message", message}}}};
}

std::string table_csv(const Table& t) {
  std::ostringstream os;
  const bool two = t.which != 2;
  os << "q1,q1_mod25";
  if (two) os << ",q2,q2_mod25";
  os << ",n,h_k5,h_gamma5,erratum\n";
  for (const auto& row : t.rows) {
    os << row.q1 << ',' << row.q1_mod25;
    if (two) os << ',' << *row.q2 << ',' << *row.q2_mod25;
    os << ',' << row.n << ',' << row.h_k5 << ',' << row.h_gamma5 << ',' << csv_field(errata_note(row.errata)) << '\n';
  }
  return os.str();
}

std::string table_markdown(const Table& t) {
  std::ostringstream os;
  const bool two = t.which != 2;
  os << "Table " << t.which << ": " << t.title << "\n\n";
  os << "| q1 | q1 mod 25 |";
  if (two) os << " q2 | q2 mod 25 |";
  os << " n | h_k,5 | h_Gamma,5 |\n|---|---|";
  if (two) os << "---|---|";
  os << "---|---|---|\n";
  std::vector<std::string> notes;
  for (const auto& row : t.rows) {
    std::string mark;
    if (!row.errata.empty()) {
      notes.push_back(errata_note(row.errata));
      mark = " [" + std::to_string(notes.size()) + "]";
    }
    os << "| " << row.q1 << " | " << row.q1_mod25 << " |";
    if (two) os << ' ' << *row.q2 << " | " << *row.q2_mod25 << " |";
    os << ' ' << row.n << mark << " | " << row.h_k5 << " | " << row.h_gamma5 << " |\n";
  }
  if (!notes.empty()) {
    os << '\n';
    for (std::size_t i = 0; i < notes.size(); ++i) os << '[' << i + 1 << "] " << notes[i] << '\n';
  }
  return os.str();
}

}  // namespace quintic
