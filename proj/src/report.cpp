#include "kwforge/report.hpp"

#include <sstream>

#include "kwforge/ideal.hpp"

namespace kwforge {

std::string csv_list(const std::vector<Integer>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ";" : "") + std::to_string(values[i]);
  return out;
}

std::string text_list(const std::vector<Integer>& values, const std::string& separator) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? separator : "") + std::to_string(values[i]);
  return out;
}

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    item = first == std::string::npos ? "" : item.substr(first, item.find_last_not_of(" \t") - first + 1);
    std::size_t used = 0;
    Integer value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      raise(ErrorCode::Domain, "not an integer: '" + item + "'");
    }
    if (used != item.size()) raise(ErrorCode::Domain, "not an integer: '" + item + "'");
    out.push_back(value);
  }
  if (out.empty()) raise(ErrorCode::Domain, "empty integer list");
  return out;
}

AnalysisReport analyze(Integer p, Integer q, const std::vector<Integer>& gens, const AnalysisOptions& options) {
  const auto params = make_params(p, q);
  AnalysisReport r;
  r.p = p;
  r.q = q;
  r.input_gens = gens;
  r.semigroup = kw_from_generators(params, gens);
  const auto& h = r.semigroup;
  const auto s = to_numerical(h);

  r.witness = is_kw_d(h);
  r.pf = pseudo_frobenius(s);
  r.apery = apery_set(s);
  r.frobenius = frobenius(s);
  r.type = semigroup_type(s);
  const auto poset = apery_poset(s);
  r.covers = poset.covers;
  r.face = face_signature(h);
  if (options.betti) r.betti = total_betti(s, options.characteristic);

  if (h.degenerate()) return r;

  r.verification["pf_formula"] = pf_formula(h) == r.pf;
  r.verification["apery_formula"] = apery_formula(h) == r.apery;
  const auto generators = defining_generators(h);
  bool homogeneous = true;
  for (const auto& g : generators) homogeneous &= binomial_in_kernel(g.binomial, h);
  r.verification["generator_homogeneity"] = homogeneous;
  r.verification["hasse"] = kw_predicted_covers(h) == poset.covers;
  r.verification["apery_homogeneity"] = apery_homogeneous(s);

  if (r.witness) {
    const auto matrix = determinantal_matrix(h, *r.witness);
    std::array<std::vector<std::string>, 2> text;
    for (int row = 0; row < 2; ++row)
      for (const auto& m : matrix.rows[static_cast<std::size_t>(row)]) text[static_cast<std::size_t>(row)].push_back(to_string(m));
    r.matrix = std::move(text);
    r.verification["minor_identities"] = verify_minor_identities(h, matrix).passed();
  }
  if (r.betti) {
    const auto& betas = r.betti->betas;
    r.verification["type_equals_last_betti"] = !betas.empty() && betas.back() == r.type;
    if (corollary_pattern(h)) r.verification["corollary"] = *r.betti == eagon_northcott_betti(h.n());
  }
  return r;
}

namespace {

Json covers_json(const std::vector<Cover>& covers) {
  Json edges = Json::array();
  for (const auto& [i, j] : covers) edges.push_back({i, j});
  return edges;
}

Json face_json(const FaceSignature& face) { return Json{{"n", face.n}, {"ys", face.ys}}; }

}  // namespace

Json to_json(const AnalysisReport& r) {
  const auto& h = r.semigroup;
  Json j;
  j["input"] = {{"p", r.p}, {"q", r.q}, {"gens", r.input_gens}};
  j["gens"] = h.generators();
  j["xs"] = h.xs();
  j["ys"] = h.ys();
  j["n"] = h.n();
  j["degenerate"] = h.degenerate();
  j["window_boundary"] = h.on_boundary();
  j["kwd_witness"] = r.witness ? Json{{"x", r.witness->x}, {"y", r.witness->y}} : Json(nullptr);
  j["pf"] = r.pf;
  j["apery"] = r.apery.elements;
  j["frobenius"] = r.frobenius;
  j["type"] = r.type;
  j["covers"] = covers_json(r.covers);
  j["face_signature"] = face_json(r.face);
  j["betti"] = r.betti ? Json(r.betti->betas) : Json(nullptr);
  j["determinantal_matrix"] = r.matrix ? Json{(*r.matrix)[0], (*r.matrix)[1]} : Json(nullptr);
  j["verification"] = r.verification;
  return j;
}

std::string to_text(const AnalysisReport& r) {
  const auto& h = r.semigroup;
  std::ostringstream out;
  out << "H = <" << text_list(h.generators()) << "> in KW(" << r.p << "," << r.q << ")\n";
  out << "  n = " << h.n() << (h.degenerate() ? "  [degenerate]" : "")
      << (h.on_boundary() ? "  [window boundary]" : "") << "\n";
  out << "  xs = " << text_list(h.xs()) << "  ys = " << text_list(h.ys()) << "\n";
  out << "  KW_D witness: ";
  if (r.witness)
    out << "x=" << r.witness->x << " y=" << r.witness->y << "\n";
  else
    out << "none\n";
  out << "  PF = {" << text_list(r.pf) << "}  type = " << r.type << "  Frobenius = " << r.frobenius << "\n";
  out << "  Apery = {" << text_list(r.apery.elements) << "}\n";
  out << "  covers:";
  for (const auto& [i, j] : r.covers) out << " " << i << "<" << j;
  out << "\n  face signature: " << to_string(r.face) << "\n";
  if (r.betti) out << "  Betti: " << to_string(*r.betti) << "\n";
  if (r.matrix) {
    out << "  determinantal matrix:\n";
    for (const auto& row : *r.matrix) {
      out << "   ";
      for (const auto& entry : row) out << " " << entry;
      out << "\n";
    }
  }
  for (const auto& [name, ok] : r.verification) out << "  check " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
  return out.str();
}

EnumerateRow make_enumerate_row(const KwSemigroup& h, bool with_betti) {
  const auto s = to_numerical(h);
  EnumerateRow row{h, is_kw_d(h), pseudo_frobenius(s), frobenius(s), std::nullopt};
  if (with_betti) row.betti = total_betti(s);
  return row;
}

std::string enumerate_csv_header() { return "p,q,n,xs,ys,hs,kwd_x,kwd_y,pf,frobenius,betti,face_sig,degenerate"; }

std::string to_csv(const EnumerateRow& row) {
  const auto& h = row.semigroup;
  std::ostringstream out;
  out << h.params().p << ',' << h.params().q << ',' << h.n() << ',' << csv_list(h.xs()) << ',' << csv_list(h.ys())
      << ',' << csv_list(h.hs()) << ',' << (row.witness ? std::to_string(row.witness->x) : "") << ','
      << (row.witness ? std::to_string(row.witness->y) : "") << ',' << csv_list(row.pf) << ',' << row.frobenius << ','
      << (row.betti ? csv_list(row.betti->betas) : "") << ',' << to_string(face_signature(h)) << ','
      << (h.degenerate() ? "true" : "false");
  return out.str();
}

Json to_json(const EnumerateRow& row) {
  const auto& h = row.semigroup;
  return Json{{"p", h.params().p},
              {"q", h.params().q},
              {"n", h.n()},
              {"xs", h.xs()},
              {"ys", h.ys()},
              {"hs", h.hs()},
              {"kwd_x", row.witness ? Json(row.witness->x) : Json(nullptr)},
              {"kwd_y", row.witness ? Json(row.witness->y) : Json(nullptr)},
              {"pf", row.pf},
              {"frobenius", row.frobenius},
              {"betti", row.betti ? Json(row.betti->betas) : Json(nullptr)},
              {"face_sig", face_json(face_signature(h))},
              {"degenerate", h.degenerate()}};
}

std::string scan_csv_header() { return "p,q,n,xs,ys,hs,betti,conforms,degenerate"; }

std::string to_csv(const ScanRow& row) {
  std::ostringstream out;
  out << row.p << ',' << row.q << ',' << row.n << ',' << csv_list(row.xs) << ',' << csv_list(row.ys) << ','
      << csv_list(row.hs) << ',' << csv_list(row.betti.betas) << ',' << (row.conforms ? "true" : "false") << ','
      << (row.degenerate ? "true" : "false");
  return out.str();
}

Json to_json(const ScanRow& row) {
  return Json{{"p", row.p},
              {"q", row.q},
              {"n", row.n},
              {"xs", row.xs},
              {"ys", row.ys},
              {"hs", row.hs},
              {"betti", row.degenerate ? Json(nullptr) : Json(row.betti.betas)},
              {"conforms", row.conforms},
              {"degenerate", row.degenerate},
              {"window_boundary", row.boundary}};
}

Json to_json(const ScanReport& report) {
  Json pairs = Json::array(), counterexamples = Json::array(), skipped = Json::array();
  for (const auto& s : report.pairs)
    pairs.push_back({{"p", s.p},
                     {"q", s.q},
                     {"members", s.members},
                     {"degenerate", s.degenerate},
                     {"conforming", s.conforming},
                     {"counterexamples", s.counterexamples}});
  for (const auto& row : report.rows) {
    if (row.degenerate)
      skipped.push_back(to_json(row));
    else if (!row.conforms)
      counterexamples.push_back(to_json(row));
  }
  return Json{{"pairs", pairs},
              {"counterexamples", counterexamples},
              {"skipped_degenerate", skipped},
              {"total_counterexamples", report.counterexamples}};
}

Json to_json(const VerifyReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"failed", c.failed},
                      {"boundary_failed", c.boundary_failed},
                      {"failures", c.failures}});
  return Json{{"members", report.members},
              {"degenerate", report.degenerate},
              {"kw_d_members", report.kw_d_members},
              {"checks", checks},
              {"ok", report.ok()}};
}

Json poset_edges_json(const AperyPoset& poset) {
  return Json{{"base", poset.base}, {"values", poset.values}, {"edges", covers_json(poset.covers)}};
}

}  // namespace kwforge
