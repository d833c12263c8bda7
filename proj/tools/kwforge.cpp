// kwforge: command-line front end for Kunz-Waldi semigroup analysis.
//
// Exit codes: 0 success, 1 a verification check failed, 2 input is not a
// member of KW(p, q), 3 conjecture counterexample found, 4 bad input.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <map>

#include "kwforge/report.hpp"

using namespace kwforge;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitNotInClass = 2;
constexpr int kExitCounterexample = 3;
constexpr int kExitBadInput = 4;

unsigned default_jobs() {
  if (const char* env = std::getenv("KWFORGE_JOBS")) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct Common {
  Integer p = 0, q = 0;
  bool json = false;
  bool csv = false;
  unsigned jobs = default_jobs();
};

int run_analyze(const Common& c, const std::string& gens, bool no_betti, Integer characteristic, bool dot) {
  AnalysisReport report;
  try {
    report = analyze(c.p, c.q, parse_integer_list(gens), {!no_betti, characteristic});
  } catch (const KwError& e) {
    if (e.code() == ErrorCode::NoRepresentation || e.code() == ErrorCode::OrderViolation ||
        e.code() == ErrorCode::OutOfWindow) {
      if (c.json)
        print_json(Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}});
      else
        std::cerr << "not in KW(" << c.p << "," << c.q << "): " << e.what() << "\n";
      return kExitNotInClass;
    }
    throw;
  }
  if (c.json)
    print_json(to_json(report));
  else
    std::cout << to_text(report);
  if (dot) std::cout << to_dot(apery_poset(to_numerical(report.semigroup)));
  for (const auto& [name, ok] : report.verification)
    if (!ok) return kExitCheckFailed;
  return 0;
}

int run_enumerate(const Common& c, Integer edim, bool only_kwd, bool skip_degenerate, bool with_betti) {
  const auto params = make_params(c.p, c.q);
  Integer rows = 0;
  Json all = Json::array();
  if (c.csv) std::cout << enumerate_csv_header() << "\n";
  for_each_kw(params, [&](const KwSemigroup& h) {
    if (edim > 0 && h.n() != edim) return;
    if (only_kwd && !is_kw_d(h)) return;
    if (skip_degenerate && h.degenerate()) return;
    const auto row = make_enumerate_row(h, with_betti && !h.degenerate());
    ++rows;
    if (c.json)
      all.push_back(to_json(row));
    else if (c.csv)
      std::cout << to_csv(row) << "\n";
    else
      std::cout << "<" << text_list(h.generators(), ",") << ">  xs=" << text_list(h.xs(), ",") << " ys=" << text_list(h.ys(), ",")
                << (row.witness ? "  KW_D" : "") << (h.degenerate() ? "  degenerate" : "")
                << (h.on_boundary() ? "  boundary" : "") << "\n";
  });
  if (c.json)
    print_json(Json{{"rows", all}, {"count", rows}});
  else
    std::cerr << "rows: " << rows << "\n";
  return 0;
}

int run_count(const Common& c) {
  const auto params = make_params(c.p, c.q);
  const Integer kw = count_kw(params), kwd = count_kw_d(params);
  const auto rho = rho_d(params);
  if (c.json)
    print_json(Json{{"p", c.p},
                    {"q", c.q},
                    {"kw", kw},
                    {"kwd", kwd},
                    {"rho", std::to_string(kwd) + "/" + std::to_string(kw)},
                    {"rho_reduced", to_string(rho)}});
  else
    std::cout << "kw=" << kw << " kwd=" << kwd << " rho=" << kwd << "/" << kw << " (" << to_string(rho) << ")\n";
  return 0;
}

int run_faces(const Common& c, const std::string& contains, Integer edim) {
  const auto params = make_params(c.p, c.q);
  std::optional<FaceSignature> wanted;
  if (!contains.empty()) wanted = face_signature(kw_from_generators(params, parse_integer_list(contains)));

  std::map<FaceSignature, std::vector<KwSemigroup>> classes;
  for_each_kw(params, [&](const KwSemigroup& h) {
    if (h.degenerate() || (edim > 0 && h.n() != edim)) return;
    auto sig = face_signature(h);
    if (wanted && sig != *wanted) return;
    classes[std::move(sig)].push_back(h);
  });

  if (c.json) {
    Json out = Json::array();
    for (const auto& [sig, members] : classes) {
      Json gens = Json::array();
      for (const auto& h : members) gens.push_back(h.hs());
      out.push_back({{"n", sig.n}, {"ys", sig.ys}, {"members", gens}});
    }
    print_json(Json{{"p", c.p}, {"q", c.q}, {"faces", out}});
  } else {
    for (const auto& [sig, members] : classes) {
      std::cout << "face (" << to_string(sig) << ")  " << members.size() << " member(s)\n";
      for (const auto& h : members) std::cout << "  " << text_list(h.hs(), ",") << "\n";
    }
  }
  return 0;
}

int run_betti(const Common& c, const std::string& gens, bool graded, Integer characteristic) {
  const NumericalSemigroup s(parse_integer_list(gens));
  const auto table = graded_betti(s, characteristic);
  const auto total = total_betti(table);
  if (c.json) {
    Json by_degree = Json::object();
    for (const auto& [b, ranks] : table) {
      Json entry = Json::object();
      for (const auto& [i, r] : ranks) entry[std::to_string(i)] = r;
      by_degree[std::to_string(b)] = entry;
    }
    Json out{{"gens", minimal_generators(s)}, {"betti", total.betas}, {"characteristic", characteristic}};
    if (graded) out["graded"] = by_degree;
    print_json(out);
  } else {
    std::cout << "Betti (char " << characteristic << "): " << to_string(total) << "\n";
    if (graded)
      for (const auto& [b, ranks] : table)
        for (const auto& [i, r] : ranks) std::cout << "  beta_{" << i << "," << b << "} = " << r << "\n";
  }
  return 0;
}

int run_poset(const Common& c, const std::string& gens, bool dot) {
  const NumericalSemigroup s(parse_integer_list(gens));
  const auto poset = apery_poset(s);
  if (dot)
    std::cout << to_dot(poset);
  else if (c.json)
    print_json(poset_edges_json(poset));
  else
    for (const auto& [i, j] : poset.covers)
      std::cout << i << " < " << j << "  (" << poset.values[static_cast<std::size_t>(j)] << " - "
                << poset.values[static_cast<std::size_t>(i)] << ")\n";
  return 0;
}

ScanRange make_range(const Common& c, Integer p_min, Integer p_max, Integer q_max) {
  if (c.p > 0 || c.q > 0) {
    if (c.p <= 0 || c.q <= 0) raise(ErrorCode::Domain, "--p and --q must be given together");
    make_params(c.p, c.q);
    return ScanRange{c.p, c.p, c.q, c.q};
  }
  ScanRange range{p_min, p_max, q_max, 0};
  scan_pairs(range);
  return range;
}

int run_verify(const Common& c, const ScanRange& range, bool betti) {
  const auto report = verify_range(range, {betti, c.jobs});
  if (c.json) {
    print_json(to_json(report));
  } else {
    std::cout << "members " << report.members << " (degenerate " << report.degenerate << ", KW_D "
              << report.kw_d_members << ")\n";
    for (const auto& check : report.checks) {
      std::cout << (check.ok() ? "PASS " : "FAIL ") << check.name << "  " << check.passed << " passed, "
                << check.failed << " failed";
      if (check.failed > 0) std::cout << " (" << check.boundary_failed << " on the window boundary)";
      std::cout << "\n";
      for (const auto& f : check.failures) std::cout << "    " << f << "\n";
    }
  }
  return report.ok() ? 0 : kExitCheckFailed;
}

int run_scan(const Common& c, const ScanRange& range) {
  const auto report = conjecture_scan(range, c.jobs);
  if (c.json) {
    print_json(to_json(report));
  } else if (c.csv) {
    std::cout << scan_csv_header() << "\n";
    for (const auto& row : report.rows) std::cout << to_csv(row) << "\n";
  } else {
    std::cout << "   p    q  members  degenerate  conforming  counterexamples\n";
    for (const auto& s : report.pairs)
      std::printf("%4lld %4lld %8lld %11lld %11lld %16lld\n", static_cast<long long>(s.p), static_cast<long long>(s.q),
                  static_cast<long long>(s.members), static_cast<long long>(s.degenerate),
                  static_cast<long long>(s.conforming), static_cast<long long>(s.counterexamples));
    for (const auto& row : report.rows) {
      if (row.degenerate)
        std::cout << "skipped degenerate: (" << row.p << "," << row.q << ") hs=" << text_list(row.hs, ",") << "\n";
      else if (!row.conforms)
        std::cout << "COUNTEREXAMPLE: (" << row.p << "," << row.q << ") n=" << row.n << " xs=" << text_list(row.xs, ",")
                  << " ys=" << text_list(row.ys, ",") << " hs=" << text_list(row.hs, ",")
                  << " betti=" << text_list(row.betti.betas, ",") << (row.boundary ? " [boundary]" : "") << "\n";
    }
    std::cout << "counterexamples: " << report.counterexamples << "\n";
  }
  return report.counterexamples == 0 ? 0 : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kunz-Waldi numerical semigroups: structure, face classes and Betti numbers"};
  app.require_subcommand(1);

  Common common;
  std::string gens, contains;
  bool no_betti = false, dot = false, only_kwd = false, skip_degenerate = false, with_betti = false, graded = false;
  Integer edim = 0, characteristic = 0, p_min = 3, p_max = 0, q_max = 0;

  auto add_pq = [&](CLI::App* sub, bool required) {
    auto* p = sub->add_option("--p", common.p, "multiplicity p (3 <= p < q, coprime)");
    auto* q = sub->add_option("--q", common.q, "second generator q");
    if (required) {
      p->required();
      q->required();
    }
  };
  auto add_output = [&](CLI::App* sub, bool csv) {
    auto* json = sub->add_flag("--json", common.json, "machine-readable JSON output");
    if (csv) sub->add_flag("--csv", common.csv, "CSV output")->excludes(json);
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", common.jobs, "worker threads (default $KWFORGE_JOBS or 1)")->check(CLI::PositiveNumber);
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "full report for one KW member");
  add_pq(analyze_cmd, true);
  analyze_cmd->add_option("--gens", gens, "h_1,...,h_{n-2} (any order)")->required();
  analyze_cmd->add_flag("--no-betti", no_betti, "skip the homology oracle");
  analyze_cmd->add_option("--char", characteristic, "field characteristic for homology (0 or a prime)");
  analyze_cmd->add_flag("--dot", dot, "append the Apery poset as DOT");
  add_output(analyze_cmd, false);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list KW(p, q)");
  add_pq(enumerate_cmd, true);
  enumerate_cmd->add_option("--edim", edim, "only members of embedding dimension n");
  enumerate_cmd->add_flag("--only-kwd", only_kwd, "only determinantal members");
  enumerate_cmd->add_flag("--skip-degenerate", skip_degenerate, "drop degenerate members");
  enumerate_cmd->add_flag("--betti", with_betti, "fill the betti column");
  add_output(enumerate_cmd, true);

  auto* count_cmd = app.add_subcommand("count", "closed-form |KW|, |KW_D| and their ratio");
  add_pq(count_cmd, true);
  add_output(count_cmd, false);

  auto* faces_cmd = app.add_subcommand("faces", "group KW(p, q) by Kunz-cone face");
  add_pq(faces_cmd, true);
  faces_cmd->add_option("--contains", contains, "only the face of this member (h list)");
  faces_cmd->add_option("--edim", edim, "only embedding dimension n");
  add_output(faces_cmd, false);

  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of any numerical semigroup");
  betti_cmd->add_option("--gens", gens, "generators")->required();
  betti_cmd->add_flag("--graded", graded, "print the graded table");
  betti_cmd->add_option("--char", characteristic, "field characteristic (0 or a prime)");
  add_output(betti_cmd, false);

  auto* poset_cmd = app.add_subcommand("poset", "Apery poset Hasse diagram");
  poset_cmd->add_option("--gens", gens, "generators")->required();
  poset_cmd->add_flag("--dot", dot, "DOT output");
  add_output(poset_cmd, false);

  auto add_range = [&](CLI::App* sub) {
    sub->add_option("--p-min", p_min, "smallest p (default 3)");
    sub->add_option("--p-max", p_max, "largest p");
    sub->add_option("--q-max", q_max, "largest q");
  };

  auto* verify_cmd = app.add_subcommand("verify", "formula-vs-oracle checks over a range");
  add_pq(verify_cmd, false);
  add_range(verify_cmd);
  verify_cmd->add_flag("--betti", with_betti, "include the Betti structural checks");
  add_jobs(verify_cmd);
  add_output(verify_cmd, false);

  auto* scan_cmd = app.add_subcommand("conjecture-scan", "compare every member's Betti numbers with i*C(n,i+1)");
  add_pq(scan_cmd, false);
  add_range(scan_cmd);
  add_jobs(scan_cmd);
  add_output(scan_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0; malformed command lines are bad input
    return app.exit(e) == 0 ? 0 : kExitBadInput;
  }

  try {
    if (*analyze_cmd) return run_analyze(common, gens, no_betti, characteristic, dot);
    if (*enumerate_cmd) return run_enumerate(common, edim, only_kwd, skip_degenerate, with_betti);
    if (*count_cmd) return run_count(common);
    if (*faces_cmd) return run_faces(common, contains, edim);
    if (*betti_cmd) return run_betti(common, gens, graded, characteristic);
    if (*poset_cmd) return run_poset(common, gens, dot);
    if (*verify_cmd) {
      if (common.p == 0 && (p_max == 0 || q_max == 0)) raise(ErrorCode::Domain, "give --p/--q or --p-max/--q-max");
      return run_verify(common, make_range(common, p_min, p_max, q_max), with_betti);
    }
    if (*scan_cmd) return run_scan(common, make_range(common, p_min, p_max, q_max));
  } catch (const KwError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return 0;
}
