#ifndef KWFORGE_REPORT_HPP
#define KWFORGE_REPORT_HPP

#include <array>
#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kwforge/apery_poset.hpp"
#include "kwforge/betti.hpp"
#include "kwforge/verify.hpp"

namespace kwforge {

using Json = nlohmann::json;

struct AnalysisOptions {
  bool betti = true;
  Integer characteristic = 0;
};

/// Everything known about one KW member, composed from all modules.
struct AnalysisReport {
  Integer p = 0, q = 0;
  std::vector<Integer> input_gens;
  KwSemigroup semigroup;
  std::optional<KwDWitness> witness;
  std::vector<Integer> pf;
  AperySet apery;
  Integer frobenius = 0;
  Integer type = 0;
  std::vector<Cover> covers;
  FaceSignature face;
  std::optional<BettiSequence> betti;
  std::optional<std::array<std::vector<std::string>, 2>> matrix;
  std::map<std::string, bool> verification;
};

/// Throws KwError (NO_REPRESENTATION / ORDER_VIOLATION / DOMAIN) when the
/// generators do not describe a member of KW(p, q).
AnalysisReport analyze(Integer p, Integer q, const std::vector<Integer>& gens, const AnalysisOptions& options = {});

Json to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

/// One line of `enumerate` output; CSV columns follow enumerate_csv_header().
struct EnumerateRow {
  KwSemigroup semigroup;
  std::optional<KwDWitness> witness;
  std::vector<Integer> pf;  // of the realized semigroup
  Integer frobenius = 0;
  std::optional<BettiSequence> betti;
};

EnumerateRow make_enumerate_row(const KwSemigroup& h, bool with_betti);
std::string enumerate_csv_header();
std::string to_csv(const EnumerateRow& row);
Json to_json(const EnumerateRow& row);

std::string scan_csv_header();
std::string to_csv(const ScanRow& row);
Json to_json(const ScanRow& row);
Json to_json(const ScanReport& report);

Json to_json(const VerifyReport& report);

/// Deterministic edge list {"base", "values", "edges": [[i, j], ...]}.
Json poset_edges_json(const AperyPoset& poset);

/// ';'-separated list used inside CSV fields.
std::string csv_list(const std::vector<Integer>& values);
/// Separated list for human-readable output.
std::string text_list(const std::vector<Integer>& values, const std::string& separator = ", ");
std::vector<Integer> parse_integer_list(const std::string& text);

}  // namespace kwforge

#endif  // KWFORGE_REPORT_HPP
