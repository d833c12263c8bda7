#include "kwforge/verify.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>

#include "kwforge/apery_poset.hpp"
#include "kwforge/ideal.hpp"
#include "kwforge/parallel.hpp"

namespace kwforge {

namespace {

enum Check : std::size_t {
  kPfFormula,
  kAperyFormula,
  kTheoremEquivalence,
  kGeneratorHomogeneity,
  kMinorIdentities,
  kHasse,
  kAperyHomogeneity,
  kGradedPoset,
  kPosetFaceAgreement,
  kBettiFirst,
  kBettiLast,
  kFaceBetti,
  kCorollary,
  kCheckCount,
};

constexpr const char* kCheckNames[kCheckCount] = {
    "pf_formula",      "apery_formula",        "theorem_equivalence", "generator_homogeneity", "minor_identities",
    "hasse",           "apery_homogeneity",    "graded_poset",        "poset_face_agreement",  "betti_first",
    "betti_last",      "face_betti",           "corollary",
};

constexpr std::size_t kMaxRecordedFailures = 8;

std::string join(const std::vector<Integer>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out;
}

struct MemberResult {
  std::array<std::optional<bool>, kCheckCount> outcome;
  std::vector<Cover> covers;
  BettiSequence betti;
};

bool theorem_equivalence(const KwSemigroup& h, const std::vector<Integer>& pf) {
  const auto witness = is_kw_d(h);
  if (witness.has_value() != is_arithmetic_progression(pf)) return false;
  if (!witness) return true;
  const Integer p = h.params().p, q = h.params().q;
  const Integer k = std::abs(witness->x * p - witness->y * q);
  if (pf.size() >= 2 && pf[1] - pf[0] != k) return false;
  // h_{i+1} - h_i = yq - xp throughout
  for (Integer i = 1; i + 1 <= h.n() - 2; ++i)
    if (h.h(i + 1) - h.h(i) != witness->y * q - witness->x * p) return false;
  return true;
}

MemberResult examine(const KwSemigroup& h, bool with_betti) {
  MemberResult r;
  const auto s = to_numerical(h);
  const auto pf = pseudo_frobenius(s);
  r.outcome[kPfFormula] = pf_formula(h) == pf && static_cast<Integer>(pf.size()) == h.n() - 1;
  r.outcome[kAperyFormula] = apery_formula(h) == apery_set(s);
  r.outcome[kTheoremEquivalence] = theorem_equivalence(h, pf);

  const auto generators = defining_generators(h);
  r.outcome[kGeneratorHomogeneity] =
      static_cast<Integer>(generators.size()) == binomial(h.n(), 2) &&
      std::all_of(generators.begin(), generators.end(),
                  [&](const NamedBinomial& g) { return binomial_in_kernel(g.binomial, h); });

  if (const auto w = is_kw_d(h)) {
    bool ok = false;
    try {
      const auto matrix = determinantal_matrix(h, *w);
      const auto minors = minors_2x2(matrix);
      ok = static_cast<Integer>(minors.size()) == binomial(h.n(), 2) &&
           std::all_of(minors.begin(), minors.end(),
                       [&](const Minor& m) { return binomial_in_kernel(m.binomial, h); }) &&
           verify_minor_identities(h, matrix).passed();
    } catch (const KwError&) {
      ok = false;
    }
    r.outcome[kMinorIdentities] = ok;
  }

  const auto poset = apery_poset(s);
  r.covers = poset.covers;
  r.outcome[kHasse] = kw_predicted_covers(h) == poset.covers;
  const bool homogeneous = apery_homogeneous(s);
  r.outcome[kAperyHomogeneity] = homogeneous;
  r.outcome[kGradedPoset] = homogeneous && is_graded(poset, s);

  if (with_betti) {
    r.betti = total_betti(s);
    const auto n = static_cast<std::size_t>(h.n());
    r.outcome[kBettiFirst] = r.betti.betas.size() > 1 && r.betti.betas[1] == binomial(h.n(), 2);
    r.outcome[kBettiLast] = r.betti.betas.size() == n && r.betti.betas[n - 1] == h.n() - 1;
    if (corollary_pattern(h)) r.outcome[kCorollary] = r.betti == eagon_northcott_betti(h.n());
  }
  return r;
}

}  // namespace

bool VerifyReport::ok() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.ok(); });
}

const CheckTally& VerifyReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  raise(ErrorCode::Domain, "unknown check " + name);
}

std::string describe(const KwSemigroup& h) {
  return "(" + std::to_string(h.params().p) + "," + std::to_string(h.params().q) + ") xs=" + join(h.xs()) +
         " ys=" + join(h.ys()) + " hs=" + join(h.hs()) + (h.on_boundary() ? " [boundary]" : "");
}

VerifyReport verify_range(const ScanRange& range, const VerifyOptions& options) {
  VerifyReport report;
  const std::size_t active = options.betti ? kCheckCount : kBettiFirst;
  for (std::size_t c = 0; c < active; ++c) report.checks.push_back({kCheckNames[c], 0, 0, 0, {}});

  auto record = [&](std::size_t check, bool passed, const KwSemigroup& h) {
    auto& tally = report.checks[check];
    if (passed) {
      ++tally.passed;
      return;
    }
    ++tally.failed;
    if (h.on_boundary()) ++tally.boundary_failed;
    if (tally.failures.size() < kMaxRecordedFailures) tally.failures.push_back(describe(h));
  };

  for (const auto& params : scan_pairs(range)) {
    std::vector<KwSemigroup> members;
    for (auto& h : enumerate_kw(params)) {
      ++report.members;
      if (h.degenerate()) {
        ++report.degenerate;
        continue;
      }
      if (is_kw_d(h)) ++report.kw_d_members;
      members.push_back(std::move(h));
    }

    std::vector<MemberResult> results(members.size());
    parallel_for_index(members.size(), options.jobs,
                       [&](std::size_t k) { results[k] = examine(members[k], options.betti); });

    // face classes: signature -> covers and covers -> signature must both be functions
    std::map<FaceSignature, std::set<std::vector<Cover>>> posets_of_signature;
    std::map<std::vector<Cover>, std::set<FaceSignature>> signatures_of_poset;
    std::map<FaceSignature, BettiSequence> betti_of_signature;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const auto sig = face_signature(members[k]);
      posets_of_signature[sig].insert(results[k].covers);
      signatures_of_poset[results[k].covers].insert(sig);
      if (options.betti) betti_of_signature.try_emplace(sig, results[k].betti);
    }
    for (std::size_t k = 0; k < members.size(); ++k) {
      auto& r = results[k];
      const auto sig = face_signature(members[k]);
      r.outcome[kPosetFaceAgreement] =
          posets_of_signature[sig].size() == 1 && signatures_of_poset[r.covers].size() == 1;
      if (options.betti) r.outcome[kFaceBetti] = betti_of_signature[sig] == r.betti;
      for (std::size_t c = 0; c < active; ++c)
        if (r.outcome[c]) record(c, *r.outcome[c], members[k]);
    }
  }
  return report;
}

}  // namespace kwforge
