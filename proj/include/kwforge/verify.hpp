#ifndef KWFORGE_VERIFY_HPP
#define KWFORGE_VERIFY_HPP

#include <string>
#include <vector>

#include "kwforge/betti.hpp"

namespace kwforge {

/// Pass/fail tally for one named check over a sweep.
struct CheckTally {
  std::string name;
  Integer passed = 0;
  Integer failed = 0;
  Integer boundary_failed = 0;  // failures among members with on_boundary()
  std::vector<std::string> failures;  // first few offending members

  bool ok() const noexcept { return failed == 0; }
};

struct VerifyReport {
  Integer members = 0;
  Integer degenerate = 0;
  Integer kw_d_members = 0;
  std::vector<CheckTally> checks;

  bool ok() const noexcept;
  const CheckTally& check(const std::string& name) const;
};

struct VerifyOptions {
  bool betti = false;  // also run the homology oracle (structural Betti claims)
  unsigned jobs = 1;
};

/*
 * Runs every formula-vs-oracle comparison on each member of the range:
 *   pf_formula, apery_formula, theorem_equivalence, generator_homogeneity,
 *   minor_identities (KW_D members), hasse, apery_homogeneity, graded_poset,
 *   poset_face_agreement (signature classes = poset classes per pair),
 * and with `betti` also betti_first, betti_last, face_betti and corollary.
 */
VerifyReport verify_range(const ScanRange& range, const VerifyOptions& options = {});

/// Short identifier such as "(8,17) hs=60,69,78".
std::string describe(const KwSemigroup& h);

}  // namespace kwforge

#endif  // KWFORGE_VERIFY_HPP
