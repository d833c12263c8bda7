#ifndef KWFORGE_APERY_POSET_HPP
#define KWFORGE_APERY_POSET_HPP

#include <Eigen/Core>
#include <string>
#include <utility>
#include <vector>

#include "kwforge/kw.hpp"

namespace kwforge {

using Cover = std::pair<Integer, Integer>;  // (i, j): j covers i

/*
 * The Apery poset on Z_m: i <= j iff a_j - a_i lies in S, where a_i is the
 * Apery element in residue class i. `order(i, j)` holds i <= j (reflexive),
 * `covers` its transitive reduction sorted lexicographically.
 */
struct AperyPoset {
  Integer base = 0;
  std::vector<Integer> values;
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> order;
  std::vector<Cover> covers;
};

AperyPoset apery_poset(const NumericalSemigroup& s);

/// Cover pairs of a strict order given as a boolean relation matrix.
std::vector<Cover> transitive_reduction(const Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>& order);

/// Every cover difference is a minimal generator, and every comparable
/// pair whose difference is a minimal generator is a cover.
bool covers_are_minimal_generators(const AperyPoset& poset, const NumericalSemigroup& s);

/// Position of h_j + lambda q in the KW block structure (j = 0 is the q-chain).
struct KwLabel {
  Integer j = 0;
  Integer lambda = 0;
};

/// Residue of the Apery element addressed by `label`.
Integer label_residue(const KwSemigroup& h, const KwLabel& label);

/// Predicted KW Hasse diagram: i_{j,k} < i_{j,k+1} and i_{0,k} < i_{j,k}.
std::vector<Cover> kw_predicted_covers(const KwSemigroup& h);

/// Compares kw_predicted_covers against the computed poset. Throws DEGENERATE.
bool kw_hasse_check(const KwSemigroup& h);

/// Every Apery element has factorizations of a single length.
bool apery_homogeneous(const NumericalSemigroup& s);

/// Common factorization length of each Apery element. Throws NOT_HOMOGENEOUS.
std::vector<Integer> apery_ranks(const NumericalSemigroup& s);

/// Rank 0 at the minimum and every cover raises rank by exactly one.
bool is_graded(const AperyPoset& poset, const NumericalSemigroup& s);

struct FaceSignature {
  Integer n = 0;
  std::vector<Integer> ys;

  friend bool operator==(const FaceSignature&, const FaceSignature&) = default;
  friend auto operator<=>(const FaceSignature&, const FaceSignature&) = default;
};

FaceSignature face_signature(const KwSemigroup& h);
std::string to_string(const FaceSignature& sig);

/// Same open face of the Kunz cone, decided from (n, ys). Throws DOMAIN on
/// differing (p, q) and DEGENERATE on degenerate input.
bool same_face(const KwSemigroup& h, const KwSemigroup& g);

/// Same open face, decided by equality of labeled Apery posets.
bool same_face_general(const NumericalSemigroup& s1, const NumericalSemigroup& s2);

std::string to_dot(const AperyPoset& poset, const std::string& name = "apery");

}  // namespace kwforge

#endif  // KWFORGE_APERY_POSET_HPP
