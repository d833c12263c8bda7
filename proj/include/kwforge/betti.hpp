#ifndef KWFORGE_BETTI_HPP
#define KWFORGE_BETTI_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kwforge/kw.hpp"

namespace kwforge {

/// (beta_0, beta_1, ..., beta_pd) in ascending homological index.
struct BettiSequence {
  std::vector<Integer> betas;

  friend bool operator==(const BettiSequence&, const BettiSequence&) = default;
};

std::string to_string(const BettiSequence& b);

/// degree b -> (homological index i >= 1 -> beta_{i,b}); only nonzero entries.
using GradedBetti = std::map<Integer, std::map<Integer, Integer>>;

/// beta_i = i * C(n, i + 1), beta_0 = 1. Throws DOMAIN for n < 3.
BettiSequence eagon_northcott_betti(Integer n);

/*
 * Simplicial complex on vertices 0..vertex_count-1 with faces as bitmasks
 * (bit k = vertex k). The empty face is mask 0; a complex without it is the
 * void complex. Faces are kept sorted by (size, mask).
 */
struct DivisorComplex {
  Integer vertex_count = 0;
  std::vector<std::uint32_t> faces;

  bool contains(std::uint32_t face) const;
  friend bool operator==(const DivisorComplex&, const DivisorComplex&) = default;
};

inline constexpr Integer kMaxComplexVertices = 20;

/// Builds a complex from arbitrary faces; throws DOMAIN unless downward closed.
DivisorComplex make_complex(Integer vertex_count, std::vector<std::uint32_t> faces);

/// Squarefree divisor complex: F over the minimal generators is a face iff
/// b - sum(F) lies in S.
DivisorComplex divisor_complex(const NumericalSemigroup& s, Integer b);

/// Reduced homology ranks; entry k is rank H~_{k-1}, for k = 0..vertex_count.
/// `characteristic` 0 computes over Q, a prime computes over F_p.
std::vector<Integer> homology_ranks(const DivisorComplex& c, Integer characteristic = 0);

/// Faces per size; entry k counts faces with k vertices.
std::vector<Integer> face_counts(const DivisorComplex& c);

/// frobenius(S) + sum of the minimal generators; above it every divisor
/// complex is a full simplex.
Integer degree_bound(const NumericalSemigroup& s);

GradedBetti graded_betti(const NumericalSemigroup& s, Integer characteristic = 0);
BettiSequence total_betti(const GradedBetti& graded);
BettiSequence total_betti(const NumericalSemigroup& s, Integer characteristic = 0);

/// True when ys follow (n-1-i) * y; returns that y.
std::optional<Integer> corollary_pattern(const KwSemigroup& h);

/// total_betti equals the Eagon-Northcott sequence. Throws NOT_APPLICABLE
/// without the pattern and DEGENERATE for degenerate members.
bool check_corollary(const KwSemigroup& h);

struct ScanRange {
  Integer p_min = 3;
  Integer p_max = 0;
  Integer q_max = 0;
  Integer q_min = 0;  // 0: no lower bound beyond q > p
};

/// Coprime pairs p_min <= p <= p_max, max(p + 1, q_min) <= q <= q_max. Throws DOMAIN on a malformed range.
std::vector<KwParams> scan_pairs(const ScanRange& range);

struct ScanRow {
  Integer p = 0, q = 0, n = 0;
  std::vector<Integer> xs, ys, hs;
  BettiSequence betti;  // empty for degenerate rows
  bool conforms = false;
  bool degenerate = false;
  bool boundary = false;  // KwSemigroup::on_boundary()
};

struct ScanPairSummary {
  Integer p = 0, q = 0;
  Integer members = 0;
  Integer degenerate = 0;
  Integer conforming = 0;
  Integer counterexamples = 0;
};

struct ScanReport {
  std::vector<ScanRow> rows;  // enumeration order, pair by pair
  std::vector<ScanPairSummary> pairs;
  Integer counterexamples = 0;
};

/// Compares oracle Betti sequences with the Eagon-Northcott formula for
/// every member; counterexamples are reported, never thrown.
ScanReport conjecture_scan(const ScanRange& range, unsigned jobs = 1);

}  // namespace kwforge

#endif  // KWFORGE_BETTI_HPP
