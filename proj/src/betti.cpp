#include "kwforge/betti.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "kwforge/exact_rank.hpp"
#include "kwforge/parallel.hpp"

namespace kwforge {

std::string to_string(const BettiSequence& b) {
  std::string out;
  for (std::size_t i = 0; i < b.betas.size(); ++i) out += (i ? "," : "") + std::to_string(b.betas[i]);
  return out;
}

BettiSequence eagon_northcott_betti(Integer n) {
  if (n < 3) raise(ErrorCode::Domain, "Eagon-Northcott sequence needs n >= 3");
  BettiSequence b{{1}};
  for (Integer i = 1; i <= n - 1; ++i) b.betas.push_back(checked_mul(i, binomial(n, i + 1)));
  return b;
}

namespace {

bool face_less(std::uint32_t a, std::uint32_t b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace

bool DivisorComplex::contains(std::uint32_t face) const {
  return std::binary_search(faces.begin(), faces.end(), face, face_less);
}

DivisorComplex make_complex(Integer vertex_count, std::vector<std::uint32_t> faces) {
  if (vertex_count < 0 || vertex_count > kMaxComplexVertices) raise(ErrorCode::Domain, "unsupported vertex count");
  std::sort(faces.begin(), faces.end(), face_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  DivisorComplex c{vertex_count, std::move(faces)};
  for (std::uint32_t f : c.faces) {
    if (f >> vertex_count) raise(ErrorCode::Domain, "face uses a vertex outside the vertex set");
    for (std::uint32_t rest = f; rest; rest &= rest - 1) {
      const std::uint32_t facet = f & ~(rest & (~rest + 1));
      if (!c.contains(facet)) raise(ErrorCode::Domain, "face list is not downward closed");
    }
  }
  return c;
}

DivisorComplex divisor_complex(const NumericalSemigroup& s, Integer b) {
  if (b < 0) raise(ErrorCode::Domain, "negative degree");
  const auto gens = minimal_generators(s);
  const auto vertices = static_cast<Integer>(gens.size());
  if (vertices > kMaxComplexVertices) raise(ErrorCode::Domain, "too many generators for a divisor complex");
  std::vector<std::uint32_t> faces;
  const std::uint32_t full = (std::uint32_t{1} << vertices);
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    Integer rest = b;
    for (Integer k = 0; k < vertices; ++k)
      if (mask >> k & 1) rest -= gens[static_cast<std::size_t>(k)];
    if (rest >= 0 && s.contains_unchecked(rest)) faces.push_back(mask);
  }
  std::sort(faces.begin(), faces.end(), face_less);
  return DivisorComplex{vertices, std::move(faces)};
}

std::vector<Integer> face_counts(const DivisorComplex& c) {
  std::vector<Integer> counts(static_cast<std::size_t>(c.vertex_count) + 1, 0);
  for (std::uint32_t f : c.faces) ++counts[static_cast<std::size_t>(std::popcount(f))];
  return counts;
}

std::vector<Integer> homology_ranks(const DivisorComplex& c, Integer characteristic) {
  const auto sizes = static_cast<std::size_t>(c.vertex_count) + 1;
  std::vector<std::vector<std::uint32_t>> by_size(sizes);
  for (std::uint32_t f : c.faces) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);

  // boundary_rank[s] = rank of the boundary map from (s)-vertex faces to (s-1)-vertex faces
  std::vector<Integer> boundary_rank(sizes + 1, 0);
  for (std::size_t s = 1; s < sizes; ++s) {
    const auto& cols = by_size[s];
    const auto& rows = by_size[s - 1];
    if (cols.empty() || rows.empty()) continue;
    std::unordered_map<std::uint32_t, Eigen::Index> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], static_cast<Eigen::Index>(r));

    IntegerMatrix boundary = IntegerMatrix::Zero(static_cast<Eigen::Index>(rows.size()),
                                                 static_cast<Eigen::Index>(cols.size()));
    for (std::size_t col = 0; col < cols.size(); ++col) {
      Integer sign = 1;
      for (std::uint32_t rest = cols[col]; rest; rest &= rest - 1, sign = -sign) {
        const std::uint32_t facet = cols[col] & ~(rest & (~rest + 1));
        boundary(row_index.at(facet), static_cast<Eigen::Index>(col)) = sign;
      }
    }
    boundary_rank[s] = characteristic == 0 ? exact_rank(boundary) : rank_mod_prime(boundary, characteristic);
  }

  const auto counts = face_counts(c);
  std::vector<Integer> ranks(sizes);
  Integer euler_faces = 0, euler_homology = 0;
  for (std::size_t s = 0; s < sizes; ++s) {
    ranks[s] = counts[s] - boundary_rank[s] - boundary_rank[s + 1];
    if (ranks[s] < 0) raise(ErrorCode::Internal, "negative homology rank; boundary maps inconsistent");
    const Integer sign = s % 2 == 0 ? 1 : -1;
    euler_faces += sign * counts[s];
    euler_homology += sign * ranks[s];
  }
  if (euler_faces != euler_homology) raise(ErrorCode::Internal, "Euler characteristic mismatch");
  return ranks;
}

Integer degree_bound(const NumericalSemigroup& s) {
  const auto gens = minimal_generators(s);
  return checked_add(frobenius(s), std::accumulate(gens.begin(), gens.end(), Integer{0}));
}

GradedBetti graded_betti(const NumericalSemigroup& s, Integer characteristic) {
  if (s.multiplicity() < 2) raise(ErrorCode::Domain, "graded Betti numbers need multiplicity >= 2");
  const auto gens = minimal_generators(s);
  const auto vertices = static_cast<Integer>(gens.size());
  if (vertices > kMaxComplexVertices) raise(ErrorCode::Domain, "too many generators");
  const std::uint32_t full = std::uint32_t{1} << vertices;

  std::vector<Integer> subset_sum(full, 0);
  for (std::uint32_t mask = 1; mask < full; ++mask)
    subset_sum[mask] = subset_sum[mask & (mask - 1)] + gens[static_cast<std::size_t>(std::countr_zero(mask))];

  GradedBetti graded;
  std::vector<char> in_complex(full);
  const Integer bound = degree_bound(s);
  for (Integer b = 1; b <= bound; ++b) {
    if (!s.contains_unchecked(b)) continue;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
      const Integer rest = b - subset_sum[mask];
      in_complex[mask] = rest >= 0 && s.contains_unchecked(rest);
    }
    // a cone over some vertex has vanishing reduced homology
    bool cone = false;
    for (Integer v = 0; v < vertices && !cone; ++v) {
      const std::uint32_t bit = std::uint32_t{1} << v;
      cone = true;
      for (std::uint32_t mask = 0; mask < full && cone; ++mask)
        if (in_complex[mask] && !(mask & bit) && !in_complex[mask | bit]) cone = false;
    }
    if (cone) continue;

    DivisorComplex complex{vertices, {}};
    for (std::uint32_t mask = 0; mask < full; ++mask)
      if (in_complex[mask]) complex.faces.push_back(mask);
    std::sort(complex.faces.begin(), complex.faces.end(), face_less);

    const auto ranks = homology_ranks(complex, characteristic);
    // beta_{i,b} = rank H~_{i-1}(Delta_b), stored at ranks[i]
    for (std::size_t i = 1; i < ranks.size(); ++i)
      if (ranks[i] != 0) graded[b][static_cast<Integer>(i)] = ranks[i];
  }
  return graded;
}

BettiSequence total_betti(const GradedBetti& graded) {
  BettiSequence result{{1}};
  for (const auto& [degree, by_index] : graded) {
    for (const auto& [i, rank] : by_index) {
      if (result.betas.size() <= static_cast<std::size_t>(i)) result.betas.resize(static_cast<std::size_t>(i) + 1, 0);
      result.betas[static_cast<std::size_t>(i)] += rank;
    }
  }
  return result;
}

BettiSequence total_betti(const NumericalSemigroup& s, Integer characteristic) {
  return total_betti(graded_betti(s, characteristic));
}

std::optional<Integer> corollary_pattern(const KwSemigroup& h) {
  const Integer n = h.n(), y = h.y(n - 2);
  for (Integer i = 1; i <= n - 2; ++i)
    if (h.y(i) != (n - 1 - i) * y) return std::nullopt;
  return y;
}

bool check_corollary(const KwSemigroup& h) {
  if (h.degenerate()) raise(ErrorCode::Degenerate, "corollary presumes a non-degenerate member");
  if (!corollary_pattern(h)) raise(ErrorCode::NotApplicable, "y sequence is not of the form (n-1-i)y");
  return total_betti(to_numerical(h)) == eagon_northcott_betti(h.n());
}

std::vector<KwParams> scan_pairs(const ScanRange& range) {
  if (range.p_min < 3 || range.p_max < range.p_min || range.q_max <= range.p_min)
    raise(ErrorCode::Domain, "malformed scan range: need 3 <= p_min <= p_max and q_max > p_min");
  std::vector<KwParams> pairs;
  for (Integer p = range.p_min; p <= range.p_max; ++p)
    for (Integer q = std::max(p + 1, range.q_min); q <= range.q_max; ++q)
      if (std::gcd(p, q) == 1) pairs.push_back(make_params(p, q));
  return pairs;
}

ScanReport conjecture_scan(const ScanRange& range, unsigned jobs) {
  const auto pairs = scan_pairs(range);
  ScanReport report;
  for (const auto& params : pairs) {
    const auto members = enumerate_kw(params);
    std::vector<ScanRow> rows(members.size());
    parallel_for_index(members.size(), jobs, [&](std::size_t k) {
      const auto& h = members[k];
      ScanRow row{params.p, params.q, h.n(), h.xs(), h.ys(), h.hs(), {}, false, h.degenerate(), h.on_boundary()};
      if (!h.degenerate()) {
        row.betti = total_betti(to_numerical(h));
        row.conforms = row.betti == eagon_northcott_betti(h.n());
      }
      rows[k] = std::move(row);
    });

    ScanPairSummary summary{params.p, params.q, static_cast<Integer>(rows.size()), 0, 0, 0};
    for (const auto& row : rows) {
      if (row.degenerate)
        ++summary.degenerate;
      else if (row.conforms)
        ++summary.conforming;
      else
        ++summary.counterexamples;
    }
    report.counterexamples += summary.counterexamples;
    report.pairs.push_back(summary);
    std::move(rows.begin(), rows.end(), std::back_inserter(report.rows));
  }
  return report;
}

}  // namespace kwforge
