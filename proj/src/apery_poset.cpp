#include "kwforge/apery_poset.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kwforge {

using Relation = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

AperyPoset apery_poset(const NumericalSemigroup& s) {
  const Integer m = s.multiplicity();
  if (m < 2) raise(ErrorCode::Domain, "Apery poset needs multiplicity >= 2");
  AperyPoset poset;
  poset.base = m;
  poset.values = s.apery_elements();
  poset.order = Relation::Constant(m, m, false);
  for (Integer i = 0; i < m; ++i)
    for (Integer j = 0; j < m; ++j) {
      const Integer diff = poset.values[static_cast<std::size_t>(j)] - poset.values[static_cast<std::size_t>(i)];
      poset.order(i, j) = diff >= 0 && s.contains_unchecked(diff);
    }
  poset.covers = transitive_reduction(poset.order);
  return poset;
}

std::vector<Cover> transitive_reduction(const Relation& order) {
  const Eigen::Index m = order.rows();
  std::vector<Cover> covers;
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) {
      if (i == j || !order(i, j)) continue;
      bool between = false;
      for (Eigen::Index k = 0; k < m && !between; ++k)
        between = k != i && k != j && order(i, k) && order(k, j);
      if (!between) covers.emplace_back(i, j);
    }
  return covers;
}

bool covers_are_minimal_generators(const AperyPoset& poset, const NumericalSemigroup& s) {
  const auto gens = minimal_generators(s);
  auto is_generator = [&](Integer d) { return std::binary_search(gens.begin(), gens.end(), d); };
  auto value = [&](Integer i) { return poset.values[static_cast<std::size_t>(i)]; };

  for (const auto& [i, j] : poset.covers)
    if (!is_generator(value(j) - value(i))) return false;

  const std::set<Cover> cover_set(poset.covers.begin(), poset.covers.end());
  for (Integer i = 0; i < poset.base; ++i)
    for (Integer j = 0; j < poset.base; ++j)
      if (i != j && is_generator(value(j) - value(i)) && !cover_set.count({i, j})) return false;
  return true;
}

Integer label_residue(const KwSemigroup& h, const KwLabel& label) {
  const Integer p = h.params().p, q = h.params().q;
  const Integer value = (label.j == 0 ? 0 : h.h(label.j)) + label.lambda * q;
  return value % p;
}

namespace {

Integer block_length(const KwSemigroup& h, Integer j) {
  return j == 0 ? h.params().p - h.y(1) : h.y(j) - h.y(j + 1);
}

}  // namespace

std::vector<Cover> kw_predicted_covers(const KwSemigroup& h) {
  std::vector<Cover> covers;
  for (Integer j = 0; j <= h.n() - 2; ++j) {
    const Integer length = block_length(h, j);
    for (Integer k = 0; k + 1 < length; ++k)
      covers.emplace_back(label_residue(h, {j, k}), label_residue(h, {j, k + 1}));
    if (j == 0) continue;
    for (Integer k = 0; k < length; ++k) covers.emplace_back(label_residue(h, {0, k}), label_residue(h, {j, k}));
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

bool kw_hasse_check(const KwSemigroup& h) {
  if (h.degenerate()) raise(ErrorCode::Degenerate, "Hasse prediction presumes a non-degenerate member");
  return kw_predicted_covers(h) == apery_poset(to_numerical(h)).covers;
}

namespace {

// -1 marks an Apery element whose factorizations differ in length.
std::vector<Integer> factorization_ranks(const NumericalSemigroup& s) {
  std::vector<Integer> ranks;
  for (Integer w : s.apery_elements()) {
    std::set<Integer> lengths;
    for (const auto& f : factorizations(s, w)) lengths.insert(factorization_length(f));
    ranks.push_back(lengths.size() == 1 ? *lengths.begin() : -1);
  }
  return ranks;
}

}  // namespace

bool apery_homogeneous(const NumericalSemigroup& s) {
  const auto ranks = factorization_ranks(s);
  return std::none_of(ranks.begin(), ranks.end(), [](Integer r) { return r < 0; });
}

std::vector<Integer> apery_ranks(const NumericalSemigroup& s) {
  auto ranks = factorization_ranks(s);
  for (std::size_t i = 0; i < ranks.size(); ++i)
    if (ranks[i] < 0)
      raise(ErrorCode::NotHomogeneous,
            "Apery element " + std::to_string(s.apery_elements()[i]) + " has factorizations of different lengths");
  return ranks;
}

bool is_graded(const AperyPoset& poset, const NumericalSemigroup& s) {
  const auto ranks = apery_ranks(s);
  if (ranks[0] != 0) return false;
  return std::all_of(poset.covers.begin(), poset.covers.end(), [&](const Cover& c) {
    return ranks[static_cast<std::size_t>(c.second)] == ranks[static_cast<std::size_t>(c.first)] + 1;
  });
}

FaceSignature face_signature(const KwSemigroup& h) { return {h.n(), h.ys()}; }

std::string to_string(const FaceSignature& sig) {
  std::string out = std::to_string(sig.n) + ":";
  for (std::size_t i = 0; i < sig.ys.size(); ++i) out += (i ? ";" : "") + std::to_string(sig.ys[i]);
  return out;
}

bool same_face(const KwSemigroup& h, const KwSemigroup& g) {
  if (!(h.params() == g.params())) raise(ErrorCode::Domain, "same_face needs equal (p, q)");
  if (h.degenerate() || g.degenerate()) raise(ErrorCode::Degenerate, "same_face needs non-degenerate members");
  return face_signature(h) == face_signature(g);
}

bool same_face_general(const NumericalSemigroup& s1, const NumericalSemigroup& s2) {
  if (s1.multiplicity() != s2.multiplicity()) raise(ErrorCode::Domain, "same_face_general needs equal multiplicity");
  return apery_poset(s1).covers == apery_poset(s2).covers;
}

std::string to_dot(const AperyPoset& poset, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n";
  for (Integer i = 0; i < poset.base; ++i)
    out << "  " << i << " [label=\"" << i << " (" << poset.values[static_cast<std::size_t>(i)] << ")\"];\n";
  for (const auto& [i, j] : poset.covers) out << "  " << i << " -> " << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace kwforge
