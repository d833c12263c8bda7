#ifndef KWFORGE_SEMIGROUP_HPP
#define KWFORGE_SEMIGROUP_HPP

#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

#include "kwforge/error.hpp"

namespace kwforge {

/// Least element of S in each residue class modulo the multiplicity.
/// elements[i] is congruent to i; elements[0] == 0.
struct AperySet {
  Integer base = 0;
  std::vector<Integer> elements;

  friend bool operator==(const AperySet&, const AperySet&) = default;
};

/*
 * A numerical semigroup given by a (not necessarily minimal) generating set.
 *
 * Generators are sorted and deduplicated at construction; a gcd other than 1
 * is rejected there. Membership is answered from a bit table filled by
 * dynamic programming up to (m - 1) * max(generators), beyond which every
 * Apery element has already been seen, so larger queries reduce to a
 * comparison against the Apery set.
 *
 * Instances are immutable after construction and cheap to copy (the tables
 * are shared).
 */
class NumericalSemigroup {
public:
  explicit NumericalSemigroup(std::vector<Integer> generators);
  NumericalSemigroup(std::initializer_list<Integer> generators)
      : NumericalSemigroup(std::vector<Integer>(generators)) {}

  const std::vector<Integer>& generators() const noexcept { return generators_; }
  Integer multiplicity() const noexcept { return generators_.front(); }

  bool contains(Integer n) const;

  /// contains() without the domain check; n must be nonnegative.
  bool contains_unchecked(Integer n) const noexcept {
    if (n <= table_limit_) return tables_->member[static_cast<std::size_t>(n)] != 0;
    return n >= tables_->apery[static_cast<std::size_t>(n % multiplicity())];
  }

  const std::vector<Integer>& apery_elements() const noexcept { return tables_->apery; }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

private:
  struct Tables {
    std::vector<char> member;
    std::vector<Integer> apery;
  };

  std::vector<Integer> generators_;
  Integer table_limit_ = 0;
  std::shared_ptr<const Tables> tables_;
};

bool contains(const NumericalSemigroup& s, Integer n);
AperySet apery_set(const NumericalSemigroup& s);
Integer frobenius(const NumericalSemigroup& s);
std::vector<Integer> pseudo_frobenius(const NumericalSemigroup& s);
std::vector<Integer> minimal_generators(const NumericalSemigroup& s);
Integer embedding_dimension(const NumericalSemigroup& s);
Integer semigroup_type(const NumericalSemigroup& s);

/// Exponent vectors over minimal_generators(s) (ascending) summing to n,
/// sorted lexicographically ascending. Empty iff n is not in s.
std::vector<std::vector<Integer>> factorizations(const NumericalSemigroup& s, Integer n);

/// Length of a factorization vector.
Integer factorization_length(std::span<const Integer> factorization);

}  // namespace kwforge

#endif  // KWFORGE_SEMIGROUP_HPP
