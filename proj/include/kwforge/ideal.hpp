#ifndef KWFORGE_IDEAL_HPP
#define KWFORGE_IDEAL_HPP

#include <array>
#include <string>
#include <vector>

#include "kwforge/kw.hpp"
#include "kwforge/polynomial.hpp"

namespace kwforge {

/// deg u = p, deg v = q, deg u_i = h_i.
Integer h_degree(const Monomial& m, const KwSemigroup& h);

/// A pure binomial lies in ker(phi_H) iff both monomials have the same H-degree.
bool binomial_in_kernel(const Binomial& b, const KwSemigroup& h);

/// A defining binomial with the sign convention used for it in the literature.
struct NamedBinomial {
  std::string name;  // "eta1", "g3", "eta2", "f1,2", ...
  Binomial binomial;
};

/*
 * The C(n, 2) minimal generators of I_H:
 *   eta1   = v^{p-y_1} - u^{x_1} u_1
 *   g_i    = v^{y_i-y_{i+1}} u_i - u^{x_{i+1}-x_i} u_{i+1}     1 <= i <= n-3
 *   eta2   = v^{y_{n-2}} u_{n-2} - u^{q-x_{n-2}}
 *   f_ij   = u_i u_j - u^{q-x_i-x_j} v^{p-y_i-y_j}           1 <= i <= j <= n-2
 * emitted in that order (f_ij lexicographically). Throws DEGENERATE.
 */
std::vector<NamedBinomial> defining_generators(const KwSemigroup& h);

/// 2 x n matrix of monomials; columns are indexed 1..n in the accessors.
struct DeterminantalMatrix {
  std::array<std::vector<Monomial>, 2> rows;

  Integer columns() const noexcept { return static_cast<Integer>(rows[0].size()); }
  const Monomial& operator()(int row, Integer column) const {
    return rows.at(static_cast<std::size_t>(row - 1)).at(static_cast<std::size_t>(column - 1));
  }
  Monomial& operator()(int row, Integer column) {
    return rows.at(static_cast<std::size_t>(row - 1)).at(static_cast<std::size_t>(column - 1));
  }
};

/*
 * [ u_{n-2}        u^x  v^{p-(n-1)y}  u_1  ...  u_{n-3} ]
 * [ u^{q-(n-1)x}   v^y  u_1           u_2  ...  u_{n-2} ]
 * Throws WITNESS_MISMATCH unless `w` is the KW_D witness of `h`.
 */
DeterminantalMatrix determinantal_matrix(const KwSemigroup& h, const KwDWitness& w);

/// a_ij = A(1,i) A(2,j) - A(1,j) A(2,i) as an exact (possibly zero) polynomial.
Polynomial minor(const DeterminantalMatrix& a, Integer i, Integer j);

struct Minor {
  Integer i = 0;
  Integer j = 0;
  Binomial binomial;  // normalized
};

/// All a_ij, i < j, normalized. Throws DEGENERATE_MINOR if some a_ij vanishes.
std::vector<Minor> minors_2x2(const DeterminantalMatrix& a);

struct IdentityCheck {
  std::string name;  // e.g. "f1,2 = -a3,5 - sum + a1,2 term"
  // (i, j) of f_ij; for eta/g identities, the columns of the minor used
  Integer i = 0;
  Integer j = 0;
  bool passed = false;
};

struct MinorIdentityReport {
  std::vector<IdentityCheck> identities;
  /// Minors that are not H-homogeneous, or vanish, as (i, j).
  std::vector<std::pair<Integer, Integer>> bad_minors;
  /// I_H in I_2(A): every generator is an explicit combination of minors.
  bool generators_in_minor_ideal = false;
  /// I_2(A) in I_H: every minor lies in the kernel.
  bool minors_in_kernel = false;

  bool passed() const noexcept { return generators_in_minor_ideal && minors_in_kernel; }
};

/// Evaluates the rewriting certificate expressing each defining generator
/// through the minors of `a` and checks every minor for H-homogeneity.
MinorIdentityReport verify_minor_identities(const KwSemigroup& h, const DeterminantalMatrix& a);
MinorIdentityReport verify_minor_identities(const KwSemigroup& h, const KwDWitness& w);

}  // namespace kwforge

#endif  // KWFORGE_IDEAL_HPP
