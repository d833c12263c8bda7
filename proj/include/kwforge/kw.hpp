#ifndef KWFORGE_KW_HPP
#define KWFORGE_KW_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kwforge/semigroup.hpp"

namespace kwforge {

/// A coprime pair 3 <= p < q with the derived half-widths and the r-value.
struct KwParams {
  Integer p = 0;
  Integer q = 0;
  Integer p_prime = 0;  // floor(p / 2)
  Integer q_prime = 0;  // floor(q / 2)
  Integer r = 0;        // p/2, q/2 or (p+q)/2, whichever is an integer

  friend bool operator==(const KwParams&, const KwParams&) = default;
};

KwParams make_params(Integer p, Integer q);

/// Exact nonnegative fraction; always stored in lowest terms.
struct Rational {
  Integer num = 0;
  Integer den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(Integer num, Integer den);
std::string to_string(const Rational& r);

struct KwDWitness {
  Integer x = 0;
  Integer y = 0;

  friend bool operator==(const KwDWitness&, const KwDWitness&) = default;
};

/*
 * A member of KW(p, q): the sequences 0 < x_1 < ... < x_{n-2} <= q/2 and
 * p/2 >= y_1 > ... > y_{n-2} > 0 together with h_i = pq - x_i p - y_i q.
 *
 * Indexing helpers x(i), y(i), h(i) are 1-based to match the usual
 * notation, with the conventions x(0) = 0 and y(n - 1) = 0.
 *
 * `degenerate()` marks members whose realized semigroup <p, q, h_1, ...>
 * has multiplicity other than p or embedding dimension other than n.
 * Window-admissible sequences can produce these at small (p, q), e.g.
 * (4, 5) with x = y = 2 gives h = 2.
 */
class KwSemigroup {
public:
  const KwParams& params() const noexcept { return params_; }
  const std::vector<Integer>& xs() const noexcept { return xs_; }
  const std::vector<Integer>& ys() const noexcept { return ys_; }
  const std::vector<Integer>& hs() const noexcept { return hs_; }
  Integer n() const noexcept { return static_cast<Integer>(xs_.size()) + 2; }
  bool degenerate() const noexcept { return degenerate_; }

  /// x_{n-2} = q/2 (q even) or y_1 = p/2 (p even): the windows are tight.
  bool x_at_boundary() const noexcept { return !xs_.empty() && 2 * xs_.back() == params_.q; }
  bool y_at_boundary() const noexcept { return !ys_.empty() && 2 * ys_.front() == params_.p; }
  bool on_boundary() const noexcept { return x_at_boundary() || y_at_boundary(); }

  Integer x(Integer i) const;
  Integer y(Integer i) const;
  Integer h(Integer i) const;

  /// Generators p, q, h_1, ..., h_{n-2} in x-order.
  std::vector<Integer> generators() const;

  friend bool operator==(const KwSemigroup& a, const KwSemigroup& b) {
    return a.params_ == b.params_ && a.xs_ == b.xs_ && a.ys_ == b.ys_;
  }

private:
  friend KwSemigroup kw_from_xy(const KwParams&, std::vector<Integer>, std::vector<Integer>);

  KwParams params_;
  std::vector<Integer> xs_, ys_, hs_;
  bool degenerate_ = false;
};

KwSemigroup kw_from_xy(const KwParams& params, std::vector<Integer> xs, std::vector<Integer> ys);

/// Inverse of h = pq - xp - yq on the windows; hs may be given in any order.
KwSemigroup kw_from_generators(const KwParams& params, const std::vector<Integer>& hs);

/// Members in (size, lexicographic (xs, ys)) order, degenerate ones included.
std::vector<KwSemigroup> enumerate_kw(const KwParams& params);
void for_each_kw(const KwParams& params, const std::function<void(const KwSemigroup&)>& visit);

std::optional<KwDWitness> is_kw_d(const KwSemigroup& h);

Integer count_kw(const KwParams& params);
Integer count_kw_d(const KwParams& params);
Rational rho_d(const KwParams& params);

/// Closed-form pseudo-Frobenius set, ascending. Throws DEGENERATE.
std::vector<Integer> pf_formula(const KwSemigroup& h);

/// Closed-form Apery set with respect to p. Throws DEGENERATE.
AperySet apery_formula(const KwSemigroup& h);

NumericalSemigroup to_numerical(const KwSemigroup& h);

/// True iff values (after sorting) are z + k, z + 2k, ..., with k > 0, z >= 0.
bool is_arithmetic_progression(std::vector<Integer> values);

}  // namespace kwforge

#endif  // KWFORGE_KW_HPP
