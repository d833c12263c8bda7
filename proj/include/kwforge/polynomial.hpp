#ifndef KWFORGE_POLYNOMIAL_HPP
#define KWFORGE_POLYNOMIAL_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "kwforge/error.hpp"

namespace kwforge {

/*
 * Monomial in u, v, u_1, ..., u_{n-2}; exponents are stored in that order,
 * so arity() == n. Ordered by graded lex (total degree, then lex).
 */
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<Integer> exponents);

  static Monomial one(Integer arity) { return Monomial(std::vector<Integer>(static_cast<std::size_t>(arity), 0)); }
  static Monomial u(Integer arity, Integer e = 1);
  static Monomial v(Integer arity, Integer e = 1);
  /// u_i for 1 <= i <= arity - 2.
  static Monomial ui(Integer arity, Integer i, Integer e = 1);

  Integer arity() const noexcept { return static_cast<Integer>(exponents_.size()); }
  Integer operator[](Integer index) const { return exponents_.at(static_cast<std::size_t>(index)); }
  const std::vector<Integer>& exponents() const noexcept { return exponents_; }
  Integer total_degree() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
  std::vector<Integer> exponents_;
};

/// Canonical text, e.g. "u^2*u1" or "1" for the unit monomial.
std::string to_string(const Monomial& m);

/// The pure binomial lead - trail.
struct Binomial {
  Monomial lead;
  Monomial trail;

  Binomial() = default;
  Binomial(Monomial lead_, Monomial trail_);

  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

/// Same binomial up to sign with the graded-lex larger monomial leading.
Binomial normalized(const Binomial& b);
std::string to_string(const Binomial& b);

/// Sparse integer polynomial; zero coefficients are never stored.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(const Monomial& m, Integer coefficient = 1);
  Polynomial(const Binomial& b);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Monomial, Integer>& terms() const noexcept { return terms_; }
  Integer coefficient(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  void add_term(const Monomial& m, Integer coefficient);

  std::map<Monomial, Integer> terms_;
};

/// Canonical text form `c*u^a*v^b*u1^c1*...` joined by +/-, terms in
/// descending graded-lex order; "0" for the zero polynomial.
std::string to_string(const Polynomial& f);

}  // namespace kwforge

#endif  // KWFORGE_POLYNOMIAL_HPP
