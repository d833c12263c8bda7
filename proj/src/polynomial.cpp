#include "kwforge/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace kwforge {

Monomial::Monomial(std::vector<Integer> exponents) : exponents_(std::move(exponents)) {
  if (std::any_of(exponents_.begin(), exponents_.end(), [](Integer e) { return e < 0; }))
    raise(ErrorCode::Domain, "negative exponent in monomial");
}

Monomial Monomial::u(Integer arity, Integer e) {
  auto m = one(arity);
  m.exponents_.at(0) = e;
  return Monomial(std::move(m.exponents_));
}

Monomial Monomial::v(Integer arity, Integer e) {
  auto m = one(arity);
  m.exponents_.at(1) = e;
  return Monomial(std::move(m.exponents_));
}

Monomial Monomial::ui(Integer arity, Integer i, Integer e) {
  if (i < 1 || i > arity - 2) raise(ErrorCode::Domain, "u_i index out of range");
  auto m = one(arity);
  m.exponents_[static_cast<std::size_t>(i + 1)] = e;
  return Monomial(std::move(m.exponents_));
}

Integer Monomial::total_degree() const {
  Integer d = 0;
  for (Integer e : exponents_) d = checked_add(d, e);
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity()) raise(ErrorCode::ArityMismatch, "monomial arity mismatch");
  std::vector<Integer> e(a.exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(a.exponents_[i], b.exponents_[i]);
  return Monomial(std::move(e));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  return a.exponents_ <=> b.exponents_;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (Integer i = 0; i < m.arity(); ++i) {
    const Integer e = m[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += i == 0 ? "u" : i == 1 ? "v" : "u" + std::to_string(i - 1);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

Binomial::Binomial(Monomial lead_, Monomial trail_) : lead(std::move(lead_)), trail(std::move(trail_)) {
  if (lead.arity() != trail.arity()) raise(ErrorCode::ArityMismatch, "binomial arity mismatch");
  if (lead == trail) raise(ErrorCode::Domain, "binomial with identical monomials is zero");
}

Binomial normalized(const Binomial& b) { return b.lead > b.trail ? b : Binomial(b.trail, b.lead); }

std::string to_string(const Binomial& b) { return to_string(b.lead) + "-" + to_string(b.trail); }

Polynomial::Polynomial(const Monomial& m, Integer coefficient) { add_term(m, coefficient); }

Polynomial::Polynomial(const Binomial& b) {
  add_term(b.lead, 1);
  add_term(b.trail, -1);
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Monomial& m, Integer coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (inserted) return;
  it->second = checked_add(it->second, coefficient);
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, checked_mul(ca, cb));
  return out;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const Integer magnitude = c < 0 ? -c : c;
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    const bool unit = m.total_degree() == 0;
    if (magnitude != 1 || unit) {
      out += std::to_string(magnitude);
      if (!unit) out += '*';
    }
    if (!unit) out += to_string(m);
  }
  return out;
}

}  // namespace kwforge
