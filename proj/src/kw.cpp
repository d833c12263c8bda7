#include "kwforge/kw.hpp"

#include <algorithm>
#include <numeric>

namespace kwforge {

KwParams make_params(Integer p, Integer q) {
  if (p < 3 || q <= p) raise(ErrorCode::Domain, "need 3 <= p < q");
  if (std::gcd(p, q) != 1) raise(ErrorCode::Domain, "p and q must be coprime");
  checked_mul(p, q);
  KwParams params{p, q, p / 2, q / 2, 0};
  if (p % 2 == 0)
    params.r = p / 2;
  else if (q % 2 == 0)
    params.r = q / 2;
  else
    params.r = (p + q) / 2;
  return params;
}

Rational make_rational(Integer num, Integer den) {
  if (den == 0) raise(ErrorCode::Domain, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Integer g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string to_string(const Rational& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Integer KwSemigroup::x(Integer i) const {
  if (i == 0) return 0;
  if (i < 1 || i > n() - 2) raise(ErrorCode::Domain, "x index out of range");
  return xs_[static_cast<std::size_t>(i - 1)];
}

Integer KwSemigroup::y(Integer i) const {
  if (i == n() - 1) return 0;
  if (i < 1 || i > n() - 2) raise(ErrorCode::Domain, "y index out of range");
  return ys_[static_cast<std::size_t>(i - 1)];
}

Integer KwSemigroup::h(Integer i) const {
  if (i < 1 || i > n() - 2) raise(ErrorCode::Domain, "h index out of range");
  return hs_[static_cast<std::size_t>(i - 1)];
}

std::vector<Integer> KwSemigroup::generators() const {
  std::vector<Integer> gens{params_.p, params_.q};
  gens.insert(gens.end(), hs_.begin(), hs_.end());
  return gens;
}

KwSemigroup kw_from_xy(const KwParams& params, std::vector<Integer> xs, std::vector<Integer> ys) {
  if (xs.empty() || xs.size() != ys.size())
    raise(ErrorCode::Domain, "x and y sequences must be nonempty and of equal length");
  const Integer p = params.p, q = params.q;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const std::string at = " at index " + std::to_string(i + 1);
    if (xs[i] < 1 || 2 * xs[i] > q) raise(ErrorCode::OutOfWindow, "x outside (0, q/2]" + at);
    if (ys[i] < 1 || 2 * ys[i] > p) raise(ErrorCode::OutOfWindow, "y outside (0, p/2]" + at);
    if (i > 0 && xs[i] <= xs[i - 1])
      raise(ErrorCode::OrderViolation, "x sequence not strictly increasing" + at);
    if (i > 0 && ys[i] >= ys[i - 1])
      raise(ErrorCode::OrderViolation, "y sequence not strictly decreasing" + at);
  }

  KwSemigroup h;
  h.params_ = params;
  h.xs_ = std::move(xs);
  h.ys_ = std::move(ys);
  const Integer pq = p * q;
  for (std::size_t i = 0; i < h.xs_.size(); ++i) h.hs_.push_back(pq - h.xs_[i] * p - h.ys_[i] * q);

  const Integer smallest = *std::min_element(h.hs_.begin(), h.hs_.end());
  if (smallest < p) {
    h.degenerate_ = true;
  } else {
    const NumericalSemigroup s(h.generators());
    h.degenerate_ = embedding_dimension(s) != h.n();
  }
  return h;
}

namespace {

// Inverse of a modulo m for coprime a, m.
Integer mod_inverse(Integer a, Integer m) {
  Integer old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const Integer quotient = old_r / r;
    old_r -= quotient * r;
    std::swap(old_r, r);
    old_s -= quotient * s;
    std::swap(old_s, s);
  }
  return ((old_s % m) + m) % m;
}

}  // namespace

KwSemigroup kw_from_generators(const KwParams& params, const std::vector<Integer>& hs) {
  if (hs.empty()) raise(ErrorCode::Domain, "empty generator list");
  const Integer p = params.p, q = params.q, pq = p * q;
  const Integer p_inv = mod_inverse(p, q);

  std::vector<std::pair<Integer, Integer>> coords;
  for (Integer h : hs) {
    if (h <= 0 || h >= pq) raise(ErrorCode::NoRepresentation, "generator " + std::to_string(h) + " outside (0, pq)");
    const Integer c = pq - h;  // x p + y q = c
    const Integer x = (c % q) * p_inv % q;
    const Integer y = (c - x * p) / q;
    if (x < 1 || 2 * x > q || y < 1 || 2 * y > p)
      raise(ErrorCode::NoRepresentation,
            "generator " + std::to_string(h) + " has no representation pq - xp - yq in the windows");
    coords.emplace_back(x, y);
  }
  std::sort(coords.begin(), coords.end());

  std::vector<Integer> xs, ys;
  for (auto [x, y] : coords) {
    xs.push_back(x);
    ys.push_back(y);
  }
  return kw_from_xy(params, std::move(xs), std::move(ys));
}

namespace {

// Visits every k-subset of {1..size} in lexicographic order.
template <typename Visit>
void for_each_subset(Integer size, Integer k, Visit&& visit) {
  std::vector<Integer> subset(static_cast<std::size_t>(k));
  std::iota(subset.begin(), subset.end(), Integer{1});
  while (true) {
    visit(subset);
    Integer i = k - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == size - k + i + 1) --i;
    if (i < 0) return;
    ++subset[static_cast<std::size_t>(i)];
    for (Integer j = i + 1; j < k; ++j)
      subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

void for_each_kw(const KwParams& params, const std::function<void(const KwSemigroup&)>& visit) {
  const Integer max_size = std::min(params.p_prime, params.q_prime);
  for (Integer k = 1; k <= max_size; ++k) {
    std::vector<std::vector<Integer>> y_sequences;
    for_each_subset(params.p_prime, k, [&](const std::vector<Integer>& subset) {
      y_sequences.emplace_back(subset.rbegin(), subset.rend());
    });
    std::sort(y_sequences.begin(), y_sequences.end());
    for_each_subset(params.q_prime, k, [&](const std::vector<Integer>& xs) {
      for (const auto& ys : y_sequences) visit(kw_from_xy(params, xs, ys));
    });
  }
}

std::vector<KwSemigroup> enumerate_kw(const KwParams& params) {
  std::vector<KwSemigroup> out;
  for_each_kw(params, [&](const KwSemigroup& h) { out.push_back(h); });
  return out;
}

std::optional<KwDWitness> is_kw_d(const KwSemigroup& h) {
  const Integer n = h.n();
  const KwDWitness w{h.x(1), h.y(n - 2)};
  for (Integer i = 1; i <= n - 2; ++i) {
    if (h.x(i) != i * w.x || h.y(i) != (n - 1 - i) * w.y) return std::nullopt;
  }
  if (2 * (n - 2) * w.x > h.params().q || 2 * (n - 2) * w.y > h.params().p) return std::nullopt;
  return w;
}

Integer count_kw(const KwParams& params) {
  return binomial(checked_add(params.p_prime, params.q_prime), params.p_prime) - 1;
}

Integer count_kw_d(const KwParams& params) {
  Integer total = 0;
  for (Integer n = 1; n <= params.p_prime; ++n)
    total = checked_add(total, checked_mul(params.p_prime / n, params.q_prime / n));
  return total;
}

Rational rho_d(const KwParams& params) { return make_rational(count_kw_d(params), count_kw(params)); }

static void require_nondegenerate(const KwSemigroup& h, const char* what) {
  if (h.degenerate())
    raise(ErrorCode::Degenerate, std::string(what) + " presumes multiplicity p and embedding dimension n");
}

std::vector<Integer> pf_formula(const KwSemigroup& h) {
  require_nondegenerate(h, "pseudo-Frobenius formula");
  const Integer p = h.params().p, q = h.params().q;
  std::vector<Integer> pf;
  for (Integer i = 0; i <= h.n() - 2; ++i) pf.push_back(p * q - (h.x(i) + 1) * p - (h.y(i + 1) + 1) * q);
  std::sort(pf.begin(), pf.end());
  return pf;
}

AperySet apery_formula(const KwSemigroup& h) {
  require_nondegenerate(h, "Apery formula");
  const Integer p = h.params().p, q = h.params().q;
  AperySet ap{p, std::vector<Integer>(static_cast<std::size_t>(p), -1)};
  auto place = [&](Integer value) {
    auto& slot = ap.elements[static_cast<std::size_t>(value % p)];
    if (slot >= 0) raise(ErrorCode::Internal, "Apery formula hit a residue twice");
    slot = value;
  };
  for (Integer lambda = 0; lambda < p - h.y(1); ++lambda) place(lambda * q);
  for (Integer i = 1; i <= h.n() - 2; ++i)
    for (Integer lambda = 0; lambda < h.y(i) - h.y(i + 1); ++lambda) place(h.h(i) + lambda * q);
  return ap;
}

NumericalSemigroup to_numerical(const KwSemigroup& h) { return NumericalSemigroup(h.generators()); }

bool is_arithmetic_progression(std::vector<Integer> values) {
  if (values.empty()) return false;
  std::sort(values.begin(), values.end());
  if (values.size() == 1) return values.front() > 0;
  const Integer k = values[1] - values[0];
  if (k <= 0 || values[0] - k < 0) return false;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] - values[i - 1] != k) return false;
  return true;
}

}  // namespace kwforge
