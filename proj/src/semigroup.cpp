#include "kwforge/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace kwforge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Domain: return "DOMAIN";
    case ErrorCode::OrderViolation: return "ORDER_VIOLATION";
    case ErrorCode::OutOfWindow: return "OUT_OF_WINDOW";
    case ErrorCode::NoRepresentation: return "NO_REPRESENTATION";
    case ErrorCode::Degenerate: return "DEGENERATE";
    case ErrorCode::DegenerateMinor: return "DEGENERATE_MINOR";
    case ErrorCode::WitnessMismatch: return "WITNESS_MISMATCH";
    case ErrorCode::ArityMismatch: return "ARITY_MISMATCH";
    case ErrorCode::NotHomogeneous: return "NOT_HOMOGENEOUS";
    case ErrorCode::NotApplicable: return "NOT_APPLICABLE";
    case ErrorCode::Overflow: return "OVERFLOW";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

Integer binomial(Integer n, Integer k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer result = 1;
  for (Integer i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i at every step
    const Integer g = std::gcd(result, i);
    result = checked_mul(result / g, (n - k + i) / (i / g));
  }
  return result;
}

// Table limit beyond which every residue class is already saturated: each
// Apery element is a sum of at most m - 1 generators.
static constexpr Integer kMaxTable = Integer{1} << 28;

NumericalSemigroup::NumericalSemigroup(std::vector<Integer> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) raise(ErrorCode::Domain, "empty generator list");
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  if (generators_.front() < 1) raise(ErrorCode::Domain, "generators must be positive");
  Integer g = 0;
  for (Integer x : generators_) g = std::gcd(g, x);
  if (g != 1) raise(ErrorCode::Domain, "generators must have gcd 1");

  const Integer m = multiplicity();
  table_limit_ = checked_mul(m - 1, generators_.back());
  if (table_limit_ > kMaxTable) raise(ErrorCode::Overflow, "membership table too large");

  auto tables = std::make_shared<Tables>();
  auto& member = tables->member;
  member.assign(static_cast<std::size_t>(table_limit_) + 1, 0);
  member[0] = 1;
  for (Integer n = 1; n <= table_limit_; ++n) {
    for (Integer gen : generators_) {
      if (gen > n) break;
      if (member[static_cast<std::size_t>(n - gen)]) {
        member[static_cast<std::size_t>(n)] = 1;
        break;
      }
    }
  }

  tables->apery.assign(static_cast<std::size_t>(m), -1);
  Integer found = 0;
  for (Integer n = 0; n <= table_limit_ && found < m; ++n) {
    auto& slot = tables->apery[static_cast<std::size_t>(n % m)];
    if (member[static_cast<std::size_t>(n)] && slot < 0) {
      slot = n;
      ++found;
    }
  }
  if (found != m) raise(ErrorCode::Internal, "Apery set incomplete");
  tables_ = std::move(tables);
}

bool NumericalSemigroup::contains(Integer n) const {
  if (n < 0) raise(ErrorCode::Domain, "membership query for negative integer");
  return contains_unchecked(n);
}

bool contains(const NumericalSemigroup& s, Integer n) { return s.contains(n); }

AperySet apery_set(const NumericalSemigroup& s) {
  return AperySet{s.multiplicity(), s.apery_elements()};
}

Integer frobenius(const NumericalSemigroup& s) {
  if (s.multiplicity() == 1) raise(ErrorCode::Domain, "semigroup is N; no Frobenius number");
  const auto& ap = s.apery_elements();
  return *std::max_element(ap.begin(), ap.end()) - s.multiplicity();
}

std::vector<Integer> pseudo_frobenius(const NumericalSemigroup& s) {
  if (s.multiplicity() == 1) raise(ErrorCode::Domain, "semigroup is N; no pseudo-Frobenius numbers");
  const auto& ap = s.apery_elements();
  std::vector<Integer> pf;
  for (Integer w : ap) {
    // w is maximal in Ap under <=_S iff no other Apery element lies above it
    const bool maximal = std::none_of(ap.begin(), ap.end(), [&](Integer other) {
      return other != w && other > w && s.contains_unchecked(other - w);
    });
    if (maximal) pf.push_back(w - s.multiplicity());
  }
  std::sort(pf.begin(), pf.end());
  return pf;
}

std::vector<Integer> minimal_generators(const NumericalSemigroup& s) {
  std::vector<Integer> result;
  for (Integer g : s.generators()) {
    bool decomposable = false;
    for (Integer a = 1; a <= g / 2 && !decomposable; ++a)
      decomposable = s.contains_unchecked(a) && s.contains_unchecked(g - a);
    if (!decomposable) result.push_back(g);
  }
  return result;
}

Integer embedding_dimension(const NumericalSemigroup& s) {
  return static_cast<Integer>(minimal_generators(s).size());
}

Integer semigroup_type(const NumericalSemigroup& s) {
  return static_cast<Integer>(pseudo_frobenius(s).size());
}

namespace {

void collect_factorizations(const NumericalSemigroup& s, const std::vector<Integer>& gens,
                            std::size_t index, Integer remaining, std::vector<Integer>& current,
                            std::vector<std::vector<Integer>>& out) {
  const Integer g = gens[index];
  if (index == 0) {
    if (remaining % g == 0) {
      current[0] = remaining / g;
      out.push_back(current);
      current[0] = 0;
    }
    return;
  }
  for (Integer c = remaining / g; c >= 0; --c) {
    const Integer rest = remaining - c * g;
    if (!s.contains_unchecked(rest)) continue;
    current[index] = c;
    collect_factorizations(s, gens, index - 1, rest, current, out);
  }
  current[index] = 0;
}

}  // namespace

std::vector<std::vector<Integer>> factorizations(const NumericalSemigroup& s, Integer n) {
  if (n < 0) raise(ErrorCode::Domain, "factorization of negative integer");
  const auto gens = minimal_generators(s);
  std::vector<std::vector<Integer>> out;
  if (!s.contains_unchecked(n)) return out;
  std::vector<Integer> current(gens.size(), 0);
  collect_factorizations(s, gens, gens.size() - 1, n, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

Integer factorization_length(std::span<const Integer> factorization) {
  return std::accumulate(factorization.begin(), factorization.end(), Integer{0});
}

}  // namespace kwforge
