#include "kwforge/ideal.hpp"

#include <functional>

namespace kwforge {

Integer h_degree(const Monomial& m, const KwSemigroup& h) {
  if (m.arity() != h.n())
    raise(ErrorCode::ArityMismatch, "monomial has " + std::to_string(m.arity()) + " variables, expected " +
                                        std::to_string(h.n()));
  const auto degrees = h.generators();
  Integer total = 0;
  for (Integer i = 0; i < m.arity(); ++i)
    total = checked_add(total, checked_mul(m[i], degrees[static_cast<std::size_t>(i)]));
  return total;
}

bool binomial_in_kernel(const Binomial& b, const KwSemigroup& h) {
  return h_degree(b.lead, h) == h_degree(b.trail, h);
}

namespace {

struct Vars {
  Integer n;
  Monomial u(Integer e = 1) const { return Monomial::u(n, e); }
  Monomial v(Integer e = 1) const { return Monomial::v(n, e); }
  Monomial ui(Integer i, Integer e = 1) const { return Monomial::ui(n, i, e); }
};

Binomial f_generator(const KwSemigroup& h, Integer i, Integer j) {
  const Vars var{h.n()};
  const Integer p = h.params().p, q = h.params().q;
  return Binomial(var.ui(i) * var.ui(j), var.u(q - h.x(i) - h.x(j)) * var.v(p - h.y(i) - h.y(j)));
}

std::string f_name(Integer i, Integer j) { return "f" + std::to_string(i) + "," + std::to_string(j); }

}  // namespace

std::vector<NamedBinomial> defining_generators(const KwSemigroup& h) {
  if (h.degenerate()) raise(ErrorCode::Degenerate, "defining generators presume embedding dimension n");
  const Integer n = h.n(), p = h.params().p, q = h.params().q;
  const Vars var{n};

  std::vector<NamedBinomial> out;
  out.push_back({"eta1", Binomial(var.v(p - h.y(1)), var.u(h.x(1)) * var.ui(1))});
  for (Integer i = 1; i <= n - 3; ++i)
    out.push_back({"g" + std::to_string(i),
                   Binomial(var.v(h.y(i) - h.y(i + 1)) * var.ui(i), var.u(h.x(i + 1) - h.x(i)) * var.ui(i + 1))});
  out.push_back({"eta2", Binomial(var.v(h.y(n - 2)) * var.ui(n - 2), var.u(q - h.x(n - 2)))});
  for (Integer i = 1; i <= n - 2; ++i)
    for (Integer j = i; j <= n - 2; ++j) out.push_back({f_name(i, j), f_generator(h, i, j)});
  return out;
}

DeterminantalMatrix determinantal_matrix(const KwSemigroup& h, const KwDWitness& w) {
  const auto witness = is_kw_d(h);
  if (!witness || *witness != w) raise(ErrorCode::WitnessMismatch, "(x, y) is not the KW_D witness of H");
  const Integer n = h.n(), p = h.params().p, q = h.params().q;
  const Vars var{n};

  DeterminantalMatrix a;
  a.rows[0] = {var.ui(n - 2), var.u(w.x), var.v(p - (n - 1) * w.y)};
  a.rows[1] = {var.u(q - (n - 1) * w.x), var.v(w.y)};
  for (Integer i = 1; i <= n - 3; ++i) a.rows[0].push_back(var.ui(i));
  for (Integer i = 1; i <= n - 2; ++i) a.rows[1].push_back(var.ui(i));
  return a;
}

Polynomial minor(const DeterminantalMatrix& a, Integer i, Integer j) {
  return Polynomial(a(1, i) * a(2, j)) - Polynomial(a(1, j) * a(2, i));
}

std::vector<Minor> minors_2x2(const DeterminantalMatrix& a) {
  std::vector<Minor> out;
  for (Integer i = 1; i <= a.columns(); ++i) {
    for (Integer j = i + 1; j <= a.columns(); ++j) {
      const Monomial plus = a(1, i) * a(2, j);
      const Monomial minus = a(1, j) * a(2, i);
      if (plus == minus)
        raise(ErrorCode::DegenerateMinor, "minor a" + std::to_string(i) + "," + std::to_string(j) + " vanishes");
      out.push_back({i, j, normalized(Binomial(plus, minus))});
    }
  }
  return out;
}

MinorIdentityReport verify_minor_identities(const KwSemigroup& h, const DeterminantalMatrix& a) {
  const auto witness = is_kw_d(h);
  if (!witness) raise(ErrorCode::WitnessMismatch, "H is not in KW_D");
  const Integer n = h.n(), p = h.params().p, q = h.params().q;
  if (a.columns() != n || static_cast<Integer>(a.rows[1].size()) != n)
    raise(ErrorCode::Domain, "matrix must have n columns");
  const Integer x = witness->x, y = witness->y;
  const Vars var{n};

  std::vector<Polynomial> minors(static_cast<std::size_t>(n * n));
  for (Integer i = 1; i <= n; ++i)
    for (Integer j = i + 1; j <= n; ++j) minors[static_cast<std::size_t>((i - 1) * n + (j - 1))] = minor(a, i, j);
  auto m = [&](Integer i, Integer j) -> const Polynomial& {
    return minors.at(static_cast<std::size_t>((i - 1) * n + (j - 1)));
  };
  auto mono = [&](Integer ue, Integer ve) { return Polynomial(var.u(ue) * var.v(ve)); };

  MinorIdentityReport report;
  auto check = [&](std::string name, Integer i, Integer j, const Binomial& generator,
                   const std::function<Polynomial()>& combination) {
    bool ok = false;
    try {
      ok = Polynomial(generator) == combination();
    } catch (const KwError&) {
      // a negative exponent in the certificate counts as a failed identity
    }
    report.identities.push_back({std::move(name), i, j, ok});
  };

  const auto generators = defining_generators(h);
  auto generator = [&](const std::string& name) -> const Binomial& {
    for (const auto& g : generators)
      if (g.name == name) return g.binomial;
    raise(ErrorCode::Internal, "missing generator " + name);
  };

  check("eta1 = -a2,3", 2, 3, generator("eta1"), [&] { return -m(2, 3); });
  for (Integer i = 1; i <= n - 3; ++i)
    check("g" + std::to_string(i) + " = -a2," + std::to_string(i + 3), 2, i + 3, generator("g" + std::to_string(i)),
          [&] { return -m(2, i + 3); });
  check("eta2 = a1,2", 1, 2, generator("eta2"), [&] { return m(1, 2); });
  check(f_name(1, n - 2) + " = a1,3", 1, n - 2, generator(f_name(1, n - 2)), [&] { return m(1, 3); });

  for (Integer j = 1; j <= n - 3; ++j) {
    check(f_name(1, j) + " = -a3," + std::to_string(j + 3) + " - sum + a1,2 term", 1, j, generator(f_name(1, j)), [&] {
      Polynomial rhs = -m(3, j + 3);
      for (Integer k = 0; k <= n - j - 4; ++k) rhs -= mono(k * x, p - (n + k) * y) * m(2, j + 4 + k);
      rhs += mono((n - j - 3) * x, p - (2 * n - j - 3) * y) * m(1, 2);
      return rhs;
    });
  }
  for (Integer i = 2; i <= n - 2; ++i) {
    check(f_name(i, n - 2) + " = a1," + std::to_string(i + 2) + " + sum", i, n - 2, generator(f_name(i, n - 2)), [&] {
      Polynomial rhs = m(1, i + 2);
      for (Integer k = 0; k <= i - 2; ++k) rhs += mono(q - (n + k) * x, k * y) * m(2, i + 1 - k);
      return rhs;
    });
  }
  for (Integer i = 2; i <= n - 3; ++i) {
    for (Integer j = i; j <= n - 3; ++j) {
      check(f_name(i, j) + " = " + f_name(i - 1, j + 1) + " - a" + std::to_string(i + 2) + "," + std::to_string(j + 3),
            i, j, generator(f_name(i, j)),
            [&] { return Polynomial(generator(f_name(i - 1, j + 1))) - m(i + 2, j + 3); });
    }
  }

  report.generators_in_minor_ideal = true;
  for (const auto& c : report.identities) report.generators_in_minor_ideal &= c.passed;

  report.minors_in_kernel = true;
  for (Integer i = 1; i <= n; ++i) {
    for (Integer j = i + 1; j <= n; ++j) {
      const Monomial plus = a(1, i) * a(2, j), minus = a(1, j) * a(2, i);
      if (plus == minus || h_degree(plus, h) != h_degree(minus, h)) {
        report.bad_minors.emplace_back(i, j);
        report.minors_in_kernel = false;
      }
    }
  }
  return report;
}

MinorIdentityReport verify_minor_identities(const KwSemigroup& h, const KwDWitness& w) {
  return verify_minor_identities(h, determinantal_matrix(h, w));
}

}  // namespace kwforge
