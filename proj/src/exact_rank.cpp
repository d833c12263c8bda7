#include "kwforge/exact_rank.hpp"

namespace kwforge {

Eigen::Index exact_rank(const IntegerMatrix& m) {
  try {
    return fraction_free_rank<Integer>(m);
  } catch (const KwError& e) {
    if (e.code() != ErrorCode::Overflow) throw;
  }
  return fraction_free_rank<BigInteger>(m.cast<BigInteger>());
}

Eigen::Index rank_mod_prime(const IntegerMatrix& input, Integer prime) {
  if (prime < 2 || prime >= (Integer{1} << 31)) raise(ErrorCode::Domain, "prime must lie in [2, 2^31)");
  IntegerMatrix m = input.unaryExpr([prime](Integer v) { return ((v % prime) + prime) % prime; });

  auto inverse = [prime](Integer a) {
    Integer result = 1, base = a, e = prime - 2;
    while (e > 0) {
      if (e & 1) result = result * base % prime;
      base = base * base % prime;
      e >>= 1;
    }
    return result;
  };

  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot_row = rank;
    while (pivot_row < rows && m(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    if (pivot_row != rank) m.row(pivot_row).swap(m.row(rank));
    const Integer scale = inverse(m(rank, col));
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      const Integer factor = m(i, col) * scale % prime;
      if (factor == 0) continue;
      for (Eigen::Index j = col; j < cols; ++j) m(i, j) = ((m(i, j) - factor * m(rank, j)) % prime + prime) % prime;
    }
    ++rank;
  }
  return rank;
}

}  // namespace kwforge
