#ifndef KWFORGE_EXACT_RANK_HPP
#define KWFORGE_EXACT_RANK_HPP

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <limits>
#include <type_traits>
#include <utility>

#include "kwforge/error.hpp"

namespace kwforge {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntegerMatrix = DenseMatrix<Integer>;
using BigInteger = boost::multiprecision::cpp_int;

namespace detail {

template <typename Scalar>
Scalar fraction_free_update(const Scalar& a, const Scalar& pivot, const Scalar& b, const Scalar& c,
                            const Scalar& previous) {
  if constexpr (std::is_same_v<Scalar, Integer>) {
    // (a * pivot - b * c) / previous in 128-bit, checked back into 64-bit
    const __int128 numerator = static_cast<__int128>(a) * pivot - static_cast<__int128>(b) * c;
    const __int128 result = numerator / previous;
    if (result > std::numeric_limits<Integer>::max() || result < std::numeric_limits<Integer>::min())
      raise(ErrorCode::Overflow, "fraction-free elimination exceeded 64-bit range");
    return static_cast<Integer>(result);
  } else {
    return Scalar((a * pivot - b * c) / previous);
  }
}

}  // namespace detail

/*
 * Rank over Q by fraction-free (Bareiss) elimination with row pivoting.
 *
 * After r pivot steps every remaining entry equals an (r+1)x(r+1) minor of
 * the input, so each division by the previous pivot is exact and no
 * fractions appear. Intermediate growth is bounded by Hadamard's inequality;
 * with Scalar = Integer the update throws OVERFLOW rather than wrapping.
 */
template <typename Scalar>
Eigen::Index fraction_free_rank(DenseMatrix<Scalar> m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Scalar previous(1);
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot_row = rank;
    while (pivot_row < rows && m(pivot_row, col) == Scalar(0)) ++pivot_row;
    if (pivot_row == rows) continue;
    if (pivot_row != rank) m.row(pivot_row).swap(m.row(rank));

    const Scalar pivot = m(rank, col);
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      const Scalar factor = m(i, col);
      for (Eigen::Index j = col + 1; j < cols; ++j)
        m(i, j) = detail::fraction_free_update<Scalar>(m(i, j), pivot, factor, m(rank, j), previous);
      m(i, col) = Scalar(0);
    }
    previous = pivot;
    ++rank;
  }
  return rank;
}

/// Rank over Q; retries with arbitrary-precision integers if 64-bit overflows.
Eigen::Index exact_rank(const IntegerMatrix& m);

/// Rank over the prime field F_p (p < 2^31).
Eigen::Index rank_mod_prime(const IntegerMatrix& m, Integer prime);

}  // namespace kwforge

#endif  // KWFORGE_EXACT_RANK_HPP
