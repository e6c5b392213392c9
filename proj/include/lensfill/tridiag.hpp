#pragma once

// Determinants and positive-semidefiniteness for the symmetric tridiagonal
// matrices with a given diagonal and all off-diagonal entries -1.  These are
// the intersection forms underlying admissible tuples; everything is exact.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "lensfill/rationals.hpp"

namespace lensfill {

// det of the tridiagonal matrix with diagonal (x_1,...,x_k) and -1 just off
// the diagonal, by the cofactor recursion
//   det(x_1,...,x_k) = x_1 det(x_2,...,x_k) - det(x_3,...,x_k)
// with det() = 1 and det(x) = x.  Evaluated right to left, which also makes
// it an independent route to the convergent numerator p_k.
template <typename E>
Int tridiag_det(std::span<const E> diag) {
  Int d1 = 1, d2 = 0;  // dets of the two shortest suffixes
  for (std::size_t i = diag.size(); i-- > 0;) {
    Int d = diag[i] * d1 - d2;
    d2 = std::move(d1);
    d1 = std::move(d);
  }
  return d1;
}

template <typename E>
Int tridiag_det(const std::vector<E>& diag) {
  return tridiag_det(std::span<const E>(diag.data(), diag.size()));
}

// Exact positive-semidefiniteness test with a rank threshold, by symmetric
// elimination over the rationals.  Pivots: d_1 = x_1, d_i = x_i - 1/d_{i-1}.
// A negative pivot kills PSD.  A zero pivot before the last row also kills
// PSD: the -1 coupling to the next row cannot be eliminated, so the 2x2
// Schur block (0 -1; -1 *) is indefinite.  Otherwise the rank is the number
// of nonzero pivots (k, or k-1 when only the final pivot vanishes).
template <typename E>
bool tridiag_psd_rank_at_least(std::span<const E> diag, std::size_t r) {
  const std::size_t k = diag.size();
  if (r > k) return false;
  std::size_t rank = 0;
  Fraction prev;
  for (std::size_t i = 0; i < k; ++i) {
    Fraction pivot(diag[i]);
    if (i > 0) pivot -= Fraction(1) / prev;
    if (pivot < 0) return false;
    if (pivot == 0) {
      if (i + 1 < k) return false;
    } else {
      ++rank;
    }
    prev = std::move(pivot);
  }
  return rank >= r;
}

template <typename E>
bool tridiag_psd_rank_at_least(const std::vector<E>& diag, std::size_t r) {
  return tridiag_psd_rank_at_least(std::span<const E>(diag.data(), diag.size()), r);
}

// det of the tuple with diag[i] increased by m, via multilinearity in row i:
//   det(..., x_i + m, ...) = det(diag) + m det(prefix before i) det(suffix after i).
// i is 0-based and must be interior.
template <typename E>
Int tridiag_det_shifted(std::span<const E> diag, std::size_t i, const Int& m) {
  if (diag.size() < 3 || i == 0 || i + 1 >= diag.size())
    throw std::out_of_range("tridiag_det_shifted: index must be interior");
  return tridiag_det(diag) +
         m * tridiag_det(diag.first(i)) * tridiag_det(diag.subspan(i + 1));
}

template <typename E>
Int tridiag_det_shifted(const std::vector<E>& diag, std::size_t i, const Int& m) {
  return tridiag_det_shifted(std::span<const E>(diag.data(), diag.size()), i, m);
}

}  // namespace lensfill
