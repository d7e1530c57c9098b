#pragma once

#include <cstddef>
#include <vector>

#include "rnf/matrix.hpp"

namespace rnf {

struct LocalHnf {
  RatMatrix H;  // entries in A, H = U * M
  RatMatrix U;  // det(U) is a p-unit
  std::vector<std::size_t> pivot_cols;
  std::vector<long> pivot_exponents;  // pivot of row r is p^{pivot_exponents[r]}

  // Number of leading rows whose pivots are 1 in columns 0, 1, ...
  std::size_t unit_prefix() const {
    std::size_t m = 0;
    while (m < pivot_cols.size() && pivot_cols[m] == m && pivot_exponents[m] == 0) ++m;
    return m;
  }
};

// Row echelon form over A = Z localized at p.
inline LocalHnf hnf_local(const RatMatrix& M, const Integer& p,
                          ResidueConvention conv = ResidueConvention::balanced) {
  std::size_t l = M.rows(), d = M.cols();
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (mpz_divisible_p(M(i, j).get_den_mpz_t(), p.get_mpz_t()))
        fail(ErrorCode::InvalidInput, "hnf_local entry outside A");
  LocalHnf out{M, RatMatrix::identity(l), {}, {}};
  RatMatrix& H = out.H;
  RatMatrix& U = out.U;
  auto axpy = [&](std::size_t dst, const Rational& f, std::size_t src) {
    for (std::size_t j = 0; j < d; ++j) H(dst, j) -= f * H(src, j);
    for (std::size_t j = 0; j < l; ++j) U(dst, j) -= f * U(src, j);
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < l; ++c) {
    std::size_t best = l;
    long bestv = 0;
    for (std::size_t i = r; i < l; ++i) {
      if (H(i, c) == 0) continue;
      long v = vp(H(i, c), p);
      if (best == l || v < bestv) {
        best = i;
        bestv = v;
      }
    }
    if (best == l) continue;
    if (best != r) {
      H.swap_rows(r, best);
      U.swap_rows(r, best);
    }
    Rational pk(ipow(p, static_cast<unsigned long>(bestv)));
    Rational unit = H(r, c) / pk;
    for (std::size_t j = 0; j < d; ++j) H(r, j) /= unit;
    for (std::size_t j = 0; j < l; ++j) U(r, j) /= unit;
    for (std::size_t i = r + 1; i < l; ++i)
      if (H(i, c) != 0) axpy(i, Rational(H(i, c) / pk), r);
    for (std::size_t i = 0; i < r; ++i) {
      if (H(i, c) == 0) continue;
      Rational t = H(i, c);
      Rational rep(represent(t, p, bestv, conv));
      Rational f = (t - rep) / pk;
      if (f != 0) axpy(i, f, r);
    }
    out.pivot_cols.push_back(c);
    out.pivot_exponents.push_back(bestv);
    ++r;
  }
  if (r < l) fail(ErrorCode::RankDeficient, "rows are linearly dependent");
  return out;
}

}  // namespace rnf
