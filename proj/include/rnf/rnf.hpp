#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rnf/reduced.hpp"

namespace rnf {

namespace detail {

struct Block {
  std::size_t begin;
  std::size_t end;
  Value rho;
};

inline std::vector<Block> blocks_of(const DeltaProfile& profile) {
  std::vector<Block> b;
  std::size_t n = profile.n();
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && profile.of_row(j) == profile.of_row(i)) ++j;
    b.push_back({i, j, profile.of_row(i)});
    i = j;
  }
  return b;
}

inline void axpy_row(IntMatrix& T, std::size_t dst, Integer f, std::size_t src, std::size_t from) {
  if (f == 0) return;
  for (std::size_t k = from; k < T.cols(); ++k) T(dst, k) -= f * T(src, k);
}

}  // namespace detail

// Reduces T to reduced normal form, block by block.
inline IntMatrix rnf_reduce(IntMatrix T, const DeltaProfile& profile, const Integer& p, ResidueConvention conv,
                            bool entrywise = false) {
  check_unitriangular(T);
  if (profile.n() != T.rows()) fail(ErrorCode::ShapeMismatch, "profile size differs from matrix size");
  std::size_t n = T.rows();
  if (entrywise) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        long c = (profile.of_row(i) - profile.of_row(j)).ceil_long();
        Integer q = floor_div(T(i, j) - represent(T(i, j), p, c, conv), ipow(p, c));
        detail::axpy_row(T, i, q * ipow(p, c), j, j);
      }
    return T;
  }
  auto B = detail::blocks_of(profile);
  // diagonal blocks become identities
  for (const auto& b : B)
    for (std::size_t i = b.end; i-- > b.begin;)
      for (std::size_t j = i + 1; j < b.end; ++j) detail::axpy_row(T, i, T(i, j), j, j);
  std::size_t r = B.size();
  for (std::size_t bi = 0; bi + 1 < r; ++bi)
    for (std::size_t bj = bi + 1; bj < r; ++bj) {
      long c = (B[bi].rho - B[bj].rho).ceil_long();
      Integer pc = ipow(p, c);
      const auto& I = B[bi];
      const auto& J = B[bj];
      IntMatrix D(I.end - I.begin, J.end - J.begin);
      for (std::size_t a = I.begin; a < I.end; ++a)
        for (std::size_t s = J.begin; s < J.end; ++s)
          D(a - I.begin, s - J.begin) = floor_div(T(a, s) - represent(T(a, s), p, c, conv), pc);
      for (std::size_t a = I.begin; a < I.end; ++a)
        for (std::size_t s = J.begin; s < J.end; ++s)
          detail::axpy_row(T, a, pc * D(a - I.begin, s - J.begin), s, J.begin);
    }
  return T;
}

inline IntMatrix rnf_reduce(const IntMatrix& T, const DeltaProfile& profile, Valuator& val, bool entrywise = false) {
  const auto& ctx = val.context();
  IntMatrix R = rnf_reduce(T, profile, ctx.p, ctx.residues, entrywise);
  for (std::size_t i = 0; i < R.rows(); ++i) {
    Value w = val.w(Polynomial::from_row(R.row(i)));
    if (w < profile.of_row(i))
      fail(ErrorCode::NotMaximal, "row " + std::to_string(i) + " has w = " + w.str() + " below " +
                                      profile.of_row(i).str());
  }
  return R;
}

inline bool is_rnf(const IntMatrix& T, const DeltaProfile& profile, const Integer& p, ResidueConvention conv) {
  check_unitriangular(T);
  for (std::size_t i = 0; i < T.rows(); ++i)
    for (std::size_t j = i + 1; j < T.cols(); ++j) {
      long c = (profile.of_row(i) - profile.of_row(j)).ceil_long();
      if (!in_residue_set(T(i, j), p, c, conv)) return false;
    }
  return true;
}

// Column reduction modulo p^{floor differences}, nonneg residues; values may drop.
inline IntMatrix hnf_compare(IntMatrix T, const DeltaProfile& profile, const Integer& p) {
  check_unitriangular(T);
  if (profile.n() != T.rows()) fail(ErrorCode::ShapeMismatch, "profile size differs from matrix size");
  std::size_t n = T.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      long d = profile.of_row(i).floor_long() - profile.of_row(j).floor_long();
      Integer pd = ipow(p, d);
      Integer q = floor_div(T(i, j) - represent(T(i, j), p, d, ResidueConvention::nonneg), pd);
      detail::axpy_row(T, i, q * pd, j, j);
    }
  return T;
}

// Lattice basis g_i / p^{floor(delta_i)} as elements, rows top-to-bottom.
inline std::vector<LocalElement> lattice_elements(const IntMatrix& T, const DeltaProfile& profile) {
  std::vector<LocalElement> out;
  for (std::size_t i = 0; i < T.rows(); ++i)
    out.push_back({Polynomial::from_row(T.row(i)), profile.of_row(i).floor_long()});
  return out;
}

}  // namespace rnf
