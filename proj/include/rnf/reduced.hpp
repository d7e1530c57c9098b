#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "rnf/local_valuations.hpp"

namespace rnf {

using ValueMultiset = std::vector<std::pair<Value, std::size_t>>;  // ascending values

inline ValueMultiset make_multiset(std::vector<Value> values) {
  std::sort(values.begin(), values.end());
  ValueMultiset out;
  for (const auto& v : values) {
    if (!out.empty() && out.back().first == v) ++out.back().second;
    else out.emplace_back(v, 1);
  }
  return out;
}

struct EncodedFamily {
  IntMatrix matrix;  // row i encodes q_i against (x^{d-1}, ..., 1)
  std::vector<Value> wvalues;

  std::size_t size() const { return matrix.rows(); }
  Polynomial polynomial(std::size_t i) const { return Polynomial::from_row(matrix.row(i)); }
};

struct DeltaProfile {
  std::vector<Value> deltas;  // delta_0 <= ... <= delta_{n-1}

  static DeltaProfile from_deltas(std::vector<Value> d) {
    for (std::size_t j = 1; j < d.size(); ++j)
      if (d[j] < d[j - 1]) fail(ErrorCode::InvalidInput, "maximal values must be non-decreasing in degree");
    return {std::move(d)};
  }
  // From values listed top-to-bottom (degree n-1 first), as matrices print them.
  static DeltaProfile from_top_down(std::vector<Value> d) {
    std::reverse(d.begin(), d.end());
    return from_deltas(std::move(d));
  }

  std::size_t n() const { return deltas.size(); }
  const Value& of_row(std::size_t i) const { return deltas[n() - 1 - i]; }
  std::vector<Value> top_down() const { return {deltas.rbegin(), deltas.rend()}; }

  // rho_1 > ... > rho_r with multiplicities
  std::vector<std::pair<Value, std::size_t>> distinct() const {
    auto ms = make_multiset(deltas);
    return {ms.rbegin(), ms.rend()};
  }

  ValueMultiset fractional_multiset() const {
    std::vector<Value> fr;
    for (const auto& d : deltas) fr.push_back(d.frac());
    return make_multiset(std::move(fr));
  }

  friend bool operator==(const DeltaProfile&, const DeltaProfile&) = default;
};

inline ValueMultiset invariant_multiset(const std::vector<LocalFactorCertificate>& certs) {
  std::vector<Value> all;
  for (const auto& c : certs)
    for (int k = 0; k < c.ram_index; ++k) all.emplace_back(k, c.ram_index);
  auto support = make_multiset(all);
  ValueMultiset out;
  for (const auto& [delta, unused] : support) {
    std::size_t f = 0;
    for (const auto& c : certs)
      if ((c.ram_index * delta).is_integer()) f += static_cast<std::size_t>(c.res_degree);
    out.emplace_back(delta, f);
  }
  return out;
}

inline std::vector<LocalElement> scale_to_unit(const EncodedFamily& fam) {
  std::vector<LocalElement> out;
  for (std::size_t i = 0; i < fam.size(); ++i) out.push_back({fam.polynomial(i), fam.wvalues.at(i).floor_long()});
  return out;
}

inline std::vector<Value> recompute_wvalues(const EncodedFamily& fam, Valuator& val) {
  std::vector<Value> nu;
  for (std::size_t i = 0; i < fam.size(); ++i) nu.push_back(val.w(fam.polynomial(i)));
  return nu;
}

struct ReducednessWitness {
  Value delta;
  std::vector<std::size_t> members;
  std::vector<Integer> coefficients;
  Value value;  // w of the combination, > delta
};

struct ReducednessClass {
  Value delta;
  std::vector<std::size_t> members;
};

struct ReducednessReport {
  bool reduced = true;
  std::optional<ReducednessWitness> witness;
  std::vector<ReducednessClass> classes;
};

namespace detail {

inline LocalElement combine(const std::vector<LocalElement>& elems, const std::vector<std::size_t>& members,
                            const std::vector<Integer>& c, const Integer& p) {
  long s = 0;
  for (std::size_t k = 0; k < members.size(); ++k) s = std::max(s, elems[members[k]].exponent);
  Polynomial num;
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (c[k] == 0) continue;
    const auto& e = elems[members[k]];
    num += (c[k] * ipow(p, static_cast<unsigned long>(s - e.exponent))) * e.numerator;
  }
  return {num, s};
}

}  // namespace detail

// Exhaustive F_p-independence test of the residues within each class of equal fractional value.
inline ReducednessReport is_reduced_elements(const std::vector<LocalElement>& elems, Valuator& val,
                                             std::size_t budget = 1u << 16) {
  const Integer& p = val.context().p;
  std::vector<LocalElement> scaled;
  std::vector<Value> w;
  for (const auto& e : elems) {
    Value v = val.w(e);
    long k = v.floor_long();
    scaled.push_back({e.numerator, e.exponent + k});
    w.push_back(v.frac());
  }
  ReducednessReport report;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    auto it = std::find_if(report.classes.begin(), report.classes.end(),
                           [&](const auto& c) { return c.delta == w[i]; });
    if (it == report.classes.end()) report.classes.push_back({w[i], {i}});
    else it->members.push_back(i);
  }
  std::sort(report.classes.begin(), report.classes.end(), [](const auto& a, const auto& b) { return a.delta < b.delta; });
  for (const auto& cls : report.classes) {
    std::size_t m = cls.members.size();
    if (m == 1) continue;
    Integer total = ipow(p, m);
    if (total > Integer(static_cast<unsigned long>(budget)))
      fail(ErrorCode::ClassTooLarge, "class of size " + std::to_string(m) + " exceeds the exhaustive budget");
    // coefficient vectors whose first nonzero entry is 1
    for (std::size_t lead = 0; lead < m; ++lead) {
      std::vector<Integer> c(m, Integer(0));
      c[lead] = 1;
      std::size_t free = m - lead - 1;
      Integer count = ipow(p, free);
      for (Integer idx = 1; idx < count; ++idx) {
        Integer r = idx;
        for (std::size_t k = lead + 1; k < m; ++k) {
          c[k] = mod_nonneg(r, p);
          r = floor_div(r, p);
        }
        LocalElement comb = detail::combine(scaled, cls.members, c, p);
        Value v = comb.numerator.is_zero() ? Value::infinity() : val.w(comb);
        if (v > cls.delta) {
          Value again = comb.numerator.is_zero() ? Value::infinity() : val.w(comb);
          if (!(again > cls.delta)) fail(ErrorCode::VerificationFailed, "reducedness witness did not re-verify");
          report.reduced = false;
          report.witness = ReducednessWitness{cls.delta, cls.members, c, v};
          return report;
        }
      }
    }
  }
  return report;
}

inline ReducednessReport is_reduced(const EncodedFamily& fam, Valuator& val, std::size_t budget = 1u << 16) {
  if (fam.wvalues.size() != fam.size()) fail(ErrorCode::ShapeMismatch, "one w-value per row required");
  auto nu = recompute_wvalues(fam, val);
  for (std::size_t i = 0; i < nu.size(); ++i)
    if (nu[i] != fam.wvalues[i])
      fail(ErrorCode::VerificationFailed, "row " + std::to_string(i) + " has w = " + nu[i].str() + ", stated " +
                                              fam.wvalues[i].str());
  return is_reduced_elements(scale_to_unit(fam), val, budget);
}

inline void check_unitriangular(const IntMatrix& T) {
  if (!T.square()) fail(ErrorCode::ShapeMismatch, "triangular basis must be square");
  for (std::size_t i = 0; i < T.rows(); ++i) {
    if (T(i, i) != 1) fail(ErrorCode::ShapeMismatch, "diagonal entries must be 1");
    for (std::size_t j = 0; j < i; ++j)
      if (T(i, j) != 0) fail(ErrorCode::ShapeMismatch, "entries below the diagonal must vanish");
  }
}

struct TriangularCheck {
  bool integral = false;
  bool reduced = false;
};

// nu listed top-to-bottom like the rows of T.
inline TriangularCheck check_reduced_triangular(const IntMatrix& T, const std::vector<Value>& nu,
                                                const DeltaProfile& profile) {
  check_unitriangular(T);
  if (nu.size() != T.rows() || profile.n() != T.rows()) fail(ErrorCode::ShapeMismatch, "size mismatch");
  TriangularCheck r{true, true};
  for (std::size_t i = 0; i < nu.size(); ++i) {
    const Value& d = profile.of_row(i);
    if (nu[i].floor() != d.floor()) r.integral = false;
    if (nu[i] != d) r.reduced = false;
  }
  return r;
}

inline bool orthonormal_membership(const RatMatrix& T, const std::vector<std::size_t>& partition, const Integer& p) {
  if (!T.square() || std::accumulate(partition.begin(), partition.end(), std::size_t{0}) != T.rows())
    fail(ErrorCode::ShapeMismatch, "partition does not match matrix size");
  if (!p_integral(T, p)) return false;
  std::size_t r0 = 0;
  for (std::size_t bi = 0; bi < partition.size(); ++bi) {
    std::size_t c0 = 0;
    for (std::size_t bj = 0; bj < partition.size(); ++bj) {
      RatMatrix blk = T.block(r0, c0, partition[bi], partition[bj]);
      if (bi == bj) {
        Rational d = determinant(blk);
        if (d == 0 || vp(d, p) != 0) return false;
      } else if (bj < bi) {
        for (std::size_t i = 0; i < blk.rows(); ++i)
          for (std::size_t j = 0; j < blk.cols(); ++j)
            if (blk(i, j) != 0 && vp(blk(i, j), p) <= 0) return false;
      }
      c0 += partition[bj];
    }
    r0 += partition[bi];
  }
  return true;
}

// Coordinates of each element against 1, theta, ..., theta^{n-1}.
inline RatMatrix coefficient_matrix(const std::vector<LocalElement>& fam, const Integer& p, int n) {
  RatMatrix c(fam.size(), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (fam[i].numerator.degree() >= n) fail(ErrorCode::ShapeMismatch, "element of degree >= n");
    Rational scale = fam[i].exponent >= 0 ? Rational(1, ipow(p, fam[i].exponent))
                                          : Rational(ipow(p, -fam[i].exponent));
    for (int k = 0; k < n; ++k) c(i, k) = Rational(fam[i].numerator.coeff(k)) * scale;
  }
  return c;
}

inline RatMatrix transpose(const RatMatrix& a) {
  RatMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

// T with famB = T * famA.
inline RatMatrix transition_matrix(const std::vector<LocalElement>& famA, const std::vector<LocalElement>& famB,
                                   const Integer& p, int n) {
  if (famA.size() != static_cast<std::size_t>(n) || famB.size() != famA.size())
    fail(ErrorCode::ShapeMismatch, "transition needs two bases of size n");
  RatMatrix ca = coefficient_matrix(famA, p, n), cb = coefficient_matrix(famB, p, n);
  return transpose(solve(transpose(ca), transpose(cb)));
}

struct OrthonormalBasis {
  std::vector<LocalElement> elements;  // scaled, w in [0,1), ordered
  std::vector<Value> values;
  std::vector<std::size_t> partition;
};

// Scales each element into [0,1) and orders by value, then degree.
inline OrthonormalBasis orthonormal_order(const std::vector<LocalElement>& fam, Valuator& val) {
  std::vector<std::pair<Value, LocalElement>> items;
  for (const auto& e : fam) {
    Value v = val.w(e);
    items.push_back({v.frac(), {e.numerator, e.exponent + v.floor_long()}});
  }
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.numerator.degree() < b.second.numerator.degree();
  });
  OrthonormalBasis out;
  for (const auto& [v, e] : items) {
    if (!out.values.empty() && out.values.back() == v) ++out.partition.back();
    else out.partition.push_back(1);
    out.values.push_back(v);
    out.elements.push_back(e);
  }
  return out;
}

inline std::vector<LocalElement> elements_of(const IntMatrix& T, const std::vector<long>& exponents) {
  std::vector<LocalElement> out;
  for (std::size_t i = 0; i < T.rows(); ++i) out.push_back({Polynomial::from_row(T.row(i)), exponents.at(i)});
  return out;
}

}  // namespace rnf
