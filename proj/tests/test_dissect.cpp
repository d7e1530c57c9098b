#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <tuple>

#include "support.hpp"

namespace rnf {
namespace {

using test::P;
using test::V;

std::vector<std::pair<int, int>> shapes(const std::vector<LocalFactorCertificate>& certs) {
  std::vector<std::pair<int, int>> s;
  for (const auto& c : certs) s.emplace_back(c.ram_index, c.res_degree);
  std::sort(s.begin(), s.end());
  return s;
}

TEST(Dissect, EisensteinCubic) {
  auto d = auto_dissect_factors({Integer(2), P({1, 0, 0, -2})});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].cert.ram_index, 3);
  EXPECT_EQ(d[0].cert.res_degree, 1);
  EXPECT_EQ(d[0].cert.approx, P({1, 0, 0, 2}));
  EXPECT_TRUE(d[0].frame_has_psi);
  EXPECT_EQ(d[0].psi, P({1, 0}));
}

TEST(Dissect, OcticAtTwoNeedsSuppliedCertificates) {
  ProblemContext ctx = test::octic::ctx();
  try {
    auto_dissect(ctx);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RequiresCertificate);
  }
  auto part = auto_dissect_partial(ctx);
  ASSERT_EQ(part.unresolved.size(), 1u);
  EXPECT_NE(part.unresolved[0].find("(x)^6"), std::string::npos);
  bool has_inert = false;
  for (const auto& d : part.factors)
    if (d.cert.approx == test::octic::phi3() && d.cert.ram_index == 1 && d.cert.res_degree == 2) has_inert = true;
  EXPECT_TRUE(has_inert);
}

TEST(Dissect, OcticAtThreeIsInert) {
  auto c = auto_dissect({Integer(3), test::octic::f()});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].ram_index, 1);
  EXPECT_EQ(c[0].res_degree, 8);
}

TEST(Dissect, SplitQuarticAtSeven) {
  auto c = auto_dissect({Integer(7), P({1, 0, 4, 0, 3})});
  EXPECT_EQ(shapes(c), (std::vector<std::pair<int, int>>{{1, 1}, {1, 1}, {1, 2}}));
}

TEST(Dissect, RegularAndIrregularQuadratics) {
  EXPECT_EQ(shapes(auto_dissect({Integer(3), P({1, 0, -7})})), (std::vector<std::pair<int, int>>{{1, 1}, {1, 1}}));
  EXPECT_EQ(shapes(auto_dissect({Integer(3), P({1, 0, 1})})), (std::vector<std::pair<int, int>>{{1, 2}}));
  try {
    auto_dissect({Integer(2), P({1, 0, -12})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RequiresCertificate);
  }
}

TEST(Dissect, PureRadicals) {
  for (long p : {2L, 3L, 5L}) {
    for (int n = 2; n <= 6; ++n) {
      Polynomial f = Polynomial::monomial(Integer(1), n) - Polynomial(Integer(p));
      auto c = auto_dissect({Integer(p), f});
      ASSERT_EQ(c.size(), 1u);
      EXPECT_EQ(c[0].ram_index, n);
      EXPECT_GE(gauss_valuation(c[0].approx - f, Integer(p)), V(1));
    }
  }
}

TEST(Dissect, RandomInstancesMatchExactFactorization) {
  std::mt19937_64 rng(77);
  int accepted = 0, tried = 0;
  while (accepted < 120 && tried < 2000) {
    ++tried;
    long p = std::array<long, 3>{2, 3, 5}[tried % 3];
    int n = 2 + tried % 3;
    auto in = test::random_instance(rng, p, n);
    if (!in) continue;
    ProblemContext ctx{Integer(p), in->f};
    std::vector<LocalFactorCertificate> certs;
    try {
      certs = auto_dissect(ctx);
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::RequiresCertificate) << e.what();
      continue;
    }
    EXPECT_EQ(shapes(certs), shapes(test::exact_certificates(*in))) << in->f.str();
    Valuator val(ctx, certs);
    for (int k = 0; k < 3; ++k) {
      Polynomial g = test::random_poly(rng, std::uniform_int_distribution<int>(0, n - 1)(rng), -20, 20, false);
      if (g.is_zero()) continue;
      auto got = val.w_vector({g, 0});
      auto expect = in->field.wvec(test::oracle::coeffs(g));
      std::vector<std::tuple<int, Value>> a, b;
      for (std::size_t i = 0; i < got.size(); ++i) a.emplace_back(certs[i].degree(), got[i]);
      for (std::size_t i = 0; i < expect.size(); ++i)
        b.emplace_back(in->factors[i].degree(), test::to_value(expect[i]));
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      EXPECT_EQ(a, b) << in->f.str() << " at " << g.str();
    }
    ++accepted;
  }
  EXPECT_GE(accepted, 120);
}

}  // namespace
}  // namespace rnf
