#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace rnf {
namespace {

using test::V;
namespace octic = test::octic;

std::vector<Value> desc(std::initializer_list<std::pair<long, long>> xs) {
  auto v = test::Vs(xs);
  std::sort(v.rbegin(), v.rend());
  return v;
}

TEST(Triangulate, OcticQuotientFamily) {
  Valuator val(octic::ctx(), octic::certificates());
  auto r = triangulate(octic::quotient_family(), val);
  EXPECT_EQ(r.T, octic::triangular());
  EXPECT_EQ(r.profile.top_down(), octic::deltas_top_down());
  auto has = [&](const std::vector<Value>& ms) { return std::find(r.trace.begin(), r.trace.end(), ms) != r.trace.end(); };
  EXPECT_TRUE(has(desc({{9, 2}, {11, 4}, {9, 4}, {2, 1}, {3, 2}, {1, 1}, {0, 1}, {0, 1}})));
  EXPECT_TRUE(has(desc({{9, 2}, {11, 4}, {9, 4}, {3, 2}, {1, 1}, {1, 1}, {0, 1}, {0, 1}})));
  EXPECT_TRUE(has(desc({{9, 2}, {11, 4}, {9, 4}, {1, 1}, {1, 1}, {1, 2}, {0, 1}, {0, 1}})));
  EXPECT_EQ(r.trace.back(), octic::deltas_top_down());
  EXPECT_EQ(r.trace.size(), r.steps.size());
  std::size_t total = 0;
  for (const auto& [d, m] : r.steps) total += m;
  EXPECT_EQ(total, 8u);
}

TEST(Triangulate, FirstStepExtractsTopRow) {
  Valuator val(octic::ctx(), octic::certificates());
  auto s = triangulation_step(octic::quotient_family(), val);
  EXPECT_EQ(s.delta, V(9, 2));
  EXPECT_EQ(s.multiplicity, 1u);
  EXPECT_EQ(s.monic_rows.row(0), octic::triangular().row(0));
  EXPECT_EQ(s.next.size(), 7u);
  auto nu = recompute_wvalues(s.next, val);
  EXPECT_EQ(nu, s.next.wvalues);
  EXPECT_TRUE(is_reduced(s.next, val).reduced);
}

TEST(Triangulate, RejectsNonReducedInput) {
  Valuator val(octic::ctx(), octic::certificates());
  EncodedFamily hnf{octic::hnf(), octic::hnf_values()};
  try {
    triangulate(hnf, val);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotReducedInput);
  }
  auto fam = octic::quotient_family();
  auto row = fam.matrix.row(7);
  for (auto& x : row) x *= 2;
  fam.matrix.set_row(7, row);
  fam.wvalues[7] = V(1);
  try {
    triangulate(fam, val);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotReducedInput);
  }
  fam = octic::quotient_family();
  fam.wvalues[0] = V(4);
  EXPECT_THROW(triangulate(fam, val), Error);
}

TEST(Triangulate, RandomReducedFamiliesReachBruteForceMaxima) {
  std::mt19937_64 rng(303);
  int done = 0;
  while (done < 60) {
    long p = std::array<long, 3>{2, 3, 5}[done % 3];
    int n = 2 + done % 3;
    auto s = test::solved_instance(rng, p, n);
    if (!s) continue;
    Valuator val(s->ctx(), test::exact_certificates(s->in));
    EncodedFamily fam = test::random_reduced_family(rng, *s);
    auto r = triangulate(fam, val);
    EXPECT_EQ(r.profile, s->profile()) << s->in.f.str();
    for (int i = 0; i < n; ++i) {
      auto w = s->in.field.w(Polynomial::from_row(r.T.row(i)));
      ASSERT_TRUE(w.has_value());
      EXPECT_EQ(Value(*w), r.profile.of_row(i));
    }
    ++done;
  }
}

}  // namespace
}  // namespace rnf
