#include <doctest.h>

#include <stdexcept>

#include <random>

#include "gapkit/gap.hpp"
#include "gapkit/group.hpp"
#include "test_util.hpp"

using namespace gapkit;
using testutil::and2;
using testutil::make_table;
using testutil::mod_sum;
using testutil::xor2;

namespace {

// Indicator of the repetition-free triples over a 3-element domain.
FnTable perm_indicator() {
  return make_table(3, 2, 3, [](const PointTuple& p) {
    return (p[0] != p[1] && p[0] != p[2] && p[1] != p[2]) ? 1 : 0;
  });
}

// Every sigma {1..n} -> {1..n}; proper minors are those that lose
// essential arity.
int essl_full_sweep(const FnTable& f) {
  const int n = f.n;
  const int ess = essential_arity(f);
  std::uint64_t total = 1;
  for (int j = 0; j < n; ++j) total *= static_cast<std::uint64_t>(n);
  int best = -1;
  for (std::uint64_t sc = 0; sc < total; ++sc) {
    VarMap sigma(static_cast<std::size_t>(n));
    std::uint64_t rest = sc;
    for (int j = 0; j < n; ++j) {
      sigma[static_cast<std::size_t>(j)] = static_cast<int>(rest % n) + 1;
      rest /= static_cast<std::uint64_t>(n);
    }
    const int e = essential_arity(simple_minor(f, sigma, n));
    if (e < ess) best = std::max(best, e);
  }
  return best;
}

}  // namespace

TEST_CASE("quasi_arity") {
  CHECK(quasi_arity(mod_sum(2, 2, 3)) == 3);
  CHECK(quasi_arity(xor2()) == 0);
  const FnTable proj = make_table(3, 3, 3, [](const PointTuple& p) { return p[0]; });
  CHECK(quasi_arity(proj) == 1);
  CHECK(quasi_arity(and2()) == 1);
  CHECK(quasi_arity(FnTable(2, 2, 1, {0, 1})) == 1);
}

TEST_CASE("essl and arity_gap") {
  CHECK(essl(xor2()) == 0);
  CHECK(essl(and2()) == 1);
  CHECK(essl(mod_sum(2, 2, 3)) == 1);

  CHECK(arity_gap(xor2()) == 2);
  CHECK(arity_gap(and2()) == 1);
  const FnTable sym2 = make_table(2, 2, 3, [](const PointTuple& p) {
    return (p[0] & p[1]) ^ (p[0] & p[2]) ^ (p[1] & p[2]);
  });
  CHECK(arity_gap(sym2) == 2);

  CHECK_THROWS_AS(essl(constant_table(2, 2, 2, 0)), std::invalid_argument);
  CHECK_THROWS_AS(essl(FnTable(2, 2, 2, {0, 0, 1, 1})), std::invalid_argument);
}

TEST_CASE("essl equals the maximum over all proper minors") {
  for (int n = 2; n <= 3; ++n) {
    const int size = 1 << n;
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << size); ++code) {
      std::vector<int> values(static_cast<std::size_t>(size));
      for (int t = 0; t < size; ++t) values[static_cast<std::size_t>(t)] = (code >> t) & 1;
      const FnTable f(2, 2, n, values);
      if (essential_arity(f) < 2) continue;
      CHECK(essl(f) == essl_full_sweep(f));
    }
  }
}

TEST_CASE("check_ternary") {
  const auto sum = check_ternary(mod_sum(2, 2, 3));
  REQUIRE(sum.has_value());
  CHECK(sum->h == std::vector<int>{0, 1});
  CHECK(sum->i1 == 1);
  CHECK(sum->i2 == 1);
  CHECK(sum->i3 == 1);

  const FnTable unary = make_table(3, 3, 3, [](const PointTuple& p) { return p[0]; });
  const auto u = check_ternary(unary);
  REQUIRE(u.has_value());
  CHECK(u->h == std::vector<int>{0, 1, 2});
  CHECK(u->i1 == 1);
  CHECK(u->i2 == 0);
  CHECK(u->i3 == 0);

  const FnTable and3 = make_table(2, 2, 3, [](const PointTuple& p) {
    return p[0] & p[1] & p[2];
  });
  CHECK_FALSE(check_ternary(and3).has_value());

  CHECK_THROWS_AS(check_ternary(xor2()), std::invalid_argument);
}

TEST_CASE("classify") {
  const GapReport sum3 = classify(mod_sum(2, 2, 3));
  CHECK(sum3.kase == GapCase::Gap2Ternary);
  CHECK(sum3.gap == 2);
  CHECK(sum3.qa == 3);
  REQUIRE(sum3.ternary.has_value());
  CHECK(sum3.ternary->h == std::vector<int>{0, 1});
  CHECK(sum3.ternary->i1 == 1);

  const GapReport perm = classify(perm_indicator());
  CHECK(perm.kase == GapCase::GapP);
  CHECK(perm.gap == 3);
  CHECK(perm.qa == 0);
  CHECK(perm.essl == 0);

  const GapReport a = classify(and2());
  CHECK(a.kase == GapCase::Gap1);
  CHECK(a.gap == 1);

  const GapReport x = classify(xor2());
  CHECK(x.kase == GapCase::Gap2Binary);
  CHECK(x.gap == 2);
  CHECK(x.diag_constant == 0);

  const GapReport sum4 = classify(mod_sum(2, 2, 4));
  CHECK(sum4.kase == GapCase::Gap2OddSupp);
  CHECK(sum4.gap == 2);
  CHECK(sum4.qa == 4);

  CHECK_THROWS_AS(classify(FnTable(2, 2, 2, {0, 0, 1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(classify(FnTable(2, 2, 1, {0, 1})), std::invalid_argument);
}

TEST_CASE("classifier agrees with the minor-sweep gap on small domains") {
  // all tables, k = 2, ell = 2, n in {2, 3}; ell = 3, n = 2
  auto sweep = [&](int ell, int n) {
    const int size = 1 << n;
    std::uint64_t total = 1;
    for (int t = 0; t < size; ++t) total *= static_cast<std::uint64_t>(ell);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<int> values(static_cast<std::size_t>(size));
      std::uint64_t rest = code;
      for (int t = 0; t < size; ++t) {
        values[static_cast<std::size_t>(t)] = static_cast<int>(rest % ell);
        rest /= static_cast<std::uint64_t>(ell);
      }
      const FnTable f(2, ell, n, values);
      if (essential_arity(f) != n) continue;
      CHECK(classify(f).gap == arity_gap(f));
    }
  };
  sweep(2, 2);
  sweep(2, 3);
  sweep(3, 2);
}

TEST_CASE("quasi-arity equals essential arity when n exceeds the domain size") {
  for (std::uint64_t code = 0; code < 256; ++code) {
    std::vector<int> values(8);
    for (int t = 0; t < 8; ++t) values[static_cast<std::size_t>(t)] = (code >> t) & 1;
    const FnTable f(2, 2, 3, values);
    CHECK(quasi_arity(f) == essential_arity(f));
  }
}

TEST_CASE("essential arity restricted to the diagonal when a variable is inessential") {
  for (std::uint64_t code = 0; code < 256; ++code) {
    std::vector<int> values(8);
    for (int t = 0; t < 8; ++t) values[static_cast<std::size_t>(t)] = (code >> t) & 1;
    const FnTable f(2, 2, 3, values);
    if (essential_arity(f) == 3) continue;
    CHECK(essential_arity(f) == partial_essential_arity(restrict_diag(f)));
  }
}

TEST_CASE("gap bound for n above the domain size") {
  for (std::uint64_t code = 0; code < 256; ++code) {
    std::vector<int> values(8);
    for (int t = 0; t < 8; ++t) values[static_cast<std::size_t>(t)] = (code >> t) & 1;
    const FnTable f(2, 2, 3, values);
    if (essential_arity(f) != 3) continue;
    CHECK(arity_gap(f) <= 2);
  }
}

TEST_CASE("unique_support") {
  // constant diagonal: the support is that constant
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    FnTable f = constant_table(3, 2, 3, 1);
    for (std::size_t t = 0; t < f.values.size(); ++t)
      if (has_repeat(point_of(t, 3, 3)) == false) f.values[t] = static_cast<int>(rng() % 2);
    CHECK(unique_support(f) == constant_table(3, 2, 3, 1));
  }

  // projection plus an off-diagonal bump recovers the projection
  const AbelianGroup z3 = make_cyclic(3);
  const FnTable proj = make_table(3, 3, 3, [](const PointTuple& p) { return p[0]; });
  const FnTable bump = make_table(3, 3, 3, [](const PointTuple& p) {
    return (p[0] == 0 && p[1] == 1 && p[2] == 2) ? 1 : 0;
  });
  const FnTable f = fn_add(proj, bump, z3);
  CHECK(unique_support(f) == proj);

  // an essentially binary table with its inessential slot already idle
  const FnTable g2 = make_table(3, 2, 3, [](const PointTuple& p) {
    return (p[0] == p[1]) ? 1 : 0;
  });
  CHECK(quasi_arity(g2) == 2);
  CHECK(unique_support(g2) == g2);

  CHECK_THROWS_AS(unique_support(mod_sum(2, 2, 3)), std::invalid_argument);  // qa = n
  CHECK_THROWS_AS(unique_support(xor2()), std::invalid_argument);            // n < 3
}

TEST_CASE("unique_support is the only support of minimal essential arity") {
  // brute force over all tables agreeing with f on the diagonal
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    // synthesize f with a known quasi-arity drop over k = 3, ell = 2, n = 3
    const AbelianGroup z2 = make_cyclic(2);
    const FnTable core = trial % 2 == 0
                             ? make_table(3, 2, 3, [](const PointTuple& p) { return p[0] == 1 ? 1 : 0; })
                             : make_table(3, 2, 3,
                                          [](const PointTuple& p) { return (p[0] + p[1]) % 2; });
    FnTable f = core;
    bool bumped = false;
    for (std::size_t t = 0; t < f.values.size(); ++t)
      if (!has_repeat(point_of(t, 3, 3)) && rng() % 2 == 0) {
        f.values[t] ^= 1;
        bumped = true;
      }
    if (!bumped) f.values[index_of({0, 1, 2}, 3, 3)] ^= 1;

    const int qa = quasi_arity(f);
    REQUIRE(qa < 3);
    const FnTable support = unique_support(f);
    CHECK(restrict_diag(support) == restrict_diag(f));
    CHECK(essential_arity(support) == qa);

    // sweep all 2^6 off-diagonal completions of the diagonal values
    std::vector<std::size_t> off;
    for (std::size_t t = 0; t < f.values.size(); ++t)
      if (!has_repeat(point_of(t, 3, 3))) off.push_back(t);
    REQUIRE(off.size() == 6);
    int matches = 0;
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
      FnTable cand = f;
      for (std::size_t b = 0; b < off.size(); ++b)
        cand.values[off[b]] = (mask >> b) & 1;
      if (essential_arity(cand) == qa) {
        ++matches;
        CHECK(cand == support);
      }
    }
    CHECK(matches == 1);
  }
}
