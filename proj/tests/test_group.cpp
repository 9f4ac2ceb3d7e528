#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <fstream>
#include <random>

#include "gapkit/group.hpp"
#include "test_util.hpp"

using namespace gapkit;
using testutil::make_table;
using testutil::xor2;

TEST_CASE("constructors") {
  const AbelianGroup z3 = make_cyclic(3);
  CHECK(z3.plus(1, 2) == 0);
  CHECK(z3.minus(1) == 2);
  CHECK_FALSE(z3.boolean);

  const AbelianGroup b2 = make_boolean(2);
  CHECK(b2.plus(1, 3) == 2);
  CHECK(b2.boolean);

  CHECK_FALSE(make_cyclic(4).boolean);
  CHECK(make_cyclic(2).boolean);

  const AbelianGroup z6 = make_product({make_cyclic(2), make_cyclic(3)});
  CHECK(z6.order == 6);
  CHECK(validate(z6).ok);
}

TEST_CASE("validate") {
  CHECK(validate(make_cyclic(5)).ok);
  const GroupCheck b3 = validate(make_boolean(3));
  CHECK(b3.ok);
  CHECK(make_boolean(3).boolean);

  AbelianGroup bad;
  bad.order = 2;
  bad.add = {0, 0, 1, 0};  // 0+1 = 0 but 1+0 = 1
  bad.neg = {0, 1};
  bad.boolean = true;
  const GroupCheck check = validate(bad);
  CHECK_FALSE(check.ok);
  CHECK(check.violation.find("identity") != std::string::npos);

  for (int m = 2; m <= 6; ++m) CHECK(validate(make_cyclic(m)).ok);
  CHECK(validate(make_product({make_cyclic(2), make_cyclic(2)})).ok);
}

TEST_CASE("boolean flag matches a direct scan") {
  for (const AbelianGroup& g :
       {make_cyclic(2), make_cyclic(3), make_cyclic(4), make_boolean(2),
        make_product({make_cyclic(2), make_cyclic(2)}), make_product({make_cyclic(2), make_cyclic(3)})}) {
    bool all_self_inverse = true;
    for (int a = 0; a < g.order; ++a) all_self_inverse = all_self_inverse && g.plus(a, a) == 0;
    CHECK(g.boolean == all_self_inverse);
  }
}

TEST_CASE("pointwise table arithmetic") {
  const AbelianGroup z2 = make_cyclic(2);
  CHECK(fn_add(xor2(), xor2(), z2) == constant_table(2, 2, 2, 0));

  const AbelianGroup z3 = make_cyclic(3);
  const FnTable f = make_table(2, 3, 2, [](const PointTuple& p) { return (2 * p[0] + p[1]) % 3; });
  CHECK(fn_sub(f, f, z3) == constant_table(2, 3, 2, 0));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const AbelianGroup grp = trial % 2 ? make_cyclic(4) : make_boolean(2);
    std::vector<int> av(9), bv(9), cv(9);
    for (auto& v : av) v = static_cast<int>(rng() % 4);
    for (auto& v : bv) v = static_cast<int>(rng() % 4);
    for (auto& v : cv) v = static_cast<int>(rng() % 4);
    const FnTable a(3, 4, 2, av), b(3, 4, 2, bv), cc(3, 4, 2, cv);
    CHECK(fn_sub(fn_add(a, b, grp), b, grp) == a);
    CHECK(fn_add(a, b, grp) == fn_add(b, a, grp));
    CHECK(fn_add(fn_add(a, b, grp), cc, grp) == fn_add(a, fn_add(b, cc, grp), grp));
  }

  CHECK_THROWS_AS(fn_add(xor2(), constant_table(3, 2, 2, 0), z2), std::invalid_argument);
  CHECK_THROWS_AS(fn_add(xor2(), xor2(), z3), std::invalid_argument);
}

TEST_CASE("fn_zero_on_diag") {
  const AbelianGroup z2 = make_cyclic(2);
  const FnTable bump = make_table(3, 2, 3, [](const PointTuple& p) {
    return (p[0] == 0 && p[1] == 1 && p[2] == 2) ? 1 : 0;
  });
  CHECK(fn_zero_on_diag(bump, z2));

  const FnTable onDiag = make_table(3, 2, 3, [](const PointTuple& p) {
    return (p[0] == 1 && p[1] == 1 && p[2] == 2) ? 1 : 0;
  });
  CHECK_FALSE(fn_zero_on_diag(onDiag, z2));
}

TEST_CASE("group spec strings") {
  CHECK(parse_group_spec("cyclic:6").order == 6);
  CHECK(parse_group_spec("cyclic:2x3").order == 6);
  CHECK(parse_group_spec("boolean:2").order == 4);
  CHECK(parse_group_spec("boolean:2").boolean);
  CHECK_FALSE(parse_group_spec("cyclic:4").boolean);
  CHECK_THROWS(parse_group_spec("cyclic"));
  CHECK_THROWS(parse_group_spec("ring:4"));

  const std::string path = "/tmp/gapkit_test_z3_grp.txt";
  {
    std::ofstream out(path);
    out << "3\n0 1 2\n1 2 0\n2 0 1\n";
  }
  const AbelianGroup g = parse_group_spec("table:" + path);
  CHECK(g.order == 3);
  CHECK(g.plus(1, 2) == 0);
  CHECK(validate(g).ok);
  std::remove(path.c_str());

  const std::string badpath = "/tmp/gapkit_test_bad_grp.txt";
  {
    std::ofstream out(badpath);
    out << "2\n0 1\n1 1\n";  // 1 has no inverse
  }
  CHECK_THROWS(parse_group_spec("table:" + badpath));
  std::remove(badpath.c_str());
}
