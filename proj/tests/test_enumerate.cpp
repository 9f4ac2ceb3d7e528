#include <doctest.h>

#include <set>
#include <stdexcept>

#include "gapkit/counting.hpp"
#include "gapkit/enumerate.hpp"
#include "gapkit/gap.hpp"
#include "test_util.hpp"

using namespace gapkit;

TEST_CASE("function_space_size and function_at") {
  CHECK(function_space_size(2, 2, 2) == 16);
  CHECK(function_space_size(2, 2, 3) == 256);
  CHECK(function_space_size(3, 2, 2) == 512);

  // every table exactly once, in counter order
  std::set<std::vector<int>> seen;
  std::vector<int> prev;
  for (std::uint64_t idx = 0; idx < 16; ++idx) {
    const FnTable f = function_at(2, 2, 2, idx);
    CHECK(seen.insert(f.values).second);
    if (idx > 0) CHECK(prev < f.values);  // values[0] most significant
    prev = f.values;
  }
  CHECK(seen.size() == 16);
  CHECK_THROWS_AS(function_at(2, 2, 2, 16), std::out_of_range);

  // the stream yields the same sequence as direct indexing
  FunctionStream stream(3, 2, 2, 5, 100);
  CHECK(stream.remaining() == 95);
  FnTable f;
  for (std::uint64_t idx = 5; idx < 100; ++idx) {
    REQUIRE(stream.next(f));
    CHECK(f == function_at(3, 2, 2, idx));
  }
  CHECK_FALSE(stream.next(f));
  CHECK(stream.remaining() == 0);
}

TEST_CASE("census against closed forms") {
  const Census c222 = census_exhaustive(2, 2, 2, 1u << 20);
  CHECK(c222.total == 16);
  CHECK(c222.ess_below == 6);
  CHECK(c222.gap_count == std::vector<std::uint64_t>{4, 6});
  CHECK(compare_census(c222).all_match);

  const Census c223 = census_exhaustive(2, 2, 3, 1u << 20);
  CHECK(c223.total == 256);
  CHECK(c223.gap_count == std::vector<std::uint64_t>{208, 10, 0});
  CHECK(compare_census(c223).all_match);

  const Census c322 = census_exhaustive(3, 2, 2, 1u << 20);
  CHECK(c322.total == 512);
  CHECK(c322.ess_below == 512 - 498);
  CHECK(c322.gap_count == std::vector<std::uint64_t>{372, 126});
  CHECK(compare_census(c322).all_match);

  // a corrupted tally is reported as a mismatch
  Census bad = c222;
  bad.gap_count[0] += 1;
  const CensusComparison cmp = compare_census(bad);
  CHECK_FALSE(cmp.all_match);
  CHECK(cmp.mismatches.size() >= 1);

  CHECK_THROWS_AS(census_exhaustive(4, 4, 4, 1000000), std::runtime_error);
}

TEST_CASE("parallel census is deterministic") {
  const Census seq = census_exhaustive(2, 3, 3, 1u << 20, 1);
  const Census par = census_exhaustive(2, 3, 3, 1u << 20, 4);
  CHECK(seq.total == par.total);
  CHECK(seq.ess_below == par.ess_below);
  CHECK(seq.gap_count == par.gap_count);
  CHECK(compare_census(par).all_match);

  const Census s1 = census_sampled(3, 2, 3, 2000, 77, 1);
  const Census s3 = census_sampled(3, 2, 3, 2000, 77, 3);
  CHECK(s1.gap_count == s3.gap_count);
  CHECK(s1.ess_below == s3.ess_below);
  CHECK(s1.total == 2000);
}

TEST_CASE("random_function determinism") {
  const FnTable a = random_function(3, 4, 2, 5);
  const FnTable b = random_function(3, 4, 2, 5);
  const FnTable c = random_function(3, 4, 2, 6);
  CHECK(a == b);
  CHECK(a.k == 3);
  CHECK(a.ell == 4);
  CHECK(a.n == 2);
  CHECK_FALSE(a == c);
}

TEST_CASE("synth_gap_instance") {
  const AbelianGroup z2 = make_cyclic(2);

  const SynthInstance g3 = synth_gap_instance(3, 2, 3, 3, z2, 123);
  CHECK(essential_arity(g3.f) == 3);
  CHECK(classify(g3.f).gap == 3);
  CHECK(arity_gap(g3.f) == 3);
  CHECK(fn_add(g3.h, g3.g, z2) == g3.f);
  CHECK(fn_zero_on_diag(g3.h, z2));
  CHECK(essential_arity(g3.g) == 0);

  const SynthInstance g2 = synth_gap_instance(5, 2, 4, 2, z2, 5);
  CHECK(classify(g2.f).gap == 2);
  CHECK(classify(g2.f).kase == GapCase::Gap2QuasiNminus2);
  CHECK(essential_arity(g2.g) == 2);

  // deterministic in the seed
  const SynthInstance again = synth_gap_instance(5, 2, 4, 2, z2, 5);
  CHECK(again.f == g2.f);
  CHECK(again.h == g2.h);
  CHECK(again.g == g2.g);

  CHECK_THROWS_AS(synth_gap_instance(2, 2, 3, 1, z2, 1), std::invalid_argument);
  CHECK_THROWS_AS(synth_gap_instance(4, 2, 4, 0, z2, 1), std::invalid_argument);
  CHECK_THROWS_AS(synth_gap_instance(4, 3, 4, 1, z2, 1), std::invalid_argument);
}

TEST_CASE("sampled property check") {
  const SampledCheck check = sampled_property_check(3, 2, 3, 1000, 2024);
  CHECK(check.samples == 1000);
  CHECK(check.violations == 0);
  CHECK(check.ess_full > 0);
}
