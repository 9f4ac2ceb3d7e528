#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "gapkit/fn_table.hpp"
#include "gapkit/group.hpp"

namespace gapkit {

// ell^(k^n), the number of functions A^n -> B.
mpz_class function_space_size(int k, int ell, int n);

// The idx-th table in base-ell counter order; values[0] is the most
// significant digit.
FnTable function_at(int k, int ell, int n, std::uint64_t idx);

// Streams each table of an index range exactly once, in counter order.
class FunctionStream {
 public:
  FunctionStream(int k, int ell, int n, std::uint64_t begin, std::uint64_t end);

  // False once the range is exhausted; otherwise fills `out`.
  bool next(FnTable& out);
  std::uint64_t remaining() const { return end_ - pos_; }

 private:
  int ell_;
  std::uint64_t pos_, end_;
  FnTable current_;
};

// Tallies of essential arity and gap over a sweep of the function space.
struct Census {
  int k = 0, ell = 0, n = 0;
  bool exhaustive = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t total = 0;
  std::uint64_t ess_below = 0;           // tables with an inessential variable
  std::vector<std::uint64_t> gap_count;  // gap_count[p-1], over tables with ess = n
};

// Exhaustive sweep; throws when ell^(k^n) exceeds the budget. Workers get
// contiguous index ranges and tallies merge by addition, so the result does
// not depend on the thread count (0 picks a default).
Census census_exhaustive(int k, int ell, int n, std::uint64_t budget, int threads = 0);

// Sweep over `samples` seed-determined random tables; sample s depends only
// on (seed, s), so partitioning cannot change the tallies.
Census census_sampled(int k, int ell, int n, std::uint64_t samples, std::uint64_t seed,
                      int threads = 0);

struct CensusComparison {
  bool all_match = true;
  std::vector<std::string> lines;  // one per compared tally
  std::vector<std::string> mismatches;
};

// Checks an exhaustive census against the closed-form counts.
CensusComparison compare_census(const Census& c);

FnTable random_function(int k, int ell, int n, std::uint64_t seed);

// f = h + g with ess g = n-p exactly, h vanishing on the diagonal domain
// and nonzero somewhere off it. Requires k >= n so that off-diagonal
// points exist; deterministic in the seed.
struct SynthInstance {
  FnTable f, h, g;
};
SynthInstance synth_gap_instance(int k, int ell, int n, int p, const AbelianGroup& grp,
                                 std::uint64_t seed);

// Sampled property sweep: the gap bound for n > k, agreement of the
// classifier with the identification-minor gap, and quasi-arity equal to
// essential arity for n > k.
struct SampledCheck {
  std::uint64_t samples = 0;
  std::uint64_t ess_full = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> details;  // first few violations
};
SampledCheck sampled_property_check(int k, int ell, int n, std::uint64_t samples,
                                    std::uint64_t seed, int threads = 0);

}  // namespace gapkit
