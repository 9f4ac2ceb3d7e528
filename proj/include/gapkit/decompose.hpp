#pragma once

#include <vector>

#include "gapkit/diagonal.hpp"
#include "gapkit/fn_table.hpp"
#include "gapkit/group.hpp"

namespace gapkit {

enum class DecompCase {
  QuasiSupport,  // g is the unique essentially (n-p)-ary support, h = f - g
  OddSuppTilde,  // g built from an (n-2)-ary oddsupp-determined function
};

const char* decomp_case_name(DecompCase c);

// f = h + g with h vanishing on the diagonal domain.
struct Decomposition {
  FnTable h;
  FnTable g;
  DecompCase kase = DecompCase::QuasiSupport;
  int p = 0;  // arity drop; 2 for OddSuppTilde
};

// Splits f into the unique essentially (n-p)-ary support g and the
// off-diagonal part h = f - g. Requires n >= 3, every variable essential,
// and quasi_arity(f) < n.
Decomposition decompose_quasi(const FnTable& f, const AbelianGroup& grp);

// The n-ary symmetric function built from an (n-2)-ary oddsupp-determined
// phi by summing its factor over all index subsets of size < n with the
// same parity as n. Requires a Boolean group; n must equal phi.n + 2.
FnTable phi_tilde(const FnTable& phi, const AbelianGroup& grp, int n);

// Decomposition for gap 2 over a Boolean group, arity >= 4. Delegates to
// decompose_quasi when quasi_arity(f) = n - 2; otherwise requires the
// diagonal restriction to be determined by oddsupp and uses phi_tilde.
Decomposition decompose_gap2(const FnTable& f, const AbelianGroup& grp);

// One summand of a formal sum: a function of the selected variables.
struct FormalTerm {
  std::vector<int> vars;    // 1-based positions, ascending; may be empty
  std::vector<int> values;  // k^|vars| entries

  friend bool operator==(const FormalTerm&, const FormalTerm&) = default;
};

// Sum of components of arity at most n-2, evaluated in the given group.
struct FormalSum {
  int k = 0;
  int ell = 0;
  int n = 0;
  AbelianGroup group;
  std::vector<FormalTerm> terms;
};

// The summands of phi_tilde kept as separate (index set, component) pairs.
// Requires the diagonal restriction of f to be determined by oddsupp and a
// Boolean group; the evaluation agrees with f on every diagonal point.
FormalSum formal_sum_support(const FnTable& f, const AbelianGroup& grp);

int eval_formal_sum(const FormalSum& s, const PointTuple& point);
FnTable formal_sum_table(const FormalSum& s);

}  // namespace gapkit
