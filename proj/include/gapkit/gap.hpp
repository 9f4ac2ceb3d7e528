#pragma once

#include <optional>
#include <vector>

#include "gapkit/diagonal.hpp"
#include "gapkit/fn_table.hpp"

namespace gapkit {

// Minimum essential arity over the supports of f (functions agreeing with
// f on the diagonal domain). For n != 2 this equals the essential arity of
// the diagonal restriction; for n = 2 it is 0 or 1 depending on whether
// the diagonal is constant.
int quasi_arity(const FnTable& f);

// Maximum essential arity over the proper simple minors of f; attained by
// identifying a single pair of essential variables. Requires at least two
// essential variables.
int essl(const FnTable& f);

// essential_arity(f) - essl(f).
int arity_gap(const FnTable& f);

// Witness that f is ternary with gap 2: a nonconstant unary h with
// f(x1,x0,x0) = h(x_{i1}), f(x0,x1,x0) = h(x_{i2}), f(x0,x0,x1) = h(x_{i3}).
// i_r = 1 selects the varied variable, i_r = 0 the repeated one.
struct TernaryWitness {
  std::vector<int> h;  // unary table, h[a] = f(a,a,a)
  int i1 = 0, i2 = 0, i3 = 0;

  friend bool operator==(const TernaryWitness&, const TernaryWitness&) = default;
};

std::optional<TernaryWitness> check_ternary(const FnTable& f);

enum class GapCase {
  GapP,              // gap p >= 3: quasi-arity n - p
  Gap2QuasiNminus2,  // gap 2 with quasi-arity n - 2 (n >= 4)
  Gap2OddSupp,       // gap 2 with quasi-arity n, diagonal determined by oddsupp (n >= 4)
  Gap2Ternary,       // gap 2 at n = 3
  Gap2Binary,        // gap 2 at n = 2: constant diagonal, f nonconstant
  Gap1,
};

const char* gap_case_name(GapCase c);

struct GapReport {
  int ess = 0;
  int qa = 0;
  int essl = 0;
  int gap = 0;
  GapCase kase = GapCase::Gap1;
  std::optional<TernaryWitness> ternary;       // Gap2Ternary
  std::optional<OddSuppTable> oddsupp_factor;  // Gap2OddSupp
  std::optional<int> diag_constant;            // Gap2Binary
};

// Classifies f by quasi-arity and diagonal structure. Requires every
// variable essential. The gap value is derived from the case, not from a
// sweep over minors; see arity_gap for the direct computation.
GapReport classify(const FnTable& f);

// The unique support of f with essential arity quasi_arity(f).
// Requires n >= 3 and quasi_arity(f) < n.
FnTable unique_support(const FnTable& f);

}  // namespace gapkit
