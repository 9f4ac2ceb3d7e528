#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gapkit/fn_table.hpp"

namespace gapkit {

bool has_repeat(const PointTuple& point);

// The diagonal domain: tuples with a repeated coordinate, in index order.
// For n = 1 this is all of A.
std::vector<PointTuple> diag_points(int k, int n);

// Restriction of a table to the diagonal domain. Two slices are equal iff
// the tables agree on every diagonal point.
struct DiagSlice {
  FnTable base;
  std::vector<std::size_t> domain;  // indices of the diagonal points, ascending

  friend bool operator==(const DiagSlice& a, const DiagSlice& b) {
    if (a.base.k != b.base.k || a.base.ell != b.base.ell || a.base.n != b.base.n) return false;
    for (std::size_t idx : a.domain)
      if (a.base.values[idx] != b.base.values[idx]) return false;
    return true;
  }
};

DiagSlice restrict_diag(const FnTable& f);

// Variables having a witness pair with both points inside the domain.
std::vector<int> partial_essential_variables(const DiagSlice& s);
int partial_essential_arity(const DiagSlice& s);

// Set of elements occurring an odd number of times, as a bitmask over A.
using OddSuppSet = std::uint32_t;
OddSuppSet oddsupp(const PointTuple& point);
std::vector<int> oddsupp_elements(OddSuppSet s);

// Values oddsupp takes on the diagonal domain: the subsets of A with
// |S| <= n-2 and |S| congruent to n mod 2. Requires n >= 2.
std::vector<OddSuppSet> oddsupp_range(int k, int n);

// Factor table f* on the realizable oddsupp values.
struct OddSuppTable {
  int k = 0;
  int n = 0;
  std::map<OddSuppSet, int> values;

  friend bool operator==(const OddSuppTable&, const OddSuppTable&) = default;
};

struct OddSuppCheck {
  std::optional<OddSuppTable> factor;
  // When !factor: two domain points with equal oddsupp but different values.
  PointTuple first, second;
};

// Checks whether the slice factors through oddsupp; on success returns the
// unique factor on the realizable keys.
OddSuppCheck is_determined_by_oddsupp(const DiagSlice& s);

}  // namespace gapkit
