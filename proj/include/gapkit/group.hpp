#pragma once

#include <string>
#include <vector>

#include "gapkit/fn_table.hpp"

namespace gapkit {

// Finite abelian group on {0..order-1} with neutral element 0, given by
// explicit tables. boolean is true iff x + x = 0 for every x.
struct AbelianGroup {
  int order = 0;
  std::vector<int> add;  // order x order, row-major
  std::vector<int> neg;
  bool boolean = false;
  std::string name;

  int plus(int a, int b) const { return add[static_cast<std::size_t>(a) * order + b]; }
  int minus(int a) const { return neg[static_cast<std::size_t>(a)]; }
};

AbelianGroup make_cyclic(int m);
AbelianGroup make_boolean(int d);  // d-fold power of the 2-element group, bitwise encoding
AbelianGroup make_product(const std::vector<AbelianGroup>& factors);

// Builds neg and the boolean flag from an addition table; throws if the
// table is not an abelian group with neutral element 0.
AbelianGroup make_from_table(int order, std::vector<int> add);

struct GroupCheck {
  bool ok = true;
  std::string violation;
};

// Full axiom sweep over the tables.
GroupCheck validate(const AbelianGroup& g);

FnTable fn_add(const FnTable& f, const FnTable& g, const AbelianGroup& grp);
FnTable fn_sub(const FnTable& f, const FnTable& g, const AbelianGroup& grp);

// True iff h takes the value 0 on every diagonal point.
bool fn_zero_on_diag(const FnTable& h, const AbelianGroup& grp);

// Group spec strings: "cyclic:m1xm2x...", "boolean:d", "table:<path>".
AbelianGroup parse_group_spec(const std::string& spec);

// Cayley table file: first line is the order, then order rows of order entries.
AbelianGroup read_group_table_file(const std::string& path);

}  // namespace gapkit
