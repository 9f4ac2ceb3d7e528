#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gapkit {

// A point of A^n with A = {0,...,k-1}. Coordinates are stored 0-based;
// variable positions are 1-based throughout the public API.
using PointTuple = std::vector<int>;

// Variable substitution map: sigma[j-1] is the (1-based) target position
// that source variable j is mapped to.
using VarMap = std::vector<int>;

// base^exp with overflow check.
std::uint64_t pow_u64(std::uint64_t base, unsigned exp);

// Total function f : A^n -> B as a flat value table, A = {0..k-1},
// B = {0..ell-1}. values[index_of(x)] = f(x); x_1 is the most significant
// digit of the row-major index.
struct FnTable {
  int k = 2;
  int ell = 2;
  int n = 1;
  std::vector<int> values;

  FnTable() : values(2, 0) {}
  FnTable(int k_, int ell_, int n_, std::vector<int> values_);

  std::size_t size() const { return values.size(); }
  friend bool operator==(const FnTable&, const FnTable&) = default;
};

// Row-major tuple index; mutually inverse with point_of.
std::size_t index_of(const PointTuple& point, int k, int n);
PointTuple point_of(std::size_t index, int k, int n);

int eval(const FnTable& f, const PointTuple& point);

// f(x_1,...,x_n) = g(x_{sigma(1)},...,x_{sigma(m)}).
FnTable simple_minor(const FnTable& g, const VarMap& sigma, int n);

// Arity-preserving identification minor: x_j replaced by x_i (i < j).
// x_j is inessential in the result.
FnTable identify(const FnTable& f, int i, int j);

bool is_essential(const FnTable& f, int i);

// First witness in scan order: points ascending by index, partner
// coordinate ascending. The pair differs only in coordinate i and takes
// two different values.
std::optional<std::pair<PointTuple, PointTuple>> essentiality_witness(
    const FnTable& f, int i);

std::vector<int> essential_variables(const FnTable& f);  // 1-based, ascending
int essential_arity(const FnTable& f);

// Removes inessential variables, keeping the essential ones in order.
// A constant function collapses to a unary constant table.
FnTable drop_inessential(const FnTable& f);

FnTable constant_table(int k, int ell, int n, int value);

// Text format: header line "k ell n", then k^n values in index order.
FnTable read_fn(std::istream& in);
void write_fn(std::ostream& out, const FnTable& f);
FnTable read_fn_file(const std::string& path);
void write_fn_file(const std::string& path, const FnTable& f);

}  // namespace gapkit
