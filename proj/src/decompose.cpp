#include "gapkit/decompose.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gapkit/gap.hpp"

namespace gapkit {

const char* decomp_case_name(DecompCase c) {
  switch (c) {
    case DecompCase::QuasiSupport: return "quasi_support";
    case DecompCase::OddSuppTilde: return "oddsupp_tilde";
  }
  return "?";
}

Decomposition decompose_quasi(const FnTable& f, const AbelianGroup& grp) {
  if (f.n < 3) throw std::invalid_argument("decompose_quasi: arity must be at least 3");
  if (f.ell != grp.order)
    throw std::invalid_argument("decompose_quasi: group order does not match codomain");
  if (essential_arity(f) != f.n)
    throw std::invalid_argument("decompose_quasi: every variable must be essential");
  const int qa = quasi_arity(f);
  if (qa == f.n) throw std::invalid_argument("decompose_quasi: no quasi-arity drop");

  Decomposition d;
  d.g = unique_support(f);
  d.h = fn_sub(f, d.g, grp);
  d.kase = DecompCase::QuasiSupport;
  d.p = f.n - qa;
  return d;
}

namespace {

// Factor of a total oddsupp-determined function; throws when two points
// with equal oddsupp take different values.
std::map<OddSuppSet, int> total_oddsupp_factor(const FnTable& f, const char* who) {
  std::map<OddSuppSet, int> factor;
  for (std::size_t t = 0; t < f.values.size(); ++t) {
    const OddSuppSet m = oddsupp(point_of(t, f.k, f.n));
    auto it = factor.find(m);
    if (it == factor.end())
      factor.emplace(m, f.values[t]);
    else if (it->second != f.values[t])
      throw std::invalid_argument(std::string(who) + ": function is not determined by oddsupp");
  }
  return factor;
}

}  // namespace

FnTable phi_tilde(const FnTable& phi, const AbelianGroup& grp, int n) {
  if (!grp.boolean) throw std::invalid_argument("phi_tilde: group must be Boolean");
  if (phi.ell != grp.order)
    throw std::invalid_argument("phi_tilde: group order does not match codomain");
  if (n != phi.n + 2) throw std::invalid_argument("phi_tilde: target arity must be phi arity + 2");
  if (n > 20) throw std::invalid_argument("phi_tilde: arity too large");

  const std::map<OddSuppSet, int> factor = total_oddsupp_factor(phi, "phi_tilde");

  const std::uint64_t total = pow_u64(static_cast<std::uint64_t>(phi.k), static_cast<unsigned>(n));
  std::vector<int> values(static_cast<std::size_t>(total));
  const std::uint32_t subsets = std::uint32_t(1) << n;
  for (std::size_t t = 0; t < values.size(); ++t) {
    const PointTuple p = point_of(t, phi.k, n);
    int acc = 0;
    for (std::uint32_t s = 0; s < subsets; ++s) {
      const int size = __builtin_popcount(s);
      if (size >= n || (n - size) % 2 != 0) continue;
      OddSuppSet m = 0;
      for (int b = 0; b < n; ++b)
        if (s & (std::uint32_t(1) << b)) m ^= OddSuppSet(1) << p[static_cast<std::size_t>(b)];
      acc = grp.plus(acc, factor.at(m));
    }
    values[t] = acc;
  }
  return FnTable(phi.k, phi.ell, n, std::move(values));
}

Decomposition decompose_gap2(const FnTable& f, const AbelianGroup& grp) {
  if (f.n < 4) throw std::invalid_argument("decompose_gap2: arity must be at least 4");
  if (!grp.boolean) throw std::invalid_argument("decompose_gap2: group must be Boolean");
  if (f.ell != grp.order)
    throw std::invalid_argument("decompose_gap2: group order does not match codomain");
  if (essential_arity(f) != f.n)
    throw std::invalid_argument("decompose_gap2: every variable must be essential");

  const int qa = quasi_arity(f);
  if (qa == f.n - 2) {
    Decomposition d = decompose_quasi(f, grp);
    return d;
  }
  if (qa != f.n) throw std::invalid_argument("decompose_gap2: arity gap is not 2");

  OddSuppCheck check = is_determined_by_oddsupp(restrict_diag(f));
  if (!check.factor)
    throw std::invalid_argument("decompose_gap2: diagonal is not determined by oddsupp");
  const std::map<OddSuppSet, int>& factor = check.factor->values;

  // phi(x_1..x_{n-2}) = f(x_1,..,x_{n-2},y,y); the padded point is diagonal,
  // so the value is the factor at oddsupp of the prefix.
  const int m = f.n - 2;
  const std::uint64_t total = pow_u64(static_cast<std::uint64_t>(f.k), static_cast<unsigned>(m));
  std::vector<int> phi_values(static_cast<std::size_t>(total));
  for (std::size_t t = 0; t < phi_values.size(); ++t)
    phi_values[t] = factor.at(oddsupp(point_of(t, f.k, m)));
  FnTable phi(f.k, f.ell, m, std::move(phi_values));
  if (std::all_of(phi.values.begin(), phi.values.end(),
                  [&](int v) { return v == phi.values[0]; }))
    throw std::invalid_argument("decompose_gap2: derived phi is constant");

  Decomposition d;
  d.g = phi_tilde(phi, grp, f.n);
  d.h = fn_sub(f, d.g, grp);
  d.kase = DecompCase::OddSuppTilde;
  d.p = 2;
  return d;
}

FormalSum formal_sum_support(const FnTable& f, const AbelianGroup& grp) {
  if (!grp.boolean) throw std::invalid_argument("formal_sum_support: group must be Boolean");
  if (f.ell != grp.order)
    throw std::invalid_argument("formal_sum_support: group order does not match codomain");
  if (f.n > 20) throw std::invalid_argument("formal_sum_support: arity too large");

  OddSuppCheck check = is_determined_by_oddsupp(restrict_diag(f));
  if (!check.factor)
    throw std::invalid_argument("formal_sum_support: diagonal is not determined by oddsupp");
  const std::map<OddSuppSet, int>& factor = check.factor->values;

  FormalSum sum;
  sum.k = f.k;
  sum.ell = f.ell;
  sum.n = f.n;
  sum.group = grp;

  const bool constant_diag = std::all_of(factor.begin(), factor.end(), [&](const auto& kv) {
    return kv.second == factor.begin()->second;
  });
  if (constant_diag) {
    FormalTerm term;
    term.values = {factor.begin()->second};
    sum.terms.push_back(std::move(term));
    return sum;
  }
  if (f.n < 3) throw std::invalid_argument("formal_sum_support: arity must be at least 3");

  // One component table per admissible size, shared across the index sets.
  std::map<int, std::vector<int>> table_for_size;
  for (int size = f.n % 2 == 0 ? 0 : 1; size < f.n; size += 2) {
    if (size > f.n - 2) break;
    const std::uint64_t total =
        pow_u64(static_cast<std::uint64_t>(f.k), static_cast<unsigned>(size));
    std::vector<int> tbl(static_cast<std::size_t>(total));
    for (std::size_t t = 0; t < tbl.size(); ++t)
      tbl[t] = factor.at(size == 0 ? OddSuppSet(0) : oddsupp(point_of(t, f.k, size)));
    table_for_size.emplace(size, std::move(tbl));
  }

  const std::uint32_t subsets = std::uint32_t(1) << f.n;
  for (std::uint32_t s = 0; s < subsets; ++s) {
    const int size = __builtin_popcount(s);
    if (size >= f.n || (f.n - size) % 2 != 0) continue;
    FormalTerm term;
    for (int b = 0; b < f.n; ++b)
      if (s & (std::uint32_t(1) << b)) term.vars.push_back(b + 1);
    term.values = table_for_size.at(size);
    sum.terms.push_back(std::move(term));
  }
  return sum;
}

int eval_formal_sum(const FormalSum& s, const PointTuple& point) {
  if (static_cast<int>(point.size()) != s.n)
    throw std::invalid_argument("eval_formal_sum: point dimension does not match arity");
  for (int c : point)
    if (c < 0 || c >= s.k) throw std::out_of_range("eval_formal_sum: coordinate out of range");
  int acc = 0;
  for (const FormalTerm& term : s.terms) {
    std::size_t idx = 0;
    for (int v : term.vars) idx = idx * static_cast<std::size_t>(s.k) +
                                  static_cast<std::size_t>(point[static_cast<std::size_t>(v - 1)]);
    acc = s.group.plus(acc, term.values[idx]);
  }
  return acc;
}

FnTable formal_sum_table(const FormalSum& s) {
  const std::uint64_t total = pow_u64(static_cast<std::uint64_t>(s.k), static_cast<unsigned>(s.n));
  std::vector<int> values(static_cast<std::size_t>(total));
  for (std::size_t t = 0; t < values.size(); ++t)
    values[t] = eval_formal_sum(s, point_of(t, s.k, s.n));
  return FnTable(s.k, s.ell, s.n, std::move(values));
}

}  // namespace gapkit
