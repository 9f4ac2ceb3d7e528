#include "gapkit/gap.hpp"

#include <algorithm>
#include <stdexcept>

namespace gapkit {

int quasi_arity(const FnTable& f) {
  if (f.n == 1) return essential_arity(f);
  if (f.n == 2) {
    const int first = f.values[0];  // f(0,0)
    for (int a = 1; a < f.k; ++a) {
      PointTuple p = {a, a};
      if (f.values[index_of(p, f.k, 2)] != first) return 1;
    }
    return 0;
  }
  return partial_essential_arity(restrict_diag(f));
}

int essl(const FnTable& f) {
  const std::vector<int> vars = essential_variables(f);
  if (vars.size() < 2) throw std::invalid_argument("essl: fewer than two essential variables");
  int best = 0;
  for (std::size_t a = 0; a < vars.size(); ++a)
    for (std::size_t b = a + 1; b < vars.size(); ++b)
      best = std::max(best, essential_arity(identify(f, vars[a], vars[b])));
  return best;
}

int arity_gap(const FnTable& f) { return essential_arity(f) - essl(f); }

std::optional<TernaryWitness> check_ternary(const FnTable& f) {
  if (f.n != 3) throw std::invalid_argument("check_ternary: arity must be 3");

  std::vector<int> h(static_cast<std::size_t>(f.k));
  for (int a = 0; a < f.k; ++a) h[static_cast<std::size_t>(a)] = eval(f, {a, a, a});
  if (std::all_of(h.begin(), h.end(), [&](int v) { return v == h[0]; })) return std::nullopt;

  // Identity r varies position r and repeats x0 in the other two slots.
  auto point_for = [](int r, int x0, int x1) -> PointTuple {
    switch (r) {
      case 1: return {x1, x0, x0};
      case 2: return {x0, x1, x0};
      default: return {x0, x0, x1};
    }
  };
  int sel[3];
  for (int r = 1; r <= 3; ++r) {
    bool varied_ok = true, repeated_ok = true;
    for (int x0 = 0; x0 < f.k; ++x0)
      for (int x1 = 0; x1 < f.k; ++x1) {
        const int v = eval(f, point_for(r, x0, x1));
        if (v != h[static_cast<std::size_t>(x1)]) varied_ok = false;
        if (v != h[static_cast<std::size_t>(x0)]) repeated_ok = false;
      }
    if (varied_ok)
      sel[r - 1] = 1;
    else if (repeated_ok)
      sel[r - 1] = 0;
    else
      return std::nullopt;
  }
  TernaryWitness w;
  w.h = std::move(h);
  w.i1 = sel[0];
  w.i2 = sel[1];
  w.i3 = sel[2];
  return w;
}

const char* gap_case_name(GapCase c) {
  switch (c) {
    case GapCase::GapP: return "gap_p";
    case GapCase::Gap2QuasiNminus2: return "gap2_quasi";
    case GapCase::Gap2OddSupp: return "gap2_oddsupp";
    case GapCase::Gap2Ternary: return "gap2_ternary";
    case GapCase::Gap2Binary: return "gap2_binary";
    case GapCase::Gap1: return "gap1";
  }
  return "?";
}

GapReport classify(const FnTable& f) {
  const int n = f.n;
  if (essential_arity(f) != n)
    throw std::invalid_argument("classify: every variable must be essential");
  if (n < 2) throw std::invalid_argument("classify: arity must be at least 2");

  GapReport rep;
  rep.ess = n;
  rep.qa = quasi_arity(f);

  if (n == 2) {
    if (rep.qa == 0) {
      rep.kase = GapCase::Gap2Binary;
      rep.gap = 2;
      rep.diag_constant = f.values[0];
    } else {
      rep.kase = GapCase::Gap1;
      rep.gap = 1;
    }
  } else if (n == 3) {
    if (rep.qa == 0) {
      rep.kase = GapCase::GapP;
      rep.gap = 3;
    } else if (auto w = check_ternary(f)) {
      rep.kase = GapCase::Gap2Ternary;
      rep.gap = 2;
      rep.ternary = std::move(w);
    } else {
      rep.kase = GapCase::Gap1;
      rep.gap = 1;
    }
  } else {
    if (rep.qa <= n - 3) {
      rep.kase = GapCase::GapP;
      rep.gap = n - rep.qa;
    } else if (rep.qa == n - 2) {
      rep.kase = GapCase::Gap2QuasiNminus2;
      rep.gap = 2;
    } else if (rep.qa == n) {
      OddSuppCheck check = is_determined_by_oddsupp(restrict_diag(f));
      if (check.factor) {
        rep.kase = GapCase::Gap2OddSupp;
        rep.gap = 2;
        rep.oddsupp_factor = std::move(check.factor);
      } else {
        rep.kase = GapCase::Gap1;
        rep.gap = 1;
      }
    } else {  // qa == n - 1
      rep.kase = GapCase::Gap1;
      rep.gap = 1;
    }
  }
  rep.essl = rep.ess - rep.gap;
  return rep;
}

FnTable unique_support(const FnTable& f) {
  if (f.n < 3) throw std::invalid_argument("unique_support: arity must be at least 3");
  const DiagSlice slice = restrict_diag(f);
  const std::vector<int> ess_vars = partial_essential_variables(slice);
  const int m = static_cast<int>(ess_vars.size());
  if (m == f.n) throw std::invalid_argument("unique_support: quasi-arity equals arity");

  if (m == 0) {
    // Constant diagonal; the support is the constant it takes there.
    return constant_table(f.k, f.ell, f.n, f.values[0]);
  }

  std::vector<char> is_ess(static_cast<std::size_t>(f.n) + 1, 0);
  for (int v : ess_vars) is_ess[static_cast<std::size_t>(v)] = 1;
  const int e = ess_vars.front();

  std::vector<int> values(f.values.size());
  for (std::size_t t = 0; t < values.size(); ++t) {
    PointTuple p = point_of(t, f.k, f.n);
    PointTuple q = p;
    const int fill = p[static_cast<std::size_t>(e - 1)];
    for (int i = 1; i <= f.n; ++i)
      if (!is_ess[static_cast<std::size_t>(i)]) q[static_cast<std::size_t>(i - 1)] = fill;
    values[t] = f.values[index_of(q, f.k, f.n)];
  }
  return FnTable(f.k, f.ell, f.n, std::move(values));
}

}  // namespace gapkit
