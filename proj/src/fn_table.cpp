#include "gapkit/fn_table.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gapkit {

namespace {
// Tables above this size are refused at construction.
constexpr std::uint64_t kMaxTableSize = std::uint64_t(1) << 28;
}  // namespace

std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      throw std::overflow_error("pow_u64: overflow");
    r *= base;
  }
  return r;
}

FnTable::FnTable(int k_, int ell_, int n_, std::vector<int> values_)
    : k(k_), ell(ell_), n(n_), values(std::move(values_)) {
  if (k < 2) throw std::invalid_argument("FnTable: domain needs at least two elements");
  if (ell < 2) throw std::invalid_argument("FnTable: codomain needs at least two elements");
  if (n < 1) throw std::invalid_argument("FnTable: arity must be at least 1");
  const std::uint64_t want = pow_u64(static_cast<std::uint64_t>(k), static_cast<unsigned>(n));
  if (want > kMaxTableSize) throw std::invalid_argument("FnTable: table too large");
  if (values.size() != want) throw std::invalid_argument("FnTable: value table has wrong length");
  for (int v : values)
    if (v < 0 || v >= ell) throw std::invalid_argument("FnTable: value out of range");
}

std::size_t index_of(const PointTuple& point, int k, int n) {
  if (static_cast<int>(point.size()) != n)
    throw std::invalid_argument("index_of: tuple length does not match arity");
  std::size_t idx = 0;
  for (int c : point) {
    if (c < 0 || c >= k) throw std::out_of_range("index_of: coordinate out of range");
    idx = idx * static_cast<std::size_t>(k) + static_cast<std::size_t>(c);
  }
  return idx;
}

PointTuple point_of(std::size_t index, int k, int n) {
  const std::uint64_t total = pow_u64(static_cast<std::uint64_t>(k), static_cast<unsigned>(n));
  if (index >= total) throw std::out_of_range("point_of: index out of range");
  PointTuple p(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    p[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(k));
    index /= static_cast<std::size_t>(k);
  }
  return p;
}

int eval(const FnTable& f, const PointTuple& point) {
  if (static_cast<int>(point.size()) != f.n)
    throw std::invalid_argument("eval: point dimension does not match arity");
  return f.values[index_of(point, f.k, f.n)];
}

FnTable simple_minor(const FnTable& g, const VarMap& sigma, int n) {
  if (static_cast<int>(sigma.size()) != g.n)
    throw std::invalid_argument("simple_minor: sigma length does not match source arity");
  if (n < 1) throw std::invalid_argument("simple_minor: target arity must be at least 1");
  for (int t : sigma)
    if (t < 1 || t > n) throw std::out_of_range("simple_minor: sigma image out of range");

  const std::uint64_t total = pow_u64(static_cast<std::uint64_t>(g.k), static_cast<unsigned>(n));
  std::vector<int> values(static_cast<std::size_t>(total));
  PointTuple q(static_cast<std::size_t>(g.n));
  for (std::size_t t = 0; t < total; ++t) {
    const PointTuple p = point_of(t, g.k, n);
    for (std::size_t j = 0; j < q.size(); ++j)
      q[j] = p[static_cast<std::size_t>(sigma[j] - 1)];
    values[t] = g.values[index_of(q, g.k, g.n)];
  }
  return FnTable(g.k, g.ell, n, std::move(values));
}

FnTable identify(const FnTable& f, int i, int j) {
  if (i < 1 || j < 1 || i > f.n || j > f.n)
    throw std::out_of_range("identify: variable index out of range");
  if (i >= j) throw std::invalid_argument("identify: need i < j");

  std::vector<int> values(f.values.size());
  for (std::size_t t = 0; t < values.size(); ++t) {
    PointTuple p = point_of(t, f.k, f.n);
    p[static_cast<std::size_t>(j - 1)] = p[static_cast<std::size_t>(i - 1)];
    values[t] = f.values[index_of(p, f.k, f.n)];
  }
  return FnTable(f.k, f.ell, f.n, std::move(values));
}

bool is_essential(const FnTable& f, int i) {
  if (i < 1 || i > f.n) throw std::out_of_range("is_essential: variable index out of range");
  const std::size_t stride =
      static_cast<std::size_t>(pow_u64(static_cast<std::uint64_t>(f.k), static_cast<unsigned>(f.n - i)));
  const std::size_t block = stride * static_cast<std::size_t>(f.k);
  for (std::size_t hi = 0; hi < f.values.size(); hi += block)
    for (std::size_t lo = 0; lo < stride; ++lo) {
      const int first = f.values[hi + lo];
      for (int c = 1; c < f.k; ++c)
        if (f.values[hi + lo + static_cast<std::size_t>(c) * stride] != first) return true;
    }
  return false;
}

std::optional<std::pair<PointTuple, PointTuple>> essentiality_witness(const FnTable& f, int i) {
  if (i < 1 || i > f.n) throw std::out_of_range("essentiality_witness: variable index out of range");
  const std::size_t stride =
      static_cast<std::size_t>(pow_u64(static_cast<std::uint64_t>(f.k), static_cast<unsigned>(f.n - i)));
  for (std::size_t t = 0; t < f.values.size(); ++t) {
    const int c = static_cast<int>((t / stride) % static_cast<std::size_t>(f.k));
    for (int c2 = c + 1; c2 < f.k; ++c2) {
      const std::size_t t2 = t + static_cast<std::size_t>(c2 - c) * stride;
      if (f.values[t] != f.values[t2]) {
        PointTuple a = point_of(t, f.k, f.n);
        PointTuple b = a;
        b[static_cast<std::size_t>(i - 1)] = c2;
        return std::make_pair(std::move(a), std::move(b));
      }
    }
  }
  return std::nullopt;
}

std::vector<int> essential_variables(const FnTable& f) {
  std::vector<int> vars;
  for (int i = 1; i <= f.n; ++i)
    if (is_essential(f, i)) vars.push_back(i);
  return vars;
}

int essential_arity(const FnTable& f) {
  return static_cast<int>(essential_variables(f).size());
}

FnTable drop_inessential(const FnTable& f) {
  const std::vector<int> vars = essential_variables(f);
  if (vars.empty()) return constant_table(f.k, f.ell, 1, f.values[0]);
  const int m = static_cast<int>(vars.size());
  const std::uint64_t total = pow_u64(static_cast<std::uint64_t>(f.k), static_cast<unsigned>(m));
  std::vector<int> values(static_cast<std::size_t>(total));
  PointTuple full(static_cast<std::size_t>(f.n), 0);
  for (std::size_t t = 0; t < values.size(); ++t) {
    const PointTuple q = point_of(t, f.k, m);
    std::fill(full.begin(), full.end(), 0);
    for (std::size_t j = 0; j < q.size(); ++j)
      full[static_cast<std::size_t>(vars[j] - 1)] = q[j];
    values[t] = f.values[index_of(full, f.k, f.n)];
  }
  return FnTable(f.k, f.ell, m, std::move(values));
}

FnTable constant_table(int k, int ell, int n, int value) {
  const std::uint64_t total = pow_u64(static_cast<std::uint64_t>(k), static_cast<unsigned>(n));
  return FnTable(k, ell, n, std::vector<int>(static_cast<std::size_t>(total), value));
}

FnTable read_fn(std::istream& in) {
  long long k = 0, ell = 0, n = 0;
  if (!(in >> k >> ell >> n)) throw std::runtime_error("function file: cannot read header");
  if (k < 2 || ell < 2 || n < 1 || k > 1000 || ell > 1000000 || n > 64)
    throw std::runtime_error("function file: header out of range");
  std::uint64_t total;
  try {
    total = pow_u64(static_cast<std::uint64_t>(k), static_cast<unsigned>(n));
  } catch (const std::overflow_error&) {
    throw std::runtime_error("function file: table size overflows");
  }
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(total));
  for (std::uint64_t t = 0; t < total; ++t) {
    long long v = 0;
    if (!(in >> v)) throw std::runtime_error("function file: too few values");
    if (v < 0 || v >= ell) throw std::runtime_error("function file: value out of range");
    values.push_back(static_cast<int>(v));
  }
  std::string rest;
  if (in >> rest) throw std::runtime_error("function file: trailing data");
  return FnTable(static_cast<int>(k), static_cast<int>(ell), static_cast<int>(n), std::move(values));
}

void write_fn(std::ostream& out, const FnTable& f) {
  out << f.k << ' ' << f.ell << ' ' << f.n << '\n';
  const std::size_t row = static_cast<std::size_t>(f.k);
  for (std::size_t t = 0; t < f.values.size(); ++t) {
    out << f.values[t];
    out << ((t % row == row - 1) ? '\n' : ' ');
  }
}

FnTable read_fn_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open function file: " + path);
  return read_fn(in);
}

void write_fn_file(const std::string& path, const FnTable& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_fn(out, f);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace gapkit
