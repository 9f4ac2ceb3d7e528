#include "gapkit/group.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gapkit/diagonal.hpp"

namespace gapkit {

namespace {
constexpr int kMaxOrder = 1 << 20;

bool scan_boolean(int order, const std::vector<int>& add) {
  for (int a = 0; a < order; ++a)
    if (add[static_cast<std::size_t>(a) * order + a] != 0) return false;
  return true;
}

std::vector<int> derive_neg(int order, const std::vector<int>& add) {
  std::vector<int> neg(static_cast<std::size_t>(order), -1);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (add[static_cast<std::size_t>(a) * order + b] == 0) {
        neg[static_cast<std::size_t>(a)] = b;
        break;
      }
  return neg;
}
}  // namespace

AbelianGroup make_cyclic(int m) {
  if (m < 1 || m > kMaxOrder) throw std::invalid_argument("make_cyclic: order out of range");
  AbelianGroup g;
  g.order = m;
  g.add.resize(static_cast<std::size_t>(m) * m);
  g.neg.resize(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    g.neg[static_cast<std::size_t>(a)] = (m - a) % m;
    for (int b = 0; b < m; ++b) g.add[static_cast<std::size_t>(a) * m + b] = (a + b) % m;
  }
  g.boolean = (m <= 2);
  g.name = "cyclic:" + std::to_string(m);
  return g;
}

AbelianGroup make_boolean(int d) {
  if (d < 1 || d > 20) throw std::invalid_argument("make_boolean: dimension out of range");
  const int order = 1 << d;
  AbelianGroup g;
  g.order = order;
  g.add.resize(static_cast<std::size_t>(order) * order);
  g.neg.resize(static_cast<std::size_t>(order));
  for (int a = 0; a < order; ++a) {
    g.neg[static_cast<std::size_t>(a)] = a;
    for (int b = 0; b < order; ++b) g.add[static_cast<std::size_t>(a) * order + b] = a ^ b;
  }
  g.boolean = true;
  g.name = "boolean:" + std::to_string(d);
  return g;
}

AbelianGroup make_product(const std::vector<AbelianGroup>& factors) {
  if (factors.empty()) throw std::invalid_argument("make_product: no factors");
  long long order = 1;
  for (const AbelianGroup& f : factors) {
    order *= f.order;
    if (order > kMaxOrder) throw std::invalid_argument("make_product: order out of range");
  }
  const int ord = static_cast<int>(order);

  // Mixed-radix encoding, first factor most significant.
  auto decode = [&](int e) {
    std::vector<int> comp(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      comp[i] = e % factors[i].order;
      e /= factors[i].order;
    }
    return comp;
  };
  auto encode = [&](const std::vector<int>& comp) {
    int e = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) e = e * factors[i].order + comp[i];
    return e;
  };

  AbelianGroup g;
  g.order = ord;
  g.add.resize(static_cast<std::size_t>(ord) * ord);
  g.neg.resize(static_cast<std::size_t>(ord));
  g.boolean = true;
  for (const AbelianGroup& f : factors) g.boolean = g.boolean && f.boolean;
  for (int a = 0; a < ord; ++a) {
    const std::vector<int> ca = decode(a);
    std::vector<int> cn(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) cn[i] = factors[i].minus(ca[i]);
    g.neg[static_cast<std::size_t>(a)] = encode(cn);
    for (int b = 0; b < ord; ++b) {
      const std::vector<int> cb = decode(b);
      std::vector<int> cs(factors.size());
      for (std::size_t i = 0; i < factors.size(); ++i) cs[i] = factors[i].plus(ca[i], cb[i]);
      g.add[static_cast<std::size_t>(a) * ord + b] = encode(cs);
    }
  }
  std::string name;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) name += "x";
    name += factors[i].name.empty() ? "?" : factors[i].name;
  }
  g.name = name;
  return g;
}

AbelianGroup make_from_table(int order, std::vector<int> add) {
  if (order < 1 || order > kMaxOrder) throw std::invalid_argument("make_from_table: order out of range");
  if (add.size() != static_cast<std::size_t>(order) * order)
    throw std::invalid_argument("make_from_table: addition table has wrong size");
  for (int v : add)
    if (v < 0 || v >= order) throw std::invalid_argument("make_from_table: entry out of range");
  AbelianGroup g;
  g.order = order;
  g.add = std::move(add);
  g.neg = derive_neg(order, g.add);
  g.boolean = scan_boolean(order, g.add);
  GroupCheck check = validate(g);
  if (!check.ok) throw std::invalid_argument("make_from_table: " + check.violation);
  return g;
}

GroupCheck validate(const AbelianGroup& g) {
  auto fail = [](std::string why) { return GroupCheck{false, std::move(why)}; };
  const int n = g.order;
  if (n < 1) return fail("order must be positive");
  if (g.add.size() != static_cast<std::size_t>(n) * n) return fail("addition table has wrong size");
  if (g.neg.size() != static_cast<std::size_t>(n)) return fail("negation table has wrong size");
  for (int v : g.add)
    if (v < 0 || v >= n) return fail("closure: entry out of range");
  for (int v : g.neg)
    if (v < 0 || v >= n) return fail("negation entry out of range");
  for (int a = 0; a < n; ++a) {
    if (g.plus(0, a) != a) return fail("identity: 0 + " + std::to_string(a));
    if (g.plus(a, 0) != a) return fail("identity: " + std::to_string(a) + " + 0");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.plus(a, b) != g.plus(b, a))
        return fail("commutativity: " + std::to_string(a) + ", " + std::to_string(b));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.plus(g.plus(a, b), c) != g.plus(a, g.plus(b, c)))
          return fail("associativity: " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                      std::to_string(c));
  for (int a = 0; a < n; ++a)
    if (g.plus(a, g.minus(a)) != 0) return fail("inverse: " + std::to_string(a));
  if (g.boolean != scan_boolean(n, g.add)) return fail("boolean flag inconsistent with table");
  return GroupCheck{};
}

namespace {
void require_same_shape(const FnTable& f, const FnTable& g, const AbelianGroup& grp,
                        const char* who) {
  if (f.k != g.k || f.ell != g.ell || f.n != g.n)
    throw std::invalid_argument(std::string(who) + ": table shapes differ");
  if (f.ell != grp.order)
    throw std::invalid_argument(std::string(who) + ": group order does not match codomain");
}
}  // namespace

FnTable fn_add(const FnTable& f, const FnTable& g, const AbelianGroup& grp) {
  require_same_shape(f, g, grp, "fn_add");
  std::vector<int> values(f.values.size());
  for (std::size_t t = 0; t < values.size(); ++t) values[t] = grp.plus(f.values[t], g.values[t]);
  return FnTable(f.k, f.ell, f.n, std::move(values));
}

FnTable fn_sub(const FnTable& f, const FnTable& g, const AbelianGroup& grp) {
  require_same_shape(f, g, grp, "fn_sub");
  std::vector<int> values(f.values.size());
  for (std::size_t t = 0; t < values.size(); ++t)
    values[t] = grp.plus(f.values[t], grp.minus(g.values[t]));
  return FnTable(f.k, f.ell, f.n, std::move(values));
}

bool fn_zero_on_diag(const FnTable& h, const AbelianGroup& grp) {
  if (h.ell != grp.order)
    throw std::invalid_argument("fn_zero_on_diag: group order does not match codomain");
  for (std::size_t t = 0; t < h.values.size(); ++t) {
    if (h.n == 1 || has_repeat(point_of(t, h.k, h.n))) {
      if (h.values[t] != 0) return false;
    }
  }
  return true;
}

AbelianGroup parse_group_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("group spec: missing ':'");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (kind == "cyclic") {
    std::vector<AbelianGroup> factors;
    std::stringstream ss(rest);
    std::string part;
    while (std::getline(ss, part, 'x')) {
      if (part.empty()) throw std::invalid_argument("group spec: empty factor");
      factors.push_back(make_cyclic(std::stoi(part)));
    }
    if (factors.empty()) throw std::invalid_argument("group spec: no factors");
    if (factors.size() == 1) return factors[0];
    return make_product(factors);
  }
  if (kind == "boolean") return make_boolean(std::stoi(rest));
  if (kind == "table") return read_group_table_file(rest);
  throw std::invalid_argument("group spec: unknown kind '" + kind + "'");
}

AbelianGroup read_group_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group table file: " + path);
  int order = 0;
  if (!(in >> order) || order < 1 || order > kMaxOrder)
    throw std::runtime_error("group table file: bad order");
  std::vector<int> add;
  add.reserve(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < order * order; ++i) {
    int v = 0;
    if (!(in >> v)) throw std::runtime_error("group table file: too few entries");
    add.push_back(v);
  }
  return make_from_table(order, std::move(add));
}

}  // namespace gapkit
