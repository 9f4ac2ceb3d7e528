#include "gapkit/diagonal.hpp"

#include <stdexcept>

namespace gapkit {

bool has_repeat(const PointTuple& point) {
  if (point.size() <= 64) {
    std::uint64_t seen_lo = 0, seen_hi = 0;
    for (int c : point) {
      if (c < 64) {
        const std::uint64_t bit = std::uint64_t(1) << c;
        if (seen_lo & bit) return true;
        seen_lo |= bit;
      } else if (c < 128) {
        const std::uint64_t bit = std::uint64_t(1) << (c - 64);
        if (seen_hi & bit) return true;
        seen_hi |= bit;
      } else {
        for (std::size_t j = 0; j < point.size(); ++j)
          for (std::size_t l = j + 1; l < point.size(); ++l)
            if (point[j] == point[l]) return true;
        return false;
      }
    }
    return false;
  }
  for (std::size_t j = 0; j < point.size(); ++j)
    for (std::size_t l = j + 1; l < point.size(); ++l)
      if (point[j] == point[l]) return true;
  return false;
}

std::vector<PointTuple> diag_points(int k, int n) {
  if (k < 2) throw std::invalid_argument("diag_points: k must be at least 2");
  if (n < 1) throw std::invalid_argument("diag_points: n must be at least 1");
  const std::uint64_t total = pow_u64(static_cast<std::uint64_t>(k), static_cast<unsigned>(n));
  std::vector<PointTuple> pts;
  for (std::uint64_t t = 0; t < total; ++t) {
    PointTuple p = point_of(t, k, n);
    if (n == 1 || has_repeat(p)) pts.push_back(std::move(p));
  }
  return pts;
}

DiagSlice restrict_diag(const FnTable& f) {
  DiagSlice s;
  s.base = f;
  for (std::size_t t = 0; t < f.values.size(); ++t) {
    if (f.n == 1 || has_repeat(point_of(t, f.k, f.n))) s.domain.push_back(t);
  }
  return s;
}

std::vector<int> partial_essential_variables(const DiagSlice& s) {
  const FnTable& f = s.base;
  std::vector<int> vars;
  for (int i = 1; i <= f.n; ++i) {
    const std::size_t stride =
        static_cast<std::size_t>(pow_u64(static_cast<std::uint64_t>(f.k), static_cast<unsigned>(f.n - i)));
    bool essential = false;
    for (std::size_t idx : s.domain) {
      PointTuple p = point_of(idx, f.k, f.n);
      const int c = p[static_cast<std::size_t>(i - 1)];
      for (int c2 = c + 1; c2 < f.k && !essential; ++c2) {
        p[static_cast<std::size_t>(i - 1)] = c2;
        if (f.n == 1 || has_repeat(p)) {
          const std::size_t idx2 = idx + static_cast<std::size_t>(c2 - c) * stride;
          if (f.values[idx] != f.values[idx2]) essential = true;
        }
      }
      if (essential) break;
    }
    if (essential) vars.push_back(i);
  }
  return vars;
}

int partial_essential_arity(const DiagSlice& s) {
  return static_cast<int>(partial_essential_variables(s).size());
}

OddSuppSet oddsupp(const PointTuple& point) {
  OddSuppSet mask = 0;
  for (int c : point) {
    if (c < 0 || c >= 32) throw std::out_of_range("oddsupp: element out of supported range");
    mask ^= (OddSuppSet(1) << c);
  }
  return mask;
}

std::vector<int> oddsupp_elements(OddSuppSet s) {
  std::vector<int> out;
  for (int c = 0; c < 32; ++c)
    if (s & (OddSuppSet(1) << c)) out.push_back(c);
  return out;
}

std::vector<OddSuppSet> oddsupp_range(int k, int n) {
  if (k < 2 || k > 20) throw std::invalid_argument("oddsupp_range: k out of supported range");
  if (n < 2) throw std::invalid_argument("oddsupp_range: n must be at least 2");
  std::vector<OddSuppSet> out;
  for (OddSuppSet s = 0; s < (OddSuppSet(1) << k); ++s) {
    const int size = __builtin_popcount(s);
    if (size <= n - 2 && (n - size) % 2 == 0) out.push_back(s);
  }
  return out;
}

OddSuppCheck is_determined_by_oddsupp(const DiagSlice& s) {
  const FnTable& f = s.base;
  std::map<OddSuppSet, std::pair<std::size_t, int>> seen;  // mask -> (first index, value)
  for (std::size_t idx : s.domain) {
    const PointTuple p = point_of(idx, f.k, f.n);
    const OddSuppSet m = oddsupp(p);
    auto it = seen.find(m);
    if (it == seen.end()) {
      seen.emplace(m, std::make_pair(idx, f.values[idx]));
    } else if (it->second.second != f.values[idx]) {
      OddSuppCheck bad;
      bad.first = point_of(it->second.first, f.k, f.n);
      bad.second = p;
      return bad;
    }
  }
  OddSuppCheck ok;
  OddSuppTable table;
  table.k = f.k;
  table.n = f.n;
  for (const auto& [m, fs] : seen) table.values[m] = fs.second;
  ok.factor = std::move(table);
  return ok;
}

}  // namespace gapkit
