#include "gapkit/enumerate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <thread>

#include "gapkit/counting.hpp"
#include "gapkit/diagonal.hpp"
#include "gapkit/gap.hpp"

namespace gapkit {

namespace {

constexpr std::uint64_t kSeedStride = 0x9E3779B97F4A7C15ULL;

int pick_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

std::vector<int> random_values(std::mt19937_64& rng, std::size_t size, int ell) {
  std::vector<int> values(size);
  for (std::size_t t = 0; t < size; ++t)
    values[t] = static_cast<int>(rng() % static_cast<std::uint64_t>(ell));
  return values;
}

// Odometer step in base-ell counter order (last entry least significant).
bool next_table(std::vector<int>& values, int ell) {
  for (std::size_t j = values.size(); j-- > 0;) {
    if (++values[j] < ell) return true;
    values[j] = 0;
  }
  return false;
}

void tally_one(const FnTable& f, Census& c) {
  ++c.total;
  const int ess = essential_arity(f);
  if (ess < f.n) {
    ++c.ess_below;
  } else {
    const int gap = arity_gap(f);
    ++c.gap_count[static_cast<std::size_t>(gap - 1)];
  }
}

Census merge(std::vector<Census>& parts) {
  Census out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out.total += parts[i].total;
    out.ess_below += parts[i].ess_below;
    for (std::size_t p = 0; p < out.gap_count.size(); ++p)
      out.gap_count[p] += parts[i].gap_count[p];
  }
  return out;
}

}  // namespace

mpz_class function_space_size(int k, int ell, int n) {
  if (k < 2 || ell < 2 || n < 1) throw std::invalid_argument("function_space_size: bad parameters");
  const std::uint64_t points = pow_u64(static_cast<std::uint64_t>(k), static_cast<unsigned>(n));
  if (points > 10'000'000) throw std::invalid_argument("function_space_size: domain too large");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(ell), static_cast<unsigned long>(points));
  return r;
}

FnTable function_at(int k, int ell, int n, std::uint64_t idx) {
  const std::uint64_t points = pow_u64(static_cast<std::uint64_t>(k), static_cast<unsigned>(n));
  std::vector<int> values(static_cast<std::size_t>(points), 0);
  for (std::size_t j = values.size(); j-- > 0 && idx != 0;) {
    values[j] = static_cast<int>(idx % static_cast<std::uint64_t>(ell));
    idx /= static_cast<std::uint64_t>(ell);
  }
  if (idx != 0) throw std::out_of_range("function_at: index out of range");
  return FnTable(k, ell, n, std::move(values));
}

FunctionStream::FunctionStream(int k, int ell, int n, std::uint64_t begin, std::uint64_t end)
    : ell_(ell), pos_(begin), end_(end) {
  if (begin > end) throw std::invalid_argument("FunctionStream: begin past end");
  if (begin < end) current_ = function_at(k, ell, n, begin);
}

bool FunctionStream::next(FnTable& out) {
  if (pos_ >= end_) return false;
  out = current_;
  ++pos_;
  if (pos_ < end_) next_table(current_.values, ell_);
  return true;
}

Census census_exhaustive(int k, int ell, int n, std::uint64_t budget, int threads) {
  if (n < 2) throw std::invalid_argument("census: arity must be at least 2");
  const mpz_class space = function_space_size(k, ell, n);
  if (space > mpz_class(static_cast<unsigned long>(budget)))
    throw std::runtime_error("census: function space exceeds budget");
  const std::uint64_t count = space.get_ui();

  const int nthreads = static_cast<int>(
      std::min<std::uint64_t>(pick_threads(threads), std::max<std::uint64_t>(count, 1)));
  std::vector<Census> parts(static_cast<std::size_t>(nthreads));
  std::vector<std::thread> pool;
  for (int w = 0; w < nthreads; ++w) {
    const std::uint64_t begin = count / nthreads * w + std::min<std::uint64_t>(w, count % nthreads);
    const std::uint64_t end =
        count / nthreads * (w + 1) + std::min<std::uint64_t>(w + 1, count % nthreads);
    Census& part = parts[static_cast<std::size_t>(w)];
    part.k = k;
    part.ell = ell;
    part.n = n;
    part.exhaustive = true;
    part.gap_count.assign(static_cast<std::size_t>(n), 0);
    pool.emplace_back([=, &part] {
      FunctionStream stream(k, ell, n, begin, end);
      FnTable f;
      while (stream.next(f)) tally_one(f, part);
    });
  }
  for (auto& t : pool) t.join();
  return merge(parts);
}

Census census_sampled(int k, int ell, int n, std::uint64_t samples, std::uint64_t seed,
                      int threads) {
  if (n < 2) throw std::invalid_argument("census: arity must be at least 2");
  if (samples == 0) throw std::invalid_argument("census_sampled: need at least one sample");
  const std::uint64_t points = pow_u64(static_cast<std::uint64_t>(k), static_cast<unsigned>(n));

  const int nthreads =
      static_cast<int>(std::min<std::uint64_t>(pick_threads(threads), samples));
  std::vector<Census> parts(static_cast<std::size_t>(nthreads));
  std::vector<std::thread> pool;
  for (int w = 0; w < nthreads; ++w) {
    const std::uint64_t begin =
        samples / nthreads * w + std::min<std::uint64_t>(w, samples % nthreads);
    const std::uint64_t end =
        samples / nthreads * (w + 1) + std::min<std::uint64_t>(w + 1, samples % nthreads);
    Census& part = parts[static_cast<std::size_t>(w)];
    part.k = k;
    part.ell = ell;
    part.n = n;
    part.exhaustive = false;
    part.samples = 0;
    part.seed = seed;
    part.gap_count.assign(static_cast<std::size_t>(n), 0);
    pool.emplace_back([=, &part] {
      for (std::uint64_t s = begin; s < end; ++s) {
        std::mt19937_64 rng(seed + kSeedStride * (s + 1));
        FnTable f(k, ell, n, random_values(rng, static_cast<std::size_t>(points), ell));
        tally_one(f, part);
      }
    });
  }
  for (auto& t : pool) t.join();
  Census out = merge(parts);
  out.samples = out.total;
  return out;
}

CensusComparison compare_census(const Census& c) {
  if (!c.exhaustive) throw std::invalid_argument("compare_census: census must be exhaustive");
  CensusComparison out;
  auto check = [&](const std::string& label, const mpz_class& expected, std::uint64_t actual) {
    const mpz_class got(static_cast<unsigned long>(actual));
    if (got == expected) {
      out.lines.push_back(label + ": " + expected.get_str() + " ok");
    } else {
      out.all_match = false;
      const std::string line =
          label + ": expected " + expected.get_str() + ", counted " + got.get_str();
      out.lines.push_back(line);
      out.mismatches.push_back(line);
    }
  };
  check("total", function_space_size(c.k, c.ell, c.n), c.total);
  const mpz_class unn = count_U(c.k, c.ell, c.n, c.n);
  check("ess<n", function_space_size(c.k, c.ell, c.n) - unn, c.ess_below);
  std::uint64_t full = 0;
  for (std::uint64_t g : c.gap_count) full += g;
  check("ess=n", unn, full);
  if (c.n >= 2) {
    for (int p = 1; p <= c.n; ++p)
      check("gap=" + std::to_string(p), count_G(c.k, c.ell, c.n, p),
            c.gap_count[static_cast<std::size_t>(p - 1)]);
  }
  return out;
}

FnTable random_function(int k, int ell, int n, std::uint64_t seed) {
  const std::uint64_t points = pow_u64(static_cast<std::uint64_t>(k), static_cast<unsigned>(n));
  std::mt19937_64 rng(seed);
  return FnTable(k, ell, n, random_values(rng, static_cast<std::size_t>(points), ell));
}

SynthInstance synth_gap_instance(int k, int ell, int n, int p, const AbelianGroup& grp,
                                 std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("synth_gap_instance: arity must be at least 3");
  if (p < 1 || p > n) throw std::invalid_argument("synth_gap_instance: need 1 <= p <= n");
  if (k < n)
    throw std::invalid_argument("synth_gap_instance: no off-diagonal points when k < n");
  if (grp.order != ell)
    throw std::invalid_argument("synth_gap_instance: group order does not match ell");

  std::mt19937_64 rng(seed);
  const int m = n - p;

  FnTable g;
  if (m == 0) {
    g = constant_table(k, ell, n, static_cast<int>(rng() % static_cast<std::uint64_t>(ell)));
  } else {
    const std::uint64_t small = pow_u64(static_cast<std::uint64_t>(k), static_cast<unsigned>(m));
    VarMap sigma(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) sigma[static_cast<std::size_t>(j)] = j + 1;
    for (int tries = 0;; ++tries) {
      if (tries > 100000)
        throw std::runtime_error("synth_gap_instance: could not draw a fully essential core");
      FnTable core(k, ell, m, random_values(rng, static_cast<std::size_t>(small), ell));
      if (essential_arity(core) == m) {
        g = simple_minor(core, sigma, n);
        break;
      }
    }
  }

  const std::uint64_t points = pow_u64(static_cast<std::uint64_t>(k), static_cast<unsigned>(n));
  std::vector<std::size_t> off_diag;
  for (std::uint64_t t = 0; t < points; ++t)
    if (!has_repeat(point_of(t, k, n))) off_diag.push_back(static_cast<std::size_t>(t));

  FnTable h = constant_table(k, ell, n, 0);
  for (int tries = 0;; ++tries) {
    if (tries > 100000) throw std::runtime_error("synth_gap_instance: could not draw nonzero h");
    bool nonzero = false;
    for (std::size_t t : off_diag) {
      const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(ell));
      h.values[t] = v;
      nonzero = nonzero || v != 0;
    }
    if (nonzero) break;
  }

  SynthInstance inst;
  inst.f = fn_add(h, g, grp);
  inst.h = std::move(h);
  inst.g = std::move(g);
  return inst;
}

SampledCheck sampled_property_check(int k, int ell, int n, std::uint64_t samples,
                                    std::uint64_t seed, int threads) {
  if (n < 2) throw std::invalid_argument("sampled_property_check: arity must be at least 2");
  if (samples == 0) throw std::invalid_argument("sampled_property_check: need samples");
  const std::uint64_t points = pow_u64(static_cast<std::uint64_t>(k), static_cast<unsigned>(n));

  struct Part {
    std::uint64_t ess_full = 0;
    std::uint64_t violations = 0;
    std::vector<std::string> details;
  };
  const int nthreads =
      static_cast<int>(std::min<std::uint64_t>(pick_threads(threads), samples));
  std::vector<Part> parts(static_cast<std::size_t>(nthreads));
  std::vector<std::thread> pool;
  for (int w = 0; w < nthreads; ++w) {
    const std::uint64_t begin =
        samples / nthreads * w + std::min<std::uint64_t>(w, samples % nthreads);
    const std::uint64_t end =
        samples / nthreads * (w + 1) + std::min<std::uint64_t>(w + 1, samples % nthreads);
    Part& part = parts[static_cast<std::size_t>(w)];
    pool.emplace_back([=, &part] {
      for (std::uint64_t s = begin; s < end; ++s) {
        std::mt19937_64 rng(seed + kSeedStride * (s + 1));
        FnTable f(k, ell, n, random_values(rng, static_cast<std::size_t>(points), ell));
        auto flag = [&](const std::string& what) {
          ++part.violations;
          if (part.details.size() < 5)
            part.details.push_back("sample " + std::to_string(s) + ": " + what);
        };
        const int ess = essential_arity(f);
        if (n > k && quasi_arity(f) != ess) flag("quasi-arity differs from essential arity");
        if (ess == n) {
          ++part.ess_full;
          const int gap = arity_gap(f);
          const GapReport rep = classify(f);
          if (rep.gap != gap) flag("classifier gap " + std::to_string(rep.gap) +
                                   " != minor-sweep gap " + std::to_string(gap));
          if (n > k && gap > 2) flag("gap " + std::to_string(gap) + " above bound for n > k");
        }
      }
    });
  }
  for (auto& t : pool) t.join();

  SampledCheck out;
  out.samples = samples;
  for (const Part& part : parts) {
    out.ess_full += part.ess_full;
    out.violations += part.violations;
    for (const std::string& d : part.details)
      if (out.details.size() < 5) out.details.push_back(d);
  }
  return out;
}

}  // namespace gapkit
