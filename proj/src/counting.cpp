#include "gapkit/counting.hpp"

#include <stdexcept>

namespace gapkit {

namespace {

// Exponents above this would materialize numbers of tens of megabytes.
constexpr unsigned long kMaxExponent = 10'000'000;

mpz_class pow_mpz(long base, const mpz_class& exp) {
  if (exp < 0 || !exp.fits_ulong_p() || exp.get_ui() > kMaxExponent)
    throw std::runtime_error("count: exponent too large to materialize");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp.get_ui());
  return r;
}

mpz_class pow_int(long base, long exp) { return pow_mpz(base, mpz_class(exp)); }

void require_kl(int k, int ell) {
  if (k < 2 || ell < 2) throw std::invalid_argument("count: k and ell must be at least 2");
}

}  // namespace

mpz_class falling_factorial(long m, long i) {
  if (m < 0 || i < 0)
    throw std::invalid_argument("falling_factorial: arguments must be nonnegative");
  if (i > m) return 0;
  mpz_class r = 1;
  for (long j = 0; j < i; ++j) r *= (m - j);
  return r;
}

mpz_class binomial(long n, long r) {
  if (n < 0 || r < 0) throw std::invalid_argument("binomial: arguments must be nonnegative");
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

mpz_class count_U(int k, int ell, int n, int r) {
  require_kl(k, ell);
  if (n < 1 || r < 0 || r > n) throw std::invalid_argument("count_U: need 0 <= r <= n");
  mpz_class sum = 0;
  for (int i = 0; i <= r; ++i) {
    const mpz_class term = binomial(r, i) * pow_mpz(ell, pow_int(k, r - i));
    if (i % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return binomial(n, r) * sum;
}

mpz_class count_V(int k, int ell, int n) {
  require_kl(k, ell);
  if (n < 1) throw std::invalid_argument("count_V: n must be at least 1");
  return pow_mpz(ell, falling_factorial(k, n)) - 1;
}

mpz_class count_Q(int k, int ell, int n, int m) {
  require_kl(k, ell);
  if (n < 3) throw std::invalid_argument("count_Q: n must be at least 3");
  if (m < 0 || m > n) throw std::invalid_argument("count_Q: need 0 <= m <= n");
  if (m < n) return count_U(k, ell, n, m) * count_V(k, ell, n);
  return count_U(k, ell, n, n) * pow_mpz(ell, falling_factorial(k, n)) -
         count_V(k, ell, n) * pow_mpz(ell, pow_int(k, n));
}

mpz_class count_S(int k, int n) {
  if (k < 2) throw std::invalid_argument("count_S: k must be at least 2");
  if (n < 2) throw std::invalid_argument("count_S: n must be at least 2");
  mpz_class sum = 0;
  if (n % 2 == 0) {
    for (int i = 0; i <= n / 2 - 1; ++i) sum += binomial(k, 2 * i);
  } else {
    for (int i = 0; i <= (n - 1) / 2 - 1; ++i) sum += binomial(k, 2 * i + 1);
  }
  return sum;
}

mpz_class count_O(int k, int ell, int n) {
  require_kl(k, ell);
  if (n < 2) throw std::invalid_argument("count_O: n must be at least 2");
  if (n > k) return pow_mpz(ell, pow_int(2, k - 1)) - ell;
  return pow_mpz(ell, falling_factorial(k, n)) * (pow_mpz(ell, count_S(k, n)) - ell);
}

mpz_class count_G(int k, int ell, int n, int p) {
  require_kl(k, ell);
  if (n < 2) throw std::invalid_argument("count_G: n must be at least 2");
  if (p < 1 || p > n) throw std::invalid_argument("count_G: need 1 <= p <= n");

  if (n == 2) {
    const mpz_class g22 = pow_mpz(ell, falling_factorial(k, 2) + 1) - ell;
    if (p == 2) return g22;
    return count_U(k, ell, 2, 2) - g22;
  }
  if (n == 3) {
    const mpz_class g33 = (n > k) ? mpz_class(0) : count_U(k, ell, 3, 0) * count_V(k, ell, 3);
    if (p == 3) return g33;
    const mpz_class g32 =
        (8 * pow_mpz(ell, falling_factorial(k, 3)) - 3) * (pow_int(ell, k) - ell);
    if (p == 2) return g32;
    return count_U(k, ell, 3, 3) - g33 - g32;
  }
  // n >= 4
  if (p >= 3) {
    if (n > k) return 0;
    return count_U(k, ell, n, n - p) * count_V(k, ell, n);
  }
  if (n > k) {
    const mpz_class g2 = count_O(k, ell, n);
    if (p == 2) return g2;
    return count_U(k, ell, n, n) - g2;
  }
  // 4 <= n <= k
  if (p == 2) return count_U(k, ell, n, n - 2) * count_V(k, ell, n) + count_O(k, ell, n);
  return count_U(k, ell, n, n - 1) * count_V(k, ell, n) +
         count_U(k, ell, n, n) * pow_mpz(ell, falling_factorial(k, n)) -
         count_V(k, ell, n) * pow_mpz(ell, pow_int(k, n)) - count_O(k, ell, n);
}

std::vector<GapCountRow> count_table(int k, int ell, int n_max) {
  require_kl(k, ell);
  if (n_max < 2) throw std::invalid_argument("count_table: n_max must be at least 2");
  std::vector<GapCountRow> rows;
  for (int n = 2; n <= n_max; ++n) {
    GapCountRow row;
    row.n = n;
    row.u = count_U(k, ell, n, n);
    for (int p = 1; p <= n; ++p) row.g.push_back(count_G(k, ell, n, p));
    rows.push_back(std::move(row));
  }
  return rows;
}

Sci2 round_sig2(const mpz_class& value) {
  if (value < 0) throw std::invalid_argument("round_sig2: value must be nonnegative");
  if (value == 0) return Sci2{0, 0};
  const std::string s = value.get_str();
  Sci2 out;
  out.exp10 = static_cast<long>(s.size()) - 1;
  if (s.size() == 1) {
    out.mant = (s[0] - '0') * 10;
    return out;
  }
  out.mant = (s[0] - '0') * 10 + (s[1] - '0');
  if (s.size() > 2 && s[2] >= '5') ++out.mant;
  if (out.mant == 100) {
    out.mant = 10;
    ++out.exp10;
  }
  return out;
}

std::string format_sci2(const mpz_class& value) {
  const Sci2 s = round_sig2(value);
  return std::to_string(s.mant / 10) + "." + std::to_string(s.mant % 10) + "e" +
         std::to_string(s.exp10);
}

std::string format_count(const mpz_class& value, bool exact) {
  const std::string s = value.get_str();
  if (exact || s.size() <= 13) return s;
  return format_sci2(value);
}

}  // namespace gapkit
