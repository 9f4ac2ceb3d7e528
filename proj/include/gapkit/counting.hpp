#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gapkit {

// (m)_i = m (m-1) ... (m-i+1); (m)_0 = 1, and 0 when i > m.
mpz_class falling_factorial(long m, long i);

mpz_class binomial(long n, long r);

// Functions A^n -> B depending on exactly r variables.
mpz_class count_U(int k, int ell, int n, int r);

// Functions vanishing on the diagonal domain but not everywhere.
mpz_class count_V(int k, int ell, int n);

// Functions with every variable essential and quasi-arity m (n >= 3).
mpz_class count_Q(int k, int ell, int n, int m);

// Size of the realizable oddsupp range on the diagonal domain.
mpz_class count_S(int k, int n);

// Functions with every variable essential, quasi-arity n, and diagonal
// determined by oddsupp (n >= 2).
mpz_class count_O(int k, int ell, int n);

// Functions with every variable essential and arity gap p (n >= 2).
mpz_class count_G(int k, int ell, int n, int p);

struct GapCountRow {
  int n = 0;
  mpz_class u;                // every variable essential
  std::vector<mpz_class> g;   // g[p-1] = count with gap p, p = 1..n
};

// Rows for n = 2..n_max.
std::vector<GapCountRow> count_table(int k, int ell, int n_max);

// value rounded to two significant decimal digits: (mant/10) * 10^exp10,
// mant in [10, 99] (or 0 for value 0).
struct Sci2 {
  int mant = 0;
  long exp10 = 0;

  friend bool operator==(const Sci2&, const Sci2&) = default;
};

Sci2 round_sig2(const mpz_class& value);
std::string format_sci2(const mpz_class& value);  // e.g. "4.4e38"

// Decimal string, or two-significant-digit scientific notation for values
// longer than 13 digits unless exact output is requested.
std::string format_count(const mpz_class& value, bool exact);

}  // namespace gapkit
