#include "fibrerank/residues.hpp"

#include <utility>

#include "fibrerank/primality.hpp"

namespace fibrerank {

namespace {
// (a|2) indexed by a mod 8.
constexpr int kTab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};

unsigned long mod8(const Int& x) {
  Int r = x % 8;
  if (r < 0) r += 8;
  return r.get_ui();
}

unsigned long mod4(const Int& x) {
  Int r = x % 4;
  if (r < 0) r += 4;
  return r.get_ui();
}
}  // namespace

int kronecker_symbol(const Int& a0, const Int& n0) {
  if (n0 == 0) throw PreconditionError("kronecker symbol undefined for n = 0");
  Int a = a0, b = n0;
  int k = 1;
  if (b < 0) {
    b = -b;
    if (a < 0) k = -k;
  }
  if (a % 2 == 0 && b % 2 == 0) return 0;
  unsigned long v = mpz_scan1(b.get_mpz_t(), 0);
  if (v > 0) {
    mpz_tdiv_q_2exp(b.get_mpz_t(), b.get_mpz_t(), v);
    if (v & 1) k *= kTab2[mod8(a)];
  }
  // b odd positive from here; standard Jacobi reciprocity loop.
  while (true) {
    a %= b;
    if (a < 0) a += b;
    if (a == 0) return b == 1 ? k : 0;
    v = mpz_scan1(a.get_mpz_t(), 0);
    if (v > 0) {
      mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), v);
      if (v & 1) k *= kTab2[mod8(b)];
    }
    if (mod4(a) == 3 && mod4(b) == 3) k = -k;
    std::swap(a, b);
  }
}

bool is_square_mod_prime(const Int& a, const Int& p) {
  Int r = a % p;
  if (r == 0) return true;
  if (p == 2) return true;
  return kronecker_symbol(a, p) == 1;
}

std::optional<Int> sqrt_mod_prime(const Int& a0, const Int& p) {
  if (p < 3 || !is_prime(p) || p == 2) throw PreconditionError("sqrt_mod_prime needs an odd prime");
  Int a = a0 % p;
  if (a < 0) a += p;
  if (a == 0) return Int(0);
  if (kronecker_symbol(a, p) != 1) return std::nullopt;

  Int r;
  if (mod4(p) == 3) {
    Int e = (p + 1) / 4;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  } else {
    // Tonelli-Shanks.
    Int q = p - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
    Int z = 2;
    while (kronecker_symbol(z, p) != -1) ++z;
    Int c, t;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    Int e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    unsigned long m = s;
    while (t != 1) {
      Int t2 = t;
      unsigned long i = 0;
      while (t2 != 1) {
        t2 = (t2 * t2) % p;
        ++i;
        internal_check(i < m, "tonelli-shanks order overflow");
      }
      Int b = c;
      for (unsigned long j = 0; j + i + 1 < m; ++j) b = (b * b) % p;
      m = i;
      c = (b * b) % p;
      t = (t * c) % p;
      r = (r * b) % p;
    }
  }
  Int other = p - r;
  return r <= other ? r : other;
}

}  // namespace fibrerank
