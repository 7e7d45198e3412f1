#include "fibrerank/primality.hpp"

#include <array>

#include "fibrerank/residues.hpp"

namespace fibrerank {
namespace {

// One strong pseudoprime round: n-1 = d*2^r with d odd, n odd > 2.
bool mr_round(const Int& n, const Int& a, const Int& d, unsigned long r) {
  if (a % n == 0) return true;
  Int x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  Int nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (unsigned long i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Strong Lucas probable-prime test with Selfridge's parameters.
bool strong_lucas_prp(const Int& n) {
  // Perfect squares make the D-search loop spin; they are composite anyway.
  if (is_square(n)) return false;

  Int d_param = 5;
  while (true) {
    int k = kronecker_symbol(d_param, n);
    if (k == -1) break;
    if (k == 0 && abs(d_param) != n) return false;  // proper factor found
    d_param = d_param > 0 ? -(d_param + 2) : -(d_param - 2);
  }
  // P = 1, Q = (1 - D)/4.
  Int q_param = (1 - d_param) / 4;

  Int d = n + 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  // Binary ladder for U_d, V_d (mod n), tracking Q^k.
  Int u = 1, v = 1, qk = q_param % n;
  Int inv2 = 0;
  {
    Int two = 2;
    if (mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), n.get_mpz_t()) == 0) return n == 2;
  }
  auto modn = [&](Int x) {
    x %= n;
    if (x < 0) x += n;
    return x;
  };

  size_t bits = mpz_sizeinbase(d.get_mpz_t(), 2);
  for (size_t i = bits - 1; i-- > 0;) {
    // double: k -> 2k
    Int u2 = modn(u * v);
    Int v2 = modn(v * v - 2 * qk);
    qk = modn(qk * qk);
    u = u2;
    v = v2;
    if (mpz_tstbit(d.get_mpz_t(), i)) {
      // increment: 2k -> 2k+1 (P = 1)
      Int un = modn((u + v) * inv2);
      Int vn = modn((d_param * u + v) * inv2);
      qk = modn(qk * q_param);
      u = un;
      v = vn;
    }
  }

  if (u == 0 || v == 0) return true;
  for (unsigned long j = 1; j < s; ++j) {
    v = modn(v * v - 2 * qk);
    qk = modn(qk * qk);
    if (v == 0) return true;
  }
  return false;
}

constexpr std::array<unsigned, 12> kDeterministicWitnesses = {2,  3,  5,  7,  11, 13,
                                                              17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);

  // The fixed witness set is deterministic for n < 3.3*10^24, covering 2^64.
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    for (unsigned a : kDeterministicWitnesses) {
      if (!mr_round(n, a, d, r)) return false;
    }
    return true;
  }
  if (!mr_round(n, 2, d, r)) return false;
  if (!strong_lucas_prp(n)) return false;
  for (unsigned a : {3u, 5u, 7u, 11u, 13u}) {
    if (!mr_round(n, a, d, r)) return false;
  }
  return true;
}

Int next_prime(const Int& n) {
  Int c = n < 1 ? Int(1) : n;
  while (true) {
    mpz_nextprime(c.get_mpz_t(), c.get_mpz_t());
    if (is_prime(c)) return c;
  }
}

}  // namespace fibrerank
