#include "fibrerank/factorization.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "fibrerank/primality.hpp"

namespace fibrerank {

Int Factorization::value() const {
  Int v = sign;
  for (const auto& [p, e] : factors) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

bool Factorization::divides_some_prime(const Int& p) const {
  return std::any_of(factors.begin(), factors.end(), [&](const auto& f) { return f.first == p; });
}

namespace {

// Brent's cycle variant of Pollard rho. Decrements iters_left as it goes;
// nullopt when the allowance runs out before a split is found.
std::optional<Int> brent_rho(const Int& n, unsigned long& iters_left) {
  for (unsigned long c = 1; iters_left > 0; ++c) {
    Int y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    const unsigned long block = 128;
    while (g == 1 && iters_left > 0) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && g == 1; k += block) {
        ys = y;
        unsigned long lim = std::min(block, r - k);
        if (lim > iters_left) lim = iters_left;
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = (q * abs(x - y)) % n;
        }
        iters_left -= lim;
        g = gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      // The block accumulated several factors at once; replay one by one.
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      }
    }
    if (g > 1 && g < n) return g;
    // g == n: cycle degenerated for this c, retry with the next constant.
  }
  return std::nullopt;
}

}  // namespace

Factorization factorize(const Int& n, const FactorBudget& budget) {
  if (n == 0) throw PreconditionError("factorize(0)");
  Factorization out;
  out.sign = n < 0 ? -1 : 1;
  Int m = abs(n);

  std::map<Int, unsigned> acc;
  auto strip = [&](const Int& d) {
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e) acc[d] += e;
  };

  strip(2);
  strip(3);
  strip(5);
  // 30-wheel trial division.
  static const unsigned wheel[8] = {1, 7, 11, 13, 17, 19, 23, 29};
  for (Int base = 0; base <= budget.trial_limit && m > 1; base += 30) {
    if (base * base > m) break;
    for (unsigned off : wheel) {
      Int d = base + off;
      if (d < 7) continue;
      if (d > budget.trial_limit) break;
      if (d * d > m) break;
      strip(d);
    }
  }

  unsigned long iters = budget.rho_iterations;
  std::vector<Int> pending;
  if (m > 1) pending.push_back(m);
  while (!pending.empty()) {
    Int c = pending.back();
    pending.pop_back();
    if (is_prime(c)) {
      unsigned e = 1;
      // c may divide other pending cofactors too; strip from all of them.
      for (auto& q : pending) {
        while (q % c == 0) {
          q /= c;
          ++e;
        }
      }
      std::erase(pending, Int(1));
      acc[c] += e;
      continue;
    }
    if (is_square(c)) {
      Int r = isqrt(c);
      pending.push_back(r);
      pending.push_back(r);
      continue;
    }
    auto split = brent_rho(c, iters);
    if (!split) throw BudgetError(c);
    pending.push_back(*split);
    pending.push_back(c / *split);
  }

  for (auto& [p, e] : acc) out.factors.emplace_back(p, e);
  internal_check(out.value() == n, "factorization does not reconstruct input");
  for (const auto& [p, e] : out.factors) internal_check(is_prime(p), "non-prime factor recorded");
  return out;
}

Int squarefree_core(const Int& n, const FactorBudget& budget) {
  Factorization f = factorize(n, budget);
  Int core = f.sign;
  for (const auto& [p, e] : f.factors) {
    if (e % 2) core *= p;
  }
  return core;
}

std::vector<Int> prime_support(const Int& n, const FactorBudget& budget) {
  Factorization f = factorize(n, budget);
  std::vector<Int> out;
  out.reserve(f.factors.size());
  for (const auto& [p, e] : f.factors) out.push_back(p);
  return out;
}

}  // namespace fibrerank
