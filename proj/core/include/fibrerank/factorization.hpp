#pragma once

#include <utility>
#include <vector>

#include "fibrerank/rational.hpp"

namespace fibrerank {

// Effort bound for factorize: trial division up to trial_limit, then Brent's
// rho with a global iteration allowance. Exceeding the budget is an explicit
// error, never a silently incomplete answer.
struct FactorBudget {
  unsigned long trial_limit = 1'000'000;
  unsigned long rho_iterations = 10'000'000;
};

// Factorization budget exhausted; carries the unfactored cofactor so the
// caller can report or skip.
class BudgetError : public Error {
 public:
  explicit BudgetError(Int cofactor)
      : Error("factorization budget exceeded; unfactored cofactor " + cofactor.get_str()),
        cofactor_(std::move(cofactor)) {}
  const Int& cofactor() const { return cofactor_; }

 private:
  Int cofactor_;
};

struct Factorization {
  int sign = 1;                                   // +1 or -1
  std::vector<std::pair<Int, unsigned>> factors;  // strictly increasing primes

  Int value() const;
  bool divides_some_prime(const Int& p) const;
};

// Complete factorization of n != 0 within the budget.
Factorization factorize(const Int& n, const FactorBudget& budget = {});

// sign(n) * product of primes with odd exponent.
Int squarefree_core(const Int& n, const FactorBudget& budget = {});

// Sorted distinct primes dividing |n|, n != 0.
std::vector<Int> prime_support(const Int& n, const FactorBudget& budget = {});

}  // namespace fibrerank
