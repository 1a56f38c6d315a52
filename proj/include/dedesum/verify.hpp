#ifndef DEDESUM_VERIFY_HPP
#define DEDESUM_VERIFY_HPP

#include <cstdint>
#include <string>

namespace dedesum::verify {

struct Result {
  std::string suite;
  long long checks = 0;
  long long violations = 0;
  std::string first_counterexample;  // full inputs of the first failure

  bool ok() const { return violations == 0; }
};

// Dedekind reciprocity s(c,d) + s(d,c) = -1/4 + (c^2+d^2+1)/(12cd),
// exhaustive for d <= min(max_d, 100) plus `samples` random pairs d <= max_d.
Result reciprocity(long long max_d, long long samples = 10'000,
                   std::uint64_t seed = 0x5eed);

// S(chi, f, d) = 0 for every primitive chi mod f <= max_f and every
// proper divisor d of f.
Result vanishing(long long max_f);

// dedekind_sum == sawtooth oracle exactly, == cotangent oracle within
// d * 2^-40, and 6 d s(c,d) integral, for all coprime pairs d <= max_d.
Result oracle_equivalence(long long max_d);

// For primes 3 < p = 3 mod 4, p <= max_p: sum chi(b) s(b,p) = h^2
// = 2 S(H_2, p) and h odd.
Result parity(long long max_p);

// |(f/pi^2) L_float(chi)^2 - float(sum chi(n)s(n,f))| < tol for all odd
// primitive chi with 2 < f <= max_f.
Result l1sq_agreement(long long max_f, double tol = 1e-8);

}  // namespace dedesum::verify

#endif
