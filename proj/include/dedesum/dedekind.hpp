#ifndef DEDESUM_DEDEKIND_HPP
#define DEDESUM_DEDEKIND_HPP

#include "dedesum/characters.hpp"
#include "dedesum/cyclotomic.hpp"

namespace dedesum {

// Exact Dedekind sum s(c,d) via the reciprocity recursion
//   s(c,d) + s(d,c) = -1/4 + (c^2 + d^2 + 1)/(12cd)
// in O(log d) arithmetic steps. Requires d >= 1 and gcd(c,d) = 1;
// s(c,1) = 0, and c is reduced mod d first.
Rational dedekind_sum(long long c, long long d);

// O(d) sawtooth oracle: sum_{n=1}^{d-1} ((n/d)) ((nc/d)). Independent of
// the recursion; same domain.
Rational dedekind_sum_sawtooth(long long c, long long d);

// Floating cotangent evaluation (1/4d) sum cot(pi n/d) cot(pi n c/d),
// accumulated in extended precision with symmetric argument reduction.
// Requires d >= 2. Agrees with the exact value within d * 2^-40.
double dedekind_sum_cotangent(long long c, long long d);

// sum of s(c,d) over 1 <= c < d with gcd(c,d) = 1; always 0 by oddness.
Rational full_sum(long long d);

// S(H_2, p): sum of s(c,p) over the quadratic residues c mod p, for
// prime p = 3 mod 4, p > 3.
Rational residue_class_sum(long long p);

// S(chi, f, d) = sum_{b in (Z/fZ)*} chi(b) s(b,d), with f = chi's modulus
// and d | f. Zero whenever chi is primitive and d < f.
Cyclotomic character_weighted_sum(const DirichletCharacter& chi, long long d);

}  // namespace dedesum

#endif
