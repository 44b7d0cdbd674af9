#pragma once

#include <cstdint>
#include <vector>

#include "qmatch/series.hpp"

namespace qmatch {

// (q^a; q^b)_infinity expanded to order N by multiplying the sparse
// binomial factors (1 - q^(a+jb)) with a+jb < N.
TruncatedSeries pochhammer(std::int64_t a, std::int64_t b, std::int64_t N);

// f_k = (q^k; q^k)_infinity via the pentagonal-number series
// sum_m (-1)^m q^(k*m(3m-1)/2). Independent of pochhammer().
TruncatedSeries euler_f(std::int64_t k, std::int64_t N);

// Ramanujan's theta function f(s1*q^r1, s2*q^r2) by the bilateral sum
// sum_n a^(n(n+1)/2) b^(n(n-1)/2). Requires r1 + r2 >= 1; a single
// exponent may be zero or negative (needed by the phi p-dissection).
TruncatedSeries theta_f(int sign1, std::int64_t r1, int sign2, std::int64_t r2,
                        std::int64_t N);

// phi(q) = f(q, q), psi(q) = f(q, q^3), chi(q) = (-q; q^2)_infinity.
TruncatedSeries phi(std::int64_t N);
TruncatedSeries psi(std::int64_t N);
TruncatedSeries chi(std::int64_t N);

// Rogers-Ramanujan: G = 1/(q,q^4;q^5), H = 1/(q^2,q^3;q^5), R = H/G.
TruncatedSeries rr_G(std::int64_t N);
TruncatedSeries rr_H(std::int64_t N);
TruncatedSeries rr_R(std::int64_t N);

// Ramanujan-Gollnitz-Gordon: S = 1/(q,q^4,q^7;q^8), T = 1/(q^3,q^4,q^5;q^8).
TruncatedSeries rgg_S(std::int64_t N);
TruncatedSeries rgg_T(std::int64_t N);

// Slater: X = (q,q^11,q^12;q^12)/f_1, Y = (q^5,q^7,q^12;q^12)/f_1.
TruncatedSeries slater_X(std::int64_t N);
TruncatedSeries slater_Y(std::int64_t N);

// Cubic theta function a(q) = sum_{j,k} q^(j^2+jk+k^2) by direct lattice
// enumeration.
TruncatedSeries cubic_a(std::int64_t N);

// omega_p = prod over quadratic non-residues b of (q^b;q^p) divided by
// the product over residues a of (q^a;q^p), for an odd prime p.
TruncatedSeries residue_product(std::int64_t p, std::int64_t N);

// prod (q^e;q^modulus) over the numerator list divided by the same over
// the denominator list; all exponents must lie in [1, modulus-1].
TruncatedSeries explicit_product(const std::vector<std::int64_t>& numerator,
                                 const std::vector<std::int64_t>& denominator,
                                 std::int64_t modulus, std::int64_t N);

bool is_prime(std::int64_t n);

}  // namespace qmatch
