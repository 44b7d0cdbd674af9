#include "qmatch/qfactory.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace qmatch {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

TruncatedSeries pochhammer(std::int64_t a, std::int64_t b, std::int64_t N) {
    if (a < 1 || b < 1) throw Error("pochhammer requires a >= 1 and b >= 1");
    if (N <= 0) return TruncatedSeries::zero(std::max<std::int64_t>(N, 0));
    std::vector<Int> c(static_cast<std::size_t>(N));
    c[0] = 1;
    for (std::int64_t e = a; e < N; e += b) {
        // multiply by (1 - q^e) in place
        for (std::int64_t i = N - 1 - e; i >= 0; --i) {
            if (c[static_cast<std::size_t>(i)] != 0)
                c[static_cast<std::size_t>(i + e)] -= c[static_cast<std::size_t>(i)];
        }
    }
    return TruncatedSeries::make(0, std::move(c), N);
}

TruncatedSeries euler_f(std::int64_t k, std::int64_t N) {
    if (k < 1) throw Error("euler_f requires k >= 1");
    if (N <= 0) return TruncatedSeries::zero(std::max<std::int64_t>(N, 0));
    std::vector<Int> c(static_cast<std::size_t>(N));
    for (std::int64_t m = 0;; ++m) {
        std::int64_t e1 = k * m * (3 * m - 1) / 2;
        std::int64_t e2 = k * m * (3 * m + 1) / 2;
        if (e1 >= N && e2 >= N) break;
        int sign = (m % 2 == 0) ? 1 : -1;
        if (e1 < N) c[static_cast<std::size_t>(e1)] += sign;
        if (m > 0 && e2 < N) c[static_cast<std::size_t>(e2)] += sign;
    }
    return TruncatedSeries::make(0, std::move(c), N);
}

TruncatedSeries theta_f(int sign1, std::int64_t r1, int sign2, std::int64_t r2,
                        std::int64_t N) {
    if (sign1 * sign1 != 1 || sign2 * sign2 != 1)
        throw Error("theta_f signs must be +1 or -1");
    if (r1 + r2 < 1) throw Error("theta_f requires r1 + r2 >= 1");
    // exponent(n) = (r1+r2) n^2 / 2 + (r1-r2) n / 2
    const std::int64_t s = r1 + r2, d = r1 - r2;
    std::int64_t nmax = static_cast<std::int64_t>(
        std::sqrt(8.0 * static_cast<double>(std::max<std::int64_t>(N, 1)) /
                  static_cast<double>(s))) +
        std::llabs(d) + 4;
    std::map<std::int64_t, Int> terms;
    std::int64_t lo = 0;
    for (std::int64_t n = -nmax; n <= nmax; ++n) {
        std::int64_t t1 = n * (n + 1) / 2;  // always >= 0
        std::int64_t t2 = n * (n - 1) / 2;  // always >= 0
        std::int64_t e = r1 * t1 + r2 * t2;
        if (e >= N) continue;
        int sign = ((sign1 < 0 && t1 % 2 != 0) ? -1 : 1) *
                   ((sign2 < 0 && t2 % 2 != 0) ? -1 : 1);
        terms[e] += sign;
        lo = std::min(lo, e);
    }
    std::vector<Int> c(static_cast<std::size_t>(N - lo));
    for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - lo)] = v;
    return TruncatedSeries::make(lo, std::move(c), N);
}

TruncatedSeries phi(std::int64_t N) { return theta_f(1, 1, 1, 1, N); }
TruncatedSeries psi(std::int64_t N) { return theta_f(1, 1, 1, 3, N); }

TruncatedSeries chi(std::int64_t N) {
    // (-q; q^2)_infinity = (q; q^2)_infinity with q -> -q
    return pochhammer(1, 2, N).alternate_sign();
}

TruncatedSeries rr_G(std::int64_t N) {
    return pochhammer(1, 5, N).mul(pochhammer(4, 5, N)).invert();
}

TruncatedSeries rr_H(std::int64_t N) {
    return pochhammer(2, 5, N).mul(pochhammer(3, 5, N)).invert();
}

TruncatedSeries rr_R(std::int64_t N) {
    return pochhammer(1, 5, N).mul(pochhammer(4, 5, N))
        .mul(pochhammer(2, 5, N).mul(pochhammer(3, 5, N)).invert());
}

TruncatedSeries rgg_S(std::int64_t N) {
    return pochhammer(1, 8, N).mul(pochhammer(4, 8, N)).mul(pochhammer(7, 8, N)).invert();
}

TruncatedSeries rgg_T(std::int64_t N) {
    return pochhammer(3, 8, N).mul(pochhammer(4, 8, N)).mul(pochhammer(5, 8, N)).invert();
}

TruncatedSeries slater_X(std::int64_t N) {
    return pochhammer(1, 12, N).mul(pochhammer(11, 12, N)).mul(pochhammer(12, 12, N))
        .mul(euler_f(1, N).invert());
}

TruncatedSeries slater_Y(std::int64_t N) {
    return pochhammer(5, 12, N).mul(pochhammer(7, 12, N)).mul(pochhammer(12, 12, N))
        .mul(euler_f(1, N).invert());
}

TruncatedSeries cubic_a(std::int64_t N) {
    if (N <= 0) return TruncatedSeries::zero(std::max<std::int64_t>(N, 0));
    std::vector<Int> c(static_cast<std::size_t>(N));
    std::int64_t bound = static_cast<std::int64_t>(
        std::ceil(std::sqrt(4.0 * static_cast<double>(N) / 3.0))) + 1;
    for (std::int64_t j = -bound; j <= bound; ++j)
        for (std::int64_t k = -bound; k <= bound; ++k) {
            std::int64_t e = j * j + j * k + k * k;
            if (e < N) c[static_cast<std::size_t>(e)] += 1;
        }
    return TruncatedSeries::make(0, std::move(c), N);
}

TruncatedSeries residue_product(std::int64_t p, std::int64_t N) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw Error("residue_product requires an odd prime");
    std::vector<bool> residue(static_cast<std::size_t>(p), false);
    for (std::int64_t x = 1; x < p; ++x)
        residue[static_cast<std::size_t>(x * x % p)] = true;
    std::vector<std::int64_t> num, den;
    for (std::int64_t e = 1; e < p; ++e)
        (residue[static_cast<std::size_t>(e)] ? den : num).push_back(e);
    return explicit_product(num, den, p, N);
}

TruncatedSeries explicit_product(const std::vector<std::int64_t>& numerator,
                                 const std::vector<std::int64_t>& denominator,
                                 std::int64_t modulus, std::int64_t N) {
    if (modulus < 1) throw Error("explicit_product requires modulus >= 1");
    for (auto e : numerator)
        if (e < 1 || e >= modulus) throw Error("numerator exponent out of range");
    for (auto e : denominator)
        if (e < 1 || e >= modulus) throw Error("denominator exponent out of range");
    TruncatedSeries r = TruncatedSeries::one(N);
    for (auto e : numerator) r = r.mul(pochhammer(e, modulus, N));
    if (!denominator.empty()) {
        TruncatedSeries d = TruncatedSeries::one(N);
        for (auto e : denominator) d = d.mul(pochhammer(e, modulus, N));
        r = r.mul(d.invert());
    }
    return r;
}

}  // namespace qmatch
