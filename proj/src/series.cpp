#include "qmatch/series.hpp"

#include <algorithm>
#include <limits>

namespace qmatch {

namespace {
const Int kZero = 0;
}

std::int64_t saturating_add(std::int64_t a, std::int64_t b) {
    if (a >= kUnboundedOrder || b >= kUnboundedOrder) return kUnboundedOrder;
    std::int64_t s = a + b;
    return std::min(s, kUnboundedOrder);
}

ExtractionSpec::ExtractionSpec(std::int64_t a, std::int64_t b)
    : modulus(a), residue(b) {
    if (a < 1) throw Error("extraction modulus must be >= 1");
    if (b < 0) throw Error("extraction residue must be >= 0");
}

void TruncatedSeries::normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        valuation_ = order_;
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        valuation_ += static_cast<std::int64_t>(lead);
    }
}

TruncatedSeries TruncatedSeries::make(std::int64_t valuation, std::vector<Int> coeffs,
                                      std::int64_t order) {
    if (order - valuation != static_cast<std::int64_t>(coeffs.size()))
        throw Error("make: order - valuation must equal the coefficient count");
    TruncatedSeries s(valuation, std::move(coeffs), order);
    s.normalize();
    return s;
}

TruncatedSeries TruncatedSeries::zero(std::int64_t order) {
    return TruncatedSeries(order, {}, order);
}

TruncatedSeries TruncatedSeries::one(std::int64_t order) {
    return monomial(1, 0, order);
}

TruncatedSeries TruncatedSeries::monomial(const Int& c, std::int64_t exponent,
                                          std::int64_t order) {
    if (c == 0 || exponent >= order) return zero(order);
    std::vector<Int> v(static_cast<std::size_t>(order - exponent));
    v[0] = c;
    return TruncatedSeries(exponent, std::move(v), order);
}

TruncatedSeries TruncatedSeries::constant(const Int& c, std::int64_t order) {
    return monomial(c, 0, order);
}

const Int& TruncatedSeries::coefficient(std::int64_t n) const {
    if (n >= order_)
        throw OrderExceededError("coefficient of q^" + std::to_string(n) +
                                 " requested, series truncated at order " +
                                 std::to_string(order_));
    if (n < valuation_) return kZero;
    return coeffs_[static_cast<std::size_t>(n - valuation_)];
}

TruncatedSeries TruncatedSeries::add(const TruncatedSeries& other) const {
    std::int64_t order = std::min(order_, other.order_);
    std::int64_t val = std::min(is_zero() ? order : valuation_,
                                other.is_zero() ? order : other.valuation_);
    val = std::min(val, order);
    std::vector<Int> v(static_cast<std::size_t>(order - val));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        std::int64_t e = valuation_ + static_cast<std::int64_t>(i);
        if (e >= order) break;
        v[static_cast<std::size_t>(e - val)] = coeffs_[i];
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        std::int64_t e = other.valuation_ + static_cast<std::int64_t>(i);
        if (e >= order) break;
        v[static_cast<std::size_t>(e - val)] += other.coeffs_[i];
    }
    return make(val, std::move(v), order);
}

TruncatedSeries TruncatedSeries::sub(const TruncatedSeries& other) const {
    return add(other.scalar_mul(-1));
}

TruncatedSeries TruncatedSeries::scalar_mul(const Int& c) const {
    if (c == 0 || is_zero()) return zero(order_);
    std::vector<Int> v(coeffs_);
    for (auto& x : v) x *= c;
    return TruncatedSeries(valuation_, std::move(v), order_);
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& other) const {
    if (is_zero() || other.is_zero()) {
        // A factor that is zero on its whole window forces a zero product;
        // the result window ends where an unknown coefficient could first
        // contribute.
        std::int64_t o;
        if (is_zero() && other.is_zero())
            o = saturating_add(order_, other.order_);
        else if (is_zero())
            o = saturating_add(order_, other.valuation_);
        else
            o = saturating_add(other.order_, valuation_);
        return zero(o);
    }
    std::int64_t val = valuation_ + other.valuation_;
    std::int64_t order = std::min(saturating_add(order_, other.valuation_),
                                  saturating_add(other.order_, valuation_));
    if (order <= val) return zero(order);
    std::vector<Int> v(static_cast<std::size_t>(order - val));
    // Schoolbook product, skipping zero coefficients of the left factor.
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        std::int64_t ea = valuation_ + static_cast<std::int64_t>(i);
        std::int64_t jmax = std::min<std::int64_t>(
            static_cast<std::int64_t>(other.coeffs_.size()),
            order - ea - other.valuation_);
        const mpz_srcptr ai = coeffs_[i].get_mpz_t();
        for (std::int64_t j = 0; j < jmax; ++j) {
            const Int& bj = other.coeffs_[static_cast<std::size_t>(j)];
            if (bj == 0) continue;
            std::size_t k = static_cast<std::size_t>(ea + other.valuation_ + j - val);
            mpz_addmul(v[k].get_mpz_t(), ai, bj.get_mpz_t());
        }
    }
    return make(val, std::move(v), order);
}

TruncatedSeries TruncatedSeries::invert() const {
    if (is_zero()) throw Error("cannot invert the zero series");
    const Int& lead = coeffs_[0];
    if (lead != 1 && lead != -1)
        throw NonUnitLeadingError("leading coefficient " + lead.get_str() +
                                  " is not +1 or -1");
    // A = q^v * (a0 + a1 q + ...); invert the unit part by the linear
    // recurrence b_n = -a0 * sum_{k>=1} a_k b_{n-k} (a0 = +-1), then shift
    // the valuation to -v.
    std::vector<Int> b(coeffs_.size());
    b[0] = lead;  // 1/lead == lead for +-1
    std::vector<std::size_t> nz;  // nonzero indices k >= 1 of the unit part
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) nz.push_back(k);
    for (std::size_t i = 1; i < b.size(); ++i) {
        Int acc = 0;
        for (std::size_t k : nz) {
            if (k > i) break;
            mpz_addmul(acc.get_mpz_t(), coeffs_[k].get_mpz_t(),
                       b[i - k].get_mpz_t());
        }
        if (lead == 1)
            b[i] = -acc;
        else
            b[i] = acc;
    }
    return make(-valuation_, std::move(b), order_ - 2 * valuation_);
}

TruncatedSeries TruncatedSeries::pow(std::int64_t e) const {
    if (e == 0) return one(order_);
    TruncatedSeries base = e < 0 ? invert() : *this;
    std::uint64_t k = static_cast<std::uint64_t>(e < 0 ? -e : e);
    TruncatedSeries acc = base;
    k -= 1;
    TruncatedSeries sq = base;
    while (k > 0) {
        if (k & 1) acc = acc.mul(sq);
        k >>= 1;
        if (k > 0) sq = sq.mul(sq);
    }
    return acc;
}

TruncatedSeries TruncatedSeries::substitute_power(std::int64_t m) const {
    if (m < 1) throw Error("substitute_power requires m >= 1");
    if (m == 1) return *this;
    std::int64_t order = order_ >= kUnboundedOrder / m ? kUnboundedOrder : order_ * m;
    if (is_zero()) return zero(order);
    std::int64_t val = valuation_ * m;
    std::vector<Int> v(static_cast<std::size_t>(order - val));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[i * static_cast<std::size_t>(m)] = coeffs_[i];
    return TruncatedSeries(val, std::move(v), order);
}

TruncatedSeries TruncatedSeries::alternate_sign() const {
    if (is_zero()) return *this;
    std::vector<Int> v(coeffs_);
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::int64_t e = valuation_ + static_cast<std::int64_t>(i);
        if (e % 2 != 0) v[i] = -v[i];
    }
    return TruncatedSeries(valuation_, std::move(v), order_);
}

TruncatedSeries TruncatedSeries::extract(const ExtractionSpec& spec) const {
    const std::int64_t a = spec.modulus;
    const std::int64_t b = spec.residue;
    std::int64_t order;
    if (order_ >= kUnboundedOrder)
        order = kUnboundedOrder;
    else
        order = std::max<std::int64_t>(0, (order_ - b + a - 1) / a);
    if (order == 0) return zero(0);
    if (is_zero()) return zero(order);
    std::vector<Int> v(static_cast<std::size_t>(order));
    for (std::int64_t n = 0; n < order; ++n) {
        std::int64_t e = a * n + b;
        if (e >= order_) break;
        if (e >= valuation_ && e - valuation_ < static_cast<std::int64_t>(coeffs_.size()))
            v[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(e - valuation_)];
    }
    return make(0, std::move(v), order);
}

TruncatedSeries TruncatedSeries::truncate(std::int64_t new_order) const {
    if (new_order > order_)
        throw Error("truncate cannot extend the window");
    if (new_order == order_) return *this;
    if (is_zero() || new_order <= valuation_) return zero(new_order);
    std::vector<Int> v(coeffs_.begin(),
                       coeffs_.begin() + static_cast<std::ptrdiff_t>(new_order - valuation_));
    return TruncatedSeries(valuation_, std::move(v), new_order);
}

std::vector<std::int64_t> TruncatedSeries::support() const {
    std::vector<std::int64_t> s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) s.push_back(valuation_ + static_cast<std::int64_t>(i));
    return s;
}

VerificationReport equal_to_order(const TruncatedSeries& a,
                                  const TruncatedSeries& b) {
    VerificationReport r;
    std::int64_t order = std::min(a.order(), b.order());
    r.order_used = order;
    std::int64_t lo = std::min(a.is_zero() ? order : a.valuation(),
                               b.is_zero() ? order : b.valuation());
    std::int64_t count = 0;
    for (std::int64_t e = lo; e < order; ++e) {
        ++count;
        if (a.coefficient(e) != b.coefficient(e)) {
            r.first_failure_n = e;
            r.checked_count = count;
            r.passed = false;
            return r;
        }
    }
    r.checked_count = count;
    r.passed = true;
    return r;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a.add(b); }
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) { return a.sub(b); }
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a.mul(b); }
TruncatedSeries scalar_mul(const Int& c, const TruncatedSeries& a) { return a.scalar_mul(c); }
TruncatedSeries invert(const TruncatedSeries& a) { return a.invert(); }
TruncatedSeries pow(const TruncatedSeries& a, std::int64_t e) { return a.pow(e); }
TruncatedSeries substitute_power(const TruncatedSeries& a, std::int64_t m) { return a.substitute_power(m); }
TruncatedSeries alternate_sign(const TruncatedSeries& a) { return a.alternate_sign(); }
TruncatedSeries extract(const TruncatedSeries& a, const ExtractionSpec& spec) { return a.extract(spec); }

}  // namespace qmatch
