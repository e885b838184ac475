#include "gqv/logcmp.hpp"

#include <optional>
#include <stdexcept>

namespace gqv {

LogPoly::LogPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

LogPoly LogPoly::constant(const Rat& c) { return LogPoly({c}); }

LogPoly LogPoly::monomial(const Rat& c, unsigned long deg) {
    std::vector<Rat> v(deg + 1, Rat(0));
    v[deg] = c;
    return LogPoly(std::move(v));
}

LogPoly LogPoly::operator+(const LogPoly& o) const {
    std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return LogPoly(std::move(v));
}

LogPoly LogPoly::operator-(const LogPoly& o) const {
    std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
    return LogPoly(std::move(v));
}

LogPoly LogPoly::operator*(const LogPoly& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return LogPoly();
    std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return LogPoly(std::move(v));
}

LogPoly LogPoly::pow(unsigned long e) const {
    LogPoly r = constant(1);
    for (unsigned long i = 0; i < e; ++i) r = r * *this;
    return r;
}

Rat LogPoly::eval(const Rat& x) const {
    Rat r(0);
    for (size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
}

std::pair<Rat, Rat> LogPoly::eval_interval(const Rat& lo, const Rat& hi) const {
    if (lo < 0 || hi < lo)
        throw std::invalid_argument("eval_interval requires 0 <= lo <= hi");
    Rat min(0), max(0);
    Rat lo_pow(1), hi_pow(1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) {
            lo_pow *= lo;
            hi_pow *= hi;
        }
        const Rat& c = coeffs_[i];
        if (c >= 0) {
            min += c * lo_pow;
            max += c * hi_pow;
        } else {
            min += c * hi_pow;
            max += c * lo_pow;
        }
    }
    return {min, max};
}

Rat LogPoly::abs_coeff_sum() const {
    Rat s(0);
    for (const auto& c : coeffs_) s += abs(c);
    return s;
}

unsigned long LogPoly::degree() const {
    return coeffs_.empty() ? 0 : coeffs_.size() - 1;
}

namespace {

std::optional<unsigned long> exact_power_of(std::uint64_t q, unsigned base) {
    unsigned long e = 0;
    std::uint64_t m = q;
    while (m % base == 0) {
        m /= base;
        ++e;
    }
    if (m == 1) return e;
    return std::nullopt;
}

// floor(log_base N) for N >= 1.
unsigned long floor_log_base(const Int& n, unsigned base) {
    if (base == 2) return bit_length(n) - 1;
    unsigned long d = mpz_sizeinbase(n.get_mpz_t(), static_cast<int>(base));
    // sizeinbase is exact or one too big
    if (d >= 1 && ipow(Int(base), d - 1) > n) --d;
    return d - 1;
}

}  // namespace

bool le_at_log(const Int& lhs, const LogPoly& poly, std::uint64_t q,
               unsigned base) {
    if (q < 2 || (base != 2 && base != 3))
        throw std::invalid_argument("le_at_log requires q >= 2, base in {2,3}");
    if (auto e = exact_power_of(q, base)) {
        return Rat(lhs) <= poly.eval(Rat(*e));
    }
    // log_base(q) is irrational here, so dyadic refinement terminates.
    for (unsigned long k = 6; k <= 40; k += 6) {
        const Int n = ipow(Int(q), 1ul << k);
        const unsigned long a = floor_log_base(n, base);
        const Rat scale{ipow(Int(2), k)};
        const Rat lo = Rat(a) / scale;
        const Rat hi = Rat(a + 1) / scale;
        auto [pmin, pmax] = poly.eval_interval(lo, hi);
        const Rat l(lhs);
        if (l <= pmin) return true;
        if (l > pmax) return false;
    }
    throw std::logic_error("le_at_log: precision cap exceeded");
}

}  // namespace gqv
