#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gqv/ints.hpp"

namespace gqv {

using Rat = mpq_class;

/// Polynomial with rational coefficients, used for the envelope bounds that
/// involve powers of log_2(q) or log_3(q).
class LogPoly {
public:
    LogPoly() = default;
    explicit LogPoly(std::vector<Rat> coeffs);
    static LogPoly constant(const Rat& c);
    static LogPoly monomial(const Rat& c, unsigned long deg);

    LogPoly operator+(const LogPoly& o) const;
    LogPoly operator-(const LogPoly& o) const;
    LogPoly operator*(const LogPoly& o) const;
    LogPoly pow(unsigned long e) const;

    Rat eval(const Rat& x) const;
    /// Bounds of the image over x in [lo, hi] with 0 <= lo <= hi
    /// (sign-aware per-term interval arithmetic; valid for any coefficients).
    std::pair<Rat, Rat> eval_interval(const Rat& lo, const Rat& hi) const;

    Rat abs_coeff_sum() const;
    unsigned long degree() const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

private:
    std::vector<Rat> coeffs_;  // coeffs_[i] multiplies x^i
};

/// Decides lhs <= P(log_base(q)) exactly, for q >= 2 and base in {2, 3}.
/// When q is an exact power of the base the comparison is a single rational
/// evaluation; otherwise log_base(q) is irrational and dyadic refinement of
/// floor(2^k log_base q) terminates.
bool le_at_log(const Int& lhs, const LogPoly& poly, std::uint64_t q,
               unsigned base);

}  // namespace gqv
