#pragma once

#include <vector>

#include "gqv/ints.hpp"

namespace gqv {

/// Solution of |T| = (s+1)^2 (s t' + 1) with 1 <= t' <= s-1.
struct HSWitness {
    Int s;
    Int t_prime;
    bool operator==(const HSWitness&) const = default;
};

/// Solution of |T| = (s+1) y with 3 <= y^2 <= s(s-1)+1 and s | y^2 - 1.
struct HCWitness {
    Int s;
    Int y;
    bool operator==(const HCWitness&) const = default;
};

/// All (s, t') with 2 <= s <= s_max, (s+1)^2 | order and
/// t' = (order/(s+1)^2 - 1)/s an integer in [1, s-1]; sorted by s.
/// Divisor-based, O(s_max) per call.
std::vector<HSWitness> solve_hs(const Int& order, const Int& s_max);

/// All (s, y) with 2 <= s <= s_max, (s+1) | order, y = order/(s+1),
/// 3 <= y^2 <= s(s-1)+1 and s | y^2 - 1; sorted by s.
std::vector<HCWitness> solve_hc(const Int& order, const Int& s_max);

/// Same contracts as solve_hs / solve_hc, computed by exhaustive double
/// loops over (s, t') resp. (s, y) with no divisor shortcuts. Test oracle;
/// kept independent of the solver code paths.
std::vector<HSWitness> oracle_hs(const Int& order, const Int& s_max);
std::vector<HCWitness> oracle_hc(const Int& order, const Int& s_max);

}  // namespace gqv
