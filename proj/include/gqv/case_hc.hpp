#pragma once

#include "gqv/verdict.hpp"

namespace gqv {

/// Per-group pipeline for the holomorph-compound (k = 2) case: simplicity,
/// duplicate skip, relaxed bound 2^8 |Out|^4 on |T|, sharp bound on |T|^2,
/// then the (s+1)y solver under s_max = 16|Out|^2 - 3.
CaseVerdict verify_hc_group(const GroupFacts& facts);

/// Applies the flag-transitivity divisibility condition to a surviving
/// witness: t' = (y^2-1)/s, t = t'(s+1)+1, then t+1 | 2|T|^2|Out(T)|^2.
/// Throws VerificationFailure if the condition holds (it never does).
CaseVerdict eliminate_survivor(const GroupFacts& facts, const HCWitness& w);

/// Full holomorph-compound (k = 2) case analysis. Asserts the global
/// pre-elimination witness set is exactly (Alt(6), 19, 18) and
/// (A(2;2), 13, 12), then eliminates both via the divisibility condition.
/// Also asserts that every group the HS run eliminated through its relaxed
/// bound fails the HC relaxed bound as well.
RunResult verify_hc_all(const std::vector<Family>& family_filter = {},
                        unsigned jobs = 1);

}  // namespace gqv
