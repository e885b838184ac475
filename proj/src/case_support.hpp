#pragma once

// Internal helpers shared by the HS and HC case engines.

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include "gqv/catalog.hpp"
#include "gqv/case_hs.hpp"
#include "gqv/diophantine.hpp"
#include "gqv/gq_params.hpp"
#include "gqv/logcmp.hpp"
#include "gqv/verdict.hpp"

namespace gqv::detail {

inline GroupBounds bounds_for(Mode mode, const GroupFacts& facts) {
    GroupBounds b;
    if (mode == Mode::HS) {
        const HSBounds h = hs_bounds(facts.out_order);
        b = {h.s_max, h.order_max, h.order_max_relaxed};
    } else {
        const HCBounds h = hc_bounds(facts.out_order);
        b = {h.s_max, h.order_sq_max, h.order_max_relaxed};
    }
    return b;
}

inline CaseVerdict make_verdict(Mode mode, const GroupFacts& facts,
                                std::string label) {
    CaseVerdict v;
    v.group = facts;
    v.bounds = bounds_for(mode, facts);
    v.paper_case_label = std::move(label);
    return v;
}

inline bool relaxed_fails(Mode, const CaseVerdict& v) {
    return v.group.order > v.bounds.order_max_relaxed;
}

inline bool sharp_fails(Mode mode, const CaseVerdict& v) {
    if (mode == Mode::HS) return v.group.order > v.bounds.order_max;
    return v.group.order * v.group.order > v.bounds.order_max;
}

inline void route_not_simple(CaseVerdict& v) {
    if (is_simple(v.group.id))
        throw VerificationFailure("expected non-simple: " + to_string(v.group.id));
    v.eliminated_by = Elimination::NotSimple;
}

inline void route_duplicate(CaseVerdict& v) {
    const GroupId canon = canonical(v.group.id);
    if (canon == v.group.id)
        throw VerificationFailure("expected exceptional isomorphism: " +
                                  to_string(v.group.id));
    if (order(canon) != v.group.order)
        throw VerificationFailure("isomorph order mismatch: " +
                                  to_string(v.group.id));
    v.eliminated_by = Elimination::Duplicate;
    v.duplicate_of = canon;
}

inline void route_bound(Mode mode, CaseVerdict& v, Elimination which) {
    const bool fails = which == Elimination::BoundC ? sharp_fails(mode, v)
                                                    : relaxed_fails(mode, v);
    if (!fails)
        throw VerificationFailure("bound unexpectedly holds for " +
                                  to_string(v.group.id));
    v.eliminated_by = which;
}

/// Runs the solver; NoSolution on an empty witness list, Survivor otherwise.
inline void route_solver(Mode mode, CaseVerdict& v) {
    if (mode == Mode::HS) {
        v.hs_witnesses = solve_hs(v.group.order, v.bounds.s_max);
        v.eliminated_by = v.hs_witnesses.empty() ? Elimination::NoSolution
                                                 : Elimination::Survivor;
    } else {
        v.hc_witnesses = solve_hc(v.group.order, v.bounds.s_max);
        v.eliminated_by = v.hc_witnesses.empty() ? Elimination::NoSolution
                                                 : Elimination::Survivor;
    }
}

// ---------------------------------------------------------------------
// Scans over field parameters.

/// One inequality of the form  lhs(q) <= P_q(log_base q)  scanned over prime
/// powers q, with a certified horizon beyond which every q fails:
/// lhs(q) * tail_c >= q^tail_deg for all valid q (re-asserted pointwise),
/// P_q(x) <= rhs_abs_sum * q^rhs_qdeg * x^xdeg for x >= 1, and
/// (log2 q)^2 <= q for q >= 16.
struct EnvelopeScan {
    std::function<bool(std::uint64_t)> valid =
        [](std::uint64_t) { return true; };            // extra q filter
    std::function<Int(std::uint64_t)> lhs;
    std::function<LogPoly(std::uint64_t)> rhs;
    unsigned base = 2;
    unsigned long tail_deg = 0;
    unsigned long tail_c = 1;
    unsigned long rhs_qdeg = 0;
    Int rhs_abs_sum;
    unsigned long xdeg = 4;
};

/// All prime powers q at which the inequality holds. Throws on tail or
/// monotonicity certificate violations.
inline std::vector<std::uint64_t> envelope_holders(const EnvelopeScan& scan) {
    const unsigned long d = (scan.xdeg + 1) / 2;
    if (scan.tail_deg <= scan.rhs_qdeg + d)
        throw VerificationFailure("envelope tail certificate impossible");
    Int h = iroot(Int(scan.tail_c) * scan.rhs_abs_sum,
                  scan.tail_deg - scan.rhs_qdeg - d) +
            1;
    if (h < 16) h = 16;
    if (!h.fits_ulong_p())
        throw VerificationFailure("envelope horizon too large");
    const std::uint64_t horizon = h.get_ui();

    std::vector<std::uint64_t> holders;
    Int last_lhs = -1;
    for (std::uint64_t q = 2; q <= horizon; ++q) {
        if (!as_prime_power(q) || !scan.valid(q)) continue;
        const Int l = scan.lhs(q);
        if (l <= last_lhs)
            throw VerificationFailure("envelope lhs not increasing at q=" +
                                      std::to_string(q));
        last_lhs = l;
        if (l * scan.tail_c < ipow(Int(q), scan.tail_deg))
            throw VerificationFailure("envelope tail bound violated at q=" +
                                      std::to_string(q));
        if (le_at_log(l, scan.rhs(q), q, scan.base)) holders.push_back(q);
    }
    return holders;
}

/// Integer inequality scanned over f = 1, 2, ...; holds(f) must fail for
/// every f past the returned set (first failure plus a margin of 2 is
/// verified; the scan window is capped at 64).
inline std::vector<unsigned long> exponent_holders(
    const std::function<bool(unsigned long)>& holds) {
    std::vector<unsigned long> out;
    unsigned long fails = 0;
    for (unsigned long f = 1; f <= 64 && fails < 3; ++f) {
        if (holds(f)) {
            if (fails > 0)
                throw VerificationFailure("exponent scan not monotone");
            out.push_back(f);
        } else {
            ++fails;
        }
    }
    return out;
}

inline std::string join_u64(const std::vector<std::uint64_t>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

inline void freeze_cutoff(CaseRecord& rec, std::vector<std::string> derived,
                          std::vector<std::string> expected) {
    rec.cutoff_derived = std::move(derived);
    rec.cutoff_expected = std::move(expected);
    rec.cutoff_matches = rec.cutoff_derived == rec.cutoff_expected;
    if (!rec.cutoff_matches)
        throw VerificationFailure("re-derived cutoff for '" + rec.label +
                                  "' does not match the documented one");
}

inline std::vector<std::string> strings_of_u64(
    const std::vector<std::uint64_t>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (auto x : v) out.push_back(std::to_string(x));
    return out;
}

/// Summary and global assertions shared by both runs.
inline void finish_run(RunResult& run) {
    run.summary = RunSummary{};
    for (const auto& rec : run.cases) {
        for (const auto& v : rec.verdicts) {
            ++run.summary.candidates_examined;
            const bool has_witnesses =
                !v.hs_witnesses.empty() || !v.hc_witnesses.empty();
            if (has_witnesses) ++run.summary.survivors_pre_elimination;
            if (v.eliminated_by == Elimination::Survivor)
                ++run.summary.survivors_post_elimination;
            if (v.eliminated_by == Elimination::NoSolution && has_witnesses)
                throw VerificationFailure("NoSolution verdict with witnesses: " +
                                          to_string(v.group.id));
        }
    }
    // Candidates that reached bounds or the solver are deduplicated under
    // the exceptional isomorphisms.
    std::vector<std::string> canon;
    for (const auto* v : run.verdicts()) {
        if (v->eliminated_by == Elimination::Duplicate ||
            v->eliminated_by == Elimination::NotSimple)
            continue;
        canon.push_back(to_string(v->group.canonical));
    }
    std::sort(canon.begin(), canon.end());
    if (std::adjacent_find(canon.begin(), canon.end()) != canon.end())
        throw VerificationFailure("two verdicts share a canonical id");
}

/// Evaluates independent case thunks, optionally jobs at a time; results
/// keep the input order regardless of scheduling.
template <class Out>
std::vector<Out> run_cases(const std::vector<std::function<Out()>>& thunks,
                           unsigned jobs) {
    std::vector<Out> outs;
    outs.reserve(thunks.size());
    if (jobs <= 1) {
        for (const auto& t : thunks) outs.push_back(t());
        return outs;
    }
    std::vector<std::future<Out>> futs(thunks.size());
    std::size_t launched = 0, collected = 0;
    while (collected < thunks.size()) {
        const std::size_t batch = std::min(thunks.size(), launched + jobs);
        for (; launched < batch; ++launched)
            futs[launched] = std::async(std::launch::async, thunks[launched]);
        for (; collected < launched; ++collected)
            outs.push_back(futs[collected].get());
    }
    return outs;
}

/// Checks that every canonical simple group within the relaxed poly-out
/// bound received a verdict (the enumeration module is the independent
/// coverage oracle).
inline void assert_coverage(const RunResult& run, const Int& c,
                            const std::vector<Family>& family_filter) {
    std::vector<std::string> have;
    for (const auto* v : run.verdicts())
        have.push_back(to_string(v->group.canonical));
    std::sort(have.begin(), have.end());
    for (const auto& facts :
         enumerate_under(order_leq_poly_out(c, 4), family_filter)) {
        const std::string name = to_string(facts.canonical);
        if (!std::binary_search(have.begin(), have.end(), name))
            throw VerificationFailure("coverage gap: " + name +
                                      " passes the relaxed bound but has no verdict");
    }
}

}  // namespace gqv::detail
