#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gqv/group_id.hpp"
#include "gqv/ints.hpp"

namespace gqv {

/// Exact facts about one group: order, |Out|, simplicity, and the canonical
/// representative under the exceptional isomorphisms used by the analysis.
struct GroupFacts {
    GroupId id;
    Int order;
    Int out_order;
    bool is_simple = false;
    GroupId canonical;
};

/// Exact order per the standard formulas (n!/2 for Alt, table values for
/// sporadics, the Lie-type product formulas otherwise). Valid ids only.
Int order(const GroupId& id);

/// |Out(T)| per the standard formulas, including the D_n piecewise formula,
/// |Out| = 2n+1 for the Suzuki and Ree families, and Alt(6) -> 4.
Int out_order(const GroupId& id);

bool is_simple(const GroupId& id);

/// Canonical representative under the exceptional isomorphisms:
///   A(1;4), A(1;5) -> Alt(5); A(1;9), B(2;2)' -> Alt(6); A(3;2) -> Alt(8);
///   A(1;7) -> A(2;2); B(2;3) -> 2A(3;q2=4); 2G2(3)' -> A(1;8);
///   G2(2)' -> 2A(2;q2=9); and B(n;q) -> C(n;q) for n >= 3, q even.
/// Identity on everything else; idempotent.
GroupId canonical(const GroupId& id);

GroupFacts classify(const GroupId& id);

/// E6/E7/E8/F4 all satisfy |T| >= |F4(q)| >= q^52/2^4; the case analysis
/// uses this lower bound rather than the exact orders.
Int exceptional_order_lower_bound(std::uint64_t q);

/// Enumeration bound: order <= N, or order <= c * out^e.
struct EnumBound {
    enum class Kind { OrderLeq, OrderLeqPolyOut } kind = Kind::OrderLeq;
    Int n;       // OrderLeq
    Int c;       // OrderLeqPolyOut
    unsigned long e = 0;
};

EnumBound order_leq(Int n);
EnumBound order_leq_poly_out(Int c, unsigned long e);

/// Every canonical finite simple group satisfying the bound, exactly once,
/// sorted by (order, name). Per-family scans proceed upward in rank and
/// field size and terminate through the monotonicity cutoffs; the strict
/// growth of the order in each parameter is asserted during the scan.
/// An optional family filter restricts the scan.
std::vector<GroupFacts> enumerate_under(
    const EnumBound& bound, const std::vector<Family>& families = {});

/// All 26 sporadic groups.
const std::vector<GroupFacts>& sporadic_facts();

/// Thrown when an enumeration-time consistency assertion fails (would
/// indicate a defect in the catalog, not in the theorem).
struct EnumerationError : std::logic_error {
    using std::logic_error::logic_error;
};

namespace scan {

/// Prime powers p^f in increasing order: 2, 3, 4, 5, 7, 8, 9, ...
/// Calls visit(value, p, f) while value <= limit.
void prime_powers_upto(std::uint64_t limit,
                       const std::function<void(std::uint64_t, std::uint64_t,
                                                unsigned long)>& visit);

/// All field parameters p^f (valid ids, including the non-simple parameter
/// points) of one family and rank with order <= c * out_order^4, in
/// increasing order. The scan horizon is certified by the family's growth
/// bounds; order growth is asserted along the way.
std::vector<std::uint64_t> field_values_with_poly_bound(Family fam,
                                                        unsigned long rank,
                                                        const Int& c);

}  // namespace scan

}  // namespace gqv
