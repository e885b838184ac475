#include "gqv/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace gqv {

namespace {

struct SporadicEntry {
    const char* name;
    const char* order;
    unsigned long out;
};

// Orders and outer automorphism group orders of the 26 sporadic groups,
// standard table values.
const std::array<SporadicEntry, 26> kSporadics = {{
    {"M11", "7920", 1},
    {"M12", "95040", 2},
    {"M22", "443520", 2},
    {"M23", "10200960", 1},
    {"M24", "244823040", 1},
    {"J1", "175560", 1},
    {"J2", "604800", 2},
    {"J3", "50232960", 2},
    {"J4", "86775571046077562880", 1},
    {"Co1", "4157776806543360000", 1},
    {"Co2", "42305421312000", 1},
    {"Co3", "495766656000", 1},
    {"Fi22", "64561751654400", 2},
    {"Fi23", "4089470473293004800", 1},
    {"Fi24'", "1255205709190661721292800", 2},
    {"HS", "44352000", 2},
    {"McL", "898128000", 2},
    {"He", "4030387200", 2},
    {"Ru", "145926144000", 1},
    {"Suz", "448345497600", 2},
    {"ON", "460815505920", 2},
    {"HN", "273030912000000", 2},
    {"Ly", "51765179004000000", 1},
    {"Th", "90745943887872000", 1},
    {"B", "4154781481226426191177580544000000", 1},
    {"M", "808017424794512875886459904961710757005754368000000000", 1},
}};

const SporadicEntry& sporadic_entry(const std::string& name) {
    for (const auto& e : kSporadics)
        if (name == e.name) return e;
    throw ParameterError("unknown sporadic name '" + name + "'");
}

Int gcd_u(unsigned long a, const Int& b) { return igcd(Int(a), b); }

// q^e as Int from a u64 q.
Int qp(std::uint64_t q, unsigned long e) { return ipow(Int(q), e); }

}  // namespace

Int exceptional_order_lower_bound(std::uint64_t q) {
    return qp(q, 52) / 16;
}

Int order(const GroupId& id) {
    validate(id);
    const std::uint64_t q = id.family == Family::Alt || id.family == Family::Sporadic ||
                                    id.family == Family::DerivedVariant
                                ? 0
                                : field_q(id);
    switch (id.family) {
        case Family::Alt:
            return factorial(id.n) / 2;
        case Family::Sporadic:
            return Int(sporadic_entry(id.sporadic_name).order);
        case Family::A: {
            Int num = qp(q, id.n * (id.n + 1) / 2);
            for (unsigned long i = 1; i <= id.n; ++i) num *= qp(q, i + 1) - 1;
            return exact_div(num, gcd_u(id.n + 1, Int(q) - 1));
        }
        case Family::TwoA: {
            Int num = qp(q, id.n * (id.n + 1) / 2);
            for (unsigned long i = 1; i <= id.n; ++i) {
                // q^{i+1} - (-1)^{i+1}: minus for even i+1, plus for odd.
                num *= qp(q, i + 1) - ((i + 1) % 2 == 0 ? 1 : -1);
            }
            return exact_div(num, gcd_u(id.n + 1, Int(q) + 1));
        }
        case Family::B:
        case Family::C: {
            Int num = qp(q, id.n * id.n);
            for (unsigned long i = 1; i <= id.n; ++i) num *= qp(q, 2 * i) - 1;
            return exact_div(num, gcd_u(2, Int(q) - 1));
        }
        case Family::D: {
            Int num = qp(q, id.n * (id.n - 1)) * (qp(q, id.n) - 1);
            for (unsigned long i = 1; i + 1 <= id.n; ++i) num *= qp(q, 2 * i) - 1;
            return exact_div(num, gcd_u(4, qp(q, id.n) - 1));
        }
        case Family::TwoD: {
            Int num = qp(q, id.n * (id.n - 1)) * (qp(q, id.n) + 1);
            for (unsigned long i = 1; i + 1 <= id.n; ++i) num *= qp(q, 2 * i) - 1;
            return exact_div(num, gcd_u(4, qp(q, id.n) + 1));
        }
        case Family::E6: {
            Int num = qp(q, 36) * (qp(q, 12) - 1) * (qp(q, 9) - 1) * (qp(q, 8) - 1) *
                      (qp(q, 6) - 1) * (qp(q, 5) - 1) * (qp(q, 2) - 1);
            return exact_div(num, gcd_u(3, Int(q) - 1));
        }
        case Family::E7: {
            Int num = qp(q, 63) * (qp(q, 18) - 1) * (qp(q, 14) - 1) * (qp(q, 12) - 1) *
                      (qp(q, 10) - 1) * (qp(q, 8) - 1) * (qp(q, 6) - 1) * (qp(q, 2) - 1);
            return exact_div(num, gcd_u(2, Int(q) - 1));
        }
        case Family::E8:
            return qp(q, 120) * (qp(q, 30) - 1) * (qp(q, 24) - 1) * (qp(q, 20) - 1) *
                   (qp(q, 18) - 1) * (qp(q, 14) - 1) * (qp(q, 12) - 1) * (qp(q, 8) - 1) *
                   (qp(q, 2) - 1);
        case Family::TwoE6: {
            Int num = qp(q, 36) * (qp(q, 12) - 1) * (qp(q, 9) + 1) * (qp(q, 8) - 1) *
                      (qp(q, 6) - 1) * (qp(q, 5) + 1) * (qp(q, 2) - 1);
            return exact_div(num, gcd_u(3, Int(q) + 1));
        }
        case Family::F4:
            return qp(q, 24) * (qp(q, 12) - 1) * (qp(q, 8) - 1) * (qp(q, 6) - 1) *
                   (qp(q, 2) - 1);
        case Family::ThreeD4:
            return qp(q, 12) * (qp(q, 8) + qp(q, 4) + 1) * (qp(q, 6) - 1) *
                   (qp(q, 2) - 1);
        case Family::G2:
            return qp(q, 6) * (qp(q, 6) - 1) * (qp(q, 2) - 1);
        case Family::TwoB2:
            return qp(q, 2) * (qp(q, 2) + 1) * (Int(q) - 1);
        case Family::TwoG2:
            return qp(q, 3) * (qp(q, 3) + 1) * (Int(q) - 1);
        case Family::TwoF4:
            return qp(q, 12) * (qp(q, 6) + 1) * (qp(q, 4) - 1) * (qp(q, 3) + 1) *
                   (Int(q) - 1);
        case Family::DerivedVariant: {
            // Index of the derived subgroup in the four named parameter points.
            const Int base = order(derived_base_id(id));
            switch (id.derived_base) {
                case kDerivedTwoF4_2: return base / 2;
                case kDerivedG2_2: return base / 2;
                case kDerivedTwoG2_3: return base / 3;
                case kDerivedB2_2: return base / 2;
            }
            throw ParameterError("unknown derived variant");
        }
    }
    throw ParameterError("unhandled family");
}

Int out_order(const GroupId& id) {
    validate(id);
    const unsigned long f = id.f;
    switch (id.family) {
        case Family::Alt:
            return id.n == 6 ? 4 : 2;
        case Family::Sporadic:
            return Int(sporadic_entry(id.sporadic_name).out);
        case Family::DerivedVariant:
            if (id.derived_base == kDerivedTwoF4_2) return 2;
            return out_order(canonical(id));
        default:
            break;
    }
    const std::uint64_t q = field_q(id);
    switch (id.family) {
        case Family::A:
            if (id.n == 1) return gcd_u(2, Int(q) - 1) * f;
            return 2 * gcd_u(id.n + 1, Int(q) - 1) * f;
        case Family::TwoA:
            return gcd_u(id.n + 1, Int(q) + 1) * f;
        case Family::B:
            if (id.n == 2) return Int(2) * f;  // graph automorphism in char 2
            return gcd_u(2, Int(q) - 1) * f;
        case Family::C:
            return gcd_u(2, Int(q) - 1) * f;
        case Family::D: {
            const Int d2 = gcd_u(2, Int(q) - 1);
            if (id.n == 4) return 6 * d2 * d2 * f;
            if (id.n % 2 == 0) return 2 * d2 * d2 * f;
            return 2 * gcd_u(4, qp(q, id.n) - 1) * f;
        }
        case Family::TwoD:
            return gcd_u(4, qp(q, id.n) + 1) * f;
        case Family::E6:
            return 2 * gcd_u(3, Int(q) - 1) * f;
        case Family::E7:
            return gcd_u(2, Int(q) - 1) * f;
        case Family::E8:
            return Int(f);
        case Family::TwoE6:
            return gcd_u(3, Int(q) + 1) * f;
        case Family::F4:
            return id.p == 2 ? Int(2) * f : Int(f);
        case Family::ThreeD4:
            return Int(f);
        case Family::G2:
            return id.p == 3 ? Int(2) * f : Int(f);
        case Family::TwoB2:
        case Family::TwoG2:
        case Family::TwoF4:
            return Int(f);  // = 2n+1
        default:
            throw ParameterError("unhandled family");
    }
}

bool is_simple(const GroupId& id) {
    validate(id);
    switch (id.family) {
        case Family::Alt:
        case Family::Sporadic:
        case Family::DerivedVariant:
            return true;
        default:
            break;
    }
    const std::uint64_t q = field_q(id);
    if (id.family == Family::A && id.n == 1 && (q == 2 || q == 3)) return false;
    if (id.family == Family::B && id.n == 2 && q == 2) return false;
    if (id.family == Family::G2 && q == 2) return false;
    if (id.family == Family::TwoA && id.n == 2 && q == 2) return false;
    if (id.family == Family::TwoB2 && q == 2) return false;
    if (id.family == Family::TwoG2 && q == 3) return false;
    if (id.family == Family::TwoF4 && q == 2) return false;
    return true;
}

GroupId canonical(const GroupId& id) {
    validate(id);
    if (id.family == Family::A && id.n == 1) {
        const std::uint64_t q = field_q(id);
        if (q == 4 || q == 5) return alt(5);
        if (q == 9) return alt(6);
        if (q == 7) return lie(Family::A, 2, 2);
    }
    if (id.family == Family::A && id.n == 3 && field_q(id) == 2) return alt(8);
    if (id.family == Family::B) {
        const std::uint64_t q = field_q(id);
        if (id.n == 2 && q == 3) return twisted(Family::TwoA, 3, 4);
        if (id.n >= 3 && q % 2 == 0) return lie(Family::C, id.n, q);
    }
    if (id.family == Family::DerivedVariant) {
        switch (id.derived_base) {
            case kDerivedTwoG2_3: return lie(Family::A, 1, 8);
            case kDerivedG2_2: return twisted(Family::TwoA, 2, 9);
            case kDerivedB2_2: return alt(6);
            case kDerivedTwoF4_2: return id;
        }
    }
    return id;
}

GroupFacts classify(const GroupId& id) {
    GroupFacts facts;
    facts.id = id;
    facts.order = order(id);
    facts.out_order = out_order(id);
    facts.is_simple = is_simple(id);
    facts.canonical = canonical(id);
    return facts;
}

const std::vector<GroupFacts>& sporadic_facts() {
    static const std::vector<GroupFacts> all = [] {
        std::vector<GroupFacts> v;
        for (const auto& e : kSporadics) v.push_back(classify(sporadic(e.name)));
        return v;
    }();
    return all;
}

EnumBound order_leq(Int n) {
    EnumBound b;
    b.kind = EnumBound::Kind::OrderLeq;
    b.n = std::move(n);
    return b;
}

EnumBound order_leq_poly_out(Int c, unsigned long e) {
    EnumBound b;
    b.kind = EnumBound::Kind::OrderLeqPolyOut;
    b.c = std::move(c);
    b.e = e;
    return b;
}

namespace scan {

void prime_powers_upto(std::uint64_t limit,
                       const std::function<void(std::uint64_t, std::uint64_t,
                                                unsigned long)>& visit) {
    // Collect prime powers <= limit in increasing order.
    std::vector<std::uint64_t> vals;
    for (std::uint64_t m = 2; m <= limit; ++m)
        if (as_prime_power(m)) vals.push_back(m);
    for (std::uint64_t v : vals) {
        auto pp = as_prime_power(v);
        visit(v, pp->p, pp->f);
    }
}

}  // namespace scan

namespace {

// Certified growth data per family and rank: order * c_div >= Q^deg for
// every valid field parameter Q = p^f, and out <= out_cap * f. Both facts
// follow from the order formulas ((q^k - 1) >= q^{k-1}, (q^k + 1) > q^{k-1},
// (q - 1) >= q/2) and are re-asserted at every scanned point.
struct GrowthCert {
    unsigned long deg = 0;
    unsigned long c_div = 1;
    unsigned long out_cap = 1;
};

GrowthCert growth_cert(Family fam, unsigned long n) {
    switch (fam) {
        case Family::A:
            if (n == 1) return {3, 4, 2};
            return {n * (n + 1), n + 1, 2 * (n + 1)};
        case Family::TwoA:
            return {n * (n + 1) / 2, n + 1, n + 1};
        case Family::B:
        case Family::C:
            return {2 * n * n, 2, 2};
        case Family::D:
            return {n * (n - 1), 4, n == 4 ? 24ul : 8ul};
        case Family::TwoD:
            return {n * (n - 1), 4, 4};
        case Family::E6: return {72, 3, 6};
        case Family::E7: return {126, 2, 2};
        case Family::E8: return {240, 1, 1};
        case Family::TwoE6: return {36, 3, 3};
        case Family::F4: return {48, 1, 2};
        case Family::ThreeD4: return {8, 1, 1};
        case Family::G2: return {12, 1, 2};
        case Family::TwoB2: return {5, 2, 1};
        case Family::TwoG2: return {7, 2, 1};
        case Family::TwoF4: return {25, 2, 1};
        default:
            throw ParameterError("growth_cert: not a Lie family");
    }
}

// Smallest horizon H such that every field parameter Q = p^f >= H fails
// order <= c * out^e. Uses (log2 Q)^2 <= Q for Q >= 16, hence
// (log2 Q)^e <= Q^ceil(e/2); combined with order >= Q^deg / c_div this
// kills every Q with Q^(deg - ceil(e/2)) > c_div * c * out_cap^e.
std::uint64_t poly_horizon(const GrowthCert& g, const Int& c, unsigned long e) {
    const unsigned long d = (e + 1) / 2;
    if (g.deg <= d)
        throw ParameterError(
            "poly-out exponent too large for certified finite enumeration");
    const Int rhs = Int(g.c_div) * c * ipow(Int(g.out_cap), e);
    Int h = iroot(rhs, g.deg - d) + 1;
    if (h < 16) h = 16;
    if (!h.fits_ulong_p())
        throw ParameterError("poly-out bound too large for enumeration");
    return h.get_ui();
}

std::uint64_t min_field_value(Family fam) {
    switch (fam) {
        case Family::TwoA:
        case Family::TwoD:
        case Family::TwoE6:
            return 4;  // q^2 = p^f with f even
        case Family::ThreeD4:
            return 8;  // q^3 = p^f with 3 | f
        case Family::TwoB2:
        case Family::TwoF4:
            return 2;
        case Family::TwoG2:
            return 3;
        default:
            return 2;
    }
}

std::optional<GroupId> try_make(Family fam, unsigned long rank, std::uint64_t pf) {
    GroupId id;
    id.family = fam;
    id.n = rank;
    auto pp = as_prime_power(pf);
    if (!pp) return std::nullopt;
    id.p = pp->p;
    id.f = pp->f;
    if (!is_valid(id)) return std::nullopt;
    return id;
}

// Orders are not strictly monotone in the field size (the gcd divisor can
// jump, e.g. |A(2;19)| < |A(2;17)|), so the scans rely on the certified
// lower bound order * c_div >= Q^deg, whose right side is strictly
// increasing, rather than on order monotonicity itself.
struct ScanChecks {
    void step(const GroupId& id, const Int& ord, const Int& out,
              const GrowthCert& g) {
        if (ord * g.c_div < ipow(field_pf(id), g.deg))
            throw EnumerationError("growth certificate violated at " +
                                   to_string(id));
        if (out > Int(g.out_cap) * id.f)
            throw EnumerationError("out-order cap violated at " + to_string(id));
    }
};

bool bound_holds(const EnumBound& b, const Int& ord, const Int& out) {
    if (b.kind == EnumBound::Kind::OrderLeq) return ord <= b.n;
    return ord <= b.c * ipow(out, b.e);
}

// Scans one (family, rank); appends canonical simple groups satisfying the
// bound. Returns true if the rank produced at least one hit or contains a
// field value below the bound (used for the rank sweep cutoff).
bool scan_rank(Family fam, unsigned long rank, const EnumBound& b,
               std::vector<GroupFacts>& out_list) {
    const GrowthCert g = growth_cert(fam, rank);
    std::uint64_t horizon;
    if (b.kind == EnumBound::Kind::OrderLeq) {
        // Past the horizon, order >= Q^deg / c_div > N.
        Int h = iroot(Int(g.c_div) * b.n, g.deg) + 1;
        if (h > 10'000'000)
            throw ParameterError(
                "order bound too large for practical enumeration");
        horizon = h.get_ui();
    } else {
        horizon = poly_horizon(g, b.c, b.e);
    }
    bool any_alive = false;
    ScanChecks checks;
    for (std::uint64_t pf = min_field_value(fam); pf <= horizon; ++pf) {
        auto id = try_make(fam, rank, pf);
        if (!id) continue;
        const Int ord = order(*id);
        const Int out = out_order(*id);
        checks.step(*id, ord, out, g);
        if (!bound_holds(b, ord, out)) continue;
        any_alive = true;
        if (!is_simple(*id)) continue;
        if (canonical(*id) != *id) continue;
        out_list.push_back(classify(*id));
    }
    return any_alive;
}

}  // namespace

std::vector<GroupFacts> enumerate_under(const EnumBound& bound,
                                        const std::vector<Family>& families) {
    if (bound.kind == EnumBound::Kind::OrderLeqPolyOut &&
        (bound.e < 1 || bound.c < 1))
        throw ParameterError("poly-out bound requires c >= 1 and e >= 1");

    auto wanted = [&](Family f) {
        if (families.empty()) return true;
        return std::find(families.begin(), families.end(), f) != families.end();
    };

    std::vector<GroupFacts> result;

    if (wanted(Family::Alt)) {
        Int last = -1;
        for (unsigned long n = 5;; ++n) {
            GroupFacts facts = classify(alt(n));
            if (facts.order <= last)
                throw EnumerationError("Alt order not increasing");
            last = facts.order;
            if (!bound_holds(bound, facts.order, facts.out_order)) {
                // out is 2 except Alt(6); past n = 6 the bound side is fixed,
                // so the first failure ends the monotone sweep.
                if (n > 6) break;
                continue;
            }
            result.push_back(facts);
        }
    }
    if (wanted(Family::Sporadic)) {
        for (const auto& facts : sporadic_facts())
            if (bound_holds(bound, facts.order, facts.out_order))
                result.push_back(facts);
    }

    struct RankedFamily {
        Family fam;
        unsigned long min_rank;
        bool ranked;
    };
    const std::array<RankedFamily, 16> lie_families = {{
        {Family::A, 1, true},
        {Family::TwoA, 2, true},
        {Family::B, 2, true},
        {Family::C, 3, true},
        {Family::D, 4, true},
        {Family::TwoD, 4, true},
        {Family::E6, 0, false},
        {Family::E7, 0, false},
        {Family::E8, 0, false},
        {Family::TwoE6, 0, false},
        {Family::F4, 0, false},
        {Family::ThreeD4, 0, false},
        {Family::G2, 0, false},
        {Family::TwoB2, 0, false},
        {Family::TwoG2, 0, false},
        {Family::TwoF4, 0, false},
    }};

    for (const auto& rf : lie_families) {
        if (!wanted(rf.fam)) continue;
        if (!rf.ranked) {
            scan_rank(rf.fam, 0, bound, result);
            continue;
        }
        // Rank sweep: stop after two consecutive dead ranks past the first
        // failure; the order at the minimal field value grows strictly with
        // the rank (asserted), which mirrors the monotonicity argument.
        unsigned long dead_streak = 0;
        Int last_min_order = -1;
        for (unsigned long rank = rf.min_rank; dead_streak < 3; ++rank) {
            auto min_id = try_make(rf.fam, rank, min_field_value(rf.fam));
            if (!min_id)
                throw EnumerationError("no minimal field value for rank");
            const Int min_order = order(*min_id);
            if (min_order <= last_min_order)
                throw EnumerationError("order not increasing in rank for " +
                                       family_name(rf.fam));
            last_min_order = min_order;
            const bool alive = scan_rank(rf.fam, rank, bound, result);
            dead_streak = alive ? 0 : dead_streak + 1;
        }
    }

    if (wanted(Family::DerivedVariant)) {
        for (unsigned long k = 0; k < 4; ++k) {
            GroupFacts facts = classify(derived_variant(static_cast<DerivedKind>(k)));
            if (facts.canonical != facts.id) continue;
            if (bound_holds(bound, facts.order, facts.out_order))
                result.push_back(facts);
        }
    }

    // Consistency: simple, even order, order >= 60, canonical, unique.
    std::map<std::string, int> seen;
    for (const auto& facts : result) {
        if (!facts.is_simple || facts.order < 60 || !divides(Int(2), facts.order))
            throw EnumerationError("non-simple or impossible order enumerated: " +
                                   to_string(facts.id));
        if (++seen[to_string(facts.canonical)] > 1)
            throw EnumerationError("duplicate canonical group enumerated: " +
                                   to_string(facts.canonical));
    }

    std::sort(result.begin(), result.end(), [](const GroupFacts& x, const GroupFacts& y) {
        if (x.order != y.order) return x.order < y.order;
        return to_string(x.id) < to_string(y.id);
    });
    return result;
}

namespace scan {

std::vector<std::uint64_t> field_values_with_poly_bound(Family fam,
                                                        unsigned long rank,
                                                        const Int& c) {
    const GrowthCert g = growth_cert(fam, rank);
    const std::uint64_t horizon = poly_horizon(g, c, 4);
    std::vector<std::uint64_t> out;
    ScanChecks checks;
    for (std::uint64_t pf = min_field_value(fam); pf <= horizon; ++pf) {
        auto id = try_make(fam, rank, pf);
        if (!id) continue;
        const Int ord = order(*id);
        const Int ou = out_order(*id);
        checks.step(*id, ord, ou, g);
        if (ord <= c * ipow(ou, 4)) out.push_back(pf);
    }
    return out;
}

}  // namespace scan

}  // namespace gqv
