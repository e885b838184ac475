#include "gqv/group_id.hpp"

#include <array>
#include <charconv>
#include <map>
#include <tuple>

namespace gqv {

namespace {

const std::array<std::string, 19> kFamilyNames = {
    "Alt", "Sporadic", "A", "2A", "B", "C", "D", "2D", "E6", "E7", "E8",
    "2E6", "F4", "3D4", "G2", "2B2", "2G2", "2F4", "Derived"};

const std::array<std::string, 26> kSporadicNames = {
    "M11", "M12", "M22", "M23", "M24", "J1",  "J2",  "J3",  "J4",
    "Co1", "Co2", "Co3", "Fi22", "Fi23", "Fi24'", "HS", "McL", "He",
    "Ru",  "Suz", "ON",  "HN",  "Ly",  "Th",  "B",   "M"};

struct DerivedEntry {
    const char* name;
    Family base_family;
    unsigned long rank;
    std::uint64_t pf;
};

// The analysis names exactly these four derived subgroups.
const std::array<DerivedEntry, 4> kDerivedEntries = {{
    {"2F4(2)'", Family::TwoF4, 0, 2},
    {"G2(2)'", Family::G2, 0, 2},
    {"2G2(3)'", Family::TwoG2, 0, 3},
    {"B(2;2)'", Family::B, 2, 2},
}};

bool is_twisted_square(Family f) {
    return f == Family::TwoA || f == Family::TwoD || f == Family::TwoE6;
}

bool is_suzuki_ree(Family f) {
    return f == Family::TwoB2 || f == Family::TwoG2 || f == Family::TwoF4;
}

bool has_rank_param(Family f) {
    switch (f) {
        case Family::A:
        case Family::TwoA:
        case Family::B:
        case Family::C:
        case Family::D:
        case Family::TwoD:
            return true;
        default:
            return false;
    }
}

unsigned long min_rank(Family f) {
    switch (f) {
        case Family::A: return 1;
        case Family::TwoA: return 2;
        case Family::B: return 2;
        case Family::C: return 3;
        case Family::D: return 4;
        case Family::TwoD: return 4;
        default: return 0;
    }
}

[[noreturn]] void bad(const std::string& msg) { throw ParameterError(msg); }

std::uint64_t parse_u64(const std::string& s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        bad("malformed integer '" + s + "'");
    return v;
}

}  // namespace

GroupId alt(unsigned long n) {
    GroupId id;
    id.family = Family::Alt;
    id.n = n;
    validate(id);
    return id;
}

GroupId sporadic(const std::string& name) {
    GroupId id;
    id.family = Family::Sporadic;
    id.sporadic_name = name;
    validate(id);
    return id;
}

GroupId lie(Family fam, unsigned long rank, std::uint64_t q) {
    GroupId id;
    id.family = fam;
    id.n = rank;
    auto pp = as_prime_power(q);
    if (!pp) bad("field size " + std::to_string(q) + " is not a prime power");
    id.p = pp->p;
    id.f = pp->f;
    validate(id);
    return id;
}

GroupId twisted(Family fam, unsigned long rank, std::uint64_t pf) {
    return lie(fam, rank, pf);
}

GroupId derived_variant(DerivedKind kind) {
    GroupId id;
    id.family = Family::DerivedVariant;
    id.derived_base = kind;
    validate(id);
    return id;
}

GroupId derived_base_id(const GroupId& id) {
    if (id.family != Family::DerivedVariant) bad("not a derived variant");
    const auto& e = kDerivedEntries.at(id.derived_base);
    return lie(e.base_family, e.rank, e.pf);
}

void validate(const GroupId& id) {
    switch (id.family) {
        case Family::Alt:
            if (id.n < 5) bad("Alt degree must be >= 5");
            return;
        case Family::Sporadic: {
            for (const auto& s : kSporadicNames)
                if (s == id.sporadic_name) return;
            bad("unknown sporadic name '" + id.sporadic_name + "'");
        }
        case Family::DerivedVariant:
            if (id.derived_base >= kDerivedEntries.size())
                bad("unknown derived variant");
            return;
        default:
            break;
    }
    // Lie-type families.
    if (!is_prime_u64(id.p)) bad("characteristic must be prime");
    if (id.f < 1) bad("field exponent must be >= 1");
    if (has_rank_param(id.family)) {
        if (id.n < min_rank(id.family))
            bad(family_name(id.family) + " rank must be >= " +
                std::to_string(min_rank(id.family)));
    }
    if (is_twisted_square(id.family) && id.f % 2 != 0)
        bad(family_name(id.family) + " requires q^2 = p^f with f even");
    if (id.family == Family::ThreeD4 && id.f % 3 != 0)
        bad("3D4 requires q^3 = p^f with f divisible by 3");
    if (is_suzuki_ree(id.family)) {
        std::uint64_t want = id.family == Family::TwoG2 ? 3 : 2;
        if (id.p != want)
            bad(family_name(id.family) + " requires characteristic " +
                std::to_string(want));
        if (id.f % 2 != 1) bad(family_name(id.family) + " requires q = p^(2n+1)");
    }
}

bool is_valid(const GroupId& id) {
    try {
        validate(id);
        return true;
    } catch (const ParameterError&) {
        return false;
    }
}

std::uint64_t field_q(const GroupId& id) {
    unsigned long div = 1;
    if (is_twisted_square(id.family)) div = 2;
    if (id.family == Family::ThreeD4) div = 3;
    std::uint64_t q = 1;
    for (unsigned long i = 0; i < id.f / div; ++i) q *= id.p;
    return q;
}

Int field_pf(const GroupId& id) { return ipow(Int(id.p), id.f); }

const std::string& family_name(Family f) {
    return kFamilyNames.at(static_cast<size_t>(f));
}

std::optional<Family> family_from_name(const std::string& name) {
    for (size_t i = 0; i < kFamilyNames.size(); ++i)
        if (kFamilyNames[i] == name) return static_cast<Family>(i);
    return std::nullopt;
}

std::string to_string(const GroupId& id) {
    switch (id.family) {
        case Family::Alt:
            return "Alt(" + std::to_string(id.n) + ")";
        case Family::Sporadic:
            return id.sporadic_name;
        case Family::DerivedVariant:
            return kDerivedEntries.at(id.derived_base).name;
        default:
            break;
    }
    const std::string fam = family_name(id.family);
    const std::string pf = field_pf(id).get_str();
    std::string params;
    if (has_rank_param(id.family)) params = std::to_string(id.n) + ";";
    if (is_twisted_square(id.family))
        params += "q2=" + pf;
    else if (id.family == Family::ThreeD4)
        params += "q3=" + pf;
    else
        params += pf;
    return fam + "(" + params + ")";
}

GroupId parse_group_id(const std::string& text) {
    if (text.empty()) bad("empty group id");
    // Sporadic names carry no parentheses (Fi24' has a quote, no parens).
    if (text.find('(') == std::string::npos) {
        for (const auto& s : kSporadicNames)
            if (s == text) return sporadic(text);
        bad("unknown group id '" + text + "'");
    }
    // Derived variants: exact spellings.
    for (unsigned long i = 0; i < kDerivedEntries.size(); ++i)
        if (text == kDerivedEntries[i].name)
            return derived_variant(static_cast<DerivedKind>(i));

    auto open = text.find('(');
    auto close = text.rfind(')');
    if (close == std::string::npos || close != text.size() - 1 || close < open)
        bad("malformed group id '" + text + "'");
    const std::string fam_s = text.substr(0, open);
    const std::string params = text.substr(open + 1, close - open - 1);

    if (fam_s == "Alt") return alt(static_cast<unsigned long>(parse_u64(params)));

    auto fam = family_from_name(fam_s);
    if (!fam || *fam == Family::Alt || *fam == Family::Sporadic ||
        *fam == Family::DerivedVariant)
        bad("unknown family '" + fam_s + "'");

    std::string field = params;
    unsigned long rank = 0;
    if (auto semi = params.find(';'); semi != std::string::npos) {
        rank = static_cast<unsigned long>(parse_u64(params.substr(0, semi)));
        field = params.substr(semi + 1);
    } else if (has_rank_param(*fam)) {
        bad(fam_s + " requires a rank parameter");
    }
    if (field.rfind("q2=", 0) == 0) {
        if (!is_twisted_square(*fam)) bad("q2= only valid for 2A/2D/2E6");
        field = field.substr(3);
    } else if (field.rfind("q3=", 0) == 0) {
        if (*fam != Family::ThreeD4) bad("q3= only valid for 3D4");
        field = field.substr(3);
    } else if (is_twisted_square(*fam) || *fam == Family::ThreeD4) {
        bad(fam_s + " requires q2=/q3= field syntax");
    }
    return lie(*fam, rank, parse_u64(field));
}

bool id_less(const GroupId& a, const GroupId& b) {
    auto key = [](const GroupId& g) {
        return std::tuple(static_cast<int>(g.family), g.n, g.p, g.f,
                          g.sporadic_name, g.derived_base);
    };
    return key(a) < key(b);
}

}  // namespace gqv
