#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "gqv/ints.hpp"

namespace gqv {

/// Families of finite simple groups, in the untwisted/twisted Lie notation
/// plus alternating groups, the 26 sporadic groups, and the derived
/// subgroups of the four almost-simple parameter points that the case
/// analysis treats as separate elimination targets.
enum class Family {
    Alt,
    Sporadic,
    A,
    TwoA,
    B,
    C,
    D,
    TwoD,
    E6,
    E7,
    E8,
    TwoE6,
    F4,
    ThreeD4,
    G2,
    TwoB2,
    TwoG2,
    TwoF4,
    DerivedVariant,
};

/// Thrown when a GroupId violates its family's parameter invariants.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Identifies one finite simple group (or one of the non-simple parameter
/// points the analysis names, e.g. B(2;2)).
///
/// Field-size conventions: for A/B/C/D/E/F/G families the stored (p, f)
/// satisfy q = p^f; for 2A/2D/2E6, q^2 = p^f (f even); for 3D4, q^3 = p^f
/// (f divisible by 3); for 2B2/2G2/2F4, q = p^f with f = 2n+1 odd and
/// p fixed at 2, 3, 2 respectively.
struct GroupId {
    Family family = Family::Alt;
    unsigned long n = 0;          // degree (Alt) or Lie rank; unused otherwise
    std::uint64_t p = 0;          // defining characteristic
    unsigned long f = 0;          // exponent, per the conventions above
    std::string sporadic_name;    // Sporadic only
    unsigned long derived_base = 0;  // DerivedVariant: index into the known list

    bool operator==(const GroupId&) const = default;
};

/// The four derived-variant parameter points: X' where X is non-simple.
enum DerivedKind : unsigned long {
    kDerivedTwoF4_2 = 0,  // 2F4(2)'
    kDerivedG2_2 = 1,     // G2(2)'
    kDerivedTwoG2_3 = 2,  // 2G2(3)'
    kDerivedB2_2 = 3,     // B(2;2)'
};

// -- Constructors ------------------------------------------------------

GroupId alt(unsigned long n);
GroupId sporadic(const std::string& name);
/// Untwisted Lie id with field size q = p^f given as the value q.
GroupId lie(Family fam, unsigned long rank, std::uint64_t q);
/// Twisted id whose field parameter is given as the value of p^f
/// (the value of q^2 for 2A/2D/2E6, of q^3 for 3D4, of q for 2B2/2G2/2F4).
GroupId twisted(Family fam, unsigned long rank, std::uint64_t pf);
GroupId derived_variant(DerivedKind kind);

/// Base id of a derived variant (e.g. 2F4(2) for 2F4(2)').
GroupId derived_base_id(const GroupId& id);

/// Validates all family invariants; throws ParameterError with a message.
void validate(const GroupId& id);
bool is_valid(const GroupId& id);

/// For twisted families, the integer q with q^k = p^f; equals p^f otherwise.
std::uint64_t field_q(const GroupId& id);
/// The value p^f (the natural scan parameter).
Int field_pf(const GroupId& id);

/// Serialization: "Alt(6)", "A(1;9)", "2A(2;q2=9)", "2B2(8)", "M11",
/// "2F4(2)'". Parse and print round-trip exactly.
std::string to_string(const GroupId& id);
GroupId parse_group_id(const std::string& text);

/// Total order used for deterministic output: by family, then parameters.
bool id_less(const GroupId& a, const GroupId& b);

const std::string& family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

}  // namespace gqv
