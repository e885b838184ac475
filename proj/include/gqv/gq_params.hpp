#pragma once

#include <optional>
#include <variant>

#include "gqv/catalog.hpp"
#include "gqv/ints.hpp"

namespace gqv {

/// Order (s, t) of a thick generalised quadrangle: s+1 points per line,
/// t+1 lines per point, both at least 2.
struct GQOrder {
    Int s;
    Int t;
};

/// Derived counts for a GQ of order (s, t) whose collineation group makes
/// s+1 divide t-1.
struct DerivedParams {
    Int t_prime;              // (t-1)/(s+1)
    std::optional<Int> y;     // set when s*t' + 1 is a perfect square
    Int points;               // (s+1)(st+1)
    Int lines;                // (t+1)(st+1)
};

/// First-class record of a failed divisibility condition, kept as a value so
/// case engines can report the exact obstruction.
struct DivisibilityViolation {
    Int dividend;
    Int divisor;
};

using DeriveResult = std::variant<DerivedParams, DivisibilityViolation>;

/// Counts and t' for an order (s, t); a DivisibilityViolation value when
/// s+1 does not divide t-1.
DeriveResult derive_params(const GQOrder& o);

/// Higman's inequality t <= s^2.
bool higman_ok(const GQOrder& o);

/// Bounds of the holomorph-simple case, all driven by |Out(T)|:
/// s_max = 8*out - 3, order_max = (8*out-2)((8*out-3)^3+1),
/// order_max_relaxed = 2^12 * out^4. Always order_max <= order_max_relaxed.
struct HSBounds {
    Int s_max;
    Int order_max;
    Int order_max_relaxed;
};
HSBounds hs_bounds(const Int& out);

/// Bounds of the holomorph-compound (k = 2) case: s_max = 16*out^2 - 3,
/// order_sq_max bounds |T|^2, order_max_relaxed = 2^8 * out^4 bounds |T|.
struct HCBounds {
    Int s_max;
    Int order_sq_max;
    Int order_max_relaxed;
};
HCBounds hc_bounds(const Int& out);

enum class Mode { HS, HC };

/// Flag-transitivity divisibility: HS requires t+1 | |T|*|Out(T)|,
/// HC requires t+1 | 2*|T|^2*|Out(T)|^2.
bool flag_divisibility(Mode mode, const Int& t, const GroupFacts& facts);

/// The modulus checked by flag_divisibility (|Aut(T)| resp. |Aut(M)|).
Int flag_modulus(Mode mode, const GroupFacts& facts);

}  // namespace gqv
