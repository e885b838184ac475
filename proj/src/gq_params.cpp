#include "gqv/gq_params.hpp"

#include <stdexcept>

namespace gqv {

DeriveResult derive_params(const GQOrder& o) {
    if (o.s < 2 || o.t < 2)
        throw std::invalid_argument("thick GQ order requires s, t >= 2");
    const Int div = o.s + 1;
    const Int num = o.t - 1;
    if (!divides(div, num)) return DivisibilityViolation{num, div};
    DerivedParams d;
    d.t_prime = exact_div(num, div);
    const Int st1 = o.s * o.t + 1;
    d.points = (o.s + 1) * st1;
    d.lines = (o.t + 1) * st1;
    const Int ysq = o.s * d.t_prime + 1;
    if (is_perfect_square(ysq)) d.y = isqrt(ysq);
    return d;
}

bool higman_ok(const GQOrder& o) {
    if (o.s < 2 || o.t < 2)
        throw std::invalid_argument("thick GQ order requires s, t >= 2");
    return o.t <= o.s * o.s;
}

HSBounds hs_bounds(const Int& out) {
    if (out < 1) throw std::invalid_argument("out order must be >= 1");
    HSBounds b;
    b.s_max = 8 * out - 3;
    b.order_max = (8 * out - 2) * (ipow(8 * out - 3, 3) + 1);
    b.order_max_relaxed = ipow(Int(2), 12) * ipow(out, 4);
    return b;
}

HCBounds hc_bounds(const Int& out) {
    if (out < 1) throw std::invalid_argument("out order must be >= 1");
    HCBounds b;
    const Int m = 16 * out * out;
    b.s_max = m - 3;
    b.order_sq_max = (m - 2) * (ipow(m - 3, 3) + 1);
    b.order_max_relaxed = ipow(Int(2), 8) * ipow(out, 4);
    return b;
}

Int flag_modulus(Mode mode, const GroupFacts& facts) {
    if (mode == Mode::HS) return facts.order * facts.out_order;
    return 2 * facts.order * facts.order * facts.out_order * facts.out_order;
}

bool flag_divisibility(Mode mode, const Int& t, const GroupFacts& facts) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    return divides(t + 1, flag_modulus(mode, facts));
}

}  // namespace gqv
