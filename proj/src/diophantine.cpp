#include "gqv/diophantine.hpp"

#include <stdexcept>

namespace gqv {

namespace {

void check_args(const Int& order, const Int& s_max) {
    if (s_max < 2) throw std::invalid_argument("s_max must be >= 2");
    if (order < 0) throw std::invalid_argument("order must be >= 0");
}

void revalidate(const Int& order, const HSWitness& w) {
    const Int lhs = ipow(w.s + 1, 2) * (w.s * w.t_prime + 1);
    if (lhs != order || w.t_prime < 1 || w.t_prime > w.s - 1)
        throw std::logic_error("hs witness failed revalidation");
}

void revalidate(const Int& order, const HCWitness& w) {
    const Int ysq = w.y * w.y;
    if ((w.s + 1) * w.y != order || ysq < 3 || ysq > w.s * (w.s - 1) + 1 ||
        !divides(w.s, ysq - 1) || w.y > w.s)
        throw std::logic_error("hc witness failed revalidation");
}

}  // namespace

std::vector<HSWitness> solve_hs(const Int& order, const Int& s_max) {
    check_args(order, s_max);
    std::vector<HSWitness> out;
    if (order < 1) return out;
    for (Int s = 2; s <= s_max; ++s) {
        const Int sq = (s + 1) * (s + 1);
        if (!divides(sq, order)) continue;
        const Int rest = exact_div(order, sq) - 1;
        if (!divides(s, rest)) continue;
        const Int t_prime = exact_div(rest, s);
        if (t_prime < 1 || t_prime > s - 1) continue;
        HSWitness w{s, t_prime};
        revalidate(order, w);
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<HCWitness> solve_hc(const Int& order, const Int& s_max) {
    check_args(order, s_max);
    std::vector<HCWitness> out;
    if (order < 1) return out;
    for (Int s = 2; s <= s_max; ++s) {
        if (!divides(s + 1, order)) continue;
        const Int y = exact_div(order, s + 1);
        const Int ysq = y * y;
        if (ysq < 3 || ysq > s * (s - 1) + 1) continue;
        if (!divides(s, ysq - 1)) continue;
        HCWitness w{s, y};
        revalidate(order, w);
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<HSWitness> oracle_hs(const Int& order, const Int& s_max) {
    check_args(order, s_max);
    std::vector<HSWitness> out;
    for (Int s = 2; s <= s_max; ++s) {
        const Int sq = (s + 1) * (s + 1);
        const Int step = s * sq;
        Int value = sq;  // (s+1)^2 (s t' + 1) at t' = 0
        for (Int t_prime = 1; t_prime <= s - 1; ++t_prime) {
            value += step;
            if (value == order) out.push_back(HSWitness{s, t_prime});
        }
    }
    return out;
}

std::vector<HCWitness> oracle_hc(const Int& order, const Int& s_max) {
    check_args(order, s_max);
    std::vector<HCWitness> out;
    for (Int s = 2; s <= s_max; ++s) {
        // y^2 <= s(s-1)+1 < (s+1)^2 forces y <= s.
        for (Int y = 2; y <= s; ++y) {
            const Int ysq = y * y;
            if ((s + 1) * y == order && ysq >= 3 && ysq <= s * (s - 1) + 1 &&
                divides(s, ysq - 1))
                out.push_back(HCWitness{s, y});
        }
    }
    return out;
}

}  // namespace gqv
