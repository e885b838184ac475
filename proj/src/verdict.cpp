#include "gqv/verdict.hpp"

namespace gqv {

std::string elimination_name(Elimination e) {
    switch (e) {
        case Elimination::NotSimple: return "not_simple";
        case Elimination::Duplicate: return "duplicate";
        case Elimination::BoundC: return "bound_c";
        case Elimination::BoundCRelaxed: return "bound_c_relaxed";
        case Elimination::NoSolution: return "no_solution";
        case Elimination::FlagDivisibility: return "flag_divisibility";
        case Elimination::Survivor: return "survivor";
    }
    return "unknown";
}

std::vector<const CaseVerdict*> RunResult::verdicts() const {
    std::vector<const CaseVerdict*> out;
    for (const auto& rec : cases)
        for (const auto& v : rec.verdicts) out.push_back(&v);
    return out;
}

}  // namespace gqv
