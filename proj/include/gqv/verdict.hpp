#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gqv/catalog.hpp"
#include "gqv/diophantine.hpp"
#include "gqv/gq_params.hpp"

namespace gqv {

enum class Elimination {
    NotSimple,
    Duplicate,
    BoundC,
    BoundCRelaxed,
    NoSolution,
    FlagDivisibility,
    Survivor,
};

std::string elimination_name(Elimination e);

/// Failure of t+1 | |Aut(.)|, with a prime witness for auditing.
struct FlagElimination {
    Int t;
    Int modulus;
    Int witness_prime;  // divides t+1, does not divide the modulus
};

/// Bounds evaluated from the group's own |Out|. In HC mode order_max bounds
/// |T|^2 rather than |T|.
struct GroupBounds {
    Int s_max;
    Int order_max;
    Int order_max_relaxed;
};

struct CaseVerdict {
    GroupFacts group;
    GroupBounds bounds;
    std::vector<HSWitness> hs_witnesses;
    std::vector<HCWitness> hc_witnesses;
    Elimination eliminated_by = Elimination::Survivor;
    std::optional<GroupId> duplicate_of;
    std::optional<FlagElimination> flag;
    std::string paper_case_label;
    std::vector<std::string> notes;
};

/// One case of the analysis: the re-derived candidate cutoff, the documented
/// cutoff it must match, and the per-candidate verdicts.
struct CaseRecord {
    std::string label;
    std::string subject;
    std::vector<std::string> cutoff_derived;
    std::vector<std::string> cutoff_expected;
    bool cutoff_matches = false;
    std::vector<CaseVerdict> verdicts;
    std::vector<std::string> notes;
};

struct RunSummary {
    std::size_t candidates_examined = 0;
    std::size_t survivors_pre_elimination = 0;
    std::size_t survivors_post_elimination = 0;
};

struct RunResult {
    Mode mode = Mode::HS;
    std::vector<CaseRecord> cases;
    RunSummary summary;
    std::vector<std::string> discrepancy_notes;

    std::vector<const CaseVerdict*> verdicts() const;
};

/// Raised when a verification assertion fails: a survivor where none may
/// exist, a cutoff that does not match, or an internal coverage gap. Its
/// occurrence falsifies the build, not the theorem.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gqv
