#pragma once

#include <string>
#include <vector>

#include "chores/rational.hpp"

namespace chores {

/// An integral allocation: owner[c] is the agent holding chore c, or -1
/// while the chore is still unassigned (partial allocations arise during
/// preprocessing and rounding; a complete allocation has no -1 entries).
struct IntegralAllocation {
    std::vector<int> owner;

    IntegralAllocation() = default;
    explicit IntegralAllocation(int m) : owner(static_cast<std::size_t>(m), -1) {}

    bool complete() const {
        for (int a : owner)
            if (a < 0) return false;
        return true;
    }
};

/// A fair division instance: n agents with positive weights summing to
/// exactly 1, m chores, and an n-by-m matrix of nonnegative disutilities.
/// `scale` records the factor divided out by normalize(); multiplying any
/// derived monetary quantity by `scale` restates it in the input's units.
struct Instance {
    int n = 0;
    int m = 0;
    std::vector<Rat> weights;
    std::vector<std::vector<Rat>> disutilities;  // disutilities[i][c]
    Rat scale = 1;

    const Rat& d(int agent, int chore) const { return disutilities[agent][chore]; }

    /// d_i(M): agent i's disutility for the full chore set.
    Rat total_disutility(int agent) const;

    /// w_i * d_i(M): agent i's proportional share.
    Rat proportional_share(int agent) const;

    /// d_i(A_i): agent i's disutility for its bundle in A.
    Rat bundle_disutility(int agent, const IntegralAllocation& alloc) const;

    /// max over all (i, c) of d_i(c); 0 when m == 0.
    Rat max_disutility() const;

    bool bounded() const { return max_disutility() <= 1; }
};

/// Parses and validates an instance document. Rationals are "p/q" strings
/// or bare integers. Throws ParseError naming the offending field for
/// malformed JSON, weights not summing to 1, negative disutilities, or
/// dimension mismatches.
Instance parse_instance(const std::string& json_text);

/// Canonical serialization; parse_instance(serialize_instance(I)) == I.
std::string serialize_instance(const Instance& inst);

/// Re-checks every Instance invariant, throwing ParseError on violation.
/// parse_instance calls this; it is exposed for instances built in code.
void validate_instance(const Instance& inst, const std::string& where = "instance");

struct PreprocessResult {
    Instance reduced;             // all d_i(c) > 0
    IntegralAllocation preassigned;  // original indexing; owner set iff chore removed
    std::vector<int> kept_chores;    // reduced chore index -> original chore index
};

/// Pre-assigns every chore some agent values at zero to the lowest-index
/// such agent and removes it. The remaining instance has all d_i(c) > 0.
PreprocessResult preprocess_zero_disutility(const Instance& inst);

/// Scales disutilities down by their maximum when that maximum exceeds 1,
/// recording the factor in `scale`. Requires all d_i(c) > 0. Idempotent.
Instance normalize(const Instance& inst);

}  // namespace chores
