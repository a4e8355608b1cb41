#pragma once

#include <optional>

#include "trainyard/counts.hpp"
#include "trainyard/rodset.hpp"

namespace trainyard {

/// Finiteness verdict for one side of an expansion.
struct Finiteness {
    enum class Kind { finite, infinite, undecided };

    Kind kind = Kind::undecided;
    /// Longest rod when finite and nonempty.
    std::optional<Length> max;
    /// Zero counts observed at the end of the computed window.
    Length trailing_zeros = 0;

    static Finiteness finite_with(const RodSet& rods);
    bool is_finite() const noexcept { return kind == Kind::finite; }
};

/// R expands to S via Q: (1 - C(x,S)) = (1 - C(x,R)) (1 + C(x,Q)).
///
/// Sides that are not known finite carry their counts through `horizon`.
struct Expansion {
    RodSource r;
    RodSource q;
    RodSource s;
    Length horizon = 0;
    Finiteness r_finite;
    Finiteness q_finite;
    Finiteness s_finite;
    /// The polynomial identity was verified (exactly when all three sides are
    /// finite, modulo x^(horizon+1) otherwise).
    bool identity_checked = false;
};

/// S = R u anti(Q) u QR.
Expansion expand(const RodSet& r, const RodSet& q, Length horizon);

/// Q from C(n,Q) = D(n,R,S). Finiteness is decided exactly when R and S are
/// both finite; otherwise it is undecided at the horizon.
Expansion solve_q(const RodSource& r, const RodSource& s, Length horizon);

/// R from Q and S, via the exchange  anti(Q) --anti(R)--> S.
Expansion solve_r(const RodSet& q, const RodSource& s, Length horizon);

struct DualResult {
    RodSource dual;
    Finiteness finiteness;
};

/// Q* = rods(Trains(anti Q)), so that 1 + C(x,Q*) = 1 / (1 + C(x,Q)).
DualResult dual(const RodSource& q, Length horizon);

/// Q_PR u Q_RS u Q_PR Q_RS.
RodSet compose(const RodSet& q_pr, const RodSet& q_rs);

/// Counts C(1..horizon) of the unique rod set whose train counts start with `seq`.
CountSeq rodset_from_counts(const CountSeq& seq, Length horizon);

/// Expand every rod of minimal length in R.
Expansion expand_minimal(const RodSet& r);

/// Checks (1 - C_S) = (1 - C_R)(1 + C_Q): exactly for finite sides, otherwise
/// through x^horizon.
bool expansion_identity_holds(const Expansion& e);

/// Finite rod set from a count prefix (count at length k+1 in values[k]).
RodSet rodset_from_prefix(const CountSeq& counts);

}  // namespace trainyard
