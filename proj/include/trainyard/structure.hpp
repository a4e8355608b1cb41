#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "trainyard/counts.hpp"
#include "trainyard/rodset.hpp"

namespace trainyard {

struct PeriodReport {
    bool periodic = false;
    /// Least period when periodic.
    Length least_period = 0;
    /// Indices d of the cyclotomic factors of 1 - C(x,R), ascending.
    std::vector<Length> cyclotomic_factors;
    /// Finite Q with R --Q--> [least_period] when periodic.
    RodSet q_to_period;
    /// Train counts agreed with the algebraic verdict on a direct window scan.
    bool window_confirmed = false;
};

/// Largest d whose totient can be <= max R, from phi(d) >= sqrt(d/2).
Length cyclotomic_candidate_bound(Length max_r);

/// Decides periodicity by peeling distinct cyclotomic factors off 1 - C(x,R).
/// Throws DomainError for empty R.
PeriodReport detect_period(const RodSet& r);

/// Smallest p >= 1 such that F(p .. p+width-1) repeats F(0 .. width-1), if
/// the counts show one.
std::optional<Length> window_period(const CountSeq& f, Length width);

/// A finite expansion of R to [a^alpha, b^mult_b].
struct OneExpansion {
    Length a = 0;
    Integer multiplicity;
    RodSet s;
    RodSet q;
};

/// All a <= bound where R expands to the single length a.
std::vector<OneExpansion> scan_one_expansions(const RodSet& r, Length bound);

struct ScalingHit {
    Length a = 0;
    Length b = 0;
    Integer alpha;
    Integer mult_a;
    Integer mult_b;
    RodSet s;
    RodSet q;
};

/// The scaling test at (b-a, b); returns the verified 2-expansion if any.
/// `f` must hold train counts of R through index b.
std::optional<ScalingHit> two_expansion_at(const RodSet& r, const CountSeq& f, Length a, Length b);

struct ScanOptions {
    /// Report the expansion of R to itself (empty Q) when R has two lengths.
    bool include_trivial = false;
};

/// Every 1 <= a < b <= bound where R expands to shape <a,b>, ordered by (b,a).
std::vector<ScalingHit> scan_two_expansions(const RodSet& r, Length bound, ScanOptions options = {});

struct LucasParams {
    Integer s;
    Integer t;
    int sign = 1;

    RodSet rods() const;  // [1^s,2^t] or [-1^s,2^t]
};

struct LucasReport {
    bool pass = false;
    std::optional<std::string> counterexample;
    CountSeq counts;
};

/// Checks the odd-index divisibility by s (s > 1) and that L(n) = F(n-1)
/// is a divisibility sequence through n <= horizon.
LucasReport lucas_check(const LucasParams& p, Length horizon);

struct AdjacentShapes {
    Length from = 1;
    Length to = 1;
};
struct SkipShapes {
    Length from = 1;
    Length to = 1;
};
struct MultipleShapes {
    Length d = 3;
    Length kmax = 1;
};
using ShapeFamily = std::variant<AdjacentShapes, SkipShapes, MultipleShapes>;

/// Shapes <a,a+1>, <a,a+2> or <kd,(k+1)d> for a Lucas rod set, each verified
/// through the scaling test. Adjacent shapes are also rebuilt by repeatedly
/// expanding the smallest rods.
std::vector<ScalingHit> lucas_two_shapes(const LucasParams& p, const ShapeFamily& family);

/// A signed pair of rod lengths: S = [sign_a * a, sign_b * b].
struct SignedPair {
    Length a = 0;
    int sign_a = 1;
    Length b = 0;
    int sign_b = 1;

    friend auto operator<=>(const SignedPair&, const SignedPair&) = default;
};

struct BorweinTable {
    /// Residue class label such as "(1,5) mod 6" -> pairs hit for [1,-2].
    std::map<std::string, std::vector<SignedPair>> hits_1_anti2;
    /// Residue class label such as "(-1,-2) mod 3" -> pairs hit for [-1,-2].
    std::map<std::string, std::vector<SignedPair>> hits_anti1_anti2;
    /// Every hit was matched by the scaling scan and vice versa.
    bool scan_agrees = false;
};

/// Residue class label of a signed pair, residues sorted ascending.
std::string residue_class(const SignedPair& p, Length modulus);

BorweinTable borwein_classify(Length bound);

}  // namespace trainyard
