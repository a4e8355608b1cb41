#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "trainyard/integer.hpp"
#include "trainyard/rodset.hpp"
#include "trainyard/series.hpp"

namespace trainyard {

/// Rods of lengths first, first+step, first+2*step, ... each with `sign`.
struct ArithmeticRods {
    Length first = 1;
    Length step = 1;
    int sign = 1;
};

/// The rods of Trains(base): sign * F(n, base) rods of each length n >= 1.
struct TrainsOfRods {
    RodSet base;
    int sign = 1;
};

/// Explicit net counts; values[0] is the count at length 1.
struct ExplicitCounts {
    std::vector<Integer> values;
};

/// A rod set that may be infinite. Finite sources are ordinary rod sets; the
/// other variants are evaluated lazily up to an explicit horizon.
class RodSource {
public:
    using Variant = std::variant<RodSet, ArithmeticRods, TrainsOfRods, ExplicitCounts>;

    RodSource() = default;
    RodSource(RodSet rods) : v_(std::move(rods)) {}  // NOLINT: implicit by intent
    RodSource(ArithmeticRods a);
    RodSource(TrainsOfRods t);
    RodSource(ExplicitCounts c) : v_(std::move(c)) {}

    const Variant& variant() const noexcept { return v_; }
    bool known_finite() const noexcept { return std::holds_alternative<RodSet>(v_); }
    /// The rod set, when finite.
    const RodSet* finite() const noexcept { return std::get_if<RodSet>(&v_); }

    /// Net counts at lengths 0..horizon (index 0 is always zero).
    /// Throws DomainError when an explicit count list is too short.
    std::vector<Integer> counts(Length horizon) const;
    Integer count(Length n) const;

private:
    Variant v_;
};

RodSource negate(const RodSource& src);

/// C(x, src) = numerator / denominator exactly, with denominator(0) = 1.
/// Available for finite, arithmetic and trains-of sources.
struct RationalGf {
    Poly numerator;
    Poly denominator;
};
std::optional<RationalGf> rational_gf(const RodSource& src);

/// Integer sequence tagged with the index of its first value.
struct CountSeq {
    Length start = 0;
    std::vector<Integer> values;

    Length last_index() const noexcept { return start + static_cast<Length>(values.size()) - 1; }
    /// Value at index n; zero below `start`. Throws std::out_of_range above.
    Integer at(Length n) const;
    friend bool operator==(const CountSeq&, const CountSeq&) = default;
};

/// One rod inside a train, with its color index among equal-length rods.
struct TrainRod {
    Length length = 1;
    std::size_t color = 1;
    int sign = 1;
};

struct Train {
    std::vector<TrainRod> rods;

    Length length() const;
    int sign() const;
};

struct Enumeration {
    std::vector<Train> trains;
    Integer net;
};

inline constexpr std::size_t default_enumeration_cap = 1'000'000;

/// F(0..horizon): F(0) = 1, F(n) = sum_l C(l) F(n-l).
CountSeq train_counts(const RodSource& src, Length horizon);

/// D(1..horizon) = F(n,R) - sum_l C(l,S) F(n-l,R).
CountSeq discrepancies(const RodSource& r, const RodSource& s, Length horizon);

/// D(1..horizon) of an arbitrary sequence (seq(0) = 1) against the recursion of S.
CountSeq sequence_discrepancies(const CountSeq& seq, const RodSet& s, Length horizon);

/// Every colored train of length n, in lexicographic (length, color) order.
/// Throws DomainError once more than `cap` trains would be produced.
Enumeration enumerate_trains(const RodSet& rods, Length n, std::size_t cap = default_enumeration_cap);

/// Net count of the same trains without materializing them.
Integer enumerate_net(const RodSet& rods, Length n, std::size_t cap = default_enumeration_cap);

/// Sum over i*a + j*b = n of binom(i+j, j) * ma^i * mb^j for a two-rod pair.
/// Equal lengths are allowed, as in [1,1] or [1,-1].
Integer binomial_count(const Rod& first, const Rod& second, Length n);
/// Same sum for a reduced rod set of shape <a,b>, weighting by multiplicities.
Integer binomial_count(const RodSet& rods, Length n);

}  // namespace trainyard
