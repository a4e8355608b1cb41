#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trainyard/integer.hpp"

namespace trainyard {

/// A single rod: positive length, sign +1 (rod) or -1 (antirod).
struct Rod {
    Length length = 1;
    int sign = 1;

    friend bool operator==(const Rod&, const Rod&) = default;
};

/// One term of a rod-set literal before reduction, e.g. "-4^3".
struct RodTerm {
    Length length = 1;
    Integer count = 1;  // signed: negative for antirods
};

/// Reduced rod set: net multiplicity per length, zero entries never stored.
///
/// Two rod sets are equivalent exactly when their reduced forms agree, so
/// equality of `RodSet` values is rod-set equivalence.
class RodSet {
public:
    using Storage = std::map<Length, Integer>;
    using const_iterator = Storage::const_iterator;

    RodSet() = default;

    /// Sums the terms per length and drops zero totals.
    /// Throws DomainError for a length < 1.
    explicit RodSet(std::span<const RodTerm> terms);
    RodSet(std::initializer_list<RodTerm> terms);

    /// counts[k] is the net count at length k+1.
    static RodSet from_counts(std::span<const Integer> counts);

    /// Net count C(n, R); zero when n is absent (including n < 1).
    Integer count(Length n) const;

    bool empty() const noexcept { return entries_.empty(); }
    /// Number of distinct lengths (the shape cardinality).
    std::size_t shape_size() const noexcept { return entries_.size(); }
    std::optional<Length> min_length() const;
    std::optional<Length> max_length() const;

    const_iterator begin() const noexcept { return entries_.begin(); }
    const_iterator end() const noexcept { return entries_.end(); }
    const Storage& entries() const noexcept { return entries_; }

    friend bool operator==(const RodSet&, const RodSet&) = default;

private:
    void add(Length length, const Integer& count);
    Storage entries_;
};

struct ShapeReport {
    std::vector<Length> shape;
    std::vector<Integer> multiplicities;
    std::optional<Length> min;
    std::optional<Length> max;
    Integer size;  // rods counted with |multiplicity|
    bool primitive = false;
    bool positive = true;
    bool empty = true;
};

/// Unreduced terms of a literal such as "[1,-1,2^3]".
std::vector<RodTerm> parse_rod_terms(std::string_view text);
RodSet parse_rodset(std::string_view text);
std::string format_rodset(const RodSet& rods);

RodSet unite(const RodSet& lhs, const RodSet& rhs);
RodSet negate(const RodSet& rods);
/// C(n, RS) is the convolution of the count functions of R and S.
RodSet concat(const RodSet& lhs, const RodSet& rhs);
ShapeReport describe(const RodSet& rods);
bool equivalent(const RodSet& lhs, const RodSet& rhs);
RodSet odd_sign_swap(const RodSet& rods);

inline RodSet operator+(const RodSet& a, const RodSet& b) { return unite(a, b); }
inline RodSet operator-(const RodSet& a) { return negate(a); }
inline RodSet operator*(const RodSet& a, const RodSet& b) { return concat(a, b); }

}  // namespace trainyard
