#include "trainyard/expansion.hpp"

#include <algorithm>

#include "trainyard/error.hpp"
#include "trainyard/series.hpp"

namespace trainyard {

namespace {

Length trailing_zeros(const std::vector<Integer>& v) {
    Length z = 0;
    for (auto it = v.rbegin(); it != v.rend() && *it == 0; ++it) ++z;
    return z;
}

Finiteness undecided(const std::vector<Integer>& observed) {
    return {Finiteness::Kind::undecided, std::nullopt, trailing_zeros(observed)};
}

Finiteness infinite(const std::vector<Integer>& observed) {
    return {Finiteness::Kind::infinite, std::nullopt, trailing_zeros(observed)};
}

Finiteness verdict_for(const RodSource& src) {
    if (const auto* r = src.finite()) return Finiteness::finite_with(*r);
    return {};
}

void check_horizon(Length horizon) {
    if (horizon < 1) throw DomainError("horizon must be >= 1");
}

// Truncated 1 + sign * C(x, src) through x^horizon.
TruncatedSeries shifted_series(const RodSource& src, int sign, Length horizon) {
    auto c = src.counts(horizon);
    if (sign < 0)
        for (auto& v : c) v = -v;
    c[0] = 1;
    return {std::move(c)};
}

}  // namespace

Finiteness Finiteness::finite_with(const RodSet& rods) {
    return {Kind::finite, rods.max_length(), 0};
}

bool expansion_identity_holds(const Expansion& e) {
    const auto* r = e.r.finite();
    const auto* q = e.q.finite();
    const auto* s = e.s.finite();
    if (r && q && s) return char_poly(*s) == char_poly(*r) * (Poly{1} + rod_poly(*q));
    const Length h = e.horizon;
    const auto lhs = shifted_series(e.s, -1, h);
    const auto rhs = series_mul(shifted_series(e.r, -1, h), shifted_series(e.q, 1, h));
    return lhs.coefficients == rhs.coefficients;
}

Expansion expand(const RodSet& r, const RodSet& q, Length horizon) {
    check_horizon(horizon);
    RodSet s = unite(r, unite(negate(q), concat(q, r)));
    Expansion e{r, q, s, horizon, Finiteness::finite_with(r), Finiteness::finite_with(q), Finiteness::finite_with(s)};
    e.identity_checked = expansion_identity_holds(e);
    if (!e.identity_checked) throw std::logic_error("expand: polynomial identity failed");
    return e;
}

Expansion solve_q(const RodSource& r, const RodSource& s, Length horizon) {
    check_horizon(horizon);
    Expansion e;
    e.r = r;
    e.s = s;
    e.horizon = horizon;
    e.r_finite = verdict_for(r);
    e.s_finite = verdict_for(s);

    const auto* rf = r.finite();
    const auto* sf = s.finite();
    if (rf && sf) {
        if (rf->empty()) {
            // [] --Q--> S forces Q = anti(S).
            RodSet q = negate(*sf);
            e.q_finite = Finiteness::finite_with(q);
            e.q = std::move(q);
        } else {
            const Length max_r = *rf->max_length();
            const Length max_s = sf->max_length().value_or(0);
            // D(n) obeys the recursion of R for n > max S, and a finite Q has
            // max Q = max S - max R. So Q is finite iff D vanishes on the max R
            // indices (max S - max R, max S].
            const auto d = discrepancies(r, s, std::max(horizon, max_s)).values;
            bool finite = !sf->empty() && max_s >= max_r;
            for (Length n = max_s - max_r + 1; finite && n <= max_s; ++n)
                if (d[static_cast<std::size_t>(n - 1)] != 0) finite = false;
            if (finite) {
                RodSet q = RodSet::from_counts(std::span(d.data(), static_cast<std::size_t>(max_s - max_r)));
                e.q_finite = Finiteness::finite_with(q);
                e.q = std::move(q);
            } else {
                std::vector<Integer> observed(d.begin(), d.begin() + horizon);
                e.q_finite = infinite(observed);
                e.q = ExplicitCounts{std::move(observed)};
            }
        }
    } else {
        auto d = discrepancies(r, s, horizon).values;
        e.q_finite = undecided(d);
        e.q = ExplicitCounts{std::move(d)};
    }
    e.identity_checked = expansion_identity_holds(e);
    if (!e.identity_checked) throw std::logic_error("solve_q: polynomial identity failed");
    return e;
}

Expansion solve_r(const RodSet& q, const RodSource& s, Length horizon) {
    // R --Q--> S  iff  anti(Q) --anti(R)--> S.
    const Expansion swapped = solve_q(negate(q), s, horizon);
    Expansion e;
    e.r = negate(swapped.q);
    e.q = q;
    e.s = s;
    e.horizon = horizon;
    e.r_finite = swapped.q_finite;
    e.q_finite = Finiteness::finite_with(q);
    e.s_finite = swapped.s_finite;
    e.identity_checked = expansion_identity_holds(e);
    if (!e.identity_checked) throw std::logic_error("solve_r: polynomial identity failed");
    return e;
}

DualResult dual(const RodSource& q, Length horizon) {
    check_horizon(horizon);
    const auto f = train_counts(negate(q), horizon).values;
    std::vector<Integer> counts(f.begin() + 1, f.end());

    if (const auto gf = rational_gf(q)) {
        // 1 + C(x,Q) = (den + num) / den, so 1 + C(x,Q*) = den / (den + num).
        if (auto p = poly_divexact(gf->denominator, gf->denominator + gf->numerator)) {
            RodSet rods = negate(rodset_from_char_poly(*p));
            auto verdict = Finiteness::finite_with(rods);
            verdict.trailing_zeros = trailing_zeros(counts);
            return {std::move(rods), verdict};
        }
        auto verdict = infinite(counts);
        return {ExplicitCounts{std::move(counts)}, verdict};
    }
    auto verdict = undecided(counts);
    return {ExplicitCounts{std::move(counts)}, verdict};
}

RodSet compose(const RodSet& q_pr, const RodSet& q_rs) { return unite(q_pr, unite(q_rs, concat(q_pr, q_rs))); }

CountSeq rodset_from_counts(const CountSeq& seq, Length horizon) {
    if (seq.start != 0 || seq.values.empty() || seq.values.front() != 1)
        throw DomainError("sequence must start at index 0 with value 1");
    if (horizon < 0) throw DomainError("horizon must be >= 0");
    if (seq.last_index() < horizon) throw DomainError("sequence shorter than the requested horizon");
    // Peel off one length at a time: C(n) = seq(n) - sum_{l<n} C(l) seq(n-l).
    CountSeq c{1, std::vector<Integer>(static_cast<std::size_t>(horizon))};
    for (Length n = 1; n <= horizon; ++n) {
        Integer acc = seq.values[static_cast<std::size_t>(n)];
        for (Length l = 1; l < n; ++l) {
            const Integer& cl = c.values[static_cast<std::size_t>(l - 1)];
            if (cl != 0) mpz_submul(acc.get_mpz_t(), cl.get_mpz_t(), seq.values[static_cast<std::size_t>(n - l)].get_mpz_t());
        }
        c.values[static_cast<std::size_t>(n - 1)] = std::move(acc);
    }
    return c;
}

Expansion expand_minimal(const RodSet& r) {
    if (r.empty()) throw DomainError("expand_minimal needs a nonempty rod set");
    const auto& [len, mult] = *r.begin();
    const RodSet q{RodTerm{len, mult}};
    return expand(r, q, 2 * *r.max_length());
}

RodSet rodset_from_prefix(const CountSeq& counts) {
    if (counts.start != 1) throw DomainError("rod counts start at length 1");
    return RodSet::from_counts(counts.values);
}

}  // namespace trainyard
