#include "trainyard/structure.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "trainyard/error.hpp"
#include "trainyard/expansion.hpp"
#include "trainyard/series.hpp"

namespace trainyard {

namespace {

Length totient(Length n) {
    Length result = n;
    for (Length p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

// F(n) with the convention F(n) = 0 for n < 0.
Integer f_at(const CountSeq& f, Length n) { return n < 0 ? Integer(0) : f.at(n); }

RodSet finite_q(const RodSet& r, const RodSet& s) {
    const Expansion e = solve_q(r, s, std::max<Length>(1, s.max_length().value_or(1)));
    const RodSet* q = e.q.finite();
    if (!q) throw std::logic_error("expected a finite expansion of " + format_rodset(r) + " to " + format_rodset(s));
    return *q;
}

}  // namespace

Length cyclotomic_candidate_bound(Length max_r) { return 2 * max_r * max_r; }

std::optional<Length> window_period(const CountSeq& f, Length width) {
    if (f.start != 0 || width < 1) throw DomainError("window scan needs counts from index 0 and width >= 1");
    for (Length p = 1; p + width - 1 <= f.last_index(); ++p) {
        bool same = true;
        for (Length i = 0; same && i < width; ++i) same = f.values[static_cast<std::size_t>(p + i)] == f.values[static_cast<std::size_t>(i)];
        if (same) return p;
    }
    return std::nullopt;
}

PeriodReport detect_period(const RodSet& r) {
    if (r.empty()) throw DomainError("periodicity needs a nonempty rod set");
    const Length max_r = *r.max_length();
    const Length bound = cyclotomic_candidate_bound(max_r);

    PeriodReport report;
    Poly residual = char_poly(r);
    const Poly one{1};
    for (Length d = 1; d <= bound && residual != one; ++d) {
        if (totient(d) > residual.degree()) continue;
        // 1 - x instead of Phi_1 = x - 1 keeps the residual's constant term at 1.
        const Poly factor = d == 1 ? Poly{1, -1} : cyclotomic(d);
        if (auto q = poly_divexact(residual, factor)) {
            residual = std::move(*q);
            report.cyclotomic_factors.push_back(d);
        }
    }
    report.periodic = residual == one;

    if (report.periodic) {
        Length p = 1;
        for (Length d : report.cyclotomic_factors) p = std::lcm(p, d);
        report.least_period = p;
        report.q_to_period = finite_q(r, RodSet{RodTerm{p, 1}});
        const CountSeq f = train_counts(r, 3 * p);
        bool confirmed = window_period(f, max_r) == p;
        for (Length n = 0; confirmed && n + p <= 3 * p; ++n) confirmed = f.at(n) == f.at(n + p);
        report.window_confirmed = confirmed;
    } else {
        // Any repeated window would prove periodicity, contradicting the algebra.
        const CountSeq f = train_counts(r, 3 * bound + max_r);
        report.window_confirmed = !window_period(f, max_r).has_value();
    }
    return report;
}

std::vector<OneExpansion> scan_one_expansions(const RodSet& r, Length bound) {
    if (r.empty()) throw DomainError("scan needs a nonempty rod set");
    if (bound < 1) throw DomainError("scan bound must be >= 1");
    const Length max_r = *r.max_length();
    const CountSeq f = train_counts(r, bound);
    std::vector<OneExpansion> hits;
    for (Length a = 1; a <= bound; ++a) {
        // With max R = 1 the zero window is empty.
        bool zeros = true;
        for (Length i = 1; zeros && i < max_r; ++i) zeros = f_at(f, a - i) == 0;
        if (!zeros || f.at(a) == 0) continue;
        RodSet s{RodTerm{a, f.at(a)}};
        RodSet q = finite_q(r, s);
        hits.push_back({a, f.at(a), std::move(s), std::move(q)});
    }
    return hits;
}

std::optional<ScalingHit> two_expansion_at(const RodSet& r, const CountSeq& f, Length a, Length b) {
    if (r.empty() || *r.max_length() < 2) throw DomainError("2-expansion test needs max R >= 2");
    if (a < 1 || b <= a) throw DomainError("2-expansion test needs 1 <= a < b");
    const Length max_r = *r.max_length();
    const Length c = b - a;

    // alpha from the largest window index with a nonzero denominator.
    std::optional<Integer> alpha;
    for (Length i = max_r - 1; i >= 1 && !alpha; --i) {
        const Integer den = f_at(f, c - i);
        if (den == 0) continue;
        const Integer num = f_at(f, b - i);
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return std::nullopt;
        alpha = num / den;
    }
    if (!alpha || *alpha == 0) return std::nullopt;
    for (Length i = 1; i < max_r; ++i)
        if (f_at(f, b - i) != *alpha * f_at(f, c - i)) return std::nullopt;

    Integer mult_b = f.at(b) - *alpha * f_at(f, c);
    if (mult_b == 0) return std::nullopt;

    RodSet s{RodTerm{a, *alpha}, RodTerm{b, mult_b}};
    RodSet q = finite_q(r, s);
    return ScalingHit{a, b, *alpha, *alpha, std::move(mult_b), std::move(s), std::move(q)};
}

std::vector<ScalingHit> scan_two_expansions(const RodSet& r, Length bound, ScanOptions options) {
    if (r.empty() || *r.max_length() < 2) throw DomainError("2-expansion scan needs max R >= 2");
    if (bound < 2) throw DomainError("scan bound must be >= 2");
    const CountSeq f = train_counts(r, bound);
    std::vector<ScalingHit> hits;
    for (Length b = 2; b <= bound; ++b) {
        for (Length a = 1; a < b; ++a) {
            auto hit = two_expansion_at(r, f, a, b);
            if (!hit) continue;
            if (!options.include_trivial && hit->s == r) continue;
            hits.push_back(std::move(*hit));
        }
    }
    return hits;
}

RodSet LucasParams::rods() const {
    if (s <= 0 || t <= 0) throw DomainError("Lucas parameters s and t must be positive");
    if (gcd(s, t) != 1) throw DomainError("Lucas parameters s and t must be relatively prime");
    if (sign != 1 && sign != -1) throw DomainError("Lucas sign must be +1 or -1");
    return RodSet{RodTerm{1, sign * s}, RodTerm{2, t}};
}

LucasReport lucas_check(const LucasParams& p, Length horizon) {
    if (horizon < 1) throw DomainError("horizon must be >= 1");
    const RodSet r = p.rods();
    LucasReport report;
    report.counts = train_counts(r, horizon);
    const auto& f = report.counts;

    if (p.s > 1) {
        for (Length n = 1; n <= horizon; ++n) {
            const bool divisible = mpz_divisible_p(f.at(n).get_mpz_t(), p.s.get_mpz_t()) != 0;
            if (divisible != (n % 2 == 1)) {
                report.counterexample = "s=" + p.s.get_str() + (divisible ? " divides" : " does not divide") +
                                        " F(" + std::to_string(n) + ")=" + f.at(n).get_str();
                return report;
            }
        }
    }
    // L(n) = F(n-1): m | n implies L(m) | L(n).
    for (Length n = 1; n <= horizon; ++n) {
        const Integer ln = f.at(n - 1);
        for (Length m = 1; m < n; ++m) {
            if (n % m != 0) continue;
            const Integer lm = f.at(m - 1);
            if (!mpz_divisible_p(ln.get_mpz_t(), lm.get_mpz_t())) {
                report.counterexample = "L(" + std::to_string(m) + ")=" + lm.get_str() + " does not divide L(" +
                                        std::to_string(n) + ")=" + ln.get_str();
                return report;
            }
        }
    }
    report.pass = true;
    return report;
}

std::vector<ScalingHit> lucas_two_shapes(const LucasParams& p, const ShapeFamily& family) {
    const RodSet r = p.rods();
    std::vector<std::pair<Length, Length>> shapes;
    bool adjacent = false;
    if (const auto* adj = std::get_if<AdjacentShapes>(&family)) {
        if (adj->from < 1 || adj->to < adj->from) throw DomainError("adjacent shapes need 1 <= from <= to");
        adjacent = true;
        for (Length a = adj->from; a <= adj->to; ++a) shapes.emplace_back(a, a + 1);
    } else if (const auto* skip = std::get_if<SkipShapes>(&family)) {
        if (skip->from < 1 || skip->to < skip->from) throw DomainError("skip shapes need 1 <= from <= to");
        for (Length a = skip->from; a <= skip->to; ++a) {
            if (p.s != 1 && a % 2 != 0)
                throw DomainError("shape <a,a+2> needs s = 1 or a even (a=" + std::to_string(a) + ")");
            shapes.emplace_back(a, a + 2);
        }
    } else {
        const auto& mul = std::get<MultipleShapes>(family);
        if (mul.d <= 2 || mul.kmax < 1) throw DomainError("multiple shapes need d > 2 and kmax >= 1");
        for (Length k = 1; k <= mul.kmax; ++k) shapes.emplace_back(k * mul.d, (k + 1) * mul.d);
    }

    const Length top = shapes.back().second;
    const CountSeq f = train_counts(r, top);
    std::vector<ScalingHit> hits;
    // Adjacent shapes are rebuilt independently: expanding every smallest rod
    // of the current S moves those rods into Q, one length at a time.
    RodSet chain_q;
    RodSet chain_s = r;
    for (const auto& [a, b] : shapes) {
        auto hit = two_expansion_at(r, f, a, b);
        if (!hit)
            throw std::logic_error("no 2-expansion of " + format_rodset(r) + " to shape <" + std::to_string(a) + "," +
                                   std::to_string(b) + ">");
        if (adjacent) {
            while (*chain_s.min_length() < a) {
                const auto& [len, mult] = *chain_s.begin();
                chain_q = unite(chain_q, RodSet{RodTerm{len, mult}});
                chain_s = *expand(r, chain_q, b).s.finite();
            }
            if (chain_s != hit->s || chain_q != hit->q)
                throw std::logic_error("adjacent shape disagrees with repeated expansion of the smallest rods");
        }
        hits.push_back(std::move(*hit));
    }
    return hits;
}

std::string residue_class(const SignedPair& p, Length modulus) {
    std::array<std::pair<Length, int>, 2> parts{{{p.a % modulus, p.sign_a}, {p.b % modulus, p.sign_b}}};
    std::sort(parts.begin(), parts.end());
    auto term = [](const std::pair<Length, int>& x) { return (x.second < 0 ? "-" : "") + std::to_string(x.first); };
    return "(" + term(parts[0]) + "," + term(parts[1]) + ") mod " + std::to_string(modulus);
}

BorweinTable borwein_classify(Length bound) {
    if (bound < 2) throw DomainError("Borwein bound must be >= 2");
    const RodSet period6{RodTerm{1, 1}, RodTerm{2, -1}};
    const RodSet period3{RodTerm{1, -1}, RodTerm{2, -1}};
    const Poly char6 = char_poly(period6);  // 1 - x + x^2
    const Poly char3 = char_poly(period3);  // 1 + x + x^2

    BorweinTable table;
    std::set<SignedPair> found6, found3;
    for (Length b = 2; b <= bound; ++b) {
        for (Length a = 1; a < b; ++a) {
            for (int sa : {1, -1}) {
                for (int sb : {1, -1}) {
                    const SignedPair pair{a, sa, b, sb};
                    const Poly trinomial = Poly{1} - Poly::monomial(sa, a) - Poly::monomial(sb, b);
                    if (poly_divexact(trinomial, char6)) {
                        table.hits_1_anti2[residue_class(pair, 6)].push_back(pair);
                        found6.insert(pair);
                    }
                    if (poly_divexact(trinomial, char3)) {
                        table.hits_anti1_anti2[residue_class(pair, 3)].push_back(pair);
                        found3.insert(pair);
                    }
                }
            }
        }
    }

    auto scanned = [bound](const RodSet& r, bool& unit_multiplicities) {
        std::set<SignedPair> out;
        for (const auto& hit : scan_two_expansions(r, bound, {.include_trivial = true})) {
            if (abs(hit.mult_a) != 1 || abs(hit.mult_b) != 1) unit_multiplicities = false;
            out.insert({hit.a, sgn(hit.mult_a), hit.b, sgn(hit.mult_b)});
        }
        return out;
    };
    bool unit = true;
    const bool agree6 = scanned(period6, unit) == found6;
    const bool agree3 = scanned(period3, unit) == found3;
    table.scan_agrees = agree6 && agree3 && unit;
    return table;
}

}  // namespace trainyard
