#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "oracle.hpp"
#include "trainyard/error.hpp"
#include "trainyard/expansion.hpp"
#include "trainyard/series.hpp"
#include "trainyard/structure.hpp"

using namespace trainyard;

namespace {

RodSet rs(const char* text) { return parse_rodset(text); }

oracle::Terms terms_of(const RodSet& r) {
    oracle::Terms t;
    for (const auto& [len, m] : r) t[static_cast<long>(len)] = m;
    return t;
}

// (a, b, alpha, mult_b) for every 2-expansion found by solving the scaling
// window directly on power-sum counts.
std::set<std::tuple<long, long, oracle::Z, oracle::Z>> oracle_two_expansions(const RodSet& r, long bound,
                                                                           bool trivial) {
    const auto f = oracle::train_counts(terms_of(r), bound);
    auto F = [&](long n) { return n < 0 ? oracle::Z(0) : f[static_cast<std::size_t>(n)]; };
    const long m = static_cast<long>(*r.max_length());
    std::set<std::tuple<long, long, oracle::Z, oracle::Z>> out;
    for (long b = 2; b <= bound; ++b) {
        for (long a = 1; a < b; ++a) {
            // Candidate alpha from any nonzero denominator in the window.
            std::optional<oracle::Z> alpha;
            bool ok = true;
            for (long i = 1; i < m && ok; ++i) {
                const auto num = F(b - i), den = F(b - a - i);
                if (den == 0) {
                    ok = num == 0;
                } else if (num % den != 0) {
                    ok = false;
                } else if (!alpha) {
                    alpha = num / den;
                } else {
                    ok = *alpha == num / den;
                }
            }
            if (!ok) continue;
            // An all-zero (or empty) window leaves alpha undetermined.
            if (!alpha || *alpha == 0) continue;
            const oracle::Z beta = F(b) - *alpha * F(b - a);
            if (beta == 0) continue;
            // The quotient (1 - alpha x^a - beta x^b) / (1 - C_R) must be a polynomial.
            oracle::Coeffs trinomial(static_cast<std::size_t>(b + 1));
            trinomial[0] = 1;
            trinomial[static_cast<std::size_t>(a)] -= *alpha;
            trinomial[static_cast<std::size_t>(b)] -= beta;
            if (!oracle::divide(trinomial, char_poly(r).coefficients())) continue;
            const bool is_r = r.shape_size() == 2 && r.count(a) == *alpha && r.count(b) == beta;
            if (is_r && !trivial) continue;
            out.emplace(a, b, *alpha, beta);
        }
    }
    return out;
}

std::set<std::tuple<long, long, oracle::Z, oracle::Z>> as_tuples(const std::vector<ScalingHit>& hits) {
    std::set<std::tuple<long, long, oracle::Z, oracle::Z>> out;
    for (const auto& h : hits) out.emplace(h.a, h.b, h.alpha, h.mult_b);
    return out;
}

}  // namespace

TEST_CASE("periodic rod sets") {
    const auto six = detect_period(rs("[1,-2]"));
    CHECK(six.periodic);
    CHECK(six.least_period == 6);
    CHECK(six.q_to_period == rs("[1,-3,-4]"));
    CHECK(six.cyclotomic_factors == std::vector<Length>{6});
    CHECK(six.window_confirmed);

    const auto three = detect_period(rs("[-1,-2]"));
    CHECK(three.periodic);
    CHECK(three.least_period == 3);

    const auto thirty = detect_period(rs("[-1,3,4,5,-7,-8]"));
    CHECK(thirty.periodic);
    CHECK(thirty.least_period == 30);
    CHECK(thirty.window_confirmed);

    const auto linear = detect_period(rs("[1,1,-2]"));
    CHECK_FALSE(linear.periodic);
    CHECK(linear.window_confirmed);

    CHECK_THROWS_AS(detect_period(rs("[]")), DomainError);
}

TEST_CASE("the 105-cyclotomic rod set") {
    const RodSet r = rodset_from_char_poly(cyclotomic(105));
    CHECK(*r.max_length() == 48);
    CHECK(r.count(7) == 2);
    CHECK(r.count(41) == 2);
    for (const auto& [len, m] : r)
        if (len != 7 && len != 41) CHECK(abs(m) == 1);
    const auto p = detect_period(r);
    CHECK(p.periodic);
    CHECK(p.least_period == 105);
    CHECK(p.window_confirmed);
    const auto check = solve_q(r, RodSet{RodTerm{105, 1}}, 8);
    REQUIRE(check.q_finite.is_finite());
    CHECK(*check.q.finite() == p.q_to_period);
}

TEST_CASE("period factors multiply back to the characteristic polynomial") {
    std::mt19937_64 rng(11);
    int periodic = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto t = oracle::random_terms(rng, 6, 1, 0.6);
        if (t.empty()) continue;
        const RodSet r = parse_rodset(oracle::literal(t));
        const auto p = detect_period(r);
        CHECK(p.window_confirmed);
        if (!p.periodic) continue;
        ++periodic;
        oracle::Coeffs product{1};
        Length l = 1;
        for (Length d : p.cyclotomic_factors) {
            product = oracle::mul(product, oracle::cyclotomic(d));
            l = std::lcm(l, d);
        }
        // 1 - x stands in for Phi_1 = x - 1 so that the product has constant term 1.
        const bool has_one = !p.cyclotomic_factors.empty() && p.cyclotomic_factors.front() == 1;
        if (has_one) product = oracle::mul(product, {-1});
        CHECK(oracle::trim(product) == char_poly(r).coefficients());
        CHECK(l == p.least_period);
        const auto f = oracle::train_counts(t, 3 * p.least_period);
        for (Length n = p.least_period; n <= 3 * p.least_period; ++n)
            CHECK(f[static_cast<std::size_t>(n)] == f[static_cast<std::size_t>(n - p.least_period)]);
    }
    CHECK(periodic > 5);
}

TEST_CASE("window period helper") {
    CHECK(window_period(train_counts(rs("[1,-2]"), 30), 2) == 6);
    CHECK_FALSE(window_period(train_counts(rs("[1,2]"), 30), 2).has_value());
}

TEST_CASE("one-element expansions") {
    const auto hits = scan_one_expansions(rs("[-1^2,-2^2]"), 8);
    bool four = false, eight = false;
    for (const auto& h : hits) {
        if (h.a == 4) four = h.multiplicity == -4 && h.s == rs("[-4^4]");
        if (h.a == 8) eight = h.multiplicity == 16;
    }
    CHECK(four);
    CHECK(eight);

    const auto period = scan_one_expansions(rs("[1,-2]"), 7);
    REQUIRE(period.size() == 2);
    CHECK(period[0].a == 3);
    CHECK(period[0].multiplicity == -1);
    CHECK(period[1].a == 6);
    CHECK(period[1].multiplicity == 1);
    CHECK(period[1].q == rs("[1,-3,-4]"));

    CHECK(scan_one_expansions(rs("[1,2]"), 20).empty());

    // Every reported hit is an exact finite expansion.
    for (const auto& h : scan_one_expansions(rs("[1,-1^2,2,-3]"), 24)) {
        const auto e = solve_q(rs("[1,-1^2,2,-3]"), h.s, 8);
        REQUIRE(e.q_finite.is_finite());
        CHECK(*e.q.finite() == h.q);
    }
}

TEST_CASE("two-element expansions of [2,3]") {
    const auto hits = scan_two_expansions(rs("[2,3]"), 16);
    std::vector<std::pair<Length, RodSet>> got;
    for (const auto& h : hits) got.emplace_back(h.a, h.s);
    const std::vector<std::pair<Length, RodSet>> want{
        {1, rs("[1,5]")},     {2, rs("[2^2,-7]")}, {3, rs("[3^2,7]")},
        {4, rs("[4^3,13]")}, {5, rs("[5^4,14]")}, {7, rs("[7^7,16^2]")}};
    CHECK(got == want);
    CHECK(hits[0].q == rs("[-1,2]"));
    for (const auto& h : hits) CHECK(h.mult_a == h.alpha);
}

TEST_CASE("two-element expansions of [1,2] and [1,3]") {
    const auto fib = scan_two_expansions(rs("[1,2]"), 12);
    const ScalingHit* hit = nullptr;
    for (const auto& h : fib)
        if (h.a == 8 && h.b == 12) hit = &h;
    REQUIRE(hit != nullptr);
    CHECK(hit->alpha == 48);
    CHECK(hit->s == rs("[8^48,-12^7]"));

    std::set<std::string> found;
    for (const auto& h : scan_two_expansions(rs("[1,3]"), 33)) found.insert(format_rodset(h.s));
    auto has = [&](const char* lit) { return found.count(format_rodset(rs(lit))) == 1; };
    CHECK(has("[2^2,7]"));
    CHECK(has("[3^3,8]"));
    CHECK(has("[11^67,33]"));

    bool reflect = false;
    for (const auto& h : scan_two_expansions(rs("[1,-4]"), 13))
        reflect = reflect || (h.a == 6 && h.b == 13 && h.s == rs("[-6^3,-13]") && h.q == rs("[1,2,3,-5,6,9]"));
    CHECK(reflect);
}

TEST_CASE("the scan agrees with a direct scaling oracle") {
    for (const char* lit : {"[2,3]", "[1,2]", "[1,-3]", "[-2,3]", "[1^3,2^2]", "[1,-2]", "[2,-5]", "[1,2,3]",
                            "[1,-1^2,3]", "[3,4]"}) {
        const RodSet r = rs(lit);
        CAPTURE(lit);
        CHECK(as_tuples(scan_two_expansions(r, 24)) == oracle_two_expansions(r, 24, false));
        CHECK(as_tuples(scan_two_expansions(r, 24, {.include_trivial = true})) == oracle_two_expansions(r, 24, true));
    }
}

TEST_CASE("scan preconditions") {
    CHECK_THROWS_AS(scan_two_expansions(rs("[]"), 10), DomainError);
    CHECK_THROWS_AS(scan_one_expansions(rs("[]"), 10), DomainError);
}

TEST_CASE("Lucas rod sets") {
    const auto r = lucas_check({3, 2, 1}, 120);
    CHECK(r.pass);
    CHECK_FALSE(r.counterexample.has_value());
    const std::vector<Integer> prefix{1, 3, 11, 39, 139, 495, 1763};
    CHECK(std::vector<Integer>(r.counts.values.begin(), r.counts.values.begin() + 7) == prefix);
    CHECK(lucas_check({1, 1, 1}, 120).pass);
    CHECK(lucas_check({2, 3, -1}, 120).pass);
    CHECK(lucas_check({5, 7, -1}, 60).pass);
    CHECK_THROWS_AS(lucas_check({2, 4, 1}, 10), DomainError);
    CHECK_THROWS_AS(lucas_check({0, 1, 1}, 10), DomainError);
    CHECK_THROWS_AS(lucas_check({1, 1, 1}, 0), DomainError);
}

TEST_CASE("Lucas shapes") {
    const LucasParams p{3, 2, 1};
    const auto adjacent = lucas_two_shapes(p, AdjacentShapes{2, 4});
    REQUIRE(adjacent.size() == 3);
    CHECK(adjacent[0].s == rs("[2^11,3^6]"));
    CHECK(adjacent[1].s == rs("[3^39,4^22]"));
    CHECK(adjacent[2].s == rs("[4^139,5^78]"));

    const auto skip = lucas_two_shapes(p, SkipShapes{4, 4});
    REQUIRE(skip.size() == 1);
    CHECK(skip[0].s == rs("[4^165,-6^52]"));
    CHECK_THROWS_AS(lucas_two_shapes(p, SkipShapes{3, 3}), DomainError);
    CHECK(lucas_two_shapes({1, 1, 1}, SkipShapes{1, 5}).size() == 5);

    const auto multiple = lucas_two_shapes(p, MultipleShapes{4, 2});
    REQUIRE(multiple.size() == 2);
    CHECK(multiple[0].s == rs("[4^161,-8^16]"));
    CHECK(multiple[1].s == rs("[8^25905,-12^2576]"));
    CHECK_THROWS_AS(lucas_two_shapes(p, MultipleShapes{2, 2}), DomainError);

    // Adjacent exponents are F(a) and t F(a-1).
    const auto f = train_counts(p.rods(), 12);
    for (const auto& h : lucas_two_shapes(p, AdjacentShapes{1, 10})) {
        CHECK(h.alpha == f.at(h.a));
        CHECK(h.mult_b == 2 * f.at(h.a - 1));
    }
    for (const auto& h : lucas_two_shapes({2, 3, -1}, AdjacentShapes{1, 8})) CHECK(h.s.shape_size() == 2);
}

TEST_CASE("Borwein classification") {
    CHECK(residue_class({1, 1, 5, 1}, 6) == "(1,5) mod 6");
    CHECK(residue_class({2, -1, 7, 1}, 6) == "(1,-2) mod 6");
    CHECK(residue_class({4, -1, 5, -1}, 3) == "(-1,-2) mod 3");

    const auto table = borwein_classify(30);
    CHECK(table.scan_agrees);
    std::set<std::string> classes6, classes3;
    for (const auto& [cls, pairs] : table.hits_1_anti2) classes6.insert(cls);
    for (const auto& [cls, pairs] : table.hits_anti1_anti2) classes3.insert(cls);
    CHECK(classes6 == std::set<std::string>{"(1,5) mod 6", "(1,-2) mod 6", "(-2,-4) mod 6", "(-4,5) mod 6"});
    CHECK(classes3 == std::set<std::string>{"(-1,-2) mod 3"});

    // Membership agrees with schoolbook division for every signed pair.
    std::set<SignedPair> hit6, hit3;
    for (const auto& [cls, pairs] : table.hits_1_anti2) hit6.insert(pairs.begin(), pairs.end());
    for (const auto& [cls, pairs] : table.hits_anti1_anti2) hit3.insert(pairs.begin(), pairs.end());
    for (long b = 2; b <= 30; ++b)
        for (long a = 1; a < b; ++a)
            for (int sa : {1, -1})
                for (int sb : {1, -1}) {
                    oracle::Coeffs t(static_cast<std::size_t>(b + 1));
                    t[0] = 1;
                    t[static_cast<std::size_t>(a)] = -sa;
                    t[static_cast<std::size_t>(b)] = -sb;
                    const SignedPair pair{a, sa, b, sb};
                    CHECK(hit6.count(pair) == (oracle::divide(t, {1, -1, 1}) ? 1u : 0u));
                    CHECK(hit3.count(pair) == (oracle::divide(t, {1, 1, 1}) ? 1u : 0u));
                }
    CHECK(hit6.count({1, 1, 5, 1}) == 1);
    CHECK(hit6.count({1, 1, 2, -1}) == 1);
    CHECK(hit3.count({4, -1, 5, -1}) == 1);
    CHECK(hit3.count({4, 1, 5, 1}) == 0);
    CHECK_THROWS_AS(borwein_classify(1), DomainError);
}
