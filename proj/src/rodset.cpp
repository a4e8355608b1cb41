#include "trainyard/rodset.hpp"

#include <cctype>
#include <numeric>

#include "trainyard/error.hpp"

namespace trainyard {

RodSet::RodSet(std::span<const RodTerm> terms) {
    for (const auto& t : terms) add(t.length, t.count);
}

RodSet::RodSet(std::initializer_list<RodTerm> terms)
    : RodSet(std::span<const RodTerm>(terms.begin(), terms.size())) {}

RodSet RodSet::from_counts(std::span<const Integer> counts) {
    RodSet out;
    for (std::size_t i = 0; i < counts.size(); ++i)
        out.add(static_cast<Length>(i) + 1, counts[i]);
    return out;
}

void RodSet::add(Length length, const Integer& count) {
    if (length < 1) throw DomainError("rod length must be >= 1, got " + std::to_string(length));
    if (count == 0) return;
    auto [it, inserted] = entries_.try_emplace(length, count);
    if (!inserted) {
        it->second += count;
        if (it->second == 0) entries_.erase(it);
    }
}

Integer RodSet::count(Length n) const {
    auto it = entries_.find(n);
    return it == entries_.end() ? Integer(0) : it->second;
}

std::optional<Length> RodSet::min_length() const {
    if (entries_.empty()) return std::nullopt;
    return entries_.begin()->first;
}

std::optional<Length> RodSet::max_length() const {
    if (entries_.empty()) return std::nullopt;
    return entries_.rbegin()->first;
}

namespace {

class LiteralParser {
public:
    explicit LiteralParser(std::string_view text) : text_(text) {}

    std::vector<RodTerm> parse() {
        std::vector<RodTerm> terms;
        skip_ws();
        expect('[');
        skip_ws();
        if (peek() == ']') {
            ++pos_;
        } else {
            for (;;) {
                terms.push_back(term());
                skip_ws();
                if (peek() == ',') {
                    ++pos_;
                    skip_ws();
                    continue;
                }
                expect(']');
                break;
            }
        }
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return terms;
    }

private:
    RodTerm term() {
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos_;
        }
        const std::size_t length_pos = pos_;
        Integer length = integer("rod length");
        if (length == 0) fail("rod length must be >= 1", length_pos);
        if (!length.fits_slong_p()) fail("rod length too large", length_pos);
        Integer count = 1;
        if (peek() == '^') {
            ++pos_;
            const std::size_t count_pos = pos_;
            count = integer("rod count");
            if (count == 0) fail("rod count must be >= 1", count_pos);
        }
        return {static_cast<Length>(length.get_si()), sign * count};
    }

    Integer integer(const char* what) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail(std::string("expected ") + what);
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }
    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw ParseError("rod set literal: " + msg, at);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<RodTerm> parse_rod_terms(std::string_view text) { return LiteralParser(text).parse(); }

RodSet parse_rodset(std::string_view text) {
    const auto terms = parse_rod_terms(text);
    return RodSet(terms);
}

std::string format_rodset(const RodSet& rods) {
    std::string out = "[";
    bool first = true;
    for (const auto& [length, count] : rods) {
        if (!first) out += ',';
        first = false;
        if (count < 0) out += '-';
        out += std::to_string(length);
        Integer magnitude = abs(count);
        if (magnitude >= 2) {
            out += '^';
            out += magnitude.get_str();
        }
    }
    out += ']';
    return out;
}

RodSet unite(const RodSet& lhs, const RodSet& rhs) {
    std::vector<RodTerm> terms;
    terms.reserve(lhs.shape_size() + rhs.shape_size());
    for (const auto& [l, c] : lhs) terms.push_back({l, c});
    for (const auto& [l, c] : rhs) terms.push_back({l, c});
    return RodSet(terms);
}

RodSet negate(const RodSet& rods) {
    std::vector<RodTerm> terms;
    for (const auto& [l, c] : rods) terms.push_back({l, -c});
    return RodSet(terms);
}

RodSet concat(const RodSet& lhs, const RodSet& rhs) {
    std::vector<RodTerm> terms;
    terms.reserve(lhs.shape_size() * rhs.shape_size());
    for (const auto& [a, ca] : lhs)
        for (const auto& [b, cb] : rhs) terms.push_back({a + b, ca * cb});
    return RodSet(terms);
}

ShapeReport describe(const RodSet& rods) {
    ShapeReport r;
    r.empty = rods.empty();
    r.min = rods.min_length();
    r.max = rods.max_length();
    r.size = 0;
    Length g = 0;
    for (const auto& [l, c] : rods) {
        r.shape.push_back(l);
        r.multiplicities.push_back(c);
        r.size += abs(c);
        if (c < 0) r.positive = false;
        g = std::gcd(g, l);
    }
    r.primitive = !r.empty && g == 1;
    return r;
}

bool equivalent(const RodSet& lhs, const RodSet& rhs) { return lhs == rhs; }

RodSet odd_sign_swap(const RodSet& rods) {
    std::vector<RodTerm> terms;
    for (const auto& [l, c] : rods) terms.push_back({l, l % 2 != 0 ? Integer(-c) : c});
    return RodSet(terms);
}

}  // namespace trainyard
