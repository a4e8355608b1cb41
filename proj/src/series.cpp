#include "trainyard/series.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>

#include "trainyard/error.hpp"

namespace trainyard {

Poly::Poly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly::Poly(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

Poly Poly::monomial(const Integer& c, Length degree) {
    std::vector<Integer> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

Integer Poly::operator[](Length k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
    const auto& x = a.coefficients();
    const auto& y = b.coefficients();
    std::vector<Integer> out(std::max(x.size(), y.size()));
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
    for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
    return Poly(std::move(out));
}

Poly operator-(const Poly& a) {
    std::vector<Integer> out = a.coefficients();
    for (auto& c : out) c = -c;
    return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& x = a.coefficients();
    const auto& y = b.coefficients();
    std::vector<Integer> out(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j] != 0) mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
        }
    }
    return Poly(std::move(out));
}

namespace {

bool is_unit(const Integer& c) { return c == 1 || c == -1; }

// Low-order elimination: q_k = (p_k - sum_{j>=1} d_j q_{k-j}) / d_0.
std::optional<Poly> divide_ascending(const Poly& p, const Poly& d) {
    const Length n = p.degree() - d.degree();
    const Integer& d0 = d.coefficients().front();
    std::vector<Integer> q(static_cast<std::size_t>(n) + 1);
    for (Length k = 0; k <= n; ++k) {
        Integer acc = p[k];
        for (Length j = 1; j <= std::min(k, d.degree()); ++j) acc -= d[j] * q[static_cast<std::size_t>(k - j)];
        // d0 is a unit, so the division is exact.
        q[static_cast<std::size_t>(k)] = d0 == 1 ? acc : Integer(-acc);
    }
    Poly quotient(std::move(q));
    if (quotient * d != p) return std::nullopt;
    return quotient;
}

std::optional<Poly> divide_descending(const Poly& p, const Poly& d) {
    std::vector<Integer> rem = p.coefficients();
    const Length n = p.degree() - d.degree();
    const Integer& lead = d.coefficients().back();
    std::vector<Integer> q(static_cast<std::size_t>(n) + 1);
    for (Length k = n; k >= 0; --k) {
        Integer& top = rem[static_cast<std::size_t>(k + d.degree())];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        Integer factor = top / lead;
        for (Length j = 0; j <= d.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= factor * d[j];
        q[static_cast<std::size_t>(k)] = factor;
    }
    if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return c != 0; })) return std::nullopt;
    return Poly(std::move(q));
}

}  // namespace

std::optional<Poly> poly_divexact(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    if (p.is_zero()) return Poly{};
    if (p.degree() < d.degree()) return std::nullopt;
    if (is_unit(d.coefficients().front())) return divide_ascending(p, d);
    return divide_descending(p, d);
}

TruncatedSeries series_inverse(const Poly& p, Length horizon) {
    if (horizon < 0) throw DomainError("series horizon must be >= 0");
    const Integer p0 = p[0];
    if (!is_unit(p0)) throw DomainError("series inverse needs constant term +1 or -1");
    TruncatedSeries out;
    auto& q = out.coefficients;
    q.resize(static_cast<std::size_t>(horizon) + 1);
    q[0] = p0;
    for (Length n = 1; n <= horizon; ++n) {
        Integer acc = 0;
        for (Length k = 1; k <= std::min(n, p.degree()); ++k) {
            const Integer& pk = p.coefficients()[static_cast<std::size_t>(k)];
            if (pk != 0) mpz_addmul(acc.get_mpz_t(), pk.get_mpz_t(), q[static_cast<std::size_t>(n - k)].get_mpz_t());
        }
        q[static_cast<std::size_t>(n)] = p0 == 1 ? Integer(-acc) : acc;
    }
    return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const Length h = std::min(a.horizon(), b.horizon());
    TruncatedSeries out;
    out.coefficients.resize(static_cast<std::size_t>(std::max<Length>(h, -1) + 1));
    for (Length i = 0; i <= h; ++i)
        for (Length j = 0; i + j <= h; ++j)
            out.coefficients[static_cast<std::size_t>(i + j)] +=
                a.coefficients[static_cast<std::size_t>(i)] * b.coefficients[static_cast<std::size_t>(j)];
    return out;
}

namespace {

struct CyclotomicCache {
    std::mutex mutex;
    std::map<Length, std::unique_ptr<const Poly>> entries;
};

CyclotomicCache& cyclotomic_cache() {
    static CyclotomicCache cache;
    return cache;
}

}  // namespace

const Poly& cyclotomic(Length d) {
    if (d < 1) throw DomainError("cyclotomic index must be >= 1");
    auto& cache = cyclotomic_cache();
    {
        std::lock_guard lock(cache.mutex);
        if (auto it = cache.entries.find(d); it != cache.entries.end()) return *it->second;
    }
    // x^d - 1 divided exactly by every Phi_e with e | d, e < d.
    Poly value = Poly::monomial(1, d) - Poly{1};
    for (Length e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        auto q = poly_divexact(value, cyclotomic(e));
        if (!q) throw std::logic_error("cyclotomic: inexact division");
        value = std::move(*q);
    }
    std::lock_guard lock(cache.mutex);
    auto [it, inserted] = cache.entries.try_emplace(d, std::make_unique<const Poly>(std::move(value)));
    return *it->second;
}

Poly rod_poly(const RodSet& rods) {
    if (rods.empty()) return {};
    std::vector<Integer> c(static_cast<std::size_t>(*rods.max_length()) + 1);
    for (const auto& [l, m] : rods) c[static_cast<std::size_t>(l)] = m;
    return Poly(std::move(c));
}

Poly char_poly(const RodSet& rods) { return Poly{1} - rod_poly(rods); }

RodSet rodset_from_char_poly(const Poly& p) {
    if (p[0] != 1) throw DomainError("characteristic polynomial must have constant term 1");
    std::vector<RodTerm> terms;
    for (Length k = 1; k <= p.degree(); ++k)
        if (p[k] != 0) terms.push_back({k, -p[k]});
    return RodSet(terms);
}

std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (Length k = 0; k <= p.degree(); ++k) {
        const Integer c = p[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const Integer mag = abs(c);
        if (k == 0 || mag != 1) out += mag.get_str();
        if (k >= 1) out += 'x';
        if (k >= 2) out += '^' + std::to_string(k);
    }
    return out;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    Poly parse() {
        if (text_.find('x') == std::string_view::npos && text_.find(',') != std::string_view::npos)
            return coefficient_list();
        Poly acc;
        skip_ws();
        int sign = 1;
        if (peek() == '-' || peek() == '+') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        acc = acc + term(sign);
        for (;;) {
            skip_ws();
            if (pos_ == text_.size()) break;
            if (peek() != '-' && peek() != '+') fail("expected '+' or '-'");
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
            acc = acc + term(sign);
        }
        return acc;
    }

private:
    Poly coefficient_list() {
        std::vector<Integer> c;
        for (;;) {
            skip_ws();
            int sign = 1;
            if (peek() == '-' || peek() == '+') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            }
            c.push_back(sign * integer());
            skip_ws();
            if (pos_ == text_.size()) break;
            if (peek() != ',') fail("expected ','");
            ++pos_;
        }
        return Poly(std::move(c));
    }

    Poly term(int sign) {
        skip_ws();
        Integer coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = integer();
            have_coeff = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
            }
        }
        Length degree = 0;
        if (peek() == 'x') {
            ++pos_;
            degree = 1;
            if (peek() == '^') {
                ++pos_;
                Integer e = integer();
                if (!e.fits_slong_p()) fail("exponent too large");
                degree = e.get_si();
            }
        } else if (!have_coeff) {
            fail("expected a term");
        }
        return Poly::monomial(sign * coeff, degree);
    }

    Integer integer() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError("polynomial: " + msg, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace trainyard
