#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's arithmetic: sequences come from power sums and brute force, and
// polynomial division is schoolbook long division over the rationals.

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Z = mpz_class;
using Coeffs = std::vector<Z>;
using Terms = std::map<long, Z>;  // length -> net multiplicity

inline Coeffs truncate(Coeffs v, long n) {
    v.resize(static_cast<std::size_t>(n + 1));
    return v;
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b, long n = -1) {
    if (a.empty() || b.empty()) return {};
    const long top = static_cast<long>(a.size() + b.size()) - 2;
    const long limit = n < 0 ? top : std::min(top, n);
    Coeffs out(static_cast<std::size_t>(limit + 1));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size() && static_cast<long>(i + j) <= limit; ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline Coeffs add(Coeffs a, const Coeffs& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

inline Coeffs trim(Coeffs v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

// C(x,R) as a coefficient list (index = length).
inline Coeffs rod_gf(const Terms& t, long n) {
    Coeffs c(static_cast<std::size_t>(n + 1));
    for (const auto& [len, m] : t)
        if (len <= n) c[static_cast<std::size_t>(len)] += m;
    return c;
}

// F(0..n) as sum_k C(x)^k: every train is a k-fold sequence of rods.
inline Coeffs train_counts(const Terms& t, long n) {
    Coeffs total(static_cast<std::size_t>(n + 1));
    total[0] = 1;
    Coeffs power{Z(1)};
    const Coeffs c = rod_gf(t, n);
    for (long k = 1; k <= n; ++k) {
        power = mul(power, c, n);
        bool any = false;
        for (const auto& v : power) any = any || v != 0;
        if (!any) break;
        total = add(total, power);
    }
    return truncate(total, n);
}

// Brute force over compositions of n, weighting each part by its multiplicity.
inline Z compositions(const Terms& t, long n) {
    if (n == 0) return 1;
    Z acc = 0;
    for (const auto& [len, m] : t)
        if (len <= n) acc += m * compositions(t, n - len);
    return acc;
}

// Exact quotient by schoolbook long division (leading coefficient must divide).
inline std::optional<Coeffs> divide(Coeffs p, Coeffs d) {
    p = trim(p);
    d = trim(d);
    if (p.empty()) return Coeffs{};
    if (p.size() < d.size()) return std::nullopt;
    Coeffs q(p.size() - d.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        const Z& top = p[k + d.size() - 1];
        if (top % d.back() != 0) return std::nullopt;
        q[k] = top / d.back();
        for (std::size_t j = 0; j < d.size(); ++j) p[k + j] -= q[k] * d[j];
    }
    for (const auto& v : p)
        if (v != 0) return std::nullopt;
    return trim(q);
}

inline long totient(long n) {
    long count = 0;
    for (long k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

inline int mobius(long n) {
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    return n > 1 ? -mu : mu;
}

// Phi_n = prod_{d|n} (x^d - 1)^mu(n/d).
inline Coeffs cyclotomic(long n) {
    Coeffs num{Z(1)}, den{Z(1)};
    for (long d = 1; d <= n; ++d) {
        if (n % d) continue;
        Coeffs f(static_cast<std::size_t>(d + 1));
        f[0] = -1;
        f[static_cast<std::size_t>(d)] = 1;
        const int mu = mobius(n / d);
        if (mu == 1) num = mul(num, f);
        if (mu == -1) den = mul(den, f);
    }
    return *divide(num, den);
}

inline Z binomial(long n, long k) {
    Z out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

// Random small rod set: lengths in [1, max_len], multiplicities in [-m, m] \ {0}.
inline Terms random_terms(std::mt19937_64& rng, long max_len, int m, double density = 0.5) {
    Terms t;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> mult(1, m);
    for (long len = 1; len <= max_len; ++len) {
        if (coin(rng) >= density) continue;
        int v = mult(rng);
        if (coin(rng) < 0.5) v = -v;
        t[len] = v;
    }
    return t;
}

inline std::string literal(const Terms& t) {
    std::string out = "[";
    bool first = true;
    for (const auto& [len, m] : t) {
        if (m == 0) continue;
        if (!first) out += ',';
        first = false;
        if (m < 0) out += '-';
        out += std::to_string(len);
        const Z mag = abs(m);
        if (mag != 1) out += "^" + mag.get_str();
    }
    return out + "]";
}

}  // namespace oracle
