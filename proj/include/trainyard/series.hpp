#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trainyard/integer.hpp"
#include "trainyard/rodset.hpp"

namespace trainyard {

/// Integer polynomial in ascending order; the zero polynomial has no
/// coefficients and the top stored coefficient is never zero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Integer> coefficients);
    Poly(std::initializer_list<long> coefficients);

    static Poly monomial(const Integer& c, Length degree);

    /// -1 for the zero polynomial.
    Length degree() const noexcept { return static_cast<Length>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Coefficient of x^k, zero outside the stored range.
    Integer operator[](Length k) const;
    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Power series known through x^horizon; always horizon+1 coefficients.
struct TruncatedSeries {
    std::vector<Integer> coefficients;

    Length horizon() const noexcept { return static_cast<Length>(coefficients.size()) - 1; }
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);
inline Poly operator*(const Poly& a, const Poly& b) { return poly_mul(a, b); }

/// Exact quotient p / d, or nullopt when d does not divide p over Z.
/// Throws DomainError when d is zero.
std::optional<Poly> poly_divexact(const Poly& p, const Poly& d);

/// First horizon+1 coefficients of 1/p. Requires p(0) = +-1.
TruncatedSeries series_inverse(const Poly& p, Length horizon);

/// Product of two series truncated at min(horizon) of the inputs.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// d-th cyclotomic polynomial. Results are cached process-wide; safe to call
/// concurrently.
const Poly& cyclotomic(Length d);

/// Rod generating function C(x, R) = sum of C(n,R) x^n.
Poly rod_poly(const RodSet& rods);
/// 1 - C(x, R).
Poly char_poly(const RodSet& rods);
/// Inverse of char_poly: the rod set R with 1 - C(x,R) = p. Requires p(0) = 1.
RodSet rodset_from_char_poly(const Poly& p);

/// "1 - x - x^2" style, ascending with explicit signs; "0" for zero.
std::string format_poly(const Poly& p);
/// Accepts the format_poly grammar or a comma-separated coefficient list.
Poly parse_poly(std::string_view text);

}  // namespace trainyard
