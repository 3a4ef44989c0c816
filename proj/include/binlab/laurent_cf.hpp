#pragma once

// Truncated formal Laurent series in X^{-1} over Q and their continued
// fraction expansions with polynomial partial quotients.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binlab/exact_matrix.hpp"

namespace binlab {

/// Polynomial in X with rational coefficients, ascending degree, no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> ascending);
    static Poly monomial(Rational c, std::size_t degree);
    static Poly x() { return monomial(1, 1); }

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coefficient(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly&, const Poly&) = default;

    /// "X", "-1*X", "2*X^2 - 1/3*X + 1", "0".
    std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// sum_k coeffs[k] X^(start_exponent - k) + O(X^(start_exponent - precision)).
class LaurentSeries {
public:
    LaurentSeries(std::int64_t start_exponent, std::vector<Rational> descending)
        : start_(start_exponent), coeffs_(std::move(descending)) {}

    std::int64_t start_exponent() const noexcept { return start_; }
    std::size_t precision() const noexcept { return coeffs_.size(); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    /// Lowest exponent whose coefficient is known.
    std::int64_t lowest_known_exponent() const noexcept {
        return start_ - static_cast<std::int64_t>(coeffs_.size()) + 1;
    }
    /// Coefficient of X^e; throws when e is below the known precision.
    Rational coefficient(std::int64_t e) const;
    bool all_known_zero() const;

    /// Drops known zero leading coefficients; the start exponent moves down.
    LaurentSeries normalized() const;
    /// Reciprocal to the same relative precision. Throws if no known coefficient is nonzero.
    LaurentSeries reciprocal() const;
    /// Part with exponents >= 0, or nullopt when some of those coefficients are unknown.
    std::optional<Poly> polynomial_part() const;
    /// Part with exponents < 0.
    LaurentSeries fractional_part() const;

private:
    std::int64_t start_;
    std::vector<Rational> coeffs_;
};

enum class SeriesId { L1, L2 };

/// sum_{k < num_coeffs} c_k X^{-k-1} (L1) or with c_k mod 2 (L2).
LaurentSeries build_L(SeriesId which, std::size_t num_coeffs);

/// P / Q expanded with coefficients known down to X^lowest_exponent.
LaurentSeries series_of_quotient(const Poly& numerator, const Poly& denominator, std::int64_t lowest_exponent);

struct CFExpansion {
    Poly integer_part;
    std::vector<Poly> partial_quotients;
    /// Set when expansion stopped because the input precision could not certify another quotient.
    bool exhausted_precision = false;
};

CFExpansion cf_expand(const LaurentSeries& s, std::size_t max_quotients);

/// Convergent P_upto / Q_upto of [a_0; A_1, ..., A_upto].
std::pair<Poly, Poly> convergent(const CFExpansion& cf, std::size_t upto);

}  // namespace binlab
