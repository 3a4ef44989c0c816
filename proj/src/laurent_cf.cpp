#include "binlab/laurent_cf.hpp"

#include <stdexcept>

#include "binlab/seq_kit.hpp"

namespace binlab {

Poly::Poly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Poly Poly::monomial(Rational c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = std::move(c);
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) + b.coefficient(i);
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(v));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t d = coeffs_.size(); d-- > 0;) {
        Rational c = coeffs_[d];
        if (c == 0) continue;
        if (!out.empty()) {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        if (d == 0) {
            out += c.get_str();
            continue;
        }
        if (c != 1) out += c.get_str() + "*";
        out += "X";
        if (d > 1) out += "^" + std::to_string(d);
    }
    return out;
}

Rational LaurentSeries::coefficient(std::int64_t e) const {
    if (e > start_) return 0;
    if (e < lowest_known_exponent())
        throw std::out_of_range("coefficient of X^" + std::to_string(e) + " is beyond the known precision");
    return coeffs_[static_cast<std::size_t>(start_ - e)];
}

bool LaurentSeries::all_known_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

LaurentSeries LaurentSeries::normalized() const {
    std::size_t skip = 0;
    while (skip < coeffs_.size() && coeffs_[skip] == 0) ++skip;
    return {start_ - static_cast<std::int64_t>(skip),
            std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(skip), coeffs_.end())};
}

LaurentSeries LaurentSeries::reciprocal() const {
    const LaurentSeries s = normalized();
    if (s.precision() == 0) throw std::domain_error("reciprocal of a series with no known nonzero coefficient");
    const auto& c = s.coeffs_;
    const std::size_t n = c.size();
    std::vector<Rational> b(n);
    const Rational inv_lead = 1 / c[0];
    b[0] = inv_lead;
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= k; ++i) acc += c[i] * b[k - i];
        b[k] = -acc * inv_lead;
    }
    return {-s.start_, std::move(b)};
}

std::optional<Poly> LaurentSeries::polynomial_part() const {
    if (start_ < 0) return Poly{};
    if (lowest_known_exponent() > 0) return std::nullopt;
    std::vector<Rational> asc(static_cast<std::size_t>(start_) + 1);
    for (std::int64_t e = 0; e <= start_; ++e) asc[static_cast<std::size_t>(e)] = coefficient(e);
    return Poly(std::move(asc));
}

LaurentSeries LaurentSeries::fractional_part() const {
    if (start_ < 0) return *this;
    const auto drop = static_cast<std::size_t>(start_) + 1;
    if (drop >= coeffs_.size()) return {-1, {}};
    return {-1, std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(drop), coeffs_.end())};
}

LaurentSeries build_L(SeriesId which, std::size_t num_coeffs) {
    std::vector<Rational> c;
    c.reserve(num_coeffs);
    for (std::size_t k = 0; k < num_coeffs; ++k) c.emplace_back(catalan_interspersed(k, which == SeriesId::L2));
    return {-1, std::move(c)};
}

LaurentSeries series_of_quotient(const Poly& numerator, const Poly& denominator, std::int64_t lowest_exponent) {
    if (denominator.is_zero()) throw std::domain_error("series_of_quotient: zero denominator");
    if (numerator.is_zero()) {
        // Zero to any precision; represent with explicit zeros down to lowest_exponent.
        const std::int64_t n = std::max<std::int64_t>(0, -lowest_exponent);
        return {-1, std::vector<Rational>(static_cast<std::size_t>(n))};
    }
    const std::int64_t start = numerator.degree() - denominator.degree();
    if (lowest_exponent > start) return {start, {}};
    const auto n = static_cast<std::size_t>(start - lowest_exponent + 1);
    // Both operands as power series in X^{-1} starting from their leading terms.
    auto descending = [n](const Poly& p) {
        std::vector<Rational> v(n);
        for (std::size_t k = 0; k < n && static_cast<long>(k) <= p.degree(); ++k)
            v[k] = p.coefficient(static_cast<std::size_t>(p.degree()) - k);
        return v;
    };
    const auto num = descending(numerator);
    const auto den = descending(denominator);
    std::vector<Rational> q(n);
    for (std::size_t k = 0; k < n; ++k) {
        Rational acc = num[k];
        for (std::size_t i = 1; i <= k; ++i) acc -= den[i] * q[k - i];
        q[k] = acc / den[0];
    }
    return {start, std::move(q)};
}

CFExpansion cf_expand(const LaurentSeries& s, std::size_t max_quotients) {
    if (s.all_known_zero()) throw std::invalid_argument("cf_expand: zero series");
    CFExpansion cf;
    const auto head = s.polynomial_part();
    if (!head) {
        cf.exhausted_precision = true;
        return cf;
    }
    cf.integer_part = *head;
    LaurentSeries rest = s.fractional_part();
    while (cf.partial_quotients.size() < max_quotients) {
        // An all-zero known remainder cannot be told apart from an unknown tail.
        if (rest.all_known_zero()) {
            cf.exhausted_precision = true;
            break;
        }
        const LaurentSeries inverted = rest.reciprocal();
        auto quotient = inverted.polynomial_part();
        if (!quotient) {
            cf.exhausted_precision = true;
            break;
        }
        cf.partial_quotients.push_back(std::move(*quotient));
        rest = inverted.fractional_part();
    }
    return cf;
}

std::pair<Poly, Poly> convergent(const CFExpansion& cf, std::size_t upto) {
    if (upto > cf.partial_quotients.size())
        throw std::out_of_range("convergent: only " + std::to_string(cf.partial_quotients.size()) + " quotients");
    Poly p_prev = Poly::monomial(1, 0);
    Poly q_prev{};
    Poly p = cf.integer_part;
    Poly q = Poly::monomial(1, 0);
    for (std::size_t i = 0; i < upto; ++i) {
        const Poly& a = cf.partial_quotients[i];
        Poly p_next = a * p + p_prev;
        Poly q_next = a * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
    }
    return {p, q};
}

}  // namespace binlab
