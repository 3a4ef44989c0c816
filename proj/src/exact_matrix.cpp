#include "binlab/exact_matrix.hpp"

#include <utility>

namespace binlab {

namespace {

// Column span [first, last) of the nonzero entries of each row of b.
template <typename T>
std::vector<std::pair<std::size_t, std::size_t>> row_supports(const Matrix<T>& b) {
    std::vector<std::pair<std::size_t, std::size_t>> spans(b.rows(), {0, 0});
    for (std::size_t l = 0; l < b.rows(); ++l) {
        std::size_t first = b.cols();
        std::size_t last = 0;
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (b(l, j) != 0) {
                if (first == b.cols()) first = j;
                last = j + 1;
            }
        }
        spans[l] = first < last ? std::make_pair(first, last) : std::make_pair(std::size_t{0}, std::size_t{0});
    }
    return spans;
}

template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: dimension mismatch " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()));
    Matrix<T> c(a.rows(), b.cols());
    const auto spans = row_supports(b);
    T prod;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const T& ail = a(i, l);
            if (ail == 0) continue;
            for (std::size_t j = spans[l].first; j < spans[l].second; ++j) {
                prod = ail * b(l, j);
                c(i, j) += prod;
            }
        }
    }
    return c;
}

bool unit_diagonal_sign(const ExactMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (a(i, i) != 1 && a(i, i) != -1) return false;
    return true;
}

}  // namespace

ExactMatrix window(const EntryFn& gen, std::size_t n, std::size_t m, std::uint64_t k) {
    ExactMatrix w(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) w(i, j) = gen(i, k + j);
    return w;
}

ExactMatrix diagonal(const std::vector<BigInt>& d) {
    ExactMatrix out(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) out(i, i) = d[i];
    return out;
}

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) { return multiply(a, b); }
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) { return multiply(a, b); }

ExactMatrix unimodular_triangular_inverse(const ExactMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse: matrix is not square");
    const bool upper = a.is_upper_triangular();
    if ((!upper && !a.is_lower_triangular()) || !unit_diagonal_sign(a))
        throw std::domain_error("inverse: matrix is not triangular with +-1 diagonal");
    if (!upper) return unimodular_triangular_inverse(a.transpose()).transpose();

    // Back substitution column by column; dividing by +-1 is multiplying by it.
    const std::size_t n = a.rows();
    ExactMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t ii = j + 1; ii-- > 0;) {
            BigInt acc = ii == j ? BigInt(1) : BigInt(0);
            for (std::size_t l = ii + 1; l <= j; ++l) acc -= a(ii, l) * inv(l, j);
            inv(ii, j) = acc * a(ii, ii);
        }
    }
    return inv;
}

ExactMatrix mat_pow(const ExactMatrix& a, std::int64_t e) {
    if (!a.is_square()) throw std::invalid_argument("mat_pow: matrix is not square");
    ExactMatrix base = e < 0 ? unimodular_triangular_inverse(a) : a;
    std::uint64_t exp = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    ExactMatrix result = ExactMatrix::identity(a.rows());
    while (exp > 0) {
        if (exp & 1U) result = mat_mul(result, base);
        exp >>= 1U;
        if (exp > 0) base = mat_mul(base, base);
    }
    return result;
}

BigInt determinant(const ExactMatrix& a) {
    if (!a.is_square())
        throw std::invalid_argument("determinant: matrix is " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()));
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    ExactMatrix m = a;
    BigInt prev = 1;
    int sign = 1;
    BigInt t;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && m(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                t = m(i, j) * m(k, k);
                t -= m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    return sign < 0 ? BigInt(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

RationalMatrix LDUFactors::product() const {
    RationalMatrix ld = L;
    for (std::size_t i = 0; i < ld.rows(); ++i)
        for (std::size_t j = 0; j < ld.cols(); ++j) ld(i, j) *= D[j];
    return mat_mul(ld, U);
}

SingularMinorError::SingularMinorError(std::size_t order)
    : std::domain_error("leading principal minor of order " + std::to_string(order) + " vanishes"), order_(order) {}

RationalMatrix to_rational(const ExactMatrix& a) {
    RationalMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
    return r;
}

LDUFactors ldu_decompose(const ExactMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("ldu_decompose: matrix is not square");
    const std::size_t n = a.rows();
    // Gaussian elimination without pivoting; the k-th pivot is det(A^(k+1)) / det(A^(k)).
    RationalMatrix work = to_rational(a);
    LDUFactors f{RationalMatrix::identity(n), std::vector<Rational>(n), RationalMatrix::identity(n)};
    for (std::size_t k = 0; k < n; ++k) {
        const Rational pivot = work(k, k);
        if (pivot == 0) throw SingularMinorError(k + 1);
        f.D[k] = pivot;
        for (std::size_t j = k + 1; j < n; ++j) f.U(k, j) = work(k, j) / pivot;
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational factor = work(i, k) / pivot;
            f.L(i, k) = factor;
            if (factor == 0) continue;
            for (std::size_t j = k + 1; j < n; ++j) work(i, j) -= factor * work(k, j);
        }
    }
    return f;
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d <= p / d; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t reduce_mod(const BigInt& x, std::uint64_t p) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
    return r.get_ui();
}

std::size_t rank_mod_p(std::vector<std::uint64_t> rows, std::size_t cols, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("rank_mod_p: " + std::to_string(p) + " is not prime");
    if (cols == 0) return 0;
    const std::size_t n = rows.size() / cols;
    auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
    };
    auto inverse = [&](std::uint64_t x) {
        std::uint64_t result = 1;
        std::uint64_t e = p - 2;
        while (e > 0) {
            if (e & 1U) result = mulmod(result, x);
            x = mulmod(x, x);
            e >>= 1U;
        }
        return result;
    };
    auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return rows[i * cols + j]; };

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < n; ++col) {
        // First nonzero at or below the current rank row.
        std::size_t piv = rank;
        while (piv < n && at(piv, col) == 0) ++piv;
        if (piv == n) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
        const std::uint64_t inv = inverse(at(rank, col));
        for (std::size_t j = col; j < cols; ++j) at(rank, j) = mulmod(at(rank, j), inv);
        for (std::size_t i = rank + 1; i < n; ++i) {
            const std::uint64_t factor = at(i, col);
            if (factor == 0) continue;
            for (std::size_t j = col; j < cols; ++j) at(i, j) = (at(i, j) + p - mulmod(factor, at(rank, j))) % p;
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_mod_p(const ExactMatrix& a, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("rank_mod_p: " + std::to_string(p) + " is not prime");
    std::vector<std::uint64_t> reduced;
    reduced.reserve(a.rows() * a.cols());
    for (const auto& x : a.entries()) reduced.push_back(reduce_mod(x, p));
    return rank_mod_p(std::move(reduced), a.cols(), p);
}

}  // namespace binlab
