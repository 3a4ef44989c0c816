#pragma once

// Integer and +-1 sequences behind the matrix families.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "binlab/exact_matrix.hpp"

namespace binlab {

/// Binary digit sum (popcount).
constexpr unsigned s2(std::uint64_t n) noexcept { return static_cast<unsigned>(__builtin_popcountll(n)); }

/// t_i = s2(i) mod 2.
constexpr unsigned thue_morse(std::uint64_t i) noexcept { return s2(i) & 1U; }

/// binom(j, i) mod 2 by Lucas: 1 iff every bit of i is also set in j.
constexpr unsigned lucas_binom_mod2(std::uint64_t i, std::uint64_t j) noexcept { return (i & ~j) == 0 ? 1U : 0U; }

/// Exact binomial coefficient via the multiplicative formula; 0 when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Catalan number C_k. Values are memoized in a process-wide, mutex-guarded table.
BigInt catalan(std::uint64_t k);

/// binom(2k, k) - binom(2k, k-1).
BigInt catalan_difference_form(std::uint64_t k);

/// binom(2k, k) / (k + 1).
BigInt catalan_quotient_form(std::uint64_t k);

/// c_{2k} = (-1)^k C_k, c_{2k+1} = 0; with mod2 the value c_k mod 2 in {0, 1}.
BigInt catalan_interspersed(std::uint64_t k, bool mod2 = false);

/// Prefix of the paperfolding sequence F(1,-1,-1,-1,...) built by w -> w (-1) (-w^R).
std::vector<int> paperfolding(std::size_t length);

enum class SequenceKind { thue_morse, catalan, catalan_interspersed, catalan_interspersed_mod2, paperfolding };

std::string_view sequence_name(SequenceKind kind) noexcept;
SequenceKind parse_sequence_kind(std::string_view name);

/// Value at index n >= 0. Paperfolding is 1-indexed in the usual notation, so index n is s_{n+1}.
BigInt sequence_value(SequenceKind kind, std::uint64_t n);

std::vector<BigInt> sequence_prefix(SequenceKind kind, std::size_t length);

}  // namespace binlab
