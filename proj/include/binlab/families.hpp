#pragma once

// Entry generators for the Pascal, mod-2 Pascal and Hankel families.

#include <cstdint>
#include <string>
#include <string_view>

#include "binlab/exact_matrix.hpp"
#include "binlab/seq_kit.hpp"

namespace binlab {

enum class FamilyKind {
    P1,      // binom(j, i) a^(j-i)
    P2,      // binom(i+j, i)
    M1,      // (binom(j, i) mod 2) a^(s2(j)-s2(i))
    M2,      // binom(i+j, i) mod 2
    Hankel,  // seq(i+j)
};

struct FamilyId {
    FamilyKind kind = FamilyKind::P1;
    std::int64_t a = 1;
    SequenceKind seq = SequenceKind::catalan_interspersed;

    static FamilyId p1(std::int64_t a) { return {FamilyKind::P1, a, {}}; }
    static FamilyId p2() { return {FamilyKind::P2, 1, {}}; }
    static FamilyId m1(std::int64_t a) { return {FamilyKind::M1, a, {}}; }
    static FamilyId m2() { return {FamilyKind::M2, 1, {}}; }
    static FamilyId hankel(SequenceKind s) { return {FamilyKind::Hankel, 1, s}; }
    static FamilyId h1() { return hankel(SequenceKind::catalan_interspersed); }
    static FamilyId h2() { return hankel(SequenceKind::catalan_interspersed_mod2); }

    friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

/// Accepts "P1:a=3", "M1:a=-2", "P1" (a=1), "P2", "M2", "H1", "H2" and "Hankel:<sequence>".
FamilyId parse_family(std::string_view text);
std::string format_family(const FamilyId& f);

BigInt entry(const FamilyId& f, std::uint64_t i, std::uint64_t j);

EntryFn generator(const FamilyId& f);

inline ExactMatrix window(const FamilyId& f, std::size_t n, std::size_t m, std::uint64_t k = 0) {
    return window(generator(f), n, m, k);
}
inline ExactMatrix window(const FamilyId& f, std::size_t n) { return window(generator(f), n, n, 0); }

/// Closed form of the mod-2 Catalan Hankel entries: 1 iff i + j + 2 is a power of two.
constexpr unsigned h2_structure_entry(std::uint64_t i, std::uint64_t j) noexcept {
    const std::uint64_t v = i + j + 2;
    return (v & (v - 1)) == 0 ? 1U : 0U;
}

}  // namespace binlab
