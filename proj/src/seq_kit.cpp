#include "binlab/seq_kit.hpp"

#include <array>
#include <mutex>
#include <stdexcept>

namespace binlab {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    // r = binom(n - k + i, i) after step i, so each division is exact.
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);
    }
    return r;
}

BigInt catalan_difference_form(std::uint64_t k) {
    BigInt r = binomial(2 * k, k);
    if (k > 0) r -= binomial(2 * k, k - 1);
    return r;
}

BigInt catalan_quotient_form(std::uint64_t k) {
    BigInt r = binomial(2 * k, k);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), k + 1);
    return r;
}

namespace {

std::mutex catalan_mutex;
std::vector<BigInt> catalan_table{BigInt(1)};

}  // namespace

BigInt catalan(std::uint64_t k) {
    std::lock_guard lock(catalan_mutex);
    // C_{k+1} = C_k * 2(2k+1) / (k+2)
    while (catalan_table.size() <= k) {
        const std::uint64_t i = catalan_table.size() - 1;
        BigInt next = catalan_table.back() * (2 * (2 * i + 1));
        mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), i + 2);
        catalan_table.push_back(std::move(next));
    }
    return catalan_table[k];
}

BigInt catalan_interspersed(std::uint64_t k, bool mod2) {
    if (k % 2 == 1) return 0;
    const std::uint64_t half = k / 2;
    BigInt c = catalan(half);
    if (mod2) return mpz_odd_p(c.get_mpz_t()) ? 1 : 0;
    if (half % 2 == 1) c = -c;
    return c;
}

std::vector<int> paperfolding(std::size_t length) {
    std::vector<int> w{1};
    while (w.size() < length) {
        const std::size_t n = w.size();
        w.push_back(-1);
        for (std::size_t r = n; r-- > 0;) w.push_back(-w[r]);
    }
    w.resize(length);
    return w;
}

namespace {

constexpr std::array<std::pair<SequenceKind, std::string_view>, 5> kSequenceNames{{
    {SequenceKind::thue_morse, "thue_morse"},
    {SequenceKind::catalan, "catalan"},
    {SequenceKind::catalan_interspersed, "catalan_interspersed"},
    {SequenceKind::catalan_interspersed_mod2, "catalan_interspersed_mod2"},
    {SequenceKind::paperfolding, "paperfolding"},
}};

}  // namespace

std::string_view sequence_name(SequenceKind kind) noexcept {
    for (const auto& [k, name] : kSequenceNames)
        if (k == kind) return name;
    return "unknown";
}

SequenceKind parse_sequence_kind(std::string_view name) {
    for (const auto& [k, n] : kSequenceNames)
        if (n == name) return k;
    throw std::invalid_argument("unknown sequence kind '" + std::string(name) + "'");
}

BigInt sequence_value(SequenceKind kind, std::uint64_t n) {
    switch (kind) {
    case SequenceKind::thue_morse: return thue_morse(n);
    case SequenceKind::catalan: return catalan(n);
    case SequenceKind::catalan_interspersed: return catalan_interspersed(n, false);
    case SequenceKind::catalan_interspersed_mod2: return catalan_interspersed(n, true);
    case SequenceKind::paperfolding: return paperfolding(n + 1).back();
    }
    throw std::logic_error("unhandled sequence kind");
}

std::vector<BigInt> sequence_prefix(SequenceKind kind, std::size_t length) {
    std::vector<BigInt> out;
    out.reserve(length);
    if (kind == SequenceKind::paperfolding) {
        for (int s : paperfolding(length)) out.emplace_back(s);
        return out;
    }
    for (std::size_t n = 0; n < length; ++n) out.push_back(sequence_value(kind, n));
    return out;
}

}  // namespace binlab
