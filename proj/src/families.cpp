#include "binlab/families.hpp"

#include <charconv>
#include <stdexcept>

namespace binlab {

namespace {

std::int64_t parse_parameter(std::string_view text, std::string_view whole) {
    if (text.substr(0, 2) != "a=") throw std::invalid_argument("bad family parameter in '" + std::string(whole) + "'");
    text.remove_prefix(2);
    std::int64_t a = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), a);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("bad family parameter in '" + std::string(whole) + "'");
    return a;
}

BigInt power(std::int64_t base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), BigInt(static_cast<long>(base)).get_mpz_t(), exp);
    return r;
}

}  // namespace

FamilyId parse_family(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    const std::string_view tail = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    auto no_tail = [&](FamilyId f) {
        if (!tail.empty()) throw std::invalid_argument("family '" + std::string(head) + "' takes no parameter");
        return f;
    };
    if (head == "P1") return FamilyId::p1(tail.empty() ? 1 : parse_parameter(tail, text));
    if (head == "M1") return FamilyId::m1(tail.empty() ? 1 : parse_parameter(tail, text));
    if (head == "P2") return no_tail(FamilyId::p2());
    if (head == "M2") return no_tail(FamilyId::m2());
    if (head == "H1") return no_tail(FamilyId::h1());
    if (head == "H2") return no_tail(FamilyId::h2());
    if (head == "Hankel") return FamilyId::hankel(parse_sequence_kind(tail));
    throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

std::string format_family(const FamilyId& f) {
    switch (f.kind) {
    case FamilyKind::P1: return "P1:a=" + std::to_string(f.a);
    case FamilyKind::P2: return "P2";
    case FamilyKind::M1: return "M1:a=" + std::to_string(f.a);
    case FamilyKind::M2: return "M2";
    case FamilyKind::Hankel:
        if (f.seq == SequenceKind::catalan_interspersed) return "H1";
        if (f.seq == SequenceKind::catalan_interspersed_mod2) return "H2";
        return "Hankel:" + std::string(sequence_name(f.seq));
    }
    return "?";
}

BigInt entry(const FamilyId& f, std::uint64_t i, std::uint64_t j) {
    switch (f.kind) {
    case FamilyKind::P1:
        if (f.a == 0) return i == j ? 1 : 0;
        if (i > j) return 0;
        return binomial(j, i) * power(f.a, j - i);
    case FamilyKind::P2: return binomial(i + j, i);
    case FamilyKind::M1:
        if (f.a == 0) return i == j ? 1 : 0;
        // The Lucas bit is set only when the bits of i are a subset of those of j,
        // so s2(j) - s2(i) is then nonnegative.
        if (lucas_binom_mod2(i, j) == 0) return 0;
        return power(f.a, s2(j) - s2(i));
    case FamilyKind::M2: return lucas_binom_mod2(i, i + j);
    case FamilyKind::Hankel: return sequence_value(f.seq, i + j);
    }
    throw std::logic_error("unhandled family kind");
}

EntryFn generator(const FamilyId& f) {
    return [f](std::uint64_t i, std::uint64_t j) { return entry(f, i, j); };
}

}  // namespace binlab
