#pragma once

// Sweeps that check each matrix identity exactly over a grid of window sizes
// and parameters. Reports are deterministic: grids are walked in a fixed order
// and results are assembled in that order regardless of worker scheduling.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binlab/digital_net.hpp"
#include "binlab/laurent_cf.hpp"
#include "json.hpp"

namespace binlab {

struct Failure {
    std::string parameters;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string identity_id;
    std::string parameter_grid;
    /// Why checking on finite windows is sound for this identity.
    std::string truncation_note;
    std::size_t checked = 0;
    std::vector<Failure> failures;
    /// Recorded data that the identity does not predict, e.g. determinant signs.
    std::vector<std::pair<std::string, std::string>> observations;
    std::chrono::milliseconds elapsed{0};

    bool passed() const noexcept { return failures.empty(); }
    /// Timing is omitted unless requested so that output is reproducible byte for byte.
    nlohmann::json to_json(bool with_timing = false) const;
    std::string summary(bool with_timing = false) const;
};

struct IntRange {
    std::int64_t lo = -5;
    std::int64_t hi = 5;
};

/// P1(n)^T P1(n) == P2(n).
VerificationReport check_item1_gram(std::size_t n_max = 64);

/// window(P1, n)^a == window(P1(a), n) for a != 0.
VerificationReport check_item2_power(IntRange a_range = {}, std::size_t n_max = 64);

enum class GroupFamily { P1, M1 };

std::vector<std::pair<std::int64_t, std::int64_t>> all_pairs(IntRange r);

/// window(F(a), n) window(F(b), n) == window(F(a+b), n).
VerificationReport check_group_law(GroupFamily family, const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
                                   std::size_t n_max = 64);

/// M1(n)^T diag((-1)^t_i) M1(n) == M2(n).
VerificationReport check_lemma1_factorization(std::size_t n_max = 64);

enum class DetFormula {
    P1Windows,    // det P1^(n,k) == 1
    P2Leading,    // det P2^(n) == 1
    P2Windows,    // det P2^(n,k) == 1
    M2Leading,    // det M2^(n) == prod (-1)^s2(i)
    M1Windows,    // |det M1(a)^(n,k)| == prod |a|^(s2(i+k)-s2(i))
};

struct DetGrid {
    std::size_t n_max = 12;
    std::uint64_t k_max = 64;
    std::vector<std::int64_t> a_values{1};
};

VerificationReport check_det_formulas(DetFormula which, const DetGrid& grid);

enum class HankelId { H1, H2 };

/// |det H^(n)| == 1 for n <= n_max. For H2 also checks that H2^(2^k - 1) is zero
/// below the anti-diagonal with ones on it, for 1 <= k <= anti_k_max.
VerificationReport check_hankel_minors(HankelId which, std::size_t n_max = 40, std::size_t anti_k_max = 6);

/// LDU of the leading windows reproduces them with D entries +-1; for M2 also D_i == (-1)^t_i.
VerificationReport check_ldu(const FamilyId& family, std::size_t n_max);

/// t == 0 through m_max for {P1(0..p-1)} mod p, every listed p.
VerificationReport check_faure_qualification(const std::vector<std::uint64_t>& primes, std::size_t m_max = 8);

/// t == 0 through m_max for {M1(a), M1(b)} mod p, all a != b in [0, p).
VerificationReport check_pair_qualification(const std::vector<std::uint64_t>& primes, std::size_t m_max = 8);

/// {M1(0), M1(1), M1(2)} mod 3 fails t = 0 at m = 3 through the rank-2 stack.
VerificationReport check_triple_dependence();

/// Continued fraction of L1 (all X) or L2 (paperfolding signs times X).
VerificationReport check_continued_fraction(SeriesId which, std::size_t coeffs = 61, std::size_t quotients = 30);

/// Elementary-interval counts for every t = 0 depth of the qualified sets with p^m <= max_points.
VerificationReport check_net_property(std::uint64_t max_points = 729);

struct VerifyOptions {
    std::optional<std::size_t> n_max;
    std::optional<IntRange> a_range;
    std::optional<std::uint64_t> k_max;
};

struct IdentityInfo {
    std::string id;
    std::string description;
    std::function<VerificationReport(const VerifyOptions&)> run;
};

const std::vector<IdentityInfo>& identities();
const IdentityInfo& find_identity(const std::string& id);

}  // namespace binlab
