#include "binlab/verifier.hpp"

#include <sstream>
#include <stdexcept>

#include "binlab/parallel.hpp"
#include "binlab/seq_kit.hpp"
#include "binlab/serialize.hpp"

namespace binlab {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    std::size_t checked = 0;
    std::vector<Failure> failures;
    std::vector<std::pair<std::string, std::string>> observations;

    void expect(bool ok, std::string params, std::string expected, std::string actual) {
        ++checked;
        if (!ok) failures.push_back({std::move(params), std::move(expected), std::move(actual)});
    }
};

// Runs the grid through the worker pool and appends outcomes in grid order.
template <typename F>
void sweep(VerificationReport& report, std::size_t count, F f) {
    for (auto& o : parallel_map(count, f)) {
        report.checked += o.checked;
        for (auto& x : o.failures) report.failures.push_back(std::move(x));
        for (auto& x : o.observations) report.observations.push_back(std::move(x));
    }
}

template <typename F>
VerificationReport timed(std::string id, std::string grid, std::string note, F body) {
    const auto start = Clock::now();
    VerificationReport r{std::move(id), std::move(grid), std::move(note), 0, {}, {}, {}};
    body(r);
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return r;
}

template <typename T>
std::string matrix_text(const Matrix<T>& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < a.cols(); ++j) s += (j ? "," : "") + a(i, j).get_str();
        s += "]";
    }
    return s + "]";
}

// Equality check that reports the first differing entry rather than whole matrices.
template <typename T>
void expect_equal(Outcome& o, const std::string& params, const Matrix<T>& expected, const Matrix<T>& actual) {
    if (expected.rows() != actual.rows() || expected.cols() != actual.cols()) {
        o.expect(false, params, "shape " + std::to_string(expected.rows()) + "x" + std::to_string(expected.cols()),
                 "shape " + std::to_string(actual.rows()) + "x" + std::to_string(actual.cols()));
        return;
    }
    for (std::size_t i = 0; i < expected.rows(); ++i) {
        for (std::size_t j = 0; j < expected.cols(); ++j) {
            if (expected(i, j) != actual(i, j)) {
                o.expect(false, params + " entry (" + std::to_string(i) + "," + std::to_string(j) + ")",
                         expected(i, j).get_str(), actual(i, j).get_str());
                return;
            }
        }
    }
    o.expect(true, params, "", "");
}

std::string range_text(IntRange r) { return "[" + std::to_string(r.lo) + "," + std::to_string(r.hi) + "]"; }

ExactMatrix thue_morse_signs(std::size_t n) {
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < n; ++i) d.emplace_back(thue_morse(i) ? -1 : 1);
    return diagonal(d);
}

std::string list_text(const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

std::string primes_text(const std::vector<std::uint64_t>& ps) {
    std::string s = "{";
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? "," : "") + std::to_string(ps[i]);
    return s + "}";
}

FamilyId group_family(GroupFamily f, std::int64_t a) { return f == GroupFamily::P1 ? FamilyId::p1(a) : FamilyId::m1(a); }

const char* kUpperTriangularNote =
    "upper triangular factors: entry (i,j) of the product only involves indices l with i <= l <= j";

GeneratingSet faure_set(std::uint64_t p) {
    GeneratingSet gs{p, {}};
    for (std::uint64_t a = 0; a < p; ++a) gs.matrices.emplace_back(FamilyId::p1(static_cast<std::int64_t>(a)));
    return gs;
}

}  // namespace

nlohmann::json VerificationReport::to_json(bool with_timing) const {
    nlohmann::json failures_json = nlohmann::json::array();
    for (const auto& f : failures)
        failures_json.push_back({{"parameters", f.parameters}, {"expected", f.expected}, {"actual", f.actual}});
    nlohmann::json obs = nlohmann::json::array();
    for (const auto& [key, value] : observations) obs.push_back({{"parameters", key}, {"value", value}});
    nlohmann::json j{{"identity_id", identity_id},
                     {"parameter_grid", parameter_grid},
                     {"truncation_note", truncation_note},
                     {"checked", checked},
                     {"status", passed() ? "pass" : "fail"},
                     {"failures", std::move(failures_json)},
                     {"observations", std::move(obs)}};
    if (with_timing) j["elapsed_ms"] = elapsed.count();
    return j;
}

std::string VerificationReport::summary(bool with_timing) const {
    std::ostringstream out;
    out << (passed() ? "PASS " : "FAIL ") << identity_id << ": " << checked << " checks over " << parameter_grid;
    if (!passed()) out << ", " << failures.size() << " failures";
    if (with_timing) out << " (" << elapsed.count() << " ms)";
    out << '\n';
    const std::size_t shown = std::min<std::size_t>(failures.size(), 5);
    for (std::size_t i = 0; i < shown; ++i)
        out << "  " << failures[i].parameters << ": expected " << failures[i].expected << ", got "
            << failures[i].actual << '\n';
    return out.str();
}

VerificationReport check_item1_gram(std::size_t n_max) {
    return timed("pascal-gram", "n=1.." + std::to_string(n_max),
                 "entry (i,j) of P1^T P1 only involves l <= min(i,j)", [&](VerificationReport& r) {
                     sweep(r, n_max, [&](std::size_t idx) {
                         const std::size_t n = idx + 1;
                         Outcome o;
                         const ExactMatrix p1 = window(FamilyId::p1(1), n);
                         expect_equal(o, "n=" + std::to_string(n), window(FamilyId::p2(), n),
                                      mat_mul(p1.transpose(), p1));
                         return o;
                     });
                 });
}

VerificationReport check_item2_power(IntRange a_range, std::size_t n_max) {
    std::vector<std::int64_t> as;
    for (std::int64_t a = a_range.lo; a <= a_range.hi; ++a)
        if (a != 0) as.push_back(a);
    return timed("pascal-power", "a in " + range_text(a_range) + " minus {0}, n=1.." + std::to_string(n_max),
                 kUpperTriangularNote, [&](VerificationReport& r) {
                     sweep(r, as.size() * n_max, [&](std::size_t idx) {
                         const std::int64_t a = as[idx / n_max];
                         const std::size_t n = idx % n_max + 1;
                         Outcome o;
                         expect_equal(o, "a=" + std::to_string(a) + " n=" + std::to_string(n),
                                      window(FamilyId::p1(a), n), mat_pow(window(FamilyId::p1(1), n), a));
                         return o;
                     });
                 });
}

std::vector<std::pair<std::int64_t, std::int64_t>> all_pairs(IntRange r) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t a = r.lo; a <= r.hi; ++a)
        for (std::int64_t b = r.lo; b <= r.hi; ++b) out.emplace_back(a, b);
    return out;
}

VerificationReport check_group_law(GroupFamily family, const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
                                   std::size_t n_max) {
    const std::string name = family == GroupFamily::P1 ? "P1" : "M1";
    return timed(family == GroupFamily::P1 ? "pascal-group-law" : "m1-group-law",
                 std::to_string(pairs.size()) + " pairs (a,b) of " + name + ", n=1.." + std::to_string(n_max),
                 kUpperTriangularNote, [&](VerificationReport& r) {
                     sweep(r, pairs.size(), [&](std::size_t idx) {
                         const auto [a, b] = pairs[idx];
                         const EntryFn fa = generator(group_family(family, a));
                         const EntryFn fb = generator(group_family(family, b));
                         const EntryFn fab = generator(group_family(family, a + b));
                         Outcome o;
                         for (std::size_t n = 1; n <= n_max; ++n)
                             expect_equal(o,
                                          "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                              " n=" + std::to_string(n),
                                          window(fab, n), mat_mul(window(fa, n), window(fb, n)));
                         return o;
                     });
                 });
}

VerificationReport check_lemma1_factorization(std::size_t n_max) {
    return timed("m2-factorization", "n=1.." + std::to_string(n_max),
                 "entry (i,j) of M1^T D M1 only involves l <= min(i,j)", [&](VerificationReport& r) {
                     sweep(r, n_max, [&](std::size_t idx) {
                         const std::size_t n = idx + 1;
                         Outcome o;
                         const ExactMatrix m1 = window(FamilyId::m1(1), n);
                         expect_equal(o, "n=" + std::to_string(n), window(FamilyId::m2(), n),
                                      mat_mul(m1.transpose(), mat_mul(thue_morse_signs(n), m1)));
                         return o;
                     });
                 });
}

VerificationReport check_det_formulas(DetFormula which, const DetGrid& grid) {
    const std::string nk = "n=1.." + std::to_string(grid.n_max) + ", k=0.." + std::to_string(grid.k_max);
    const std::string n_only = "n=1.." + std::to_string(grid.n_max);
    const std::size_t ks = static_cast<std::size_t>(grid.k_max) + 1;
    const char* note = "determinants of finite windows; no truncation involved";

    auto unit_windows = [&](const char* id, FamilyId f) {
        return timed(id, nk, note, [&](VerificationReport& r) {
            sweep(r, grid.n_max * ks, [&](std::size_t idx) {
                const std::size_t n = idx / ks + 1;
                const std::uint64_t k = idx % ks;
                Outcome o;
                const BigInt d = determinant(window(f, n, n, k));
                o.expect(d == 1, "n=" + std::to_string(n) + " k=" + std::to_string(k), "1", d.get_str());
                return o;
            });
        });
    };

    switch (which) {
    case DetFormula::P1Windows: return unit_windows("p1-window-minors", FamilyId::p1(1));
    case DetFormula::P2Windows: return unit_windows("p2-window-minors", FamilyId::p2());
    case DetFormula::P2Leading:
        return timed("p2-leading-minors", n_only, note, [&](VerificationReport& r) {
            sweep(r, grid.n_max, [&](std::size_t idx) {
                Outcome o;
                const BigInt d = determinant(window(FamilyId::p2(), idx + 1));
                o.expect(d == 1, "n=" + std::to_string(idx + 1), "1", d.get_str());
                return o;
            });
        });
    case DetFormula::M2Leading:
        return timed("m2-leading-minors", n_only, note, [&](VerificationReport& r) {
            sweep(r, grid.n_max, [&](std::size_t idx) {
                const std::size_t n = idx + 1;
                int expected = 1;
                for (std::size_t i = 0; i < n; ++i)
                    if (s2(i) % 2 == 1) expected = -expected;
                Outcome o;
                const BigInt d = determinant(window(FamilyId::m2(), n));
                o.expect(d == expected, "n=" + std::to_string(n), std::to_string(expected), d.get_str());
                return o;
            });
            std::string signs;
            for (std::size_t n = 1; n <= grid.n_max; ++n) signs += determinant(window(FamilyId::m2(), n)) > 0 ? '+' : '-';
            r.observations.emplace_back("det sign for n=1.." + std::to_string(grid.n_max), signs);
        });
    case DetFormula::M1Windows: {
        std::string as;
        for (auto a : grid.a_values) {
            if (a == 0) throw std::invalid_argument("m1-window-minors: a must be nonzero");
            as += (as.empty() ? "" : ",") + std::to_string(a);
        }
        const bool unit = grid.a_values.size() == 1 && grid.a_values[0] == 1;
        return timed(unit ? "m1-window-minors" : "m1a-window-minors", "a in {" + as + "}, " + nk, note,
                     [&](VerificationReport& r) {
                         sweep(r, grid.a_values.size() * grid.n_max, [&](std::size_t idx) {
                             const std::int64_t a = grid.a_values[idx / grid.n_max];
                             const std::size_t n = idx % grid.n_max + 1;
                             const EntryFn f = generator(FamilyId::m1(a));
                             Outcome o;
                             std::string signs;
                             for (std::uint64_t k = 0; k <= grid.k_max; ++k) {
                                 long exponent = 0;
                                 for (std::uint64_t i = 0; i < n; ++i)
                                     exponent += static_cast<long>(s2(i + k)) - static_cast<long>(s2(i));
                                 const BigInt d = determinant(window(f, n, n, k));
                                 const std::string params =
                                     "a=" + std::to_string(a) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
                                 if (exponent < 0) {
                                     o.expect(false, params, "nonnegative exponent", std::to_string(exponent));
                                     continue;
                                 }
                                 BigInt magnitude;
                                 mpz_ui_pow_ui(magnitude.get_mpz_t(), static_cast<unsigned long>(a < 0 ? -a : a),
                                               static_cast<unsigned long>(exponent));
                                 o.expect(abs(d) == magnitude, params, "+-" + magnitude.get_str(), d.get_str());
                                 signs += d > 0 ? '+' : (d < 0 ? '-' : '0');
                             }
                             o.observations.emplace_back("det sign a=" + std::to_string(a) + " n=" + std::to_string(n) +
                                                             " k=0.." + std::to_string(grid.k_max),
                                                         signs);
                             return o;
                         });
                     });
    }
    }
    throw std::logic_error("unhandled determinant formula");
}

VerificationReport check_hankel_minors(HankelId which, std::size_t n_max, std::size_t anti_k_max) {
    const FamilyId f = which == HankelId::H1 ? FamilyId::h1() : FamilyId::h2();
    std::string grid = "n=1.." + std::to_string(n_max);
    if (which == HankelId::H2) grid += ", anti-diagonal shape for k=1.." + std::to_string(anti_k_max);
    return timed(which == HankelId::H1 ? "h1-leading-minors" : "h2-leading-minors", grid,
                 "leading principal minors of finite windows; no truncation involved", [&](VerificationReport& r) {
                     std::vector<BigInt> dets(n_max);
                     sweep(r, n_max, [&](std::size_t idx) {
                         Outcome o;
                         dets[idx] = determinant(window(f, idx + 1));
                         o.expect(abs(dets[idx]) == 1, "n=" + std::to_string(idx + 1), "+-1", dets[idx].get_str());
                         return o;
                     });
                     std::string signs;
                     for (const auto& d : dets) signs += d > 0 ? '+' : (d < 0 ? '-' : '0');
                     r.observations.emplace_back("det sign for n=1.." + std::to_string(n_max), signs);
                     if (which == HankelId::H1) return;
                     for (std::size_t k = 1; k <= anti_k_max; ++k) {
                         const std::size_t n = (std::size_t{1} << k) - 1;
                         const ExactMatrix h = window(f, n);
                         bool ok = true;
                         for (std::size_t i = 0; i < n && ok; ++i)
                             for (std::size_t j = 0; j < n && ok; ++j) {
                                 if (i + j == n - 1) ok = h(i, j) == 1;
                                 else if (i + j > n - 1) ok = h(i, j) == 0;
                             }
                         ++r.checked;
                         if (!ok)
                             r.failures.push_back({"anti-diagonal shape k=" + std::to_string(k),
                                                   "zero below unit anti-diagonal", matrix_text(h)});
                     }
                 });
}

VerificationReport check_ldu(const FamilyId& family, std::size_t n_max) {
    const bool m2 = family == FamilyId::m2();
    std::string id = family == FamilyId::h1() ? "h1-ldu" : family == FamilyId::h2() ? "h2-ldu" : m2 ? "m2-ldu" : "ldu";
    if (id == "ldu") id += ":" + format_family(family);
    return timed(id, format_family(family) + ", n=1.." + std::to_string(n_max),
                 "factorization of finite leading windows; no truncation involved", [&](VerificationReport& r) {
                     sweep(r, n_max, [&](std::size_t idx) {
                         const std::size_t n = idx + 1;
                         const std::string params = "n=" + std::to_string(n);
                         Outcome o;
                         const ExactMatrix a = window(family, n);
                         LDUFactors f;
                         try {
                             f = ldu_decompose(a);
                         } catch (const SingularMinorError& e) {
                             o.expect(false, params, "nonvanishing leading minors", e.what());
                             return o;
                         }
                         expect_equal(o, params + " L*D*U", to_rational(a), f.product());
                         for (std::size_t i = 0; i < n; ++i) {
                             const Rational& d = f.D[i];
                             if (m2) {
                                 const int expected = thue_morse(i) ? -1 : 1;
                                 o.expect(d == expected, params + " D_" + std::to_string(i), std::to_string(expected),
                                          d.get_str());
                             } else {
                                 o.expect(d == 1 || d == -1, params + " D_" + std::to_string(i), "+-1", d.get_str());
                             }
                         }
                         return o;
                     });
                 });
}

VerificationReport check_faure_qualification(const std::vector<std::uint64_t>& primes, std::size_t m_max) {
    return timed("faure-qualification",
                 "p in " + primes_text(primes) + ", s=p, m=1.." + std::to_string(m_max),
                 "depth-m rank conditions read only the m x m leading windows", [&](VerificationReport& r) {
                     sweep(r, primes.size(), [&](std::size_t idx) {
                         const std::uint64_t p = primes[idx];
                         const TValueResult t = t_value(faure_set(p), m_max);
                         Outcome o;
                         for (std::size_t m = 1; m <= m_max; ++m)
                             o.expect(t.per_m[m - 1] == 0, "p=" + std::to_string(p) + " m=" + std::to_string(m), "t=0",
                                      "t=" + std::to_string(t.per_m[m - 1]));
                         o.observations.emplace_back("t per m, p=" + std::to_string(p), list_text(t.per_m));
                         return o;
                     });
                 });
}

VerificationReport check_pair_qualification(const std::vector<std::uint64_t>& primes, std::size_t m_max) {
    struct Job {
        std::uint64_t p;
        std::int64_t a, b;
    };
    std::vector<Job> jobs;
    for (auto p : primes)
        for (std::uint64_t a = 0; a < p; ++a)
            for (std::uint64_t b = 0; b < p; ++b)
                if (a != b) jobs.push_back({p, static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
    return timed("m1-pair-qualification",
                 "p in " + primes_text(primes) + ", ordered pairs a != b in [0,p), m=1.." + std::to_string(m_max),
                 "depth-m rank conditions read only the m x m leading windows", [&](VerificationReport& r) {
                     sweep(r, jobs.size(), [&](std::size_t idx) {
                         const Job& job = jobs[idx];
                         const TValueResult t =
                             t_value(GeneratingSet{job.p, {FamilyId::m1(job.a), FamilyId::m1(job.b)}}, m_max);
                         Outcome o;
                         for (std::size_t m = 1; m <= m_max; ++m)
                             o.expect(t.per_m[m - 1] == 0,
                                      "p=" + std::to_string(job.p) + " a=" + std::to_string(job.a) +
                                          " b=" + std::to_string(job.b) + " m=" + std::to_string(m),
                                      "t=0", "t=" + std::to_string(t.per_m[m - 1]));
                         return o;
                     });
                 });
}

VerificationReport check_triple_dependence() {
    return timed("m1-triple-dependence", "p=3, {M1(0),M1(1),M1(2)}, m=3, composition (1,1,1)",
                 "first rows of each matrix, three columns", [&](VerificationReport& r) {
                     const GeneratingSet gs{3, {FamilyId::m1(0), FamilyId::m1(1), FamilyId::m1(2)}};
                     ExactMatrix stack(3, 3);
                     for (std::size_t d = 0; d < 3; ++d) {
                         const auto row = gs.reduced_window(d, 1, 3);
                         for (std::size_t c = 0; c < 3; ++c) stack(d, c) = row[c];
                     }
                     const ExactMatrix expected{{1, 0, 0}, {1, 1, 1}, {1, 2, 2}};
                     auto expect = [&r](bool ok, std::string params, std::string exp, std::string act) {
                         ++r.checked;
                         if (!ok) r.failures.push_back({std::move(params), std::move(exp), std::move(act)});
                     };
                     expect(stack == expected, "stacked rows", matrix_text(expected), matrix_text(stack));
                     const std::size_t rank = rank_mod_p(stack, 3);
                     expect(rank == 2, "rank mod 3", "2", std::to_string(rank));
                     const bool ok = stacked_rank_ok(gs, 3, 0, {1, 1, 1});
                     expect(!ok, "stacked_rank_ok m=3 t=0", "false", ok ? "true" : "false");
                     const TValueResult t = t_value(gs, 3);
                     expect(t.per_m[2] >= 1, "t at m=3", ">=1", std::to_string(t.per_m[2]));
                     r.observations.emplace_back("t per m", list_text(t.per_m));
                 });
}

VerificationReport check_continued_fraction(SeriesId which, std::size_t coeffs, std::size_t quotients) {
    const bool l1 = which == SeriesId::L1;
    return timed(l1 ? "l1-continued-fraction" : "l2-continued-fraction",
                 std::to_string(coeffs) + " coefficients, " + std::to_string(quotients) + " quotients",
                 "quotients are emitted only when certified by the known coefficients", [&](VerificationReport& r) {
                     auto expect = [&r](bool ok, std::string params, std::string exp, std::string act) {
                         ++r.checked;
                         if (!ok) r.failures.push_back({std::move(params), std::move(exp), std::move(act)});
                     };
                     const LaurentSeries series = build_L(which, coeffs);
                     const CFExpansion cf = cf_expand(series, quotients);
                     expect(cf.integer_part.is_zero(), "integer part", "0", cf.integer_part.str());
                     expect(cf.partial_quotients.size() == quotients, "certified quotients", std::to_string(quotients),
                            std::to_string(cf.partial_quotients.size()));
                     const std::vector<int> signs = paperfolding(quotients);
                     for (std::size_t i = 0; i < cf.partial_quotients.size(); ++i) {
                         const Poly expected = Poly::monomial(l1 ? 1 : signs[i], 1);
                         expect(cf.partial_quotients[i] == expected, "A_" + std::to_string(i + 1), expected.str(),
                                cf.partial_quotients[i].str());
                     }
                     // Convergents approximate to order deg Q_k + deg Q_{k+1}.
                     for (std::size_t k = 1; k < cf.partial_quotients.size(); ++k) {
                         const auto [p, q] = convergent(cf, k);
                         const long order = q.degree() + convergent(cf, k + 1).second.degree();
                         if (order > static_cast<long>(coeffs)) break;
                         const LaurentSeries approx = series_of_quotient(p, q, -order);
                         bool ok = true;
                         for (long e = -1; e > -order && ok; --e) ok = approx.coefficient(e) == series.coefficient(e);
                         ok = ok && approx.coefficient(-order) != series.coefficient(-order);
                         expect(ok, "convergent k=" + std::to_string(k),
                                "agreement through X^" + std::to_string(1 - order), "mismatch");
                     }
                 });
}

VerificationReport check_net_property(std::uint64_t max_points) {
    struct Job {
        std::string name;
        GeneratingSet gs;
    };
    std::vector<Job> jobs;
    jobs.push_back({"van der Corput p=2", GeneratingSet{2, {FamilyId::p1(0)}}});
    for (std::uint64_t p : {2, 3, 5}) {
        jobs.push_back({"Faure p=" + std::to_string(p), faure_set(p)});
        for (std::uint64_t a = 0; a < p; ++a)
            for (std::uint64_t b = a + 1; b < p; ++b)
                jobs.push_back({"M1 pair p=" + std::to_string(p) + " a=" + std::to_string(a) + " b=" + std::to_string(b),
                                GeneratingSet{p,
                                              {FamilyId::m1(static_cast<std::int64_t>(a)),
                                               FamilyId::m1(static_cast<std::int64_t>(b))}}});
    }
    return timed("net-property", "t=0 depths with p^m <= " + std::to_string(max_points),
                 "first p^m points at depth m use only the m x m leading windows", [&](VerificationReport& r) {
                     sweep(r, jobs.size(), [&](std::size_t idx) {
                         const Job& job = jobs[idx];
                         std::size_t m_max = 0;
                         for (std::uint64_t n = job.gs.p; n <= max_points; n *= job.gs.p) ++m_max;
                         const TValueResult t = t_value(job.gs, m_max);
                         Outcome o;
                         for (std::size_t m = 1; m <= m_max; ++m) {
                             if (t.per_m[m - 1] != 0) continue;
                             std::uint64_t n = 1;
                             for (std::size_t i = 0; i < m; ++i) n *= job.gs.p;
                             const PointSet ps = digital_points(job.gs, n, m);
                             o.expect(net_property_holds(ps, m, 0), job.name + " m=" + std::to_string(m),
                                      "one point per elementary interval", "unequal counts");
                         }
                         return o;
                     });
                 });
}

const std::vector<IdentityInfo>& identities() {
    static const std::vector<IdentityInfo> registry = [] {
        std::vector<IdentityInfo> v;
        auto n_or = [](const VerifyOptions& o, std::size_t d) { return o.n_max.value_or(d); };
        auto a_or = [](const VerifyOptions& o) { return o.a_range.value_or(IntRange{}); };
        auto k_or = [](const VerifyOptions& o, std::uint64_t d) { return o.k_max.value_or(d); };
        v.push_back({"pascal-gram", "P1^T P1 == P2 on leading windows",
                     [=](const VerifyOptions& o) { return check_item1_gram(n_or(o, 64)); }});
        v.push_back({"pascal-power", "P1^a == P1(a) for a != 0",
                     [=](const VerifyOptions& o) { return check_item2_power(a_or(o), n_or(o, 64)); }});
        v.push_back({"pascal-group-law", "P1(a) P1(b) == P1(a+b)", [=](const VerifyOptions& o) {
                         return check_group_law(GroupFamily::P1, all_pairs(a_or(o)), n_or(o, 64));
                     }});
        v.push_back({"m1-group-law", "M1(a) M1(b) == M1(a+b)", [=](const VerifyOptions& o) {
                         return check_group_law(GroupFamily::M1, all_pairs(a_or(o)), n_or(o, 64));
                     }});
        v.push_back({"m2-factorization", "M1^T diag((-1)^t_i) M1 == M2",
                     [=](const VerifyOptions& o) { return check_lemma1_factorization(n_or(o, 64)); }});
        v.push_back({"p2-leading-minors", "det P2^(n) == 1", [=](const VerifyOptions& o) {
                         return check_det_formulas(DetFormula::P2Leading, {n_or(o, 64), 0, {}});
                     }});
        v.push_back({"p1-window-minors", "det P1^(n,k) == 1", [=](const VerifyOptions& o) {
                         return check_det_formulas(DetFormula::P1Windows, {n_or(o, 12), k_or(o, 64), {}});
                     }});
        v.push_back({"p2-window-minors", "det P2^(n,k) == 1", [=](const VerifyOptions& o) {
                         return check_det_formulas(DetFormula::P2Windows, {n_or(o, 12), k_or(o, 64), {}});
                     }});
        v.push_back({"m2-leading-minors", "det M2^(n) == prod (-1)^s2(i)", [=](const VerifyOptions& o) {
                         return check_det_formulas(DetFormula::M2Leading, {n_or(o, 64), 0, {}});
                     }});
        v.push_back({"m1-window-minors", "det M1^(n,k) == +-1", [=](const VerifyOptions& o) {
                         return check_det_formulas(DetFormula::M1Windows, {n_or(o, 12), k_or(o, 64), {1}});
                     }});
        v.push_back({"m1a-window-minors", "|det M1(a)^(n,k)| == prod |a|^(s2(i+k)-s2(i))",
                     [=](const VerifyOptions& o) {
                         std::vector<std::int64_t> as{-3, -2, -1, 1, 2, 3};
                         if (o.a_range) {
                             as.clear();
                             for (std::int64_t a = o.a_range->lo; a <= o.a_range->hi; ++a)
                                 if (a != 0) as.push_back(a);
                         }
                         return check_det_formulas(DetFormula::M1Windows, {n_or(o, 10), k_or(o, 32), as});
                     }});
        v.push_back({"h1-leading-minors", "|det H1^(n)| == 1",
                     [=](const VerifyOptions& o) { return check_hankel_minors(HankelId::H1, n_or(o, 40)); }});
        v.push_back({"h2-leading-minors", "|det H2^(n)| == 1 and anti-diagonal shape of H2^(2^k-1)",
                     [=](const VerifyOptions& o) { return check_hankel_minors(HankelId::H2, n_or(o, 40)); }});
        v.push_back({"m2-ldu", "LDU of M2^(n) has D_i == (-1)^t_i",
                     [=](const VerifyOptions& o) { return check_ldu(FamilyId::m2(), n_or(o, 32)); }});
        v.push_back({"h1-ldu", "LDU of H1^(n) has D entries +-1",
                     [=](const VerifyOptions& o) { return check_ldu(FamilyId::h1(), n_or(o, 40)); }});
        v.push_back({"h2-ldu", "LDU of H2^(n) has D entries +-1",
                     [=](const VerifyOptions& o) { return check_ldu(FamilyId::h2(), n_or(o, 40)); }});
        v.push_back({"faure-qualification", "{P1(0..p-1)} mod p has t = 0", [=](const VerifyOptions& o) {
                         return check_faure_qualification({2, 3, 5}, n_or(o, 8));
                     }});
        v.push_back({"m1-pair-qualification", "{M1(a),M1(b)} mod p has t = 0 for a != b mod p",
                     [=](const VerifyOptions& o) { return check_pair_qualification({2, 3, 5}, n_or(o, 8)); }});
        v.push_back({"m1-triple-dependence", "{M1(0),M1(1),M1(2)} mod 3 fails t = 0 at m = 3",
                     [](const VerifyOptions&) { return check_triple_dependence(); }});
        v.push_back({"l1-continued-fraction", "L1 = [0; X, X, X, ...]", [=](const VerifyOptions& o) {
                         const std::size_t q = n_or(o, 30);
                         return check_continued_fraction(SeriesId::L1, 2 * q + 1, q);
                     }});
        v.push_back({"l2-continued-fraction", "L2 = [0; s_1 X, s_2 X, ...] with paperfolding signs",
                     [=](const VerifyOptions& o) {
                         const std::size_t q = n_or(o, 30);
                         return check_continued_fraction(SeriesId::L2, 2 * q + 1, q);
                     }});
        v.push_back({"net-property", "t = 0 depths give one point per elementary interval",
                     [](const VerifyOptions&) { return check_net_property(729); }});
        return v;
    }();
    return registry;
}

const IdentityInfo& find_identity(const std::string& id) {
    for (const auto& info : identities())
        if (info.id == id) return info;
    throw std::invalid_argument("unknown identity '" + id + "'");
}

}  // namespace binlab
