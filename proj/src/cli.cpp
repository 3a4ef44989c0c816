#include "binlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "binlab/digital_net.hpp"
#include "binlab/exact_matrix.hpp"
#include "binlab/families.hpp"
#include "binlab/laurent_cf.hpp"
#include "binlab/seq_kit.hpp"
#include "binlab/serialize.hpp"
#include "binlab/verifier.hpp"
#include "json.hpp"

namespace binlab {

namespace {

using nlohmann::json;

// Bad user input discovered after flag parsing (unknown family, unreadable file, ...).
class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename F>
auto as_usage(F f) -> decltype(f()) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

IntRange parse_range(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw UsageError("range must look like lo:hi, got '" + s + "'");
    try {
        IntRange r{std::stoll(s.substr(0, colon)), std::stoll(s.substr(colon + 1))};
        if (r.lo > r.hi) throw UsageError("empty range '" + s + "'");
        return r;
    } catch (const std::logic_error&) {
        throw UsageError("range must look like lo:hi, got '" + s + "'");
    }
}

json rational_matrix_json(const RationalMatrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(rows)}};
}

GeneratingSet parse_generating_set(std::uint64_t p, const std::string& dims) {
    GeneratingSet gs{p, {}};
    for (const auto& d : split_list(dims)) gs.matrices.emplace_back(as_usage([&] { return parse_family(d); }));
    as_usage([&] {
        gs.validate();
        return 0;
    });
    return gs;
}

json t_value_json(const TValueResult& t) { return {{"per_m", t.per_m}, {"t", t.t}}; }

// Shared flags of the matrix subcommands.
struct MatrixFlags {
    std::string family;
    std::string input;
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t k = 0;
    bool json_out = false;
    bool csv_out = false;

    void attach(CLI::App* sub) {
        sub->add_option("--family", family, "matrix family: P1:a=<int>, P2, M1:a=<int>, M2, H1, H2, Hankel:<sequence>");
        sub->add_option("--input", input, "matrix file (.json or .csv) instead of a family");
        sub->add_option("--n", n, "rows of the window");
        sub->add_option("--m", m, "columns of the window (default n)");
        sub->add_option("--k", k, "first column of the window");
        sub->add_flag("--json", json_out, "JSON output");
        sub->add_flag("--csv", csv_out, "CSV output");
    }

    ExactMatrix load() const {
        if (family.empty() == input.empty()) throw UsageError("give exactly one of --family or --input");
        if (!input.empty()) {
            const std::string text = read_file(input);
            return as_usage([&] {
                if (input.size() >= 5 && input.substr(input.size() - 5) == ".json")
                    return matrix_from_json(json::parse(text));
                return matrix_from_csv(text);
            });
        }
        const FamilyId f = as_usage([&] { return parse_family(family); });
        return window(f, n, m == 0 ? n : m, k);
    }
};

void print_matrix(std::ostream& out, const ExactMatrix& a, bool json_out, bool csv_out) {
    if (json_out) out << matrix_to_json(a).dump() << '\n';
    else if (csv_out) out << matrix_to_csv(a);
    else {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << a(i, j).get_str();
            out << '\n';
        }
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact laboratory for Pascal and Catalan-Hankel matrices", "binlab"};
    app.require_subcommand(1);

    // matrix
    auto* matrix = app.add_subcommand("matrix", "build and analyse matrix windows");
    matrix->require_subcommand(1);
    MatrixFlags msrc;
    auto* m_window = matrix->add_subcommand("window", "print a window of a family");
    auto* m_det = matrix->add_subcommand("det", "exact determinant");
    auto* m_ldu = matrix->add_subcommand("ldu", "LDU factors");
    auto* m_rank = matrix->add_subcommand("rank", "rank modulo a prime");
    auto* m_pow = matrix->add_subcommand("pow", "integer power");
    std::uint64_t rank_p = 2;
    std::int64_t power = 1;
    for (auto* sub : {m_window, m_det, m_ldu, m_rank, m_pow}) msrc.attach(sub);
    m_rank->add_option("--p", rank_p, "prime modulus")->required();
    m_pow->add_option("--e", power, "exponent")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "check identities exactly over parameter grids");
    std::string identity;
    std::size_t n_max = 0;
    std::string a_range;
    std::uint64_t k_max = 0;
    bool verify_json = false;
    bool timing = false;
    verify->add_option("identity", identity, "identity id, 'all' or 'list'")->required();
    verify->add_option("--n-max", n_max, "largest window size (depth for qualification, quotients for fractions)");
    verify->add_option("--a-range", a_range, "parameter range lo:hi");
    verify->add_option("--k-max", k_max, "largest column offset");
    verify->add_flag("--json", verify_json, "emit reports as JSON");
    verify->add_flag("--timing", timing, "include elapsed times");

    // cf
    auto* cf = app.add_subcommand("cf", "continued fractions of the Catalan Laurent series");
    cf->require_subcommand(1);
    auto* cf_exp = cf->add_subcommand("expand", "expand L1 or L2");
    std::string series_name;
    std::size_t cf_coeffs = 61;
    std::size_t cf_quotients = 30;
    bool cf_json = false;
    cf_exp->add_option("--series", series_name, "L1 or L2")->required()->check(CLI::IsMember({"L1", "L2"}));
    cf_exp->add_option("--coeffs", cf_coeffs, "number of series coefficients")->check(CLI::PositiveNumber);
    cf_exp->add_option("--quotients", cf_quotients, "maximum number of partial quotients");
    cf_exp->add_flag("--json", cf_json, "JSON output");

    // seq
    auto* seq = app.add_subcommand("seq", "sequence prefixes");
    seq->require_subcommand(1);
    auto* seq_dump = seq->add_subcommand("dump", "print a prefix as a JSON array of decimal strings");
    std::string seq_kind;
    std::size_t seq_len = 16;
    seq_dump->add_option("--kind", seq_kind, "thue_morse, catalan, catalan_interspersed, catalan_interspersed_mod2, paperfolding")
        ->required();
    seq_dump->add_option("--n", seq_len, "prefix length");

    // net
    auto* net = app.add_subcommand("net", "digital nets and sequences over F_p");
    net->require_subcommand(1);
    std::uint64_t net_p = 2;
    std::string dims;
    bool net_json = false;
    auto* net_t = net->add_subcommand("t-value", "least t per depth");
    std::size_t m_max = 8;
    net_t->add_option("--p", net_p, "prime")->required();
    net_t->add_option("--dims", dims, "comma separated families")->required();
    net_t->add_option("--m-max", m_max, "largest depth");
    net_t->add_flag("--json", net_json, "JSON output");

    auto* net_stack = net->add_subcommand("stacked-rank", "full-rank test for one composition");
    std::size_t stack_m = 0;
    std::size_t stack_t = 0;
    std::string composition;
    net_stack->add_option("--p", net_p, "prime")->required();
    net_stack->add_option("--dims", dims, "comma separated families")->required();
    net_stack->add_option("--m", stack_m, "depth")->required();
    net_stack->add_option("--t", stack_t, "quality parameter");
    net_stack->add_option("--composition", composition, "d_1,...,d_s summing to m - t")->required();

    auto* net_points = net->add_subcommand("points", "digital-method points");
    std::size_t depth = 0;
    std::uint64_t count = 0;
    std::string format = "csv";
    net_points->add_option("--p", net_p, "prime")->required();
    net_points->add_option("--dims", dims, "comma separated families")->required();
    net_points->add_option("--m", depth, "digit depth")->required();
    net_points->add_option("--n", count, "number of points")->required();
    net_points->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* net_disc = net->add_subcommand("discrepancy", "exact star discrepancy of a point CSV");
    std::string points_file;
    net_disc->add_option("--input", points_file, "CSV of num/den coordinates")->required();
    net_disc->add_flag("--json", net_json, "JSON output");

    auto* net_search = net->add_subcommand("search", "try third matrices next to M1(0), M1(1)");
    std::string generator_name = "random";
    std::size_t budget = 100;
    std::uint64_t seed = 1;
    net_search->add_option("--p", net_p, "prime");
    net_search->add_option("--m-max", m_max, "largest depth");
    net_search->add_option("--generator", generator_name, "random, m1 or p1");
    net_search->add_option("--budget", budget, "number of candidates");
    net_search->add_option("--seed", seed, "seed for random candidates");
    net_search->add_flag("--json", net_json, "JSON output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        if (matrix->parsed()) {
            const ExactMatrix a = msrc.load();
            if (m_window->parsed()) print_matrix(out, a, msrc.json_out, msrc.csv_out);
            else if (m_det->parsed()) {
                if (!a.is_square()) throw UsageError("determinant needs a square matrix");
                out << determinant(a).get_str() << '\n';
            } else if (m_rank->parsed()) {
                out << as_usage([&] { return rank_mod_p(a, rank_p); }) << '\n';
            } else if (m_pow->parsed()) {
                ExactMatrix r;
                try {
                    r = mat_pow(a, power);
                } catch (const std::domain_error& e) {
                    throw UsageError(e.what());
                }
                print_matrix(out, r, msrc.json_out, msrc.csv_out);
            } else if (m_ldu->parsed()) {
                if (!a.is_square()) throw UsageError("LDU needs a square matrix");
                LDUFactors f;
                try {
                    f = ldu_decompose(a);
                } catch (const SingularMinorError& e) {
                    err << "error: " << e.what() << '\n';
                    return kVerificationFailed;
                }
                json d = json::array();
                for (const auto& x : f.D) d.push_back(x.get_str());
                if (msrc.json_out) {
                    out << json{{"L", rational_matrix_json(f.L)}, {"D", d}, {"U", rational_matrix_json(f.U)}}.dump()
                        << '\n';
                } else {
                    out << "D:";
                    for (const auto& x : f.D) out << ' ' << x.get_str();
                    out << '\n';
                }
            }
            return kOk;
        }

        if (verify->parsed()) {
            if (identity == "list") {
                for (const auto& info : identities()) out << info.id << "  " << info.description << '\n';
                return kOk;
            }
            VerifyOptions opts;
            if (n_max > 0) opts.n_max = n_max;
            if (!a_range.empty()) opts.a_range = parse_range(a_range);
            if (k_max > 0) opts.k_max = k_max;
            std::vector<const IdentityInfo*> chosen;
            if (identity == "all") {
                for (const auto& info : identities()) chosen.push_back(&info);
            } else {
                chosen.push_back(&as_usage([&]() -> const IdentityInfo& { return find_identity(identity); }));
            }
            bool all_passed = true;
            json reports = json::array();
            for (const auto* info : chosen) {
                const VerificationReport r = info->run(opts);
                all_passed = all_passed && r.passed();
                if (verify_json) reports.push_back(r.to_json(timing));
                else out << r.summary(timing);
            }
            if (verify_json) out << (identity == "all" ? reports : reports[0]).dump(2) << '\n';
            return all_passed ? kOk : kVerificationFailed;
        }

        if (cf_exp->parsed()) {
            const SeriesId which = series_name == "L1" ? SeriesId::L1 : SeriesId::L2;
            const CFExpansion e = cf_expand(build_L(which, cf_coeffs), cf_quotients);
            if (cf_json) {
                json q = json::array();
                for (const auto& p : e.partial_quotients) q.push_back(p.str());
                out << json{{"series", series_name},
                            {"coefficients", cf_coeffs},
                            {"integer_part", e.integer_part.str()},
                            {"partial_quotients", q},
                            {"exhausted_precision", e.exhausted_precision}}
                           .dump()
                    << '\n';
            } else {
                out << "integer part: " << e.integer_part.str() << '\n';
                for (const auto& p : e.partial_quotients) out << p.str() << '\n';
                if (e.exhausted_precision) out << "(precision exhausted)\n";
            }
            return kOk;
        }

        if (seq_dump->parsed()) {
            const SequenceKind kind = as_usage([&] { return parse_sequence_kind(seq_kind); });
            json arr = json::array();
            for (const auto& v : sequence_prefix(kind, seq_len)) arr.push_back(v.get_str());
            out << arr.dump() << '\n';
            return kOk;
        }

        if (net_t->parsed()) {
            const GeneratingSet gs = parse_generating_set(net_p, dims);
            const TValueResult t = t_value(gs, m_max);
            if (net_json) {
                json j = t_value_json(t);
                j["p"] = net_p;
                j["dims"] = split_list(dims);
                out << j.dump() << '\n';
            } else {
                for (std::size_t m = 1; m <= t.per_m.size(); ++m) out << "m=" << m << " t=" << t.per_m[m - 1] << '\n';
                out << "t=" << t.t << '\n';
            }
            return kOk;
        }

        if (net_stack->parsed()) {
            const GeneratingSet gs = parse_generating_set(net_p, dims);
            std::vector<std::size_t> comp;
            for (const auto& d : split_list(composition)) comp.push_back(std::stoul(d));
            const bool ok = as_usage([&] { return stacked_rank_ok(gs, stack_m, stack_t, comp); });
            out << (ok ? "full rank" : "rank deficient") << '\n';
            return kOk;
        }

        if (net_points->parsed()) {
            const GeneratingSet gs = parse_generating_set(net_p, dims);
            const PointSet ps = as_usage([&] { return digital_points(gs, count, depth); });
            if (format == "csv") out << points_to_csv(ps);
            else {
                json pts = json::array();
                for (const auto& pt : ps.points) {
                    json row = json::array();
                    for (const auto& x : pt) row.push_back(x.get_str());
                    pts.push_back(std::move(row));
                }
                out << json{{"p", ps.p}, {"m", ps.depth}, {"s", ps.dimension}, {"points", pts}}.dump() << '\n';
            }
            return kOk;
        }

        if (net_disc->parsed()) {
            const PointSet ps = as_usage([&] { return points_from_csv(read_file(points_file)); });
            const Rational d = as_usage([&] { return star_discrepancy(ps); });
            if (net_json)
                out << json{{"n", ps.points.size()}, {"s", ps.dimension}, {"star_discrepancy", d.get_str()}}.dump()
                    << '\n';
            else out << d.get_str() << '\n';
            return kOk;
        }

        if (net_search->parsed()) {
            const CandidateKind kind = as_usage([&] { return parse_candidate_kind(generator_name); });
            if (!is_prime(net_p)) throw UsageError(std::to_string(net_p) + " is not prime");
            const SearchReport rep = search_third_matrix(net_p, m_max, kind, budget, seed);
            if (net_json) {
                json cands = json::array();
                for (const auto& c : rep.candidates)
                    cands.push_back({{"candidate", c.description}, {"t", t_value_json(c.t)}});
                out << json{{"p", net_p}, {"m_max", m_max}, {"candidates", cands}, {"best_per_m", rep.best_per_m}}.dump()
                    << '\n';
            } else {
                for (std::size_t m = 1; m <= rep.best_per_m.size(); ++m)
                    out << "m=" << m << " best t=" << rep.best_per_m[m - 1] << '\n';
            }
            return kOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kInternalError;
}

}  // namespace binlab
