#include "binlab/digital_net.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "binlab/serialize.hpp"

namespace binlab {

namespace {

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > UINT64_MAX / base) throw std::overflow_error("p^m does not fit in 64 bits");
        r *= base;
    }
    return r;
}

// Residue tables for the first `size` rows and columns of every generating matrix.
struct ReducedSet {
    std::uint64_t p;
    std::size_t size;
    std::vector<std::vector<std::uint64_t>> tables;

    ReducedSet(const GeneratingSet& gs, std::size_t n) : p(gs.p), size(n) {
        for (std::size_t d = 0; d < gs.dimension(); ++d) tables.push_back(gs.reduced_window(d, n, n));
    }

    std::uint64_t at(std::size_t dim, std::size_t i, std::size_t j) const { return tables[dim][i * size + j]; }

    bool stack_full_rank(std::size_t m, const std::vector<std::size_t>& composition) const {
        std::vector<std::uint64_t> rows;
        std::size_t total = 0;
        for (std::size_t dim = 0; dim < composition.size(); ++dim) {
            for (std::size_t r = 0; r < composition[dim]; ++r)
                for (std::size_t c = 0; c < m; ++c) rows.push_back(at(dim, r, c));
            total += composition[dim];
        }
        return rank_mod_p(std::move(rows), m, p) == total;
    }
};

void compositions_into(std::size_t total, std::size_t parts, std::vector<std::size_t>& prefix,
                       std::vector<std::vector<std::size_t>>& out) {
    if (prefix.size() + 1 == parts) {
        prefix.push_back(total);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (std::size_t d = 0; d <= total; ++d) {
        prefix.push_back(d);
        compositions_into(total - d, parts, prefix, out);
        prefix.pop_back();
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(s);
    while (std::getline(in, field, sep)) out.push_back(field);
    return out;
}

}  // namespace

std::vector<std::uint64_t> GeneratingSet::reduced_window(std::size_t dim, std::size_t rows, std::size_t cols) const {
    std::vector<std::uint64_t> out;
    out.reserve(rows * cols);
    std::visit(
        [&](const auto& src) {
            using T = std::decay_t<decltype(src)>;
            if constexpr (std::is_same_v<T, FamilyId>) {
                for (std::size_t i = 0; i < rows; ++i)
                    for (std::size_t j = 0; j < cols; ++j) out.push_back(reduce_mod(entry(src, i, j), p));
            } else {
                if (rows > src.rows() || cols > src.cols())
                    throw std::out_of_range("explicit generating matrix is " + std::to_string(src.rows()) + "x" +
                                            std::to_string(src.cols()) + ", window needs " + std::to_string(rows) +
                                            "x" + std::to_string(cols));
                for (std::size_t i = 0; i < rows; ++i)
                    for (std::size_t j = 0; j < cols; ++j) out.push_back(reduce_mod(src(i, j), p));
            }
        },
        matrices.at(dim));
    return out;
}

void GeneratingSet::validate() const {
    if (!is_prime(p)) throw std::invalid_argument("generating set: " + std::to_string(p) + " is not prime");
    if (matrices.empty()) throw std::invalid_argument("generating set: no matrices");
}

std::string describe(const MatrixSource& src) {
    if (const auto* f = std::get_if<FamilyId>(&src)) return format_family(*f);
    const auto& m = std::get<ExactMatrix>(src);
    return "explicit " + std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

std::vector<std::vector<std::size_t>> compositions(std::size_t total, std::size_t parts) {
    std::vector<std::vector<std::size_t>> out;
    if (parts == 0) {
        if (total == 0) out.emplace_back();
        return out;
    }
    std::vector<std::size_t> prefix;
    compositions_into(total, parts, prefix, out);
    return out;
}

bool stacked_rank_ok(const GeneratingSet& gs, std::size_t m, std::size_t t, const std::vector<std::size_t>& composition) {
    gs.validate();
    if (t > m) throw std::invalid_argument("stacked_rank_ok: t exceeds m");
    if (composition.size() != gs.dimension())
        throw std::invalid_argument("stacked_rank_ok: composition has " + std::to_string(composition.size()) +
                                    " parts for dimension " + std::to_string(gs.dimension()));
    std::size_t sum = 0;
    for (auto d : composition) sum += d;
    if (sum != m - t)
        throw std::invalid_argument("stacked_rank_ok: composition sums to " + std::to_string(sum) + ", expected " +
                                    std::to_string(m - t));
    if (m == 0) return true;
    return ReducedSet(gs, m).stack_full_rank(m, composition);
}

TValueResult t_value(const GeneratingSet& gs, std::size_t m_max) {
    gs.validate();
    const ReducedSet reduced(gs, m_max);
    TValueResult result;
    for (std::size_t m = 1; m <= m_max; ++m) {
        // Full rank for every composition of m - t implies it for m - t - 1, so scan t upward.
        std::size_t t = 0;
        for (; t < m; ++t) {
            bool all = true;
            for (const auto& comp : compositions(m - t, gs.dimension())) {
                if (!reduced.stack_full_rank(m, comp)) {
                    all = false;
                    break;
                }
            }
            if (all) break;
        }
        result.per_m.push_back(t);
        result.t = std::max(result.t, t);
    }
    return result;
}

PointSet digital_points(const GeneratingSet& gs, std::uint64_t count, std::size_t depth) {
    gs.validate();
    const std::uint64_t p = gs.p;
    const std::uint64_t capacity = ipow(p, depth);
    if (count > capacity)
        throw std::invalid_argument("digital_points: " + std::to_string(count) + " points exceed p^m = " +
                                    std::to_string(capacity));
    const ReducedSet reduced(gs, depth);
    BigInt denominator;
    mpz_ui_pow_ui(denominator.get_mpz_t(), p, depth);

    PointSet ps{p, depth, gs.dimension(), {}};
    ps.points.reserve(count);
    std::vector<std::uint64_t> digits(depth);
    for (std::uint64_t n = 0; n < count; ++n) {
        std::uint64_t rest = n;
        for (auto& d : digits) {
            d = rest % p;
            rest /= p;
        }
        std::vector<Rational> point;
        point.reserve(gs.dimension());
        for (std::size_t dim = 0; dim < gs.dimension(); ++dim) {
            // Horner over y_0 p^(m-1) + ... + y_(m-1).
            BigInt numerator = 0;
            for (std::size_t r = 0; r < depth; ++r) {
                std::uint64_t y = 0;
                for (std::size_t c = 0; c < depth; ++c)
                    y = (y + static_cast<std::uint64_t>(static_cast<unsigned __int128>(reduced.at(dim, r, c)) *
                                                        digits[c] % p)) %
                        p;
                numerator = numerator * p + y;
            }
            Rational x(numerator, denominator);
            x.canonicalize();
            point.push_back(std::move(x));
        }
        ps.points.push_back(std::move(point));
    }
    return ps;
}

bool net_property_holds(const PointSet& ps, std::size_t m, std::size_t t) {
    if (ps.p < 2) throw std::invalid_argument("net_property_holds: point set has no base");
    if (t > m) throw std::invalid_argument("net_property_holds: t exceeds m");
    const std::uint64_t n = ipow(ps.p, m);
    if (ps.points.size() < n) throw std::invalid_argument("net_property_holds: fewer than p^m points");
    const std::uint64_t expected = ipow(ps.p, t);
    for (const auto& comp : compositions(m - t, ps.dimension)) {
        std::map<std::vector<BigInt>, std::uint64_t> counts;
        for (std::uint64_t i = 0; i < n; ++i) {
            std::vector<BigInt> box;
            for (std::size_t dim = 0; dim < ps.dimension; ++dim) {
                BigInt scale;
                mpz_ui_pow_ui(scale.get_mpz_t(), ps.p, comp[dim]);
                const Rational& x = ps.points[i][dim];
                BigInt index;
                mpz_fdiv_q(index.get_mpz_t(), BigInt(x.get_num() * scale).get_mpz_t(), x.get_den_mpz_t());
                box.push_back(std::move(index));
            }
            ++counts[box];
        }
        if (counts.size() != ipow(ps.p, m - t)) return false;
        for (const auto& [box, c] : counts)
            if (c != expected) return false;
    }
    return true;
}

Rational star_discrepancy(const PointSet& ps) {
    const std::size_t n = ps.points.size();
    if (n == 0) throw std::invalid_argument("star_discrepancy: empty point set");
    if (ps.dimension == 1) {
        std::vector<Rational> xs;
        xs.reserve(n);
        for (const auto& pt : ps.points) xs.push_back(pt.at(0));
        std::sort(xs.begin(), xs.end());
        Rational best = 0;
        const Rational step(1, n);
        for (std::size_t i = 0; i < n; ++i) {
            const Rational above = step * static_cast<unsigned long>(i + 1) - xs[i];
            const Rational below = xs[i] - step * static_cast<unsigned long>(i);
            best = std::max({best, above, below});
        }
        return best;
    }
    if (ps.dimension != 2)
        throw std::invalid_argument("star_discrepancy: dimension " + std::to_string(ps.dimension) + " unsupported");

    // Critical grid: point coordinates plus 1. Local discrepancy of anchored boxes is
    // maximised either by open boxes [0,x)x[0,y) (volume minus count) or by closed
    // boxes [0,x]x[0,y] (count minus volume) with corners on this grid.
    auto grid_of = [&](std::size_t dim) {
        std::vector<Rational> g;
        for (const auto& pt : ps.points) g.push_back(pt.at(dim));
        g.emplace_back(1);
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        return g;
    };
    const auto gx = grid_of(0);
    const auto gy = grid_of(1);
    std::vector<std::size_t> rx(n), ry(n);
    for (std::size_t i = 0; i < n; ++i) {
        rx[i] = static_cast<std::size_t>(std::lower_bound(gx.begin(), gx.end(), ps.points[i][0]) - gx.begin());
        ry[i] = static_cast<std::size_t>(std::lower_bound(gy.begin(), gy.end(), ps.points[i][1]) - gy.begin());
    }
    Rational best = 0;
    const Rational count_unit(1, n);
    for (std::size_t a = 0; a < gx.size(); ++a) {
        for (std::size_t b = 0; b < gy.size(); ++b) {
            std::size_t open = 0;
            std::size_t closed = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (rx[i] <= a && ry[i] <= b) {
                    ++closed;
                    if (rx[i] < a && ry[i] < b) ++open;
                }
            }
            const Rational vol = gx[a] * gy[b];
            const Rational open_dev = vol - count_unit * static_cast<unsigned long>(open);
            const Rational closed_dev = count_unit * static_cast<unsigned long>(closed) - vol;
            if (open_dev > best) best = open_dev;
            if (closed_dev > best) best = closed_dev;
        }
    }
    return best;
}

std::string points_to_csv(const PointSet& ps) {
    std::string out;
    for (const auto& pt : ps.points) {
        for (std::size_t d = 0; d < pt.size(); ++d) {
            if (d > 0) out += ',';
            out += pt[d].get_num().get_str() + "/" + pt[d].get_den().get_str();
        }
        out += '\n';
    }
    return out;
}

PointSet points_from_csv(const std::string& text) {
    PointSet ps;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<Rational> pt;
        for (const auto& field : split(line, ',')) {
            const auto slash = field.find('/');
            BigInt num = parse_bigint(field.substr(0, slash));
            BigInt den = slash == std::string::npos ? BigInt(1) : parse_bigint(field.substr(slash + 1));
            if (den <= 0) throw std::invalid_argument("points csv: bad denominator in '" + field + "'");
            Rational x(num, den);
            x.canonicalize();
            if (x < 0 || x >= 1) throw std::invalid_argument("points csv: coordinate outside [0,1): " + field);
            pt.push_back(std::move(x));
        }
        if (ps.points.empty()) ps.dimension = pt.size();
        else if (pt.size() != ps.dimension) throw std::invalid_argument("points csv: ragged rows");
        ps.points.push_back(std::move(pt));
    }
    return ps;
}

CandidateKind parse_candidate_kind(const std::string& name) {
    if (name == "random") return CandidateKind::random;
    if (name == "m1") return CandidateKind::m1_family;
    if (name == "p1") return CandidateKind::p1_family;
    throw std::invalid_argument("unknown candidate generator '" + name + "' (random, m1, p1)");
}

SearchReport search_third_matrix(std::uint64_t p, std::size_t m_max, CandidateKind kind, std::size_t budget,
                                 std::uint64_t seed) {
    SearchReport report;
    if (budget == 0) return report;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> digit(0, p - 1);
    report.best_per_m.assign(m_max, m_max);
    for (std::size_t c = 0; c < budget; ++c) {
        SearchCandidate cand;
        switch (kind) {
        case CandidateKind::random: {
            cand.matrix = ExactMatrix::identity(m_max);
            for (std::size_t i = 0; i < m_max; ++i)
                for (std::size_t j = i + 1; j < m_max; ++j) cand.matrix(i, j) = digit(rng);
            cand.description = "random#" + std::to_string(c);
            break;
        }
        case CandidateKind::m1_family:
        case CandidateKind::p1_family: {
            const auto a = static_cast<std::int64_t>(c + 2);
            const FamilyId f = kind == CandidateKind::m1_family ? FamilyId::m1(a) : FamilyId::p1(a);
            cand.matrix = window(f, m_max);
            cand.description = format_family(f);
            break;
        }
        }
        const GeneratingSet gs{p, {FamilyId::m1(0), FamilyId::m1(1), cand.matrix}};
        cand.t = t_value(gs, m_max);
        for (std::size_t m = 0; m < m_max; ++m) report.best_per_m[m] = std::min(report.best_per_m[m], cand.t.per_m[m]);
        report.candidates.push_back(std::move(cand));
    }
    return report;
}

}  // namespace binlab
