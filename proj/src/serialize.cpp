#include "binlab/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace binlab {

BigInt parse_bigint(const std::string& s) {
    BigInt x;
    if (s.empty() || x.set_str(s, 10) != 0) throw std::invalid_argument("not a decimal integer: '" + s + "'");
    return x;
}

std::string to_string(const BigInt& x) { return x.get_str(10); }
std::string to_string(const Rational& x) { return x.get_str(10); }

nlohmann::json matrix_to_json(const ExactMatrix& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(to_string(a(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(rows)}};
}

ExactMatrix matrix_from_json(const nlohmann::json& j) {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows)
        throw std::invalid_argument("matrix json: expected " + std::to_string(rows) + " rows");
    ExactMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = entries[i];
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument("matrix json: row " + std::to_string(i) + " does not have " +
                                        std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) a(i, c) = parse_bigint(row[c].get<std::string>());
    }
    return a;
}

std::string matrix_to_csv(const ExactMatrix& a) {
    std::string out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j > 0) out += ',';
            out += to_string(a(i, j));
        }
        out += '\n';
    }
    return out;
}

ExactMatrix matrix_from_csv(const std::string& text) {
    std::vector<std::vector<BigInt>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<BigInt> row;
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) row.push_back(parse_bigint(field));
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::invalid_argument("matrix csv: ragged rows");
        rows.push_back(std::move(row));
    }
    ExactMatrix a(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = rows[i][j];
    return a;
}

}  // namespace binlab
