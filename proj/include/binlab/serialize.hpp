#pragma once

#include <string>

#include "binlab/exact_matrix.hpp"
#include "json.hpp"

namespace binlab {

/// {"rows":n,"cols":m,"entries":[["-12",...],...]}; entries are decimal strings.
nlohmann::json matrix_to_json(const ExactMatrix& a);
ExactMatrix matrix_from_json(const nlohmann::json& j);

/// One line per row, plain decimal integers separated by commas.
std::string matrix_to_csv(const ExactMatrix& a);
ExactMatrix matrix_from_csv(const std::string& text);

BigInt parse_bigint(const std::string& s);
std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

}  // namespace binlab
