#pragma once

// Canonical serialization of QPoly:
//   {"k":int,"D":int,"terms":[{"e":[ints],"c":"decimal-string"},...]}
// with terms in graded-lex order. The compact dump is bit-exact across runs
// and is what digests are computed over.

#include <string>

#include "comaj/qpoly.hpp"
#include "json.hpp"

namespace comaj {

nlohmann::json to_json(const QPoly& p);

/// Throws std::invalid_argument on schema violations.
QPoly qpoly_from_json(const nlohmann::json& j);

std::string canonical_json(const QPoly& p);

/// Lowercase hex SHA-256 of canonical_json(p).
std::string digest(const QPoly& p);

std::string sha256_hex(const std::string& bytes);

/// Dense CSV: header "e_1,...,e_k,coeff", one row per exponent vector of
/// total degree <= D in graded-lex order, zeros included.
std::string to_csv(const QPoly& p);

}  // namespace comaj
