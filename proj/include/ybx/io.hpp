#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"
#include "ybx/bundle.hpp"
#include "ybx/permutation.hpp"
#include "ybx/tensor.hpp"

namespace ybx {

/// Malformed input; `position` is a 0-based character offset into the text
/// when the error is syntactic.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::optional<std::size_t> position = std::nullopt);
  std::optional<std::size_t> position() const { return position_; }

 private:
  std::optional<std::size_t> position_;
};

/// Parses 1-based cycle notation such as "(1 4 2 3)" or "(1,2)(3 4)". Points not
/// listed are fixed. With n unset, n is the largest listed point.
Permutation parse_cycles(const std::string& text, std::optional<std::size_t> n = std::nullopt);
/// Canonical 1-based cycle notation: nontrivial cycles starting at their smallest
/// point, ordered by it; the identity prints as "(1)".
std::string format_cycles(const Permutation& p);

nlohmann::json abd_to_json(const ABDStructure& s);
/// Accepts "c1"/"c2" as 0-based image arrays or 1-based cycle strings. Does not validate.
ABDStructure abd_from_json(const nlohmann::json& j);

nlohmann::json bundle_to_json(const BundleData& b);
BundleData bundle_from_json(const nlohmann::json& j, const Field& field = Field::rationals());

/// Sparse list of nonzero entries [{"i","j","k","l","c"}] in index order.
nlohmann::json tensor_to_json(const Tensor2& t);
Tensor2 tensor_from_json(const nlohmann::json& j, const Field& field, std::size_t n);

nlohmann::json scalar_to_json(const ExactScalar& x);

using ParsedInput = std::variant<ABDStructure, BundleData, Permutation>;
/// JSON objects with "r" are bundles, with "c1" structures, with "cycles" a
/// permutation (optional "n"); any other text is read as cycle notation.
ParsedInput parse_inputs(const std::string& text, const Field& field = Field::rationals());
/// Normalized text form, inverse to parse_inputs.
std::string emit(const ParsedInput& input);

std::string read_file(const std::string& path);

}  // namespace ybx
