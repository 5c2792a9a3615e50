#include "ybx/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace ybx {

using nlohmann::json;

ParseError::ParseError(const std::string& what, std::optional<std::size_t> position)
    : std::invalid_argument(position ? what + " at position " + std::to_string(*position) : what),
      position_(position) {}

Permutation parse_cycles(const std::string& text, std::optional<std::size_t> n) {
  std::vector<std::vector<std::size_t>> cycles;
  std::set<std::size_t> seen;
  std::size_t pos = 0, largest = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty permutation", pos);
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw ParseError("unterminated cycle", pos);
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) throw ParseError("expected a point", pos);
      const std::size_t start = pos;
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > 1000000) throw ParseError("point too large", start);
        ++pos;
      }
      if (value == 0) throw ParseError("points are numbered from 1", start);
      if (!seen.insert(value).second) throw ParseError("repeated point " + std::to_string(value), start);
      largest = std::max(largest, value);
      cycle.push_back(value - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) &&
          std::isspace(static_cast<unsigned char>(text[pos - 1])))
        continue;
      throw ParseError(pos < text.size() ? "unexpected character" : "unterminated cycle", pos);
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  const std::size_t size = n.value_or(largest);
  if (largest > size) throw ParseError("point " + std::to_string(largest) + " exceeds n = " + std::to_string(size));
  std::vector<std::size_t> images(size);
  for (std::size_t i = 0; i < size; ++i) images[i] = i;
  for (const auto& c : cycles)
    for (std::size_t x = 0; x < c.size(); ++x) images[c[x]] = c[(x + 1) % c.size()];
  return Permutation(images);
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  for (const auto& c : p.cycles()) {
    if (c.size() < 2) continue;
    out += "(";
    for (std::size_t x = 0; x < c.size(); ++x) out += (x ? " " : "") + std::to_string(c[x] + 1);
    out += ")";
  }
  return out.empty() ? "(1)" : out;
}

namespace {

Permutation permutation_field(const json& j, const char* key, std::optional<std::size_t> n) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  const json& v = j.at(key);
  if (v.is_string()) return parse_cycles(v.get<std::string>(), n);
  if (!v.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array or a cycle string");
  std::vector<std::size_t> images;
  for (const auto& x : v) {
    if (!x.is_number_unsigned()) throw ParseError(std::string("field \"") + key + "\" must hold nonnegative integers");
    images.push_back(x.get<std::size_t>());
  }
  try {
    return Permutation(images);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("field \"") + key + "\": " + e.what());
  }
}

}  // namespace

json abd_to_json(const ABDStructure& s) {
  return json{{"n", s.n}, {"c1", s.c1.images()}, {"c2", s.c2.images()}, {"a", s.a}};
}

ABDStructure abd_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("structure JSON must be an object");
  std::optional<std::size_t> n;
  if (j.contains("n")) {
    if (!j.at("n").is_number_unsigned()) throw ParseError("field \"n\" must be a positive integer");
    n = j.at("n").get<std::size_t>();
  }
  Permutation c1 = permutation_field(j, "c1", n);
  Permutation c2 = permutation_field(j, "c2", n ? n : std::optional<std::size_t>(c1.size()));
  if (n && (c1.size() != *n || c2.size() != *n)) throw ParseError("permutation sizes disagree with \"n\"");
  std::vector<std::size_t> a;
  if (j.contains("a")) {
    if (!j.at("a").is_array()) throw ParseError("field \"a\" must be an array");
    for (const auto& x : j.at("a")) {
      if (!x.is_number_unsigned()) throw ParseError("field \"a\" must hold nonnegative integers");
      a.push_back(x.get<std::size_t>());
    }
  }
  try {
    return ABDStructure(std::move(c1), std::move(c2), std::move(a));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json bundle_to_json(const BundleData& b) {
  return json{{"r", b.r}, {"n", b.n}, {"m", b.m}, {"lambda", b.lambda.to_string()}};
}

BundleData bundle_from_json(const json& j, const Field& field) {
  if (!j.is_object()) throw ParseError("bundle JSON must be an object");
  for (const char* key : {"r", "n", "m"})
    if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    const ExactScalar lambda = j.contains("lambda") ? field.parse_scalar(j.at("lambda").get<std::string>()) : field.one();
    return BundleData(j.at("r").get<std::size_t>(), j.at("n").get<std::size_t>(),
                      j.at("m").get<std::vector<std::vector<long long>>>(), lambda);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bundle JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json scalar_to_json(const ExactScalar& x) { return x.to_string(); }

json tensor_to_json(const Tensor2& t) {
  json out = json::array();
  const std::size_t n = t.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const ExactScalar& c = t.at(i, j, k, l);
          if (!c.is_zero()) out.push_back({{"i", i}, {"j", j}, {"k", k}, {"l", l}, {"c", c.to_string()}});
        }
  return out;
}

Tensor2 tensor_from_json(const json& j, const Field& field, std::size_t n) {
  if (!j.is_array()) throw ParseError("tensor JSON must be an array");
  Tensor2 t(field, n);
  try {
    for (const auto& e : j) {
      const std::size_t i = e.at("i"), jj = e.at("j"), k = e.at("k"), l = e.at("l");
      if (i >= n || jj >= n || k >= n || l >= n) throw ParseError("tensor index out of range");
      t.at(i, jj, k, l) += field.parse_scalar(e.at("c").get<std::string>());
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("tensor JSON: ") + e.what());
  }
  return t;
}

ParsedInput parse_inputs(const std::string& text, const Field& field) {
  auto first = std::find_if(text.begin(), text.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  if (first != text.end() && *first == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
    if (j.contains("r")) return bundle_from_json(j, field);
    if (j.contains("c1")) return abd_from_json(j);
    if (j.contains("cycles")) {
      std::optional<std::size_t> n;
      if (j.contains("n")) n = j.at("n").get<std::size_t>();
      return parse_cycles(j.at("cycles").get<std::string>(), n);
    }
    throw ParseError("JSON input is neither a structure, a bundle nor a permutation");
  }
  return parse_cycles(text);
}

std::string emit(const ParsedInput& input) {
  struct Visitor {
    std::string operator()(const ABDStructure& s) const { return abd_to_json(s).dump(); }
    std::string operator()(const BundleData& b) const { return bundle_to_json(b).dump(); }
    std::string operator()(const Permutation& p) const {
      return json{{"n", p.size()}, {"cycles", format_cycles(p)}}.dump();
    }
  };
  return std::visit(Visitor{}, input);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ybx
