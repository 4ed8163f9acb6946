#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "mucos/factor.hpp"
#include "mucos/instance.hpp"
#include "mucos/kernel.hpp"

namespace mucos::cli {

using Json = nlohmann::ordered_json;

// Bad input document: syntax errors carry 1-based line/column, schema errors a field path.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

Json to_json(Complex z);
Json to_json(const CMatrix& m);
Json to_json(const Character& chi);
Json to_json(const ScalarTable& f);
Json to_json(const Instance& inst);
Json to_json(const Factorization& fact);
Json to_json(const VerificationReport& r);

Complex complex_from_json(const Json& j, const std::string& path);
CMatrix matrix_from_json(const Json& j, const std::string& path);
Character character_from_json(const Json& j, const std::string& path);
Instance instance_from_json(const Json& j);
// Needs "group" alongside the fields written by to_json(Factorization).
Factorization factorization_from_json(const Json& j, GroupSpec* spec);

Json parse_document(std::string_view text);

}  // namespace mucos::cli
