#pragma once

#include <compograph/service.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace compograph {

enum class ParseErrorKind {
  malformed_line,
  duplicate_service,
  empty_inputs,
  empty_outputs,
  duplicate_type_in_list,
  bad_token,
};

std::string_view to_string(ParseErrorKind kind) noexcept;

struct ParseError {
  int line = 1;    // 1-based
  int column = 1;  // 1-based, in bytes
  ParseErrorKind kind = ParseErrorKind::malformed_line;
  std::string message;

  friend bool operator==(const ParseError&, const ParseError&) = default;
};

// `<line>:<column>: <kind>: <message>`
std::string format_error(const ParseError& error);

// Either a catalog or every error found in the source, never both.
struct CatalogParseResult {
  std::optional<Catalog> catalog;
  std::vector<ParseError> errors;

  bool ok() const noexcept { return catalog.has_value(); }
};

enum class CatalogFormat { dsl, json };

/// Parses the line-oriented service DSL:
///
///     collection weather-ws        # optional, first significant line
///     s1 : city -> longitude latitude
///
/// `#` starts a comment; blank lines are ignored. `default_name` names the
/// catalog when no `collection` line is present.
CatalogParseResult parse_catalog_text(std::string_view source,
                                      std::string_view default_name = "catalog");

/// Parses `{"name": ..., "services": [{"name", "inputs", "outputs"}...]}`.
/// Schema errors carry a JSON pointer to the offending value in the message.
CatalogParseResult parse_catalog_json(std::string_view source);

CatalogParseResult parse_catalog(std::string_view source, CatalogFormat format,
                                 std::string_view default_name = "catalog");

std::string serialize_catalog(const Catalog& catalog, CatalogFormat format);

}  // namespace compograph
