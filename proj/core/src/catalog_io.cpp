#include <compograph/catalog_io.hpp>

#include <compograph/error.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace compograph {

std::string_view to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::malformed_line: return "malformed-line";
    case ParseErrorKind::duplicate_service: return "duplicate-service";
    case ParseErrorKind::empty_inputs: return "empty-inputs";
    case ParseErrorKind::empty_outputs: return "empty-outputs";
    case ParseErrorKind::duplicate_type_in_list: return "duplicate-type-in-list";
    case ParseErrorKind::bad_token: return "bad-token";
  }
  return "unknown";
}

std::string format_error(const ParseError& error) {
  return std::to_string(error.line) + ":" + std::to_string(error.column) + ": " +
         std::string(to_string(error.kind)) + ": " + error.message;
}

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

struct Token {
  std::string_view text;
  int column;  // 1-based
};

// Splits `part`, which starts at 1-based column `base` of its line.
std::vector<Token> split_tokens(std::string_view part, int base) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < part.size()) {
    while (i < part.size() && is_ws(part[i])) ++i;
    const std::size_t start = i;
    while (i < part.size() && !is_ws(part[i])) ++i;
    if (i > start) out.push_back({part.substr(start, i - start), base + static_cast<int>(start)});
  }
  return out;
}

class DslParser {
 public:
  DslParser(std::string_view source, std::string_view default_name)
      : source_(source), catalog_name_(default_name) {}

  CatalogParseResult run() {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= source_.size()) {
      std::size_t eol = source_.find('\n', pos);
      if (eol == std::string_view::npos) eol = source_.size();
      ++line_no;
      parse_line(source_.substr(pos, eol - pos), line_no);
      pos = eol + 1;
    }

    if (!errors_.empty()) return {std::nullopt, std::move(errors_)};
    if (!is_valid_token(catalog_name_)) {
      errors_.push_back({1, 1, ParseErrorKind::bad_token,
                         "invalid catalog name '" + catalog_name_ + "'"});
      return {std::nullopt, std::move(errors_)};
    }
    return {Catalog(catalog_name_, std::move(services_)), {}};
  }

 private:
  void error(int line, int column, ParseErrorKind kind, std::string message) {
    errors_.push_back({line, column, kind, std::move(message)});
  }

  void parse_line(std::string_view line, int line_no) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto first = std::find_if_not(line.begin(), line.end(), is_ws);
    if (first == line.end()) return;
    const int first_col = static_cast<int>(first - line.begin()) + 1;

    const bool first_significant = !seen_significant_;
    seen_significant_ = true;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      const auto tokens = split_tokens(line, 1);
      if (tokens.front().text == "collection") {
        if (!first_significant) {
          error(line_no, first_col, ParseErrorKind::malformed_line,
                "'collection' must be the first declaration");
        } else if (tokens.size() != 2) {
          error(line_no, first_col, ParseErrorKind::malformed_line,
                "expected 'collection <name>'");
        } else if (!is_valid_token(tokens[1].text)) {
          error(line_no, tokens[1].column, ParseErrorKind::bad_token,
                "invalid catalog name '" + std::string(tokens[1].text) + "'");
        } else {
          catalog_name_ = std::string(tokens[1].text);
        }
        return;
      }
      error(line_no, first_col, ParseErrorKind::malformed_line,
            "expected '<name> : <inputs> -> <outputs>'");
      return;
    }

    const auto name_tokens = split_tokens(line.substr(0, colon), 1);
    if (name_tokens.size() != 1) {
      error(line_no, first_col, ParseErrorKind::malformed_line,
            name_tokens.empty() ? "missing service name before ':'"
                                : "service name must be a single token");
      return;
    }
    const Token name = name_tokens.front();
    bool line_ok = true;
    if (!is_valid_token(name.text)) {
      error(line_no, name.column, ParseErrorKind::bad_token,
            "invalid service name '" + std::string(name.text) + "'");
      line_ok = false;
    }

    const std::string_view rest = line.substr(colon + 1);
    const int rest_col = static_cast<int>(colon) + 2;
    const auto arrow = rest.find("->");
    if (arrow == std::string_view::npos) {
      error(line_no, static_cast<int>(line.size()) + 1, ParseErrorKind::malformed_line,
            "missing '->' in service '" + std::string(name.text) + "'");
      return;
    }
    const int arrow_col = rest_col + static_cast<int>(arrow);
    const int outputs_col = arrow_col + 2;

    auto [inputs, inputs_clean] = collect_types(rest.substr(0, arrow), rest_col, line_no);
    auto [outputs, outputs_clean] = collect_types(rest.substr(arrow + 2), outputs_col, line_no);
    line_ok = line_ok && inputs_clean && outputs_clean;
    // A side holding only bad tokens is reported once, as bad tokens.
    if (inputs.empty() && inputs_clean) {
      error(line_no, arrow_col, ParseErrorKind::empty_inputs,
            "service '" + std::string(name.text) + "' has no inputs");
      line_ok = false;
    }
    if (outputs.empty() && outputs_clean) {
      error(line_no, outputs_col, ParseErrorKind::empty_outputs,
            "service '" + std::string(name.text) + "' has no outputs");
      line_ok = false;
    }

    const std::string service_name(name.text);
    if (auto [it, inserted] = declared_.emplace(service_name, line_no); !inserted) {
      error(line_no, name.column, ParseErrorKind::duplicate_service,
            "service '" + service_name + "' already declared on line " +
                std::to_string(it->second));
      return;
    }
    if (line_ok) {
      services_.emplace_back(service_name, TypeSet(std::span<const std::string>(inputs)),
                             TypeSet(std::span<const std::string>(outputs)));
    }
  }

  struct TypeList {
    std::vector<std::string> types;
    bool clean = true;
  };

  // Validates one side of the arrow.
  TypeList collect_types(std::string_view part, int base, int line_no) {
    TypeList out;
    std::set<std::string_view> seen;
    for (const Token& t : split_tokens(part, base)) {
      if (!is_valid_token(t.text)) {
        error(line_no, t.column, ParseErrorKind::bad_token,
              "invalid type name '" + std::string(t.text) + "'");
        out.clean = false;
        continue;
      }
      if (!seen.insert(t.text).second) {
        error(line_no, t.column, ParseErrorKind::duplicate_type_in_list,
              "type '" + std::string(t.text) + "' listed twice");
        out.clean = false;
        continue;
      }
      out.types.emplace_back(t.text);
    }
    return out;
  }

  std::string_view source_;
  std::string catalog_name_;
  bool seen_significant_ = false;
  std::map<std::string, int> declared_;
  std::vector<Service> services_;
  std::vector<ParseError> errors_;
};

using nlohmann::json;

std::pair<int, int> line_column_at(std::string_view source, std::size_t byte) {
  byte = std::min(byte, source.size());
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < byte; ++i) {
    if (source[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

class JsonValidator {
 public:
  CatalogParseResult run(const json& root) {
    if (!root.is_object()) {
      schema_error("", ParseErrorKind::malformed_line, "expected an object");
      return fail();
    }
    std::string name;
    if (!root.contains("name") || !root["name"].is_string()) {
      schema_error("/name", ParseErrorKind::malformed_line, "expected a string");
    } else {
      name = root["name"].get<std::string>();
      if (!is_valid_token(name)) {
        schema_error("/name", ParseErrorKind::bad_token, "invalid catalog name '" + name + "'");
      }
    }

    std::vector<Service> services;
    if (!root.contains("services") || !root["services"].is_array()) {
      schema_error("/services", ParseErrorKind::malformed_line, "expected an array");
      return fail();
    }
    const json& list = root["services"];
    std::map<std::string, std::size_t> declared;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string at = "/services/" + std::to_string(i);
      const json& entry = list[i];
      if (!entry.is_object()) {
        schema_error(at, ParseErrorKind::malformed_line, "expected an object");
        continue;
      }
      const std::size_t before = errors_.size();
      std::string svc_name;
      if (!entry.contains("name") || !entry["name"].is_string()) {
        schema_error(at + "/name", ParseErrorKind::malformed_line, "expected a string");
      } else {
        svc_name = entry["name"].get<std::string>();
        if (!is_valid_token(svc_name)) {
          schema_error(at + "/name", ParseErrorKind::bad_token,
                       "invalid service name '" + svc_name + "'");
        } else if (auto [it, inserted] = declared.emplace(svc_name, i); !inserted) {
          schema_error(at + "/name", ParseErrorKind::duplicate_service,
                       "service '" + svc_name + "' already declared at /services/" +
                           std::to_string(it->second));
        }
      }
      auto inputs = type_list(entry, at, "inputs", ParseErrorKind::empty_inputs);
      auto outputs = type_list(entry, at, "outputs", ParseErrorKind::empty_outputs);
      if (errors_.size() == before) {
        services.emplace_back(svc_name, TypeSet(std::span<const std::string>(inputs)),
                              TypeSet(std::span<const std::string>(outputs)));
      }
    }
    if (!errors_.empty()) return fail();
    return {Catalog(name, std::move(services)), {}};
  }

 private:
  CatalogParseResult fail() { return {std::nullopt, std::move(errors_)}; }

  void schema_error(const std::string& pointer, ParseErrorKind kind, const std::string& what) {
    errors_.push_back({1, 1, kind, (pointer.empty() ? "/" : pointer) + ": " + what});
  }

  std::vector<std::string> type_list(const json& entry, const std::string& at, const char* key,
                                     ParseErrorKind empty_kind) {
    std::vector<std::string> out;
    const std::string ptr = at + "/" + key;
    if (!entry.contains(key) || !entry[key].is_array()) {
      schema_error(ptr, ParseErrorKind::malformed_line, "expected an array of strings");
      return out;
    }
    const json& arr = entry[key];
    if (arr.empty()) {
      schema_error(ptr, empty_kind, std::string("no ") + key);
      return out;
    }
    std::set<std::string> seen;
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string item = ptr + "/" + std::to_string(k);
      if (!arr[k].is_string()) {
        schema_error(item, ParseErrorKind::malformed_line, "expected a string");
        continue;
      }
      auto token = arr[k].get<std::string>();
      if (!is_valid_token(token)) {
        schema_error(item, ParseErrorKind::bad_token, "invalid type name '" + token + "'");
      } else if (!seen.insert(token).second) {
        schema_error(item, ParseErrorKind::duplicate_type_in_list,
                     "type '" + token + "' listed twice");
      } else {
        out.push_back(std::move(token));
      }
    }
    return out;
  }

  std::vector<ParseError> errors_;
};

}  // namespace

CatalogParseResult parse_catalog_text(std::string_view source, std::string_view default_name) {
  return DslParser(source, default_name).run();
}

CatalogParseResult parse_catalog_json(std::string_view source) {
  json root;
  try {
    root = json::parse(source.begin(), source.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const auto [line, column] = line_column_at(source, e.byte == 0 ? 0 : e.byte - 1);
    return {std::nullopt, {{line, column, ParseErrorKind::malformed_line, e.what()}}};
  }
  return JsonValidator{}.run(root);
}

CatalogParseResult parse_catalog(std::string_view source, CatalogFormat format,
                                 std::string_view default_name) {
  return format == CatalogFormat::json ? parse_catalog_json(source)
                                       : parse_catalog_text(source, default_name);
}

std::string serialize_catalog(const Catalog& catalog, CatalogFormat format) {
  if (format == CatalogFormat::json) {
    nlohmann::ordered_json services = nlohmann::ordered_json::array();
    for (const Service& s : catalog) {
      services.push_back({{"name", s.name()},
                          {"inputs", s.inputs().members()},
                          {"outputs", s.outputs().members()}});
    }
    nlohmann::ordered_json root = {{"name", catalog.name()}, {"services", std::move(services)}};
    return root.dump(2) + "\n";
  }

  std::string out = "collection " + catalog.name() + "\n";
  for (const Service& s : catalog) {
    out += s.name() + " :";
    for (const auto& t : s.inputs()) out += " " + t;
    out += " ->";
    for (const auto& t : s.outputs()) out += " " + t;
    out += "\n";
  }
  return out;
}

}  // namespace compograph
