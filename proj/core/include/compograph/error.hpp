#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace compograph {

enum class Errc {
  invalid_token,
  invalid_service,
  duplicate_service,
  unknown_service,
  unknown_initial_service,
  catalog_mismatch,
  same_service,
  empty_required,
};

std::string_view to_string(Errc code) noexcept;

// Semantic errors raised by the engine. Parse problems are not reported this
// way; see ParseError in catalog_io.hpp.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace compograph
