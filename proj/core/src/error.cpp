#include <compograph/error.hpp>

namespace compograph {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_token: return "invalid-token";
    case Errc::invalid_service: return "invalid-service";
    case Errc::duplicate_service: return "duplicate-service";
    case Errc::unknown_service: return "unknown-service";
    case Errc::unknown_initial_service: return "unknown-initial-service";
    case Errc::catalog_mismatch: return "catalog-mismatch";
    case Errc::same_service: return "same-service";
    case Errc::empty_required: return "empty-required";
  }
  return "unknown";
}

}  // namespace compograph
