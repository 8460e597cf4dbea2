#include <compograph/service.hpp>

#include <compograph/error.hpp>

#include <algorithm>

namespace compograph {

Service::Service(std::string name, TypeSet inputs, TypeSet outputs)
    : name_(std::move(name)), inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
  require_valid_token(name_, "service name");
  if (inputs_.empty()) throw Error(Errc::invalid_service, "service '" + name_ + "' has no inputs");
  if (outputs_.empty()) throw Error(Errc::invalid_service, "service '" + name_ + "' has no outputs");
}

Catalog::Catalog(std::string name, std::vector<Service> services)
    : name_(std::move(name)), services_(std::move(services)) {
  require_valid_token(name_, "catalog name");
  std::stable_sort(services_.begin(), services_.end(),
                   [](const Service& a, const Service& b) { return a.name() < b.name(); });
  auto dup = std::adjacent_find(services_.begin(), services_.end(),
                                [](const Service& a, const Service& b) { return a.name() == b.name(); });
  if (dup != services_.end()) {
    throw Error(Errc::duplicate_service, "duplicate service '" + dup->name() + "'");
  }
}

const Service* Catalog::find(std::string_view service_name) const noexcept {
  auto it = std::lower_bound(services_.begin(), services_.end(), service_name,
                             [](const Service& s, std::string_view n) { return s.name() < n; });
  if (it == services_.end() || it->name() != service_name) return nullptr;
  return &*it;
}

const Service& Catalog::at(std::string_view service_name) const {
  if (const Service* s = find(service_name)) return *s;
  throw Error(Errc::unknown_service, "unknown service '" + std::string(service_name) + "'");
}

}  // namespace compograph
