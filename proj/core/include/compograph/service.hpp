#pragma once

#include <compograph/type_set.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace compograph {

/// An atomic service: a name with the types it consumes and produces.
/// Both lists must be non-empty; the constructor throws Error otherwise.
class Service {
 public:
  Service(std::string name, TypeSet inputs, TypeSet outputs);

  const std::string& name() const noexcept { return name_; }
  const TypeSet& inputs() const noexcept { return inputs_; }
  const TypeSet& outputs() const noexcept { return outputs_; }

  friend bool operator==(const Service&, const Service&) = default;

 private:
  std::string name_;
  TypeSet inputs_;
  TypeSet outputs_;
};

/// A named collection of services, iterated in service-name order.
class Catalog {
 public:
  Catalog() = default;

  // Throws Error(Errc::duplicate_service) on repeated names and
  // Error(Errc::invalid_token) on a bad catalog name.
  Catalog(std::string name, std::vector<Service> services);

  const std::string& name() const noexcept { return name_; }
  const std::vector<Service>& services() const noexcept { return services_; }
  std::size_t size() const noexcept { return services_.size(); }
  bool empty() const noexcept { return services_.empty(); }

  auto begin() const noexcept { return services_.begin(); }
  auto end() const noexcept { return services_.end(); }

  // nullptr when absent.
  const Service* find(std::string_view service_name) const noexcept;

  // Throws Error(Errc::unknown_service) when absent.
  const Service& at(std::string_view service_name) const;

  friend bool operator==(const Catalog&, const Catalog&) = default;

 private:
  std::string name_ = "catalog";
  std::vector<Service> services_;
};

}  // namespace compograph
