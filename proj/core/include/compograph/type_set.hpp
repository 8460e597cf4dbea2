#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace compograph {

// A type token is non-empty, holds no whitespace and none of `:`, `,`, `->`.
bool is_valid_token(std::string_view token) noexcept;

// Throws Error(Errc::invalid_token) with a message naming `what`.
void require_valid_token(std::string_view token, std::string_view what);

/// Finite set of type names with value semantics.
///
/// Members are kept sorted (byte-wise lexicographic) and unique, so equality
/// and ordering are structural and the canonical text form is stable.
/// Ordering between two sets compares their sorted member sequences.
class TypeSet {
 public:
  using const_iterator = std::vector<std::string>::const_iterator;

  TypeSet() = default;
  TypeSet(std::initializer_list<std::string_view> members);
  explicit TypeSet(std::span<const std::string> members);

  // Parses the canonical comma-joined form; the empty string is the empty set.
  // Duplicates collapse. Throws Error(Errc::invalid_token) on a bad member.
  static TypeSet parse(std::string_view canonical);

  // Like parse() but returns nothing instead of throwing.
  static std::optional<TypeSet> try_parse(std::string_view canonical);

  bool empty() const noexcept { return members_.empty(); }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(std::string_view token) const noexcept;

  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }
  const std::vector<std::string>& members() const noexcept { return members_; }

  // Sorted members joined by a single comma, no spaces.
  std::string to_string() const;

  friend bool operator==(const TypeSet&, const TypeSet&) = default;
  friend std::strong_ordering operator<=>(const TypeSet& a, const TypeSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  struct Sorted {};
  TypeSet(Sorted, std::vector<std::string> members) : members_(std::move(members)) {}

  friend TypeSet intersect(const TypeSet&, const TypeSet&);
  friend TypeSet unite(const TypeSet&, const TypeSet&);
  friend TypeSet remove(const TypeSet&, const TypeSet&);

  std::vector<std::string> members_;
};

TypeSet intersect(const TypeSet& a, const TypeSet& b);

// Set union (named `unite` since `union` is reserved).
TypeSet unite(const TypeSet& a, const TypeSet& b);

// a ⊆ b
bool includes(const TypeSet& a, const TypeSet& b);

// a ∖ b
TypeSet remove(const TypeSet& a, const TypeSet& b);

inline std::size_t card(const TypeSet& a) noexcept { return a.size(); }

}  // namespace compograph
