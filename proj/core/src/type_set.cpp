#include <compograph/type_set.hpp>

#include <compograph/error.hpp>

#include <algorithm>
#include <iterator>

namespace compograph {

namespace {

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Length of the UTF-8 sequence starting at s[i], or 0 if malformed.
std::size_t utf8_sequence_length(std::string_view s, std::size_t i) {
  const auto lead = static_cast<unsigned char>(s[i]);
  std::size_t len = 0;
  std::uint32_t cp = 0;
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) { len = 2; cp = lead & 0x1F; }
  else if ((lead & 0xF0) == 0xE0) { len = 3; cp = lead & 0x0F; }
  else if ((lead & 0xF8) == 0xF0) { len = 4; cp = lead & 0x07; }
  else return 0;
  if (i + len > s.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    const auto c = static_cast<unsigned char>(s[i + k]);
    if ((c & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (c & 0x3F);
  }
  // Overlong forms, surrogates and out-of-range code points.
  static constexpr std::uint32_t min_cp[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < min_cp[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return 0;
  return len;
}

}  // namespace

bool is_valid_token(std::string_view token) noexcept {
  if (token.empty()) return false;
  if (token.find("->") != std::string_view::npos) return false;
  for (std::size_t i = 0; i < token.size();) {
    const auto c = static_cast<unsigned char>(token[i]);
    if (is_space(c) || c < 0x20 || c == 0x7F || c == ':' || c == ',' || c == '#') return false;
    const std::size_t len = utf8_sequence_length(token, i);
    if (len == 0) return false;
    i += len;
  }
  return true;
}

void require_valid_token(std::string_view token, std::string_view what) {
  if (!is_valid_token(token)) {
    throw Error(Errc::invalid_token,
                "invalid " + std::string(what) + " '" + std::string(token) + "'");
  }
}

TypeSet::TypeSet(std::initializer_list<std::string_view> members) {
  members_.reserve(members.size());
  for (auto m : members) {
    require_valid_token(m, "type name");
    members_.emplace_back(m);
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

TypeSet::TypeSet(std::span<const std::string> members)
    : members_(members.begin(), members.end()) {
  for (const auto& m : members_) require_valid_token(m, "type name");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

TypeSet TypeSet::parse(std::string_view canonical) {
  std::vector<std::string> parts;
  if (!canonical.empty()) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = canonical.find(',', start);
      parts.emplace_back(canonical.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return TypeSet(std::span<const std::string>(parts));
}

std::optional<TypeSet> TypeSet::try_parse(std::string_view canonical) {
  try {
    return parse(canonical);
  } catch (const Error&) {
    return std::nullopt;
  }
}

bool TypeSet::contains(std::string_view token) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), token);
}

std::string TypeSet::to_string() const {
  std::string out;
  for (const auto& m : members_) {
    if (!out.empty()) out += ',';
    out += m;
  }
  return out;
}

TypeSet intersect(const TypeSet& a, const TypeSet& b) {
  std::vector<std::string> out;
  std::set_intersection(a.members_.begin(), a.members_.end(), b.members_.begin(),
                        b.members_.end(), std::back_inserter(out));
  return TypeSet(TypeSet::Sorted{}, std::move(out));
}

TypeSet unite(const TypeSet& a, const TypeSet& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.members_.begin(), a.members_.end(), b.members_.begin(),
                 b.members_.end(), std::back_inserter(out));
  return TypeSet(TypeSet::Sorted{}, std::move(out));
}

bool includes(const TypeSet& a, const TypeSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

TypeSet remove(const TypeSet& a, const TypeSet& b) {
  std::vector<std::string> out;
  std::set_difference(a.members_.begin(), a.members_.end(), b.members_.begin(),
                      b.members_.end(), std::back_inserter(out));
  return TypeSet(TypeSet::Sorted{}, std::move(out));
}

}  // namespace compograph
