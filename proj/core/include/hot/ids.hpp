#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace hot {

namespace detail {

template <class Tag>
class StringId {
 public:
  StringId() = default;
  explicit StringId(std::string value) : value_(std::move(value)) {}

  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  friend auto operator<=>(const StringId&, const StringId&) = default;
  friend bool operator==(const StringId&, const StringId&) = default;

  friend std::ostream& operator<<(std::ostream& os, const StringId& id) { return os << id.value_; }

 private:
  std::string value_;
};

struct NodeTag {};
struct HyperedgeTag {};

}  // namespace detail

/// Stable document identifier.
using NodeId = detail::StringId<detail::NodeTag>;
/// Stable hyperedge identifier.
using HyperedgeId = detail::StringId<detail::HyperedgeTag>;

/// Dense position of a node inside one Hypergraph (ids sorted ascending).
using NodeIndex = std::uint32_t;
/// Dense position of a hyperedge inside one Hypergraph (ids sorted ascending).
using EdgeIndex = std::uint32_t;

}  // namespace hot

template <class Tag>
struct std::hash<hot::detail::StringId<Tag>> {
  std::size_t operator()(const hot::detail::StringId<Tag>& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};
