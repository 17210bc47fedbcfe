#pragma once

#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace treeplace {

// Textual node identifier. Ordering is lexicographic on the text and is the
// tie-break order used everywhere downstream.
class NodeId {
 public:
  NodeId() = default;
  explicit NodeId(std::string text) : text_(std::move(text)) {}
  explicit NodeId(std::string_view text) : text_(text) {}
  explicit NodeId(const char* text) : text_(text) {}

  const std::string& str() const { return text_; }
  bool empty() const { return text_.empty(); }

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
  friend bool operator==(const NodeId&, const NodeId&) = default;

  friend std::ostream& operator<<(std::ostream& os, const NodeId& id) {
    return os << id.text_;
  }

 private:
  std::string text_;
};

}  // namespace treeplace

template <>
struct std::hash<treeplace::NodeId> {
  std::size_t operator()(const treeplace::NodeId& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};
