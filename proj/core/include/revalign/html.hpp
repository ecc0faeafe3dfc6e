// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace revalign::html {

/// Element or text node of a forgiving HTML tree. Element tags and attribute
/// names are lowercased; text is entity-decoded.
struct Node {
  enum class Kind { Element, Text };

  Kind kind = Kind::Element;
  std::string tag;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::string text;
  std::vector<std::unique_ptr<Node>> children;
  Node* parent = nullptr;

  bool is_element() const noexcept { return kind == Kind::Element; }
  std::optional<std::string_view> attribute(std::string_view name) const;
  bool has_class(std::string_view cls) const;
};

/// Owns the tree. The root is a synthetic element with tag "#document".
class Document {
 public:
  static Document parse(std::string_view source);

  const Node& root() const noexcept { return *root_; }

 private:
  std::unique_ptr<Node> root_;
};

/// CSS subset: type, `#id`, `.class`, `[attr]`, `[attr=value]`, `*`, joined
/// by descendant (whitespace) or child (`>`) combinators. Commas separate
/// alternatives.
class Selector {
 public:
  /// Throws ConfigError on syntax it does not understand.
  static Selector parse(std::string_view text);

  bool matches(const Node& element) const;
  const std::string& source() const noexcept { return source_; }

  struct Compound {
    std::string tag;  // empty or "*" matches any tag
    std::string id;
    std::vector<std::string> classes;
    std::vector<std::pair<std::string, std::optional<std::string>>> attributes;
  };
  struct Step {
    Compound compound;
    bool child_combinator = false;  // must be a direct child of the step on its left
  };

 private:
  std::string source_;
  std::vector<std::vector<Step>> alternatives_;
};

/// Elements under `scope` (excluding `scope` itself) matching `selector`, in
/// document order.
std::vector<const Node*> select_all(const Node& scope, const Selector& selector);

/// Visible text of a subtree with whitespace collapsed. Script, style and
/// template contents and any node in `skip` are left out. Block-level
/// boundaries become spaces.
std::string visible_text(const Node& node, const std::unordered_set<const Node*>& skip = {});

}  // namespace revalign::html
