// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "revalign/html.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <functional>

#include "revalign/errors.hpp"
#include "revalign/text.hpp"

namespace revalign::html {

namespace {

constexpr std::array<std::string_view, 14> kVoidTags = {"area", "base", "br",   "col",   "embed", "hr",    "img",
                                                        "input", "link", "meta", "param", "source", "track", "wbr"};
constexpr std::array<std::string_view, 2> kRawTextTags = {"script", "style"};
constexpr std::array<std::string_view, 5> kInvisibleTags = {"script", "style", "template", "head", "noscript"};
constexpr std::array<std::string_view, 26> kBlockTags = {
    "address", "article", "aside", "blockquote", "br",     "dd",     "div",    "dl",     "dt",
    "figcaption", "figure", "footer", "h1",       "h2",     "h3",     "h4",     "h5",     "h6",
    "header",  "hr",      "li",     "main",       "ol",     "p",      "section", "ul"};
// Opening one of these implicitly closes an open <p>.
constexpr std::array<std::string_view, 18> kClosesParagraph = {
    "address", "article", "aside", "blockquote", "div", "dl", "figure", "footer", "h1",
    "h2",      "h3",      "h4",    "h5",         "h6",  "header", "ol", "p", "ul"};

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& set, std::string_view tag) {
  return std::find(set.begin(), set.end(), tag) != set.end();
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '-' || c == '_' || c == ':';
}

bool is_ident_char(char c) { return c != ':' && is_name_char(c); }

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::optional<std::uint32_t> named_entity(std::string_view name) {
  static constexpr std::pair<std::string_view, std::uint32_t> kNamed[] = {
      {"amp", '&'},      {"lt", '<'},       {"gt", '>'},       {"quot", '"'},    {"apos", '\''},
      {"nbsp", ' '},     {"ndash", 0x2013}, {"mdash", 0x2014}, {"hellip", 0x2026}, {"lsquo", 0x2018},
      {"rsquo", 0x2019}, {"ldquo", 0x201C}, {"rdquo", 0x201D}, {"bdquo", 0x201E}, {"auml", 0xE4},
      {"ouml", 0xF6},    {"uuml", 0xFC},    {"Auml", 0xC4},    {"Ouml", 0xD6},    {"Uuml", 0xDC},
      {"szlig", 0xDF},   {"eacute", 0xE9},  {"egrave", 0xE8},  {"shy", 0xAD},     {"copy", 0xA9},
  };
  for (const auto& [n, cp] : kNamed) {
    if (n == name) return cp;
  }
  return std::nullopt;
}

std::string decode_entities(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  std::size_t i = 0;
  while (i < in.size()) {
    if (in[i] != '&') {
      out.push_back(in[i++]);
      continue;
    }
    const auto semi = in.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 12) {
      out.push_back(in[i++]);
      continue;
    }
    const auto body = in.substr(i + 1, semi - i - 1);
    std::optional<std::uint32_t> cp;
    if (body.size() > 1 && body[0] == '#') {
      const bool hex = body[1] == 'x' || body[1] == 'X';
      const auto digits = body.substr(hex ? 2 : 1);
      std::uint32_t v = 0;
      bool ok = !digits.empty();
      for (char c : digits) {
        const int d = std::isdigit(static_cast<unsigned char>(c)) ? c - '0'
                      : (hex && std::isxdigit(static_cast<unsigned char>(c)))
                          ? std::tolower(static_cast<unsigned char>(c)) - 'a' + 10
                          : -1;
        if (d < 0 || v > 0x10FFFF) {
          ok = false;
          break;
        }
        v = v * (hex ? 16u : 10u) + static_cast<std::uint32_t>(d);
      }
      if (ok) cp = v;
    } else {
      cp = named_entity(body);
    }
    if (!cp) {
      out.push_back(in[i++]);
      continue;
    }
    append_utf8(out, *cp);
    i = semi + 1;
  }
  return out;
}

// Case-insensitive search for `</tag` starting at `from`.
std::size_t find_close_tag(std::string_view src, std::string_view tag, std::size_t from) {
  for (std::size_t i = src.find("</", from); i != std::string_view::npos; i = src.find("</", i + 2)) {
    if (i + 2 + tag.size() > src.size()) return std::string_view::npos;
    if (to_lower(src.substr(i + 2, tag.size())) == tag) return i;
  }
  return std::string_view::npos;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  std::unique_ptr<Node> run() {
    auto root = std::make_unique<Node>();
    root->tag = "#document";
    stack_.push_back(root.get());
    while (pos_ < src_.size()) {
      if (src_[pos_] == '<') {
        markup();
      } else {
        const auto next = src_.find('<', pos_);
        const auto end = next == std::string_view::npos ? src_.size() : next;
        add_text(src_.substr(pos_, end - pos_));
        pos_ = end;
      }
    }
    return root;
  }

 private:
  Node* top() { return stack_.back(); }

  void add_text(std::string_view raw) {
    if (raw.empty()) return;
    auto node = std::make_unique<Node>();
    node->kind = Node::Kind::Text;
    node->text = decode_entities(raw);
    node->parent = top();
    top()->children.push_back(std::move(node));
  }

  void skip_past(std::string_view terminator) {
    const auto end = src_.find(terminator, pos_);
    pos_ = end == std::string_view::npos ? src_.size() : end + terminator.size();
  }

  void markup() {
    const auto rest = src_.substr(pos_);
    if (rest.rfind("<!--", 0) == 0) {
      pos_ += 4;
      skip_past("-->");
    } else if (rest.size() > 1 && (rest[1] == '!' || rest[1] == '?')) {
      skip_past(">");
    } else if (rest.size() > 2 && rest[1] == '/' && std::isalpha(static_cast<unsigned char>(rest[2]))) {
      end_tag();
    } else if (rest.size() > 1 && std::isalpha(static_cast<unsigned char>(rest[1]))) {
      start_tag();
    } else {
      add_text("<");
      ++pos_;
    }
  }

  std::string read_name() {
    const auto start = pos_;
    while (pos_ < src_.size() && is_name_char(src_[pos_])) ++pos_;
    return to_lower(src_.substr(start, pos_ - start));
  }

  void skip_spaces() {
    while (pos_ < src_.size() && is_space(src_[pos_])) ++pos_;
  }

  void end_tag() {
    pos_ += 2;
    const auto name = read_name();
    skip_past(">");
    for (auto i = stack_.size(); i-- > 1;) {
      if (stack_[i]->tag == name) {
        stack_.resize(i);
        return;
      }
    }
  }

  void close_implied(const std::string& name) {
    if (contains(kClosesParagraph, name)) {
      for (auto i = stack_.size(); i-- > 1;) {
        if (stack_[i]->tag == "p") {
          stack_.resize(i);
          break;
        }
        if (contains(kBlockTags, stack_[i]->tag)) break;
      }
    }
    if (name == "li") {
      for (auto i = stack_.size(); i-- > 1;) {
        if (stack_[i]->tag == "li") {
          stack_.resize(i);
          break;
        }
        if (stack_[i]->tag == "ul" || stack_[i]->tag == "ol") break;
      }
    }
  }

  void start_tag() {
    ++pos_;
    auto node = std::make_unique<Node>();
    node->tag = read_name();
    bool self_closing = false;
    while (pos_ < src_.size()) {
      skip_spaces();
      if (pos_ >= src_.size()) break;
      if (src_[pos_] == '>') {
        ++pos_;
        break;
      }
      if (src_[pos_] == '/') {
        self_closing = true;
        ++pos_;
        continue;
      }
      auto attr_name = read_name();
      if (attr_name.empty()) {
        ++pos_;  // stray character inside a tag
        continue;
      }
      std::string value;
      skip_spaces();
      if (pos_ < src_.size() && src_[pos_] == '=') {
        ++pos_;
        skip_spaces();
        if (pos_ < src_.size() && (src_[pos_] == '"' || src_[pos_] == '\'')) {
          const char quote = src_[pos_++];
          const auto end = src_.find(quote, pos_);
          const auto stop = end == std::string_view::npos ? src_.size() : end;
          value = decode_entities(src_.substr(pos_, stop - pos_));
          pos_ = stop == src_.size() ? stop : stop + 1;
        } else {
          const auto start = pos_;
          while (pos_ < src_.size() && !is_space(src_[pos_]) && src_[pos_] != '>') ++pos_;
          value = decode_entities(src_.substr(start, pos_ - start));
        }
      }
      node->attributes.emplace_back(std::move(attr_name), std::move(value));
    }

    close_implied(node->tag);
    node->parent = top();
    Node* raw = node.get();
    top()->children.push_back(std::move(node));

    if (contains(kRawTextTags, raw->tag) && !self_closing) {
      const auto close = find_close_tag(src_, raw->tag, pos_);
      const auto end = close == std::string_view::npos ? src_.size() : close;
      if (end > pos_) {
        auto text = std::make_unique<Node>();
        text->kind = Node::Kind::Text;
        text->text = std::string(src_.substr(pos_, end - pos_));
        text->parent = raw;
        raw->children.push_back(std::move(text));
      }
      pos_ = end;
      if (close != std::string_view::npos) skip_past(">");
      return;
    }
    if (!self_closing && !contains(kVoidTags, raw->tag)) stack_.push_back(raw);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::vector<Node*> stack_;
};

// --- selectors -----------------------------------------------------------

class SelectorParser {
 public:
  explicit SelectorParser(std::string_view text) : text_(text) {}

  std::vector<std::vector<Selector::Step>> run() {
    std::vector<std::vector<Selector::Step>> alternatives;
    while (true) {
      alternatives.push_back(complex());
      skip_spaces();
      if (pos_ >= text_.size()) break;
      if (text_[pos_] != ',') fail("unexpected character");
      ++pos_;
    }
    return alternatives;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ConfigError("selector '" + std::string(text_) + "': " + why + " at offset " + std::to_string(pos_));
  }

  void skip_spaces() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  std::string ident() {
    const auto start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::vector<Selector::Step> complex() {
    std::vector<Selector::Step> steps;
    skip_spaces();
    bool child = false;
    while (true) {
      Selector::Step step;
      step.compound = compound();
      step.child_combinator = child;
      steps.push_back(std::move(step));
      const auto before = pos_;
      skip_spaces();
      if (pos_ >= text_.size() || text_[pos_] == ',') break;
      if (text_[pos_] == '>') {
        child = true;
        ++pos_;
        skip_spaces();
      } else if (pos_ > before) {
        child = false;
      } else {
        fail("unexpected character");
      }
    }
    return steps;
  }

  Selector::Compound compound() {
    Selector::Compound c;
    if (pos_ < text_.size() && text_[pos_] == '*') {
      c.tag = "*";
      ++pos_;
    } else if (pos_ < text_.size() && is_ident_char(text_[pos_])) {
      c.tag = to_lower(ident());
    }
    bool any = !c.tag.empty();
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (ch == '#') {
        ++pos_;
        c.id = ident();
      } else if (ch == '.') {
        ++pos_;
        c.classes.push_back(ident());
      } else if (ch == '[') {
        ++pos_;
        skip_spaces();
        auto name = to_lower(ident());
        skip_spaces();
        std::optional<std::string> value;
        if (pos_ < text_.size() && text_[pos_] == '=') {
          ++pos_;
          skip_spaces();
          if (pos_ < text_.size() && (text_[pos_] == '"' || text_[pos_] == '\'')) {
            const char quote = text_[pos_++];
            const auto end = text_.find(quote, pos_);
            if (end == std::string_view::npos) fail("unterminated string");
            value = std::string(text_.substr(pos_, end - pos_));
            pos_ = end + 1;
          } else {
            value = ident();
          }
          skip_spaces();
        }
        if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ]");
        ++pos_;
        c.attributes.emplace_back(std::move(name), std::move(value));
      } else {
        break;
      }
      any = true;
    }
    if (!any) fail("empty compound selector");
    return c;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool matches_compound(const Selector::Compound& c, const Node& n) {
  if (!n.is_element() || n.tag == "#document") return false;
  if (!c.tag.empty() && c.tag != "*" && c.tag != n.tag) return false;
  if (!c.id.empty() && n.attribute("id") != std::optional<std::string_view>(c.id)) return false;
  for (const auto& cls : c.classes) {
    if (!n.has_class(cls)) return false;
  }
  for (const auto& [name, value] : c.attributes) {
    const auto actual = n.attribute(name);
    if (!actual) return false;
    if (value && *actual != *value) return false;
  }
  return true;
}

bool matches_from(const std::vector<Selector::Step>& steps, std::size_t idx, const Node& n) {
  if (!matches_compound(steps[idx].compound, n)) return false;
  if (idx == 0) return true;
  if (steps[idx].child_combinator) return n.parent && matches_from(steps, idx - 1, *n.parent);
  for (const Node* a = n.parent; a; a = a->parent) {
    if (matches_from(steps, idx - 1, *a)) return true;
  }
  return false;
}

void collect(const Node& node, const Selector& selector, std::vector<const Node*>& out) {
  for (const auto& child : node.children) {
    if (!child->is_element()) continue;
    if (selector.matches(*child)) out.push_back(child.get());
    collect(*child, selector, out);
  }
}

void gather_text(const Node& node, const std::unordered_set<const Node*>& skip, std::string& out) {
  if (skip.count(&node)) return;
  if (!node.is_element()) {
    out += node.text;
    return;
  }
  if (contains(kInvisibleTags, node.tag)) return;
  const bool block = contains(kBlockTags, node.tag);
  if (block) out.push_back(' ');
  for (const auto& child : node.children) gather_text(*child, skip, out);
  if (block) out.push_back(' ');
}

}  // namespace

std::optional<std::string_view> Node::attribute(std::string_view name) const {
  for (const auto& [k, v] : attributes) {
    if (k == name) return std::string_view(v);
  }
  return std::nullopt;
}

bool Node::has_class(std::string_view cls) const {
  const auto value = attribute("class");
  if (!value) return false;
  std::size_t i = 0;
  while (i < value->size()) {
    while (i < value->size() && is_space((*value)[i])) ++i;
    const auto start = i;
    while (i < value->size() && !is_space((*value)[i])) ++i;
    if (value->substr(start, i - start) == cls && i > start) return true;
  }
  return false;
}

Document Document::parse(std::string_view source) {
  Document doc;
  doc.root_ = Parser(source).run();
  return doc;
}

Selector Selector::parse(std::string_view text) {
  Selector s;
  s.source_ = std::string(trim(text));
  if (s.source_.empty()) throw ConfigError("empty selector");
  s.alternatives_ = SelectorParser(s.source_).run();
  return s;
}

bool Selector::matches(const Node& element) const {
  return std::any_of(alternatives_.begin(), alternatives_.end(),
                     [&](const auto& steps) { return matches_from(steps, steps.size() - 1, element); });
}

std::vector<const Node*> select_all(const Node& scope, const Selector& selector) {
  std::vector<const Node*> out;
  collect(scope, selector, out);
  return out;
}

std::string visible_text(const Node& node, const std::unordered_set<const Node*>& skip) {
  std::string raw;
  gather_text(node, skip, raw);
  return collapse_whitespace(raw);
}

}  // namespace revalign::html
