#include "compsum/html_parser.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>

#include "compsum/error.h"
#include "compsum/text.h"

namespace compsum {

namespace {

bool in_list(std::string_view tag, std::initializer_list<std::string_view> l) {
  return std::find(l.begin(), l.end(), tag) != l.end();
}

bool is_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// Elements whose content is not parsed for markup.
bool is_raw_text_element(std::string_view tag) {
  return in_list(tag, {"script", "style", "noscript", "iframe"});
}

// Elements whose content is text with entities but no markup.
bool is_rcdata_element(std::string_view tag) {
  return in_list(tag, {"title", "textarea"});
}

bool closes_paragraph(std::string_view tag) {
  return in_list(tag, {"address", "article", "aside", "blockquote", "center",
                       "details", "dir", "div", "dl", "fieldset", "figcaption",
                       "figure", "footer", "form", "h1", "h2", "h3", "h4",
                       "h5", "h6", "header", "hgroup", "hr", "li", "main",
                       "menu", "nav", "ol", "p", "pre", "section", "summary",
                       "table", "ul", "dd", "dt"});
}

bool is_heading(std::string_view tag) {
  return tag.size() == 2 && tag[0] == 'h' && tag[1] >= '1' && tag[1] <= '6';
}

bool is_scope_boundary(std::string_view tag) {
  return in_list(tag, {"applet", "caption", "html", "table", "td", "th",
                       "marquee", "object", "template", "button"});
}

void append_utf8(std::string& out, uint32_t cp) {
  if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    cp = 0xFFFD;
  }
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

struct NamedEntity {
  std::string_view name;
  uint32_t code_point;
};

constexpr std::array kNamedEntities = {
    NamedEntity{"amp", '&'},       NamedEntity{"lt", '<'},
    NamedEntity{"gt", '>'},        NamedEntity{"quot", '"'},
    NamedEntity{"apos", '\''},     NamedEntity{"nbsp", 0xA0},
    NamedEntity{"copy", 0xA9},     NamedEntity{"reg", 0xAE},
    NamedEntity{"trade", 0x2122},  NamedEntity{"ndash", 0x2013},
    NamedEntity{"mdash", 0x2014},  NamedEntity{"hellip", 0x2026},
    NamedEntity{"lsquo", 0x2018},  NamedEntity{"rsquo", 0x2019},
    NamedEntity{"ldquo", 0x201C},  NamedEntity{"rdquo", 0x201D},
    NamedEntity{"bull", 0x2022},   NamedEntity{"middot", 0xB7},
    NamedEntity{"deg", 0xB0},      NamedEntity{"times", 0xD7},
    NamedEntity{"divide", 0xF7},   NamedEntity{"euro", 0x20AC},
    NamedEntity{"pound", 0xA3},    NamedEntity{"yen", 0xA5},
    NamedEntity{"cent", 0xA2},     NamedEntity{"sect", 0xA7},
    NamedEntity{"para", 0xB6},     NamedEntity{"laquo", 0xAB},
    NamedEntity{"raquo", 0xBB},    NamedEntity{"shy", 0xAD},
    NamedEntity{"eacute", 0xE9},   NamedEntity{"egrave", 0xE8},
    NamedEntity{"aacute", 0xE1},   NamedEntity{"agrave", 0xE0},
    NamedEntity{"ouml", 0xF6},     NamedEntity{"uuml", 0xFC},
    NamedEntity{"auml", 0xE4},     NamedEntity{"ccedil", 0xE7},
    NamedEntity{"ntilde", 0xF1},   NamedEntity{"rarr", 0x2192},
    NamedEntity{"larr", 0x2190},   NamedEntity{"frac12", 0xBD},
};

// Parses one entity starting at text[i] == '&'. On success appends the
// decoded text and returns the number of bytes consumed, else 0.
size_t decode_one(std::string_view text, size_t i, std::string& out) {
  size_t j = i + 1;
  if (j < text.size() && text[j] == '#') {
    ++j;
    bool hex = j < text.size() && (text[j] == 'x' || text[j] == 'X');
    if (hex) ++j;
    size_t digits_start = j;
    uint32_t cp = 0;
    while (j < text.size()) {
      char c = text[j];
      int v = -1;
      if (c >= '0' && c <= '9') {
        v = c - '0';
      } else if (hex && c >= 'a' && c <= 'f') {
        v = c - 'a' + 10;
      } else if (hex && c >= 'A' && c <= 'F') {
        v = c - 'A' + 10;
      }
      if (v < 0) break;
      if (cp <= 0x10FFFF) cp = cp * (hex ? 16 : 10) + static_cast<uint32_t>(v);
      ++j;
    }
    if (j == digits_start) return 0;
    if (j < text.size() && text[j] == ';') ++j;
    append_utf8(out, cp);
    return j - i;
  }
  size_t name_start = j;
  while (j < text.size() && j - name_start < 10 &&
         (is_alpha(text[j]) || (text[j] >= '0' && text[j] <= '9'))) {
    ++j;
  }
  std::string_view name = text.substr(name_start, j - name_start);
  bool terminated = j < text.size() && text[j] == ';';
  for (const auto& entity : kNamedEntities) {
    if (entity.name != name) continue;
    // Legacy pages often omit the semicolon on the basic five.
    if (!terminated && !in_list(name, {"amp", "lt", "gt", "quot", "nbsp"})) {
      return 0;
    }
    append_utf8(out, entity.code_point);
    return j - i + (terminated ? 1 : 0);
  }
  return 0;
}

class TreeBuilder {
 public:
  explicit TreeBuilder(std::string_view html) : html_(html) {
    HtmlNode document;
    document.kind = HtmlNode::Kind::kDocument;
    stack_.push_back(std::move(document));
  }

  HtmlNode run() {
    while (pos_ < html_.size()) {
      if (html_[pos_] == '<' && try_markup()) continue;
      read_text();
    }
    while (stack_.size() > 1) pop();
    return std::move(stack_.front());
  }

 private:
  bool try_markup() {
    std::string_view rest = html_.substr(pos_);
    if (rest.starts_with("<!--")) {
      size_t end = html_.find("-->", pos_ + 4);
      pos_ = end == std::string_view::npos ? html_.size() : end + 3;
      return true;
    }
    if (rest.size() >= 2 && (rest[1] == '!' || rest[1] == '?')) {
      size_t end = html_.find('>', pos_);
      pos_ = end == std::string_view::npos ? html_.size() : end + 1;
      return true;
    }
    if (rest.size() >= 3 && rest[1] == '/' && is_alpha(rest[2])) {
      pos_ += 2;
      std::string name = read_name();
      size_t end = html_.find('>', pos_);
      pos_ = end == std::string_view::npos ? html_.size() : end + 1;
      end_tag(name);
      return true;
    }
    if (rest.size() >= 2 && is_alpha(rest[1])) {
      ++pos_;
      start_tag();
      return true;
    }
    return false;
  }

  std::string read_name() {
    size_t start = pos_;
    while (pos_ < html_.size() && !is_ascii_space(html_[pos_]) &&
           html_[pos_] != '>' && html_[pos_] != '/') {
      ++pos_;
    }
    return to_lower_ascii(html_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < html_.size() && is_ascii_space(html_[pos_])) ++pos_;
  }

  void start_tag() {
    HtmlNode element;
    element.kind = HtmlNode::Kind::kElement;
    element.tag = read_name();
    bool self_closing = false;
    while (true) {
      skip_space();
      if (pos_ >= html_.size()) break;
      char c = html_[pos_];
      if (c == '>') {
        ++pos_;
        break;
      }
      if (c == '/') {
        ++pos_;
        skip_space();
        if (pos_ < html_.size() && html_[pos_] == '>') {
          self_closing = true;
          ++pos_;
          break;
        }
        continue;
      }
      read_attribute(element);
    }

    if (element.tag == "html" || element.tag == "head" ||
        element.tag == "body") {
      if (std::any_of(stack_.begin(), stack_.end(), [&](const HtmlNode& n) {
            return n.tag == element.tag;
          })) {
        return;
      }
    }
    apply_implied_end_tags(element.tag);

    if (is_void_element(element.tag)) {
      append(std::move(element));
      return;
    }
    if (is_raw_text_element(element.tag) || is_rcdata_element(element.tag)) {
      bool decode = is_rcdata_element(element.tag);
      std::string closing = "</" + element.tag;
      size_t end = pos_;
      while (true) {
        end = html_.find("</", end);
        if (end == std::string_view::npos) break;
        std::string candidate =
            to_lower_ascii(html_.substr(end, closing.size()));
        size_t after = end + closing.size();
        if (candidate == closing &&
            (after >= html_.size() || html_[after] == '>' ||
             html_[after] == '/' || is_ascii_space(html_[after]))) {
          break;
        }
        end += 2;
      }
      std::string_view body = html_.substr(
          pos_, (end == std::string_view::npos ? html_.size() : end) - pos_);
      if (!self_closing && !body.empty()) {
        HtmlNode text;
        text.kind = HtmlNode::Kind::kText;
        text.text = decode ? decode_entities(body) : std::string(body);
        element.children.push_back(std::move(text));
      }
      if (!self_closing) {
        if (end == std::string_view::npos) {
          pos_ = html_.size();
        } else {
          size_t close = html_.find('>', end);
          pos_ = close == std::string_view::npos ? html_.size() : close + 1;
        }
      }
      append(std::move(element));
      return;
    }
    if (self_closing) {
      append(std::move(element));
      return;
    }
    stack_.push_back(std::move(element));
  }

  void read_attribute(HtmlNode& element) {
    size_t start = pos_;
    while (pos_ < html_.size() && !is_ascii_space(html_[pos_]) &&
           html_[pos_] != '>' && html_[pos_] != '/' && html_[pos_] != '=') {
      ++pos_;
    }
    if (pos_ == start) {
      // Stray '=' or similar; skip one byte so parsing always advances.
      ++pos_;
      return;
    }
    std::string name = to_lower_ascii(html_.substr(start, pos_ - start));
    std::string value;
    skip_space();
    if (pos_ < html_.size() && html_[pos_] == '=') {
      ++pos_;
      skip_space();
      if (pos_ < html_.size() && (html_[pos_] == '"' || html_[pos_] == '\'')) {
        char quote = html_[pos_++];
        size_t end = html_.find(quote, pos_);
        if (end == std::string_view::npos) end = html_.size();
        value = decode_entities(html_.substr(pos_, end - pos_));
        pos_ = std::min(end + 1, html_.size());
      } else {
        size_t vstart = pos_;
        while (pos_ < html_.size() && !is_ascii_space(html_[pos_]) &&
               html_[pos_] != '>') {
          ++pos_;
        }
        value = decode_entities(html_.substr(vstart, pos_ - vstart));
      }
    }
    if (element.attribute(name) == nullptr) {
      element.attributes.emplace_back(std::move(name), std::move(value));
    }
  }

  void read_text() {
    size_t start = pos_;
    // A '<' that did not start markup is literal text.
    if (pos_ < html_.size() && html_[pos_] == '<') ++pos_;
    while (pos_ < html_.size() && html_[pos_] != '<') ++pos_;
    std::string decoded = decode_entities(html_.substr(start, pos_ - start));
    if (decoded.empty()) return;
    auto& children = stack_.back().children;
    if (!children.empty() && children.back().is_text()) {
      children.back().text += decoded;
      return;
    }
    HtmlNode text;
    text.kind = HtmlNode::Kind::kText;
    text.text = std::move(decoded);
    children.push_back(std::move(text));
  }

  // Index into stack_ of the nearest open element named tag, searching from
  // the top and stopping at any element in boundaries; 0 if none.
  size_t find_in_scope(std::string_view tag,
                       std::initializer_list<std::string_view> extra) const {
    for (size_t i = stack_.size() - 1; i > 0; --i) {
      const std::string& open = stack_[i].tag;
      if (open == tag) return i;
      if (is_scope_boundary(open) || in_list(open, extra)) return 0;
    }
    return 0;
  }

  void close_to(size_t index) {
    while (index > 0 && stack_.size() > index) pop();
  }

  void apply_implied_end_tags(std::string_view tag) {
    if (closes_paragraph(tag)) close_to(find_in_scope("p", {}));
    if (tag == "li") close_to(find_in_scope("li", {"ul", "ol"}));
    if (tag == "dt" || tag == "dd") {
      close_to(std::max(find_in_scope("dt", {"dl"}),
                        find_in_scope("dd", {"dl"})));
    }
    if (tag == "tr" || tag == "thead" || tag == "tbody" || tag == "tfoot") {
      close_to(std::max(find_in_scope("td", {}), find_in_scope("th", {})));
      close_to(find_in_scope("tr", {}));
    }
    if (tag == "thead" || tag == "tbody" || tag == "tfoot") {
      close_to(std::max({find_in_scope("thead", {}),
                         find_in_scope("tbody", {}),
                         find_in_scope("tfoot", {})}));
    }
    if (tag == "td" || tag == "th") {
      close_to(std::max(find_in_scope("td", {"tr"}),
                        find_in_scope("th", {"tr"})));
    }
    if (tag == "option" && stack_.back().tag == "option") pop();
    if (is_heading(tag) && is_heading(stack_.back().tag)) pop();
  }

  void end_tag(std::string_view tag) {
    for (size_t i = stack_.size() - 1; i > 0; --i) {
      if (stack_[i].tag == tag) {
        close_to(i);
        return;
      }
    }
  }

  void pop() {
    HtmlNode node = std::move(stack_.back());
    stack_.pop_back();
    append(std::move(node));
  }

  void append(HtmlNode node) {
    stack_.back().children.push_back(std::move(node));
  }

  std::string_view html_;
  size_t pos_ = 0;
  std::vector<HtmlNode> stack_;
};

void serialize_into(const HtmlNode& node, bool raw_text, std::string& out) {
  switch (node.kind) {
    case HtmlNode::Kind::kText:
      out += raw_text ? node.text : html_escape(node.text);
      return;
    case HtmlNode::Kind::kDocument:
      for (const auto& child : node.children) serialize_into(child, false, out);
      return;
    case HtmlNode::Kind::kElement:
      break;
  }
  out += '<';
  out += node.tag;
  for (const auto& [name, value] : node.attributes) {
    out += ' ';
    out += name;
    out += "=\"";
    out += html_escape(value, /*quote=*/true);
    out += '"';
  }
  out += '>';
  if (is_void_element(node.tag)) return;
  bool raw = is_raw_text_element(node.tag);
  for (const auto& child : node.children) serialize_into(child, raw, out);
  out += "</";
  out += node.tag;
  out += '>';
}

void collect_text(const HtmlNode& node,
                  const std::function<bool(const HtmlNode&)>& skip,
                  std::string& out) {
  if (node.is_text()) {
    out += node.text;
    return;
  }
  if (node.is_element() && skip && skip(node)) return;
  for (const auto& child : node.children) collect_text(child, skip, out);
}

}  // namespace

const std::string* HtmlNode::attribute(std::string_view name) const {
  for (const auto& [key, value] : attributes) {
    if (key == name) return &value;
  }
  return nullptr;
}

bool is_void_element(std::string_view tag) {
  return in_list(tag, {"area", "base", "br", "col", "embed", "hr", "img",
                       "input", "link", "meta", "param", "source", "track",
                       "wbr", "keygen"});
}

bool is_inline_element(std::string_view tag) {
  return in_list(tag, {"a", "abbr", "acronym", "b", "bdi", "bdo", "big", "br",
                       "cite", "code", "data", "dfn", "em", "font", "i", "img",
                       "input", "kbd", "label", "mark", "nobr", "q", "s",
                       "samp", "small", "span", "strike", "strong", "sub",
                       "sup", "time", "tt", "u", "var", "wbr"});
}

std::string decode_entities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '&') {
      size_t consumed = decode_one(text, i, out);
      if (consumed > 0) {
        i += consumed;
        continue;
      }
    }
    out.push_back(text[i++]);
  }
  return out;
}

HtmlNode parse_html(std::string_view html) {
  if (html.find('\0') != std::string_view::npos) {
    throw Error(ErrorCode::kParse, "input contains NUL bytes; not HTML text");
  }
  return TreeBuilder(html).run();
}

std::string serialize_html(const HtmlNode& node) {
  std::string out;
  serialize_into(node, false, out);
  return out;
}

std::string text_content(const HtmlNode& node,
                         const std::function<bool(const HtmlNode&)>& skip) {
  std::string out;
  collect_text(node, skip, out);
  return out;
}

}  // namespace compsum
