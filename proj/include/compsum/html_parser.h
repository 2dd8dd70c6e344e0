#ifndef COMPSUM_HTML_PARSER_H_
#define COMPSUM_HTML_PARSER_H_

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace compsum {

// Markup tree as parsed, before any content-oriented restructuring. Text
// nodes hold entity-decoded text exactly as it appeared, whitespace included.
struct HtmlNode {
  enum class Kind { kDocument, kElement, kText };

  Kind kind = Kind::kDocument;
  std::string tag;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::string text;
  std::vector<HtmlNode> children;

  bool is_element() const { return kind == Kind::kElement; }
  bool is_text() const { return kind == Kind::kText; }
  bool is_element(std::string_view name) const {
    return kind == Kind::kElement && tag == name;
  }
  const std::string* attribute(std::string_view name) const;

  friend bool operator==(const HtmlNode&, const HtmlNode&) = default;
};

// Tolerant parse in the spirit of browser tree construction: unknown end
// tags are dropped, common implied end tags are inserted, and anything left
// open at end of input is closed. Comments, doctypes and processing
// instructions are discarded. Throws Error(kParse) only for binary input.
HtmlNode parse_html(std::string_view html);

// Canonical markup: lowercase tags, double-quoted attributes, explicit end
// tags for every non-void element. parse_html(serialize_html(t)) == t for
// any tree produced by parse_html.
std::string serialize_html(const HtmlNode& node);

std::string decode_entities(std::string_view text);

bool is_void_element(std::string_view tag);

// Phrasing-level tags whose content flows into the surrounding text.
bool is_inline_element(std::string_view tag);

// Concatenated text of every text node under node, in document order. When
// skip is given, elements for which it returns true are not descended into.
std::string text_content(
    const HtmlNode& node,
    const std::function<bool(const HtmlNode&)>& skip = nullptr);

}  // namespace compsum

#endif  // COMPSUM_HTML_PARSER_H_
