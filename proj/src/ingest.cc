#include "compsum/ingest.h"

#include <array>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "compsum/error.h"
#include "compsum/text.h"
#include "compsum/timestamp.h"

namespace compsum {

namespace {

// Windows-1252 assignments for 0x80..0x9F; zero marks an unassigned byte.
constexpr std::array<uint16_t, 32> kCp1252High = {
    0x20AC, 0,      0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
    0x02C6, 0x2030, 0x0160, 0x2039, 0x0152, 0,      0x017D, 0,
    0,      0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
    0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0,      0x017E, 0x0178,
};

void append_code_point(std::string& out, uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string charset_after(std::string_view text, size_t pos) {
  size_t i = pos;
  while (i < text.size() && (text[i] == '"' || text[i] == '\'' ||
                             is_ascii_space(text[i]))) {
    ++i;
  }
  size_t start = i;
  while (i < text.size() &&
         (std::isalnum(static_cast<unsigned char>(text[i])) ||
          text[i] == '-' || text[i] == '_' || text[i] == ':' ||
          text[i] == '.')) {
    ++i;
  }
  return to_lower_ascii(text.substr(start, i - start));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kFetch, "cannot read " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void strip_removed(HtmlNode& node) {
  std::erase_if(node.children, [](const HtmlNode& child) {
    return child.is_element() && is_removed_element(child.tag);
  });
  for (auto& child : node.children) strip_removed(child);
}

// Keeps only colour declarations from a style attribute, in a canonical
// "color:value" form.
std::string color_declarations(std::string_view style) {
  std::string out;
  size_t start = 0;
  while (start <= style.size()) {
    size_t end = style.find(';', start);
    if (end == std::string_view::npos) end = style.size();
    std::string_view decl = style.substr(start, end - start);
    size_t colon = decl.find(':');
    if (colon != std::string_view::npos) {
      std::string name =
          to_lower_ascii(normalize_whitespace(decl.substr(0, colon)));
      std::string value = normalize_whitespace(decl.substr(colon + 1));
      if (name == "color" && !value.empty()) {
        if (!out.empty()) out += ';';
        out += "color:" + value;
      }
    }
    start = end + 1;
  }
  return out;
}

void sanitize_attributes(HtmlNode& node) {
  if (node.is_element()) {
    std::vector<std::pair<std::string, std::string>> kept;
    for (auto& [name, value] : node.attributes) {
      if (name == "color" && !normalize_whitespace(value).empty()) {
        kept.emplace_back(name, normalize_whitespace(value));
      } else if (name == "style") {
        std::string colors = color_declarations(value);
        if (!colors.empty()) kept.emplace_back(name, std::move(colors));
      }
    }
    node.attributes = std::move(kept);
  }
  for (auto& child : node.children) sanitize_attributes(child);
}

bool is_skipped(const HtmlNode& node) {
  return node.is_element() && is_removed_element(node.tag);
}

bool is_heading_tag(std::string_view tag) {
  return tag.size() == 2 && tag[0] == 'h' && tag[1] >= '1' && tag[1] <= '6';
}

EmphasisSet own_emphasis(const HtmlNode& el) {
  EmphasisSet set;
  const std::string& tag = el.tag;
  if (tag == "b" || tag == "strong") set.insert(Emphasis::kBold);
  if (tag == "u") set.insert(Emphasis::kUnderline);
  if (tag == "i" || tag == "em") set.insert(Emphasis::kItalics);
  if (tag == "caption") set.insert(Emphasis::kCaption);
  if (is_heading_tag(tag) || tag == "title") {
    set.insert(Emphasis::kParagraphTitle);
  }
  const std::string* color = el.attribute("color");
  const std::string* style = el.attribute("style");
  if ((color != nullptr && !normalize_whitespace(*color).empty()) ||
      (style != nullptr && !color_declarations(*style).empty())) {
    set.insert(Emphasis::kColorChange);
  }
  return set;
}

bool has_block_content(const HtmlNode& node) {
  if (!node.is_element() || is_skipped(node)) return false;
  if (!is_inline_element(node.tag)) return true;
  for (const auto& child : node.children) {
    if (has_block_content(child)) return true;
  }
  return false;
}

// Rendered text of inline content; a line break reads as a space.
void flow_text(const HtmlNode& node, std::string& out) {
  if (node.is_text()) {
    out += node.text;
    return;
  }
  if (is_skipped(node)) return;
  if (node.is_element("br")) {
    out += ' ';
    return;
  }
  for (const auto& child : node.children) flow_text(child, out);
}

std::string visible_text(const HtmlNode& node) {
  std::string text;
  flow_text(node, text);
  return normalize_whitespace(text);
}

// Emphasis shared by every piece of visible text in items: each element
// contributes its own flags plus whatever wraps all of its text; bare text
// contributes nothing.
EmphasisSet wrapping_emphasis(const std::vector<const HtmlNode*>& items) {
  std::optional<EmphasisSet> shared;
  for (const HtmlNode* item : items) {
    if (is_skipped(*item) || visible_text(*item).empty()) continue;
    if (item->is_text()) return {};
    std::vector<const HtmlNode*> inner;
    for (const auto& child : item->children) inner.push_back(&child);
    EmphasisSet e = own_emphasis(*item) | wrapping_emphasis(inner);
    shared = shared ? (*shared & e) : e;
  }
  return shared.value_or(EmphasisSet{});
}

DomNode make_run_leaf(const std::vector<const HtmlNode*>& run,
                      EmphasisSet inherited) {
  DomNode leaf;
  std::string text;
  std::vector<const HtmlNode*> visible;
  for (const HtmlNode* item : run) {
    flow_text(*item, text);
    if (!visible_text(*item).empty()) visible.push_back(item);
  }
  leaf.text = normalize_whitespace(text);
  leaf.tag = (visible.size() == 1 && visible.front()->is_element())
                 ? visible.front()->tag
                 : "#text";
  leaf.emphasis = inherited | wrapping_emphasis(run);
  return leaf;
}

DomNode convert(const HtmlNode& el, EmphasisSet inherited) {
  DomNode node;
  node.tag = el.kind == HtmlNode::Kind::kDocument ? "#document" : el.tag;
  node.emphasis = inherited | own_emphasis(el);

  bool container = false;
  for (const auto& child : el.children) {
    if (has_block_content(child)) {
      container = true;
      break;
    }
  }
  if (!container) {
    std::vector<const HtmlNode*> items;
    for (const auto& child : el.children) items.push_back(&child);
    node.text = visible_text(el);
    node.emphasis = node.emphasis | wrapping_emphasis(items);
    return node;
  }

  std::vector<const HtmlNode*> run;
  auto flush = [&] {
    if (run.empty()) return;
    DomNode leaf = make_run_leaf(run, node.emphasis);
    if (!leaf.text.empty()) node.children.push_back(std::move(leaf));
    run.clear();
  };
  for (const auto& child : el.children) {
    if (is_skipped(child)) continue;
    if (has_block_content(child)) {
      flush();
      node.children.push_back(convert(child, node.emphasis));
    } else {
      run.push_back(&child);
    }
  }
  flush();
  for (size_t i = 0; i < node.children.size(); ++i) {
    node.children[i].sibling_index = static_cast<int>(i);
  }
  return node;
}

void collect_micro_blocks(const DomNode& node, ParentPath& path,
                          const std::string& doc_id,
                          std::vector<MicroBlock>& out) {
  path.push_back({node.tag, node.sibling_index});
  for (const auto& child : node.children) {
    if (!child.is_leaf()) {
      collect_micro_blocks(child, path, doc_id, out);
      continue;
    }
    if (child.text.empty()) continue;
    MicroBlock block;
    block.id = static_cast<int>(out.size());
    block.doc_id = doc_id;
    block.parent_path = path;
    block.text = child.text;
    block.sibling_index = child.sibling_index;
    block.sibling_count = static_cast<int>(node.children.size());
    block.emphasis = child.emphasis;
    out.push_back(std::move(block));
  }
  path.pop_back();
}

}  // namespace

bool is_url(std::string_view source) {
  std::string lower = to_lower_ascii(source.substr(0, 8));
  return lower.starts_with("http://") || lower.starts_with("https://");
}

std::string declared_charset(std::string_view content_type,
                             std::string_view html) {
  std::string lower_type = to_lower_ascii(content_type);
  size_t at = lower_type.find("charset=");
  if (at != std::string::npos) return charset_after(lower_type, at + 8);

  std::string head = to_lower_ascii(html.substr(0, 4096));
  size_t meta = 0;
  while ((meta = head.find("<meta", meta)) != std::string::npos) {
    size_t end = head.find('>', meta);
    if (end == std::string::npos) end = head.size();
    size_t cs = head.find("charset", meta);
    if (cs != std::string::npos && cs < end) {
      size_t eq = head.find('=', cs);
      if (eq != std::string::npos && eq < end) {
        return charset_after(head, eq + 1);
      }
    }
    meta = end;
  }
  return "";
}

std::string to_utf8(std::string_view bytes, std::string_view charset) {
  std::string cs = to_lower_ascii(charset);
  if (bytes.starts_with("\xEF\xBB\xBF")) bytes.remove_prefix(3);
  if (cs.empty() || cs == "utf-8" || cs == "utf8" || cs == "us-ascii" ||
      cs == "ascii") {
    if (!is_valid_utf8(bytes)) {
      throw Error(ErrorCode::kEncoding,
                  cs.empty() ? "content is not valid UTF-8 and declares no "
                               "charset"
                             : "content declared " + cs +
                                   " but is not valid UTF-8");
    }
    return std::string(bytes);
  }
  bool latin1 = cs == "iso-8859-1" || cs == "latin1" || cs == "latin-1" ||
                cs == "iso8859-1" || cs == "l1";
  bool cp1252 = cs == "windows-1252" || cs == "cp1252";
  if (!latin1 && !cp1252) {
    throw Error(ErrorCode::kEncoding, "unsupported charset " + cs);
  }
  std::string out;
  out.reserve(bytes.size());
  for (char c : bytes) {
    auto u = static_cast<uint8_t>(c);
    uint32_t cp = u;
    if (cp1252 && u >= 0x80 && u <= 0x9F) {
      cp = kCp1252High[u - 0x80];
      if (cp == 0) cp = 0xFFFD;
    }
    append_code_point(out, cp);
  }
  return out;
}

RawDocument load_document(const std::string& source, const std::string& doc_id,
                          const FetchOptions& options) {
  RawDocument doc;
  doc.doc_id = doc_id;
  doc.source = source;
  std::string bytes;
  std::string content_type;
  if (is_url(source)) {
    HttpResponse response = http_get(source, options);
    bytes = std::move(response.body);
    content_type = std::move(response.content_type);
  } else {
    bytes = read_file(source);
  }
  if (bytes.empty()) {
    throw Error(ErrorCode::kEmptyDocument, source + " is empty");
  }
  doc.bytes = to_utf8(bytes, declared_charset(content_type, bytes));
  if (doc.bytes.empty()) {
    throw Error(ErrorCode::kEmptyDocument, source + " is empty");
  }
  doc.fetched_at = utc_timestamp_now();
  return doc;
}

bool is_removed_element(std::string_view tag) {
  return tag == "meta" || tag == "script" || tag == "style" ||
         tag == "noscript" || tag == "iframe" || tag == "link";
}

RawDocument clean_html(const RawDocument& doc) {
  HtmlNode tree = parse_html(doc.bytes);
  strip_removed(tree);
  sanitize_attributes(tree);
  if (normalize_whitespace(text_content(tree)).empty()) {
    throw Error(ErrorCode::kEmptyAfterClean,
                "document " + doc.doc_id + " has no text after cleaning");
  }
  RawDocument cleaned = doc;
  cleaned.bytes = serialize_html(tree);
  return cleaned;
}

DomTree build_dom(const RawDocument& doc) {
  HtmlNode parsed = parse_html(doc.bytes);

  const HtmlNode* single = nullptr;
  bool stray_text = false;
  int element_count = 0;
  for (const auto& child : parsed.children) {
    if (child.is_text()) {
      stray_text |= !normalize_whitespace(child.text).empty();
    } else if (child.is_element() && !is_skipped(child)) {
      ++element_count;
      single = &child;
    }
  }

  DomTree tree;
  tree.doc_id = doc.doc_id;
  if (element_count == 1 && !stray_text) {
    tree.root = convert(*single, {});
  } else {
    tree.root = convert(parsed, {});
  }
  if (tree.root.is_leaf()) {
    // Every micro block needs a parent, so a lone leaf gets a synthetic one.
    DomNode root;
    root.tag = "#document";
    root.children.push_back(std::move(tree.root));
    root.children.front().sibling_index = 0;
    tree.root = std::move(root);
  }
  tree.root.sibling_index = 0;
  return tree;
}

std::vector<MicroBlock> extract_micro_blocks(const DomTree& tree) {
  std::vector<MicroBlock> out;
  ParentPath path;
  collect_micro_blocks(tree.root, path, tree.doc_id, out);
  return out;
}

}  // namespace compsum
