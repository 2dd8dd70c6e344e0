#include "compsum/text.h"

#include <cstdint>

namespace compsum {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

namespace {

// U+00A0 NO-BREAK SPACE in UTF-8.
bool is_nbsp_at(std::string_view text, size_t i) {
  return i + 1 < text.size() && text[i] == '\xC2' && text[i + 1] == '\xA0';
}

}  // namespace

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (size_t i = 0; i < text.size(); ++i) {
    bool nbsp = is_nbsp_at(text, i);
    if (is_ascii_space(text[i]) || nbsp) {
      if (nbsp) ++i;
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(text[i]);
  }
  return out;
}

std::string to_lower_ascii(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

namespace {

bool is_word_byte(char c) {
  auto u = static_cast<unsigned char>(c);
  return (u >= '0' && u <= '9') || (u >= 'a' && u <= 'z') ||
         (u >= 'A' && u <= 'Z') || u >= 0x80;
}

// Byte length of a non-ASCII separator at text[i] (no-break space, Latin-1
// punctuation, or the U+2000..U+206F general punctuation block), else 0.
size_t unicode_separator_width(std::string_view text, size_t i) {
  if (is_nbsp_at(text, i)) return 2;
  if (i + 1 < text.size() && text[i] == '\xC2') {
    auto next = static_cast<unsigned char>(text[i + 1]);
    if (next >= 0xA1 && next <= 0xBF) return 2;
  }
  if (i + 2 < text.size() && text[i] == '\xE2' &&
      (text[i + 1] == '\x80' || text[i + 1] == '\x81')) {
    return 3;
  }
  return 0;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < text.size()) {
    if (size_t width = unicode_separator_width(text, i); width > 0) {
      i += width;
      continue;
    }
    if (!is_word_byte(text[i])) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < text.size() && is_word_byte(text[i]) &&
           unicode_separator_width(text, i) == 0) {
      ++i;
    }
    tokens.push_back(to_lower_ascii(text.substr(start, i - start)));
  }
  return tokens;
}

bool is_valid_utf8(std::string_view bytes) {
  size_t i = 0;
  while (i < bytes.size()) {
    auto c = static_cast<uint8_t>(bytes[i]);
    size_t extra;
    uint32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      extra = 1;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      extra = 3;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + extra >= bytes.size()) return false;
    for (size_t k = 1; k <= extra; ++k) {
      auto cc = static_cast<uint8_t>(bytes[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // Overlong forms, surrogates and out-of-range code points.
    if ((extra == 1 && cp < 0x80) || (extra == 2 && cp < 0x800) ||
        (extra == 3 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += extra + 1;
  }
  return true;
}

std::string html_escape(std::string_view text, bool quote) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"':
        if (quote) {
          out += "&quot;";
        } else {
          out.push_back(c);
        }
        break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace compsum
