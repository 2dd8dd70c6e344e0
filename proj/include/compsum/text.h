#ifndef COMPSUM_TEXT_H_
#define COMPSUM_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace compsum {

bool is_ascii_space(char c);

// Collapses runs of ASCII whitespace to a single space and trims both ends.
std::string normalize_whitespace(std::string_view text);

std::string to_lower_ascii(std::string_view text);

// Word tokens in order, lowercased. A token is a maximal run of ASCII
// alphanumerics and non-ASCII bytes; everything else separates.
std::vector<std::string> tokenize(std::string_view text);

bool is_valid_utf8(std::string_view bytes);

// Escapes &, <, > and (when quote is set) the double quote.
std::string html_escape(std::string_view text, bool quote = false);

}  // namespace compsum

#endif  // COMPSUM_TEXT_H_
