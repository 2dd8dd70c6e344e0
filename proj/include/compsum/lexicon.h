#ifndef COMPSUM_LEXICON_H_
#define COMPSUM_LEXICON_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>

namespace compsum {

// Word lists used by tokenisation-level decisions. Files hold one entry per
// line; blank lines and lines starting with '#' are ignored.
struct Lexicon {
  std::unordered_set<std::string> stopwords;
  std::unordered_set<std::string> verbs;

  bool is_stopword(std::string_view token) const {
    return stopwords.contains(std::string(token));
  }

  // Lexicon entry, or a regular -s/-es/-ed/-ing inflection of one.
  bool is_verb(std::string_view token) const;

  // Lists compiled into the binary from data/.
  static const Lexicon& bundled();

  // An empty path keeps the bundled list for that half.
  static Lexicon load(const std::filesystem::path& stopwords_path,
                      const std::filesystem::path& verbs_path);
};

std::unordered_set<std::string> parse_word_list(std::string_view contents);

}  // namespace compsum

#endif  // COMPSUM_LEXICON_H_
