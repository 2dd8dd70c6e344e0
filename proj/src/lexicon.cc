#include "compsum/lexicon.h"

#include <fstream>
#include <sstream>

#include "compsum/error.h"
#include "compsum/text.h"

namespace compsum {

namespace internal {
extern const char* const kBundledStopwords;
extern const char* const kBundledVerbs;
}  // namespace internal

std::unordered_set<std::string> parse_word_list(std::string_view contents) {
  std::unordered_set<std::string> words;
  std::istringstream in{std::string(contents)};
  std::string line;
  while (std::getline(in, line)) {
    std::string entry = to_lower_ascii(normalize_whitespace(line));
    if (entry.empty() || entry.front() == '#') continue;
    words.insert(std::move(entry));
  }
  return words;
}

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool is_doubled_consonant_tail(std::string_view s) {
  if (s.size() < 2 || s[s.size() - 1] != s[s.size() - 2]) return false;
  char c = s.back();
  return !(c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u');
}

std::unordered_set<std::string> read_list_file(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot read word list " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_word_list(buffer.str());
}

}  // namespace

bool Lexicon::is_verb(std::string_view token) const {
  auto known = [this](std::string_view stem) {
    return !stem.empty() && verbs.contains(std::string(stem));
  };
  if (known(token)) return true;

  auto check_stem = [&](std::string_view stem) {
    if (known(stem) || known(std::string(stem) + "e")) return true;
    if (is_doubled_consonant_tail(stem)) {
      return known(stem.substr(0, stem.size() - 1));
    }
    return false;
  };

  if (ends_with(token, "ing")) {
    return check_stem(token.substr(0, token.size() - 3));
  }
  if (ends_with(token, "ied")) {
    return known(std::string(token.substr(0, token.size() - 3)) + "y");
  }
  if (ends_with(token, "ed")) {
    return check_stem(token.substr(0, token.size() - 2));
  }
  if (ends_with(token, "ies")) {
    return known(std::string(token.substr(0, token.size() - 3)) + "y");
  }
  if (ends_with(token, "es") && known(token.substr(0, token.size() - 2))) {
    return true;
  }
  if (ends_with(token, "s") && !ends_with(token, "ss")) {
    return known(token.substr(0, token.size() - 1));
  }
  return false;
}

const Lexicon& Lexicon::bundled() {
  static const Lexicon lexicon = [] {
    Lexicon l;
    l.stopwords = parse_word_list(internal::kBundledStopwords);
    l.verbs = parse_word_list(internal::kBundledVerbs);
    return l;
  }();
  return lexicon;
}

Lexicon Lexicon::load(const std::filesystem::path& stopwords_path,
                      const std::filesystem::path& verbs_path) {
  Lexicon l = bundled();
  if (!stopwords_path.empty()) l.stopwords = read_list_file(stopwords_path);
  if (!verbs_path.empty()) l.verbs = read_list_file(verbs_path);
  return l;
}

}  // namespace compsum
