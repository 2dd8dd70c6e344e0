#include "compsum/concepts.h"

#include <algorithm>
#include <array>

#include "compsum/error.h"
#include "compsum/porter_stemmer.h"
#include "compsum/text.h"

namespace compsum {

namespace {

constexpr std::array<std::string_view, 40> kAbbreviations = {
    "dr",   "mr",   "mrs",  "ms",   "prof", "no",   "nos",  "etc",
    "e.g",  "i.e",  "vs",   "st",   "jr",   "sr",   "inc",  "ltd",
    "co",   "corp", "dept", "fig",  "approx", "est", "govt", "univ",
    "mt",   "jan",  "feb",  "mar",  "apr",  "jun",  "jul",  "aug",
    "sep",  "sept", "oct",  "nov",  "dec",  "vol",  "pp",   "ph.d",
};

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_closer(char c) {
  return c == '"' || c == '\'' || c == ')' || c == ']';
}

bool is_opener(char c) { return c == '"' || c == '\'' || c == '(' || c == '['; }

// The word (letters and internal dots) ending just before text[end].
std::string_view word_before(std::string_view text, size_t end) {
  size_t start = end;
  while (start > 0) {
    char c = text[start - 1];
    bool letter = (c >= 'a' && c <= 'z') || is_upper(c);
    if (!letter && c != '.') break;
    --start;
  }
  return text.substr(start, end - start);
}

bool blocks_split(std::string_view text, size_t dot) {
  std::string word = to_lower_ascii(word_before(text, dot));
  if (word.empty()) return false;
  // Single-letter initials such as "J. Smith".
  if (word.size() == 1 && is_upper(text[dot - 1])) return true;
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), word) !=
         kAbbreviations.end();
}

}  // namespace

ConceptList::ConceptList(std::initializer_list<Map::value_type> entries) {
  for (const auto& [term, count] : entries) add(term, count);
}

void ConceptList::add(const std::string& term, int count) {
  if (term.empty() || count < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "concept terms need a name and a positive count");
  }
  entries_[term] += count;
}

int ConceptList::ctf(std::string_view term) const {
  auto it = entries_.find(std::string(term));
  return it == entries_.end() ? 0 : it->second;
}

bool ConceptList::contains(std::string_view term) const {
  return entries_.contains(std::string(term));
}

long ConceptList::total_ctf() const {
  long total = 0;
  for (const auto& [term, count] : entries_) total += count;
  return total;
}

ConceptList merge_concept_lists(const ConceptList& a, const ConceptList& b) {
  ConceptList out = a;
  for (const auto& [term, count] : b.entries()) out.add(term, count);
  return out;
}

std::vector<Sentence> split_sentences(std::string_view text,
                                      std::string_view doc_id,
                                      int starting_seq) {
  std::vector<Sentence> out;
  auto emit = [&](size_t begin, size_t end) {
    while (begin < end && is_ascii_space(text[begin])) ++begin;
    while (end > begin && is_ascii_space(text[end - 1])) --end;
    if (begin == end) return;
    Sentence s;
    s.doc_id = std::string(doc_id);
    s.seq_no = starting_seq + static_cast<int>(out.size());
    s.text = std::string(text.substr(begin, end - begin));
    s.tokens = tokenize(s.text);
    out.push_back(std::move(s));
  };

  size_t start = 0;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c != '.' && c != '!' && c != '?') {
      ++i;
      continue;
    }
    size_t punct = i;
    size_t end = i + 1;
    while (end < text.size() &&
           (text[end] == '.' || text[end] == '!' || text[end] == '?')) {
      ++end;
    }
    while (end < text.size() && is_closer(text[end])) ++end;
    size_t next = end;
    while (next < text.size() && is_ascii_space(text[next])) ++next;
    bool boundary = next > end && next < text.size();
    if (boundary) {
      size_t lead = next;
      while (lead < text.size() && is_opener(text[lead])) ++lead;
      boundary = lead < text.size() &&
                 (is_upper(text[lead]) || is_digit(text[lead]));
    }
    if (boundary && c == '.' && end == punct + 1 && blocks_split(text, punct)) {
      boundary = false;
    }
    if (boundary) {
      emit(start, end);
      start = next;
    }
    i = end;
  }
  emit(start, text.size());
  return out;
}

std::string normalize_term(std::string_view token, const Lexicon& lexicon) {
  std::string lower = to_lower_ascii(token);
  if (lower.empty() || lexicon.is_stopword(lower)) return "";
  std::string stem = porter_stem(lower);
  if (stem.empty() || lexicon.is_stopword(stem)) return "";
  return stem;
}

std::vector<std::string> normalize_terms(std::string_view text,
                                         const Lexicon& lexicon) {
  std::vector<std::string> terms;
  for (const auto& token : tokenize(text)) {
    std::string term = normalize_term(token, lexicon);
    if (!term.empty()) terms.push_back(std::move(term));
  }
  return terms;
}

ConceptList HeuristicConceptExtractor::extract(const Sentence& sentence) const {
  const auto& tokens = sentence.tokens;
  std::vector<std::string> terms;
  terms.reserve(tokens.size());
  for (const auto& token : tokens) terms.push_back(normalize_term(token, lexicon_));

  ConceptList concepts;
  std::vector<size_t> verbs;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (lexicon_.is_verb(tokens[i])) verbs.push_back(i);
  }
  if (verbs.empty()) {
    for (const auto& term : terms) {
      if (!term.empty()) concepts.add(term);
    }
    return concepts;
  }
  const size_t radius = kWindowRadius;
  for (size_t verb : verbs) {
    size_t lo = verb >= radius ? verb - radius : 0;
    size_t hi = std::min(tokens.size() - 1, verb + radius);
    for (size_t j = lo; j <= hi; ++j) {
      if (!terms[j].empty()) concepts.add(terms[j]);
    }
  }
  return concepts;
}

ConceptList extract_concepts(const Sentence& sentence,
                             const ConceptExtractor& extractor) {
  return extractor.extract(sentence);
}

}  // namespace compsum
