#ifndef COMPSUM_CONCEPTS_H_
#define COMPSUM_CONCEPTS_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "compsum/dom.h"
#include "compsum/lexicon.h"

namespace compsum {

struct Sentence {
  std::string doc_id;
  // Document-wide, 0-based, increasing in document order.
  int seq_no = 0;
  std::string text;
  std::vector<std::string> tokens;
  EmphasisSet emphasis;
  int sibling_index = 0;
  int sibling_count = 1;
};

// Concept term -> conceptual term frequency (ctf). Terms are stems; every
// stored ctf is >= 1.
class ConceptList {
 public:
  using Map = std::map<std::string, int>;

  ConceptList() = default;
  ConceptList(std::initializer_list<Map::value_type> entries);

  // Adds count (>= 1) occurrences of term.
  void add(const std::string& term, int count = 1);

  // 0 when absent.
  int ctf(std::string_view term) const;
  bool contains(std::string_view term) const;

  const Map& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  long total_ctf() const;

  friend bool operator==(const ConceptList&, const ConceptList&) = default;

 private:
  Map entries_;
};

// Union of terms with ctf summed on shared terms.
ConceptList merge_concept_lists(const ConceptList& a, const ConceptList& b);

// Splits normalised text at ., ! or ? followed by whitespace and an
// uppercase letter or digit. Known abbreviations and single-letter initials
// do not end a sentence. Sequence numbers start at starting_seq.
std::vector<Sentence> split_sentences(std::string_view text,
                                      std::string_view doc_id,
                                      int starting_seq);

// Stem of a token, or "" when the token (or its stem) is a stopword.
std::string normalize_term(std::string_view token, const Lexicon& lexicon);

// normalize_term over every token of text, empties dropped.
std::vector<std::string> normalize_terms(std::string_view text,
                                         const Lexicon& lexicon);

class ConceptExtractor {
 public:
  virtual ~ConceptExtractor() = default;
  virtual std::string name() const = 0;
  // Must be deterministic and free of internal mutable state.
  virtual ConceptList extract(const Sentence& sentence) const = 0;
};

// Approximates verb-argument labelling: every non-stopword within
// kWindowRadius tokens of a detected verb is a concept, counted once per
// window it falls in. Sentences without a verb count every non-stopword.
class HeuristicConceptExtractor : public ConceptExtractor {
 public:
  static constexpr int kWindowRadius = 4;

  explicit HeuristicConceptExtractor(
      const Lexicon& lexicon = Lexicon::bundled())
      : lexicon_(lexicon) {}

  std::string name() const override { return "heuristic-window4"; }
  ConceptList extract(const Sentence& sentence) const override;

 private:
  const Lexicon& lexicon_;
};

ConceptList extract_concepts(const Sentence& sentence,
                             const ConceptExtractor& extractor);

}  // namespace compsum

#endif  // COMPSUM_CONCEPTS_H_
