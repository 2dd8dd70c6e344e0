#ifndef COMPSUM_SEARCH_H_
#define COMPSUM_SEARCH_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "compsum/block_index.h"
#include "compsum/lexicon.h"

namespace compsum {

struct SearchResult {
  std::string doc_id;
  std::string source;
  std::string title;
  double score = 0.0;
  // First sentence containing a query term, else the first sentence.
  std::string snippet;
};

// In-memory TF-IDF index over stored sentences, using the same term
// normalisation as concept extraction.
class SearchIndex {
 public:
  SearchIndex(const std::vector<DocumentRecord>& records,
              const Lexicon& lexicon = Lexicon::bundled());

  // score = sum over distinct query terms of tf * ln(1 + N / df). Zero-score
  // documents are dropped; ties rank by doc_id. Throws Error(kEmptyQuery)
  // for a query without searchable terms and Error(kInvalidArgument) for
  // limit < 1.
  std::vector<SearchResult> search(std::string_view query, int limit) const;

  // Occurrences of a normalised term in a document; 0 for unknown ids.
  int term_frequency(std::string_view doc_id, const std::string& term) const;

  size_t document_count() const { return docs_.size(); }

 private:
  struct IndexedDoc {
    std::string doc_id;
    std::string source;
    std::string title;
    std::map<std::string, int> tf;
    // Normalised terms of each sentence, in seq_no order.
    std::vector<std::vector<std::string>> sentence_terms;
    std::vector<std::string> sentence_texts;
  };

  const Lexicon& lexicon_;
  std::vector<IndexedDoc> docs_;
  std::map<std::string, int> df_;
};

}  // namespace compsum

#endif  // COMPSUM_SEARCH_H_
