#include "compsum/search.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "compsum/concepts.h"
#include "compsum/error.h"
#include "compsum/text.h"

namespace compsum {

SearchIndex::SearchIndex(const std::vector<DocumentRecord>& records,
                         const Lexicon& lexicon)
    : lexicon_(lexicon) {
  for (const auto& record : records) {
    IndexedDoc doc;
    doc.doc_id = record.doc_id;
    doc.source = record.source;
    doc.title = record.title;
    for (const auto& [seq, sentence] : record.sentences) {
      auto terms = normalize_terms(sentence.text, lexicon_);
      for (const auto& term : terms) ++doc.tf[term];
      doc.sentence_terms.push_back(std::move(terms));
      doc.sentence_texts.push_back(sentence.text);
    }
    for (const auto& [term, count] : doc.tf) ++df_[term];
    docs_.push_back(std::move(doc));
  }
}

int SearchIndex::term_frequency(std::string_view doc_id,
                                const std::string& term) const {
  for (const auto& doc : docs_) {
    if (doc.doc_id != doc_id) continue;
    auto it = doc.tf.find(term);
    return it == doc.tf.end() ? 0 : it->second;
  }
  return 0;
}

std::vector<SearchResult> SearchIndex::search(std::string_view query,
                                              int limit) const {
  if (limit < 1) {
    throw Error(ErrorCode::kInvalidArgument, "limit must be positive");
  }
  auto terms_list = normalize_terms(query, lexicon_);
  if (terms_list.empty()) {
    throw Error(ErrorCode::kEmptyQuery,
                normalize_whitespace(query).empty()
                    ? "query is empty"
                    : "query has no searchable terms");
  }
  std::set<std::string> terms(terms_list.begin(), terms_list.end());

  const double n = static_cast<double>(docs_.size());
  std::vector<SearchResult> results;
  for (const auto& doc : docs_) {
    double score = 0.0;
    for (const auto& term : terms) {
      auto tf = doc.tf.find(term);
      if (tf == doc.tf.end()) continue;
      double idf = std::log(1.0 + n / df_.at(term));
      score += tf->second * idf;
    }
    if (score <= 0.0) continue;

    SearchResult result{doc.doc_id, doc.source, doc.title, score, ""};
    for (size_t i = 0; i < doc.sentence_terms.size(); ++i) {
      const auto& st = doc.sentence_terms[i];
      if (std::any_of(st.begin(), st.end(),
                      [&](const std::string& t) { return terms.contains(t); })) {
        result.snippet = doc.sentence_texts[i];
        break;
      }
    }
    if (result.snippet.empty() && !doc.sentence_texts.empty()) {
      result.snippet = doc.sentence_texts.front();
    }
    results.push_back(std::move(result));
  }
  std::sort(results.begin(), results.end(),
            [](const SearchResult& a, const SearchResult& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.doc_id < b.doc_id;
            });
  if (results.size() > static_cast<size_t>(limit)) {
    results.resize(static_cast<size_t>(limit));
  }
  return results;
}

}  // namespace compsum
