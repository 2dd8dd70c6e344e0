#ifndef COMPSUM_TESTS_RECORDS_H_
#define COMPSUM_TESTS_RECORDS_H_

#include <random>
#include <string>

#include "compsum/block_index.h"

namespace compsum::testing {

// A valid record with random sentences, emphasis and concept blocks. Text
// includes quotes, backslashes, tags and non-ASCII so serialisation has
// something to escape.
inline DocumentRecord random_record(std::mt19937& rng, const std::string& doc_id) {
  static const char* kWords[] = {"placement", "\"quoted\"", "back\\slash", "<b>",
                                 "caf\xc3\xa9", "recruiters", "labs", "&amp;",
                                 "tab\there", "IT"};
  std::uniform_int_distribution<int> n_sentences(1, 30);
  std::uniform_int_distribution<int> n_words(1, 12);
  std::uniform_int_distribution<int> word(0, 9);
  std::uniform_int_distribution<int> bits(0, 63);
  std::uniform_int_distribution<int> small(0, 5);

  DocumentRecord r;
  r.doc_id = doc_id;
  r.source = "https://example.org/" + doc_id + "?q=\"x\"";
  r.title = "Title \xe2\x80\x93 " + doc_id;
  r.indexed_at = "2026-10-18T12:00:00Z";
  r.pipeline_version = "test";
  int n = n_sentences(rng);
  for (int i = 0; i < n; ++i) {
    StoredSentence s;
    int w = n_words(rng);
    for (int j = 0; j < w; ++j) {
      if (j) s.text += ' ';
      s.text += kWords[word(rng)];
    }
    s.emphasis = EmphasisSet::from_bits(static_cast<uint8_t>(bits(rng)));
    s.sibling_count = 1 + small(rng);
    s.sibling_index = std::uniform_int_distribution<int>(0, s.sibling_count - 1)(rng);
    s.heading = kWords[word(rng)];
    r.sentences[i] = s;
  }
  int next = 0;
  int id = 0;
  while (next < n) {
    ConceptBlock b;
    b.id = id++;
    b.doc_id = doc_id;
    int len = std::uniform_int_distribution<int>(1, n - next)(rng);
    for (int i = 0; i < len; ++i) b.sentence_refs.push_back(next + i);
    b.topic_block_ids = {b.id};
    int terms = small(rng);
    for (int t = 0; t < terms; ++t) b.concepts.add("term" + std::to_string(word(rng)), 1 + small(rng));
    b.headings = {kWords[word(rng)]};
    r.concept_blocks.push_back(std::move(b));
    next += len;
  }
  return r;
}

}  // namespace compsum::testing

#endif  // COMPSUM_TESTS_RECORDS_H_
