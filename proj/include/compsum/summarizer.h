#ifndef COMPSUM_SUMMARIZER_H_
#define COMPSUM_SUMMARIZER_H_

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "compsum/block_index.h"
#include "compsum/concepts.h"
#include "compsum/lexicon.h"
#include "compsum/segmentation.h"

namespace compsum {

// Canonical term -> equivalent terms, all normalised.
using SynonymMap = std::map<std::string, std::vector<std::string>>;

// Each non-empty, non-'#' line is a comma-separated group; the first entry
// is canonical. Entries are normalised with the lexicon, so "Recruiters,
// employers" maps recruit -> {employ}.
SynonymMap parse_synonyms(std::string_view contents,
                          const Lexicon& lexicon = Lexicon::bundled());
SynonymMap load_synonyms(const std::string& path,
                         const Lexicon& lexicon = Lexicon::bundled());

struct FeatureQuery {
  std::vector<std::string> query_terms;
  std::vector<std::string> feature_terms;
  SynonymMap synonyms;

  // True when term is a feature term or a listed synonym of one.
  bool matches_feature(const std::string& term) const;
  // True for query terms, feature terms and their synonyms.
  bool matches_any(const std::string& term) const;
};

// Normalises a free-text query and feature phrases into a FeatureQuery.
FeatureQuery make_feature_query(std::string_view query,
                                const std::vector<std::string>& features,
                                SynonymMap synonyms = {},
                                const Lexicon& lexicon = Lexicon::bundled());

struct SentenceCount {
  int value = 3;
};
struct SummaryRatio {
  double value = 0.3;
};

struct WeightParams {
  double gamma = 0.5;
  double alpha_tag = 1.0;
  double beta_loc = 1.0;
  std::variant<SentenceCount, SummaryRatio> budget = SentenceCount{};
};

// Throws Error(kInvalidArgument) for negative weights, a count < 1 or a
// ratio outside (0, 1].
void validate_params(const WeightParams& params);

// Sentences to extract from a block of block_size sentences.
int sentence_budget(const WeightParams& params, int block_size);

struct SummarySentence {
  int seq_no = 0;
  std::string text;
  double score = 0.0;
};

struct SummarySection {
  std::string subtitle;
  // Document order.
  std::vector<SummarySentence> sentences;
};

struct DocumentSummary {
  std::string doc_id;
  std::string title;
  std::vector<SummarySection> sections;
  // No concept block matched any feature term.
  bool no_match = false;
};

struct ComparativeSummary {
  std::string query;
  std::vector<std::string> features;
  // Selection order.
  std::vector<DocumentSummary> columns;
};

// min(1, sum of ctf over block terms matching a feature / norm of all
// block ctfs). Throws Error(kUndefinedSimilarity) for an empty block.
double feature_block_similarity(const FeatureQuery& query,
                                const ConceptBlock& block);

struct BlockChoice {
  size_t index = 0;
  double similarity = 0.0;
};

// Highest-similarity block, lowest id on ties; nullopt when every block
// scores 0. Blocks without concepts score 0. Throws Error(kNoBlocks) for an
// empty list.
std::optional<BlockChoice> select_best_block(
    const FeatureQuery& query, const std::vector<ConceptBlock>& blocks);

// Mean number of tokens between consecutive query/feature matches, at
// least 1; +infinity with fewer than two matches.
double avg_feature_distance(const Sentence& sentence, const FeatureQuery& query,
                            const Lexicon& lexicon = Lexicon::bundled());

int tag_weight(EmphasisSet emphasis);
// 1 for the leftmost sibling falling linearly to 0.5 for the rightmost.
double location_weight(int sibling_index, int sibling_count);

// (matches + e^(-gamma (D - 1)) + alpha_tag W_tag + beta_loc W_l) / tokens.
// Throws Error(kLength) for a sentence without tokens.
double sentence_weight(const Sentence& sentence, const FeatureQuery& query,
                       const WeightParams& params,
                       const Lexicon& lexicon = Lexicon::bundled());

Sentence sentence_from_record(const DocumentRecord& record, int seq_no);

// A heading or caption that is the subtitle of its own section. Such
// sentences label sections and are not extracted.
bool is_own_subtitle(const StoredSentence& sentence);

// Scores the best block's sentences (own subtitles and token-less
// sentences excepted) and keeps the top k, ties to the lower seq_no.
DocumentSummary extract_summary(const DocumentRecord& record,
                                const FeatureQuery& query,
                                const WeightParams& params,
                                const Lexicon& lexicon = Lexicon::bundled());

// Throws Error(kNoDocuments) for an empty list.
ComparativeSummary compose_comparative(std::vector<DocumentSummary> summaries,
                                       std::string query,
                                       std::vector<std::string> features);

}  // namespace compsum

#endif  // COMPSUM_SUMMARIZER_H_
