#include "compsum/summarizer.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "compsum/error.h"
#include "compsum/text.h"

namespace compsum {

namespace {

void push_unique(std::vector<std::string>& out, std::string term) {
  if (term.empty()) return;
  if (std::find(out.begin(), out.end(), term) == out.end()) {
    out.push_back(std::move(term));
  }
}

// Canonical form of term under the synonym groups.
const std::string& canonical(const SynonymMap& synonyms,
                             const std::string& term) {
  if (synonyms.contains(term)) return term;
  for (const auto& [head, members] : synonyms) {
    if (std::find(members.begin(), members.end(), term) != members.end()) {
      return head;
    }
  }
  return term;
}

bool matches_in(const std::vector<std::string>& terms,
                const SynonymMap& synonyms, const std::string& term) {
  if (term.empty()) return false;
  const std::string& c = canonical(synonyms, term);
  for (const auto& t : terms) {
    if (t == term || canonical(synonyms, t) == c) return true;
  }
  return false;
}

double block_norm(const ConceptList& concepts) {
  double sum = 0.0;
  for (const auto& [term, ctf] : concepts.entries()) {
    sum += static_cast<double>(ctf) * static_cast<double>(ctf);
  }
  return std::sqrt(sum);
}

std::vector<size_t> match_positions(const Sentence& sentence,
                                    const FeatureQuery& query,
                                    const Lexicon& lexicon) {
  std::vector<size_t> positions;
  for (size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (query.matches_any(normalize_term(sentence.tokens[i], lexicon))) {
      positions.push_back(i);
    }
  }
  return positions;
}

}  // namespace

SynonymMap parse_synonyms(std::string_view contents, const Lexicon& lexicon) {
  SynonymMap out;
  std::istringstream in{std::string(contents)};
  std::string line;
  while (std::getline(in, line)) {
    std::string trimmed = normalize_whitespace(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    std::vector<std::string> group;
    std::stringstream fields(trimmed);
    std::string field;
    while (std::getline(fields, field, ',')) {
      for (auto& term : normalize_terms(field, lexicon)) {
        push_unique(group, std::move(term));
      }
    }
    if (group.size() < 2) continue;
    auto& members = out[group.front()];
    for (size_t i = 1; i < group.size(); ++i) push_unique(members, group[i]);
  }
  return out;
}

SynonymMap load_synonyms(const std::string& path, const Lexicon& lexicon) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot read synonym file " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_synonyms(buffer.str(), lexicon);
}

bool FeatureQuery::matches_feature(const std::string& term) const {
  return matches_in(feature_terms, synonyms, term);
}

bool FeatureQuery::matches_any(const std::string& term) const {
  return matches_in(feature_terms, synonyms, term) ||
         matches_in(query_terms, synonyms, term);
}

FeatureQuery make_feature_query(std::string_view query,
                                const std::vector<std::string>& features,
                                SynonymMap synonyms, const Lexicon& lexicon) {
  FeatureQuery fq;
  for (auto& term : normalize_terms(query, lexicon)) {
    push_unique(fq.query_terms, std::move(term));
  }
  for (const auto& feature : features) {
    for (auto& term : normalize_terms(feature, lexicon)) {
      push_unique(fq.feature_terms, std::move(term));
    }
  }
  if (fq.feature_terms.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "features have no searchable terms");
  }
  fq.synonyms = std::move(synonyms);
  return fq;
}

void validate_params(const WeightParams& params) {
  auto check = [](double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(name) + " must be a finite value >= 0");
    }
  };
  check(params.gamma, "gamma");
  check(params.alpha_tag, "alpha_tag");
  check(params.beta_loc, "beta_loc");
  if (const auto* count = std::get_if<SentenceCount>(&params.budget)) {
    if (count->value < 1) {
      throw Error(ErrorCode::kInvalidArgument, "sentences must be >= 1");
    }
  } else {
    double ratio = std::get<SummaryRatio>(params.budget).value;
    if (!(ratio > 0.0 && ratio <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "ratio must lie in (0, 1]");
    }
  }
}

int sentence_budget(const WeightParams& params, int block_size) {
  if (block_size <= 0) return 0;
  if (const auto* count = std::get_if<SentenceCount>(&params.budget)) {
    return std::min(count->value, block_size);
  }
  double ratio = std::get<SummaryRatio>(params.budget).value;
  // The epsilon keeps products like 0.3 * 10 from rounding up to 4.
  int k = static_cast<int>(std::ceil(ratio * block_size - 1e-9));
  return std::clamp(k, 0, block_size);
}

double feature_block_similarity(const FeatureQuery& query,
                                const ConceptBlock& block) {
  if (block.concepts.empty()) {
    throw Error(ErrorCode::kUndefinedSimilarity,
                "concept block " + std::to_string(block.id) + " has no concepts");
  }
  double matched = 0.0;
  for (const auto& [term, ctf] : block.concepts.entries()) {
    if (query.matches_feature(term)) matched += ctf;
  }
  if (matched == 0.0) return 0.0;
  return std::min(1.0, matched / block_norm(block.concepts));
}

std::optional<BlockChoice> select_best_block(
    const FeatureQuery& query, const std::vector<ConceptBlock>& blocks) {
  if (blocks.empty()) {
    throw Error(ErrorCode::kNoBlocks, "document has no concept blocks");
  }
  std::optional<BlockChoice> best;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].concepts.empty()) continue;
    double s = feature_block_similarity(query, blocks[i]);
    if (s <= 0.0) continue;
    if (!best || s > best->similarity ||
        (s == best->similarity && blocks[i].id < blocks[best->index].id)) {
      best = BlockChoice{i, s};
    }
  }
  return best;
}

double avg_feature_distance(const Sentence& sentence, const FeatureQuery& query,
                            const Lexicon& lexicon) {
  auto positions = match_positions(sentence, query, lexicon);
  if (positions.size() < 2) return std::numeric_limits<double>::infinity();
  double gaps = 0.0;
  for (size_t i = 1; i < positions.size(); ++i) {
    gaps += static_cast<double>(positions[i] - positions[i - 1] - 1);
  }
  return std::max(1.0, gaps / static_cast<double>(positions.size() - 1));
}

int tag_weight(EmphasisSet emphasis) {
  static const EmphasisSet kStrong = {Emphasis::kBold, Emphasis::kUnderline,
                                      Emphasis::kItalics, Emphasis::kCaption,
                                      Emphasis::kParagraphTitle};
  if (!(emphasis & kStrong).empty()) return 3;
  if (emphasis.contains(Emphasis::kColorChange)) return 2;
  return 0;
}

double location_weight(int sibling_index, int sibling_count) {
  if (sibling_count <= 1) return 1.0;
  double t = static_cast<double>(std::clamp(sibling_index, 0, sibling_count - 1)) /
             static_cast<double>(sibling_count - 1);
  return 1.0 - 0.5 * t;
}

double sentence_weight(const Sentence& sentence, const FeatureQuery& query,
                       const WeightParams& params, const Lexicon& lexicon) {
  if (sentence.tokens.empty()) {
    throw Error(ErrorCode::kLength,
                "sentence " + std::to_string(sentence.seq_no) + " has no tokens");
  }
  auto positions = match_positions(sentence, query, lexicon);
  double distance = 0.0;
  if (positions.size() >= 2) {
    double d = avg_feature_distance(sentence, query, lexicon);
    distance = std::exp(-params.gamma * (d - 1.0));
  }
  double numerator =
      static_cast<double>(positions.size()) + distance +
      params.alpha_tag * tag_weight(sentence.emphasis) +
      params.beta_loc *
          location_weight(sentence.sibling_index, sentence.sibling_count);
  return numerator / static_cast<double>(sentence.tokens.size());
}

bool is_own_subtitle(const StoredSentence& sentence) {
  bool heading_like = sentence.emphasis.contains(Emphasis::kParagraphTitle) ||
                      sentence.emphasis.contains(Emphasis::kCaption);
  return heading_like && sentence.text == sentence.heading;
}

Sentence sentence_from_record(const DocumentRecord& record, int seq_no) {
  auto it = record.sentences.find(seq_no);
  if (it == record.sentences.end()) {
    throw Error(ErrorCode::kValidation,
                "record '" + record.doc_id + "' has no sentence " +
                    std::to_string(seq_no));
  }
  Sentence s;
  s.doc_id = record.doc_id;
  s.seq_no = seq_no;
  s.text = it->second.text;
  s.tokens = tokenize(s.text);
  s.emphasis = it->second.emphasis;
  s.sibling_index = it->second.sibling_index;
  s.sibling_count = it->second.sibling_count;
  return s;
}

DocumentSummary extract_summary(const DocumentRecord& record,
                                const FeatureQuery& query,
                                const WeightParams& params,
                                const Lexicon& lexicon) {
  validate_params(params);
  DocumentSummary summary;
  summary.doc_id = record.doc_id;
  summary.title = record.title;

  auto choice = select_best_block(query, record.concept_blocks);
  if (!choice) {
    summary.sections.push_back({});
    summary.no_match = true;
    return summary;
  }
  const ConceptBlock& block = record.concept_blocks[choice->index];

  struct Scored {
    int seq_no;
    double score;
  };
  std::vector<Scored> scored;
  for (int seq : block.sentence_refs) {
    if (is_own_subtitle(record.sentences.at(seq))) continue;
    Sentence s = sentence_from_record(record, seq);
    // Punctuation-only sentences carry nothing to extract.
    if (s.tokens.empty()) continue;
    scored.push_back({seq, sentence_weight(s, query, params, lexicon)});
  }
  int k = sentence_budget(params, static_cast<int>(scored.size()));
  std::stable_sort(scored.begin(), scored.end(),
                   [](const Scored& a, const Scored& b) {
                     if (a.score != b.score) return a.score > b.score;
                     return a.seq_no < b.seq_no;
                   });
  scored.resize(static_cast<size_t>(k));
  std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
    return a.seq_no < b.seq_no;
  });

  std::map<std::string, size_t> section_of;
  for (const auto& chosen : scored) {
    const StoredSentence& stored = record.sentences.at(chosen.seq_no);
    auto [it, inserted] =
        section_of.try_emplace(stored.heading, summary.sections.size());
    if (inserted) summary.sections.push_back({stored.heading, {}});
    summary.sections[it->second].sentences.push_back(
        {chosen.seq_no, stored.text, chosen.score});
  }
  return summary;
}

ComparativeSummary compose_comparative(std::vector<DocumentSummary> summaries,
                                       std::string query,
                                       std::vector<std::string> features) {
  if (summaries.empty()) {
    throw Error(ErrorCode::kNoDocuments, "no documents selected");
  }
  ComparativeSummary out;
  out.query = std::move(query);
  out.features = std::move(features);
  out.columns = std::move(summaries);
  return out;
}

}  // namespace compsum
