#include "compsum/json_codec.h"

namespace compsum {

using nlohmann::json;

void to_json(json& j, const ConceptList& concepts) {
  j = json::object();
  for (const auto& [term, ctf] : concepts.entries()) j[term] = ctf;
}

void from_json(const json& j, ConceptList& concepts) {
  concepts = ConceptList();
  for (const auto& [term, ctf] : j.items()) concepts.add(term, ctf.get<int>());
}

void to_json(json& j, const ConceptBlock& block) {
  j = json{{"id", block.id},
           {"doc_id", block.doc_id},
           {"topic_block_ids", block.topic_block_ids},
           {"concepts", block.concepts},
           {"sentence_refs", block.sentence_refs},
           {"headings", block.headings}};
}

void from_json(const json& j, ConceptBlock& block) {
  j.at("id").get_to(block.id);
  j.at("doc_id").get_to(block.doc_id);
  j.at("topic_block_ids").get_to(block.topic_block_ids);
  j.at("concepts").get_to(block.concepts);
  j.at("sentence_refs").get_to(block.sentence_refs);
  j.at("headings").get_to(block.headings);
}

void to_json(json& j, const DocumentRecord& record) {
  json sentences = json::array();
  for (const auto& [seq, s] : record.sentences) {
    sentences.push_back({{"seq_no", seq},
                         {"text", s.text},
                         {"emphasis", s.emphasis.names()},
                         {"sibling_index", s.sibling_index},
                         {"sibling_count", s.sibling_count},
                         {"heading", s.heading}});
  }
  j = json{{"doc_id", record.doc_id},
           {"source", record.source},
           {"title", record.title},
           {"sentences", std::move(sentences)},
           {"concept_blocks", record.concept_blocks},
           {"indexed_at", record.indexed_at},
           {"pipeline_version", record.pipeline_version}};
}

void from_json(const json& j, DocumentRecord& record) {
  j.at("doc_id").get_to(record.doc_id);
  j.at("source").get_to(record.source);
  j.at("title").get_to(record.title);
  record.sentences.clear();
  for (const auto& s : j.at("sentences")) {
    StoredSentence stored;
    s.at("text").get_to(stored.text);
    stored.emphasis =
        EmphasisSet::from_names(s.at("emphasis").get<std::vector<std::string>>());
    s.at("sibling_index").get_to(stored.sibling_index);
    s.at("sibling_count").get_to(stored.sibling_count);
    s.at("heading").get_to(stored.heading);
    record.sentences[s.at("seq_no").get<int>()] = std::move(stored);
  }
  j.at("concept_blocks").get_to(record.concept_blocks);
  j.at("indexed_at").get_to(record.indexed_at);
  j.at("pipeline_version").get_to(record.pipeline_version);
}

void to_json(json& j, const DocumentListing& listing) {
  j = json{{"doc_id", listing.doc_id},
           {"source", listing.source},
           {"title", listing.title},
           {"indexed_at", listing.indexed_at}};
}

void from_json(const json& j, DocumentListing& listing) {
  j.at("doc_id").get_to(listing.doc_id);
  j.at("source").get_to(listing.source);
  j.at("title").get_to(listing.title);
  j.at("indexed_at").get_to(listing.indexed_at);
}

void to_json(json& j, const SearchResult& result) {
  j = json{{"doc_id", result.doc_id},
           {"source", result.source},
           {"title", result.title},
           {"score", result.score},
           {"snippet", result.snippet}};
}

void to_json(json& j, const DocumentSummary& summary) {
  json sections = json::array();
  for (const auto& section : summary.sections) {
    json sentences = json::array();
    for (const auto& s : section.sentences) {
      sentences.push_back(
          {{"seq_no", s.seq_no}, {"text", s.text}, {"score", s.score}});
    }
    sections.push_back(
        {{"subtitle", section.subtitle}, {"sentences", std::move(sentences)}});
  }
  j = json{{"doc_id", summary.doc_id},
           {"title", summary.title},
           {"sections", std::move(sections)},
           {"no_match", summary.no_match}};
}

void to_json(json& j, const ComparativeSummary& summary) {
  j = json{{"query", summary.query},
           {"features", summary.features},
           {"columns", summary.columns}};
}

}  // namespace compsum
