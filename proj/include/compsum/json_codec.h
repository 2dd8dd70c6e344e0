#ifndef COMPSUM_JSON_CODEC_H_
#define COMPSUM_JSON_CODEC_H_

#include "json.hpp"

#include "compsum/block_index.h"
#include "compsum/search.h"
#include "compsum/summarizer.h"

namespace compsum {

// Field names match the C++ member names.

void to_json(nlohmann::json& j, const ConceptList& concepts);
void from_json(const nlohmann::json& j, ConceptList& concepts);

void to_json(nlohmann::json& j, const ConceptBlock& block);
void from_json(const nlohmann::json& j, ConceptBlock& block);

void to_json(nlohmann::json& j, const DocumentRecord& record);
void from_json(const nlohmann::json& j, DocumentRecord& record);

void to_json(nlohmann::json& j, const DocumentListing& listing);
void from_json(const nlohmann::json& j, DocumentListing& listing);

void to_json(nlohmann::json& j, const SearchResult& result);

void to_json(nlohmann::json& j, const DocumentSummary& summary);
void to_json(nlohmann::json& j, const ComparativeSummary& summary);

}  // namespace compsum

#endif  // COMPSUM_JSON_CODEC_H_
