#ifndef COMPSUM_PIPELINE_H_
#define COMPSUM_PIPELINE_H_

#include <string>
#include <string_view>

#include "compsum/block_index.h"
#include "compsum/concepts.h"
#include "compsum/fetch.h"
#include "compsum/ingest.h"
#include "compsum/lexicon.h"
#include "compsum/segmentation.h"

namespace compsum {

struct PipelineOptions {
  double alpha = kDefaultMergeThreshold;
  FetchOptions fetch;
};

// Offline indexing: clean -> DOM -> micro blocks -> topic blocks -> concept
// blocks -> DocumentRecord.
class Pipeline {
 public:
  explicit Pipeline(PipelineOptions options = {},
                    const Lexicon& lexicon = Lexicon::bundled());

  // Identifies everything that affects stored records.
  std::string version() const;

  DocumentRecord index(const RawDocument& raw) const;

  // Loads source, indexes it under a derived id and stores the record.
  DocumentRecord index_source(const std::string& source,
                              BlockStore& store) const;

  const PipelineOptions& options() const { return options_; }

 private:
  PipelineOptions options_;
  const Lexicon& lexicon_;
  HeuristicConceptExtractor extractor_;
};

// File stem or URL host+path reduced to [a-z0-9._-]; "doc" when nothing is
// left.
std::string derive_doc_id(std::string_view source);

// derive_doc_id, suffixed with a hash of source when the store already
// holds that id for a different source.
std::string unique_doc_id(std::string_view source, const BlockStore& store);

}  // namespace compsum

#endif  // COMPSUM_PIPELINE_H_
