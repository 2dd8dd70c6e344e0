#ifndef COMPSUM_BLOCK_INDEX_H_
#define COMPSUM_BLOCK_INDEX_H_

#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "compsum/dom.h"
#include "compsum/segmentation.h"

namespace compsum {

struct StoredSentence {
  std::string text;
  EmphasisSet emphasis;
  int sibling_index = 0;
  int sibling_count = 1;
  std::string heading;

  friend bool operator==(const StoredSentence&, const StoredSentence&) = default;
};

// Everything query-time summarisation needs about one document.
struct DocumentRecord {
  std::string doc_id;
  std::string source;
  std::string title;
  // Keys are dense 0..N-1.
  std::map<int, StoredSentence> sentences;
  std::vector<ConceptBlock> concept_blocks;
  std::string indexed_at;
  std::string pipeline_version;

  friend bool operator==(const DocumentRecord&, const DocumentRecord&) = default;
};

struct DocumentListing {
  std::string doc_id;
  std::string source;
  std::string title;
  std::string indexed_at;

  friend bool operator==(const DocumentListing&, const DocumentListing&) = default;
};

// Ids double as file names: [A-Za-z0-9._-]+, not starting with '.'.
bool is_valid_doc_id(std::string_view doc_id);

// Throws Error(kValidation) describing the first broken invariant.
void validate_record(const DocumentRecord& record);

// Directory-backed store:
//   <root>/manifest.json      listing of every stored document
//   <root>/docs/<doc_id>.json one record per file
// Files are replaced by renaming a fully written temporary, so readers see
// either the previous or the new record. Writes within a process are
// serialised.
class BlockStore {
 public:
  explicit BlockStore(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }

  void store_document(const DocumentRecord& record);
  DocumentRecord load_document(std::string_view doc_id) const;
  bool contains(std::string_view doc_id) const;
  // Sorted by doc_id.
  std::vector<DocumentListing> list_documents() const;
  std::vector<DocumentRecord> load_all() const;

 private:
  std::filesystem::path doc_path(std::string_view doc_id) const;

  std::filesystem::path root_;
  std::mutex write_mutex_;
};

}  // namespace compsum

#endif  // COMPSUM_BLOCK_INDEX_H_
