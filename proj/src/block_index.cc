#include "compsum/block_index.h"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>

#include "compsum/error.h"
#include "compsum/json_codec.h"

namespace compsum {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_whole_file(const fs::path& path, bool& found) {
  std::ifstream in(path, std::ios::binary);
  found = static_cast<bool>(in);
  if (!found) return "";
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Writes contents to a sibling temporary, syncs it, then renames it over
// path.
void write_atomically(const fs::path& path, const std::string& contents) {
  static std::atomic<unsigned long> counter{0};
  fs::path tmp = path.parent_path() /
                 ("." + path.filename().string() + ".tmp-" +
                  std::to_string(::getpid()) + "-" +
                  std::to_string(counter.fetch_add(1)));
  int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
  if (fd < 0) {
    throw Error(ErrorCode::kStore,
                "cannot create " + tmp.string() + ": " + std::strerror(errno));
  }
  size_t written = 0;
  while (written < contents.size()) {
    ssize_t n = ::write(fd, contents.data() + written, contents.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      int err = errno;
      ::close(fd);
      ::unlink(tmp.c_str());
      throw Error(ErrorCode::kStore,
                  "cannot write " + tmp.string() + ": " + std::strerror(err));
    }
    written += static_cast<size_t>(n);
  }
  if (::fsync(fd) != 0 || ::close(fd) != 0) {
    int err = errno;
    ::unlink(tmp.c_str());
    throw Error(ErrorCode::kStore,
                "cannot flush " + tmp.string() + ": " + std::strerror(err));
  }
  if (::rename(tmp.c_str(), path.c_str()) != 0) {
    int err = errno;
    ::unlink(tmp.c_str());
    throw Error(ErrorCode::kStore,
                "cannot replace " + path.string() + ": " + std::strerror(err));
  }
}

}  // namespace

bool is_valid_doc_id(std::string_view doc_id) {
  if (doc_id.empty() || doc_id.size() > 200 || doc_id.front() == '.') {
    return false;
  }
  return std::all_of(doc_id.begin(), doc_id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
  });
}

void validate_record(const DocumentRecord& record) {
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kValidation,
                "record '" + record.doc_id + "': " + what);
  };
  if (!is_valid_doc_id(record.doc_id)) fail("invalid doc_id");
  int expected = 0;
  for (const auto& [seq, sentence] : record.sentences) {
    if (seq != expected++) fail("sentence numbers are not dense from 0");
  }
  std::set<int> block_ids;
  for (const auto& block : record.concept_blocks) {
    if (!block_ids.insert(block.id).second) fail("duplicate concept block id");
    if (block.doc_id != record.doc_id) {
      fail("concept block " + std::to_string(block.id) +
           " belongs to another document");
    }
    if (!std::is_sorted(block.sentence_refs.begin(), block.sentence_refs.end()) ||
        std::adjacent_find(block.sentence_refs.begin(),
                           block.sentence_refs.end()) !=
            block.sentence_refs.end()) {
      fail("concept block " + std::to_string(block.id) +
           " sentence_refs not strictly ascending");
    }
    for (int ref : block.sentence_refs) {
      if (!record.sentences.contains(ref)) {
        fail("concept block " + std::to_string(block.id) +
             " references missing sentence " + std::to_string(ref));
      }
    }
    for (const auto& [term, ctf] : block.concepts.entries()) {
      if (ctf < 1) fail("non-positive ctf for '" + term + "'");
    }
  }
}

BlockStore::BlockStore(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  fs::create_directories(root_ / "docs", ec);
  if (ec) {
    throw Error(ErrorCode::kStore,
                "cannot create store at " + root_.string() + ": " + ec.message());
  }
}

fs::path BlockStore::doc_path(std::string_view doc_id) const {
  return root_ / "docs" / (std::string(doc_id) + ".json");
}

void BlockStore::store_document(const DocumentRecord& record) {
  validate_record(record);
  std::lock_guard lock(write_mutex_);
  write_atomically(doc_path(record.doc_id), json(record).dump(1));

  std::vector<DocumentListing> listing = list_documents();
  std::erase_if(listing, [&](const DocumentListing& entry) {
    return entry.doc_id == record.doc_id;
  });
  listing.push_back(
      {record.doc_id, record.source, record.title, record.indexed_at});
  std::sort(listing.begin(), listing.end(),
            [](const auto& a, const auto& b) { return a.doc_id < b.doc_id; });
  json manifest = {{"documents", listing}};
  write_atomically(root_ / "manifest.json", manifest.dump(1));
}

DocumentRecord BlockStore::load_document(std::string_view doc_id) const {
  if (!is_valid_doc_id(doc_id)) {
    throw Error(ErrorCode::kNotFound,
                "unknown document '" + std::string(doc_id) + "'");
  }
  bool found = false;
  std::string contents = read_whole_file(doc_path(doc_id), found);
  if (!found) {
    throw Error(ErrorCode::kNotFound,
                "unknown document '" + std::string(doc_id) + "'");
  }
  try {
    return json::parse(contents).get<DocumentRecord>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kStore, "corrupt record for '" +
                                       std::string(doc_id) + "': " + e.what());
  }
}

bool BlockStore::contains(std::string_view doc_id) const {
  return is_valid_doc_id(doc_id) && fs::exists(doc_path(doc_id));
}

std::vector<DocumentListing> BlockStore::list_documents() const {
  bool found = false;
  std::string contents = read_whole_file(root_ / "manifest.json", found);
  if (!found) return {};
  try {
    return json::parse(contents).at("documents").get<std::vector<DocumentListing>>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kStore, "corrupt manifest: " + std::string(e.what()));
  }
}

std::vector<DocumentRecord> BlockStore::load_all() const {
  std::vector<DocumentRecord> records;
  for (const auto& entry : list_documents()) {
    records.push_back(load_document(entry.doc_id));
  }
  return records;
}

}  // namespace compsum
