#include "compsum/pipeline.h"

#include <cstdint>
#include <cstdio>
#include <filesystem>

#include "compsum/timestamp.h"

namespace compsum {

namespace {

const DomNode* find_leaf(const DomNode& node, std::string_view tag) {
  if (node.is_leaf()) {
    return node.tag == tag && !node.text.empty() ? &node : nullptr;
  }
  for (const auto& child : node.children) {
    if (const DomNode* hit = find_leaf(child, tag)) return hit;
  }
  return nullptr;
}

uint64_t fnv1a(std::string_view s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

Pipeline::Pipeline(PipelineOptions options, const Lexicon& lexicon)
    : options_(std::move(options)), lexicon_(lexicon), extractor_(lexicon) {}

std::string Pipeline::version() const {
  char alpha[32];
  std::snprintf(alpha, sizeof alpha, "%g", options_.alpha);
  return "compsum-1;extractor=" + extractor_.name() +
         ";stemmer=porter;alpha=" + alpha;
}

DocumentRecord Pipeline::index(const RawDocument& raw) const {
  RawDocument cleaned = clean_html(raw);
  DomTree tree = build_dom(cleaned);
  auto micro = extract_micro_blocks(tree);
  auto topics = form_topic_blocks(micro, extractor_);

  DocumentRecord record;
  record.doc_id = raw.doc_id;
  record.source = raw.source;
  record.pipeline_version = version();
  record.indexed_at = utc_timestamp_now();
  for (const auto& tb : topics) {
    for (const auto& s : tb.sentences) {
      record.sentences[s.seq_no] = StoredSentence{
          s.text, s.emphasis, s.sibling_index, s.sibling_count,
          tb.heading.value_or(s.text)};
    }
  }
  record.concept_blocks = merge_into_concept_blocks(topics, options_.alpha);

  if (const DomNode* title = find_leaf(tree.root, "title")) {
    record.title = title->text;
  } else {
    for (const auto& [seq, s] : record.sentences) {
      if (s.emphasis.contains(Emphasis::kParagraphTitle)) {
        record.title = s.text;
        break;
      }
    }
  }
  if (record.title.empty()) record.title = record.doc_id;
  return record;
}

DocumentRecord Pipeline::index_source(const std::string& source,
                                      BlockStore& store) const {
  RawDocument raw =
      load_document(source, unique_doc_id(source, store), options_.fetch);
  DocumentRecord record = index(raw);
  store.store_document(record);
  return record;
}

std::string derive_doc_id(std::string_view source) {
  std::string base;
  if (is_url(source)) {
    std::string_view rest = source.substr(source.find("://") + 3);
    rest = rest.substr(0, rest.find_first_of("?#"));
    base = std::string(rest);
    while (!base.empty() && base.back() == '/') base.pop_back();
    if (base.size() > 5 && base.ends_with(".html")) base.resize(base.size() - 5);
  } else {
    base = std::filesystem::path(source).stem().string();
  }
  std::string id;
  for (char c : base) {
    char lower = (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    bool ok = (lower >= 'a' && lower <= 'z') || (lower >= '0' && lower <= '9') ||
              lower == '.' || lower == '_' || lower == '-';
    if (!ok) lower = '-';
    if (lower == '-' && !id.empty() && id.back() == '-') continue;
    id.push_back(lower);
  }
  while (!id.empty() && (id.front() == '-' || id.front() == '.')) id.erase(0, 1);
  while (!id.empty() && id.back() == '-') id.pop_back();
  if (id.size() > 120) id.resize(120);
  return id.empty() ? "doc" : id;
}

std::string unique_doc_id(std::string_view source, const BlockStore& store) {
  std::string id = derive_doc_id(source);
  if (!store.contains(id) || store.load_document(id).source == source) {
    return id;
  }
  char suffix[24];
  std::snprintf(suffix, sizeof suffix, "-%08llx",
                static_cast<unsigned long long>(fnv1a(source) & 0xffffffffull));
  return id + suffix;
}

}  // namespace compsum
