#ifndef COMPSUM_INGEST_H_
#define COMPSUM_INGEST_H_

#include <string>
#include <string_view>
#include <vector>

#include "compsum/dom.h"
#include "compsum/fetch.h"
#include "compsum/html_parser.h"

namespace compsum {

struct RawDocument {
  std::string doc_id;
  // URL or file path the bytes came from.
  std::string source;
  // UTF-8 HTML.
  std::string bytes;
  std::string fetched_at;
};

// A non-empty text leaf of the DOM tree with the context needed later for
// location and tag weighting.
struct MicroBlock {
  int id = 0;
  std::string doc_id;
  // (tag, sibling_index) from the root down to the leaf's parent.
  ParentPath parent_path;
  std::string text;
  int sibling_index = 0;
  int sibling_count = 0;
  EmphasisSet emphasis;
};

bool is_url(std::string_view source);

// Reads a local file or fetches an http(s) URL. Content is transcoded to
// UTF-8 when a Latin-1/Windows-1252 charset is declared; any other declared
// non-UTF-8 charset, or undeclared invalid UTF-8, is rejected.
RawDocument load_document(const std::string& source, const std::string& doc_id,
                          const FetchOptions& options = {});

// Converts declared-charset bytes to UTF-8. charset is matched
// case-insensitively; an empty charset means "undeclared".
std::string to_utf8(std::string_view bytes, std::string_view charset);

// Charset named by a Content-Type value or a <meta> tag near the start of
// the document; empty when none is declared.
std::string declared_charset(std::string_view content_type,
                             std::string_view html);

// Elements dropped wholesale by clean_html.
bool is_removed_element(std::string_view tag);

// Drops non-content elements (meta, script, style, noscript, iframe, link)
// and every attribute except emphasis-bearing colour information, then
// re-serialises canonically. Idempotent. Throws Error(kEmptyAfterClean) when
// no text survives.
RawDocument clean_html(const RawDocument& doc);

// Content-oriented tree: any element whose content is only text and inline
// phrasing markup becomes a leaf; inside mixed containers, each run of inline
// content becomes its own leaf.
DomTree build_dom(const RawDocument& doc);

std::vector<MicroBlock> extract_micro_blocks(const DomTree& tree);

}  // namespace compsum

#endif  // COMPSUM_INGEST_H_
