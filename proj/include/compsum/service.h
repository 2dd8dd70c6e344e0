#ifndef COMPSUM_SERVICE_H_
#define COMPSUM_SERVICE_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "compsum/block_index.h"
#include "compsum/error.h"
#include "compsum/lexicon.h"
#include "compsum/summarizer.h"

namespace httplib {
class Server;
}

namespace compsum {

struct HttpReply {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

int http_status(ErrorCode code);

// JSON body {"error": <code name>, "message": ...}.
HttpReply error_reply(const Error& error);

// Loads each document in order and summarises it. Warns when a record was
// built by a pipeline other than expected_version (skipped when empty).
ComparativeSummary summarize_documents(
    const BlockStore& store, const std::vector<std::string>& doc_ids,
    const std::string& query, const std::vector<std::string>& features,
    const WeightParams& params, const SynonymMap& synonyms = {},
    const std::string& expected_version = "",
    const Lexicon& lexicon = Lexicon::bundled());

enum class SummaryFormat { kJson, kHtml };

// An explicit format parameter wins over the Accept header; JSON is the
// default. Throws Error(kInvalidArgument) for an unknown format.
SummaryFormat negotiate_format(std::string_view format_param,
                               std::string_view accept);

// Request handlers over a store. Handlers only read the store and keep no
// state between calls, so they may run concurrently.
class Service {
 public:
  Service(const BlockStore& store, SynonymMap synonyms = {},
          std::string expected_version = "",
          const Lexicon& lexicon = Lexicon::bundled());

  // GET /api/documents
  HttpReply documents() const;
  // POST /api/search {"query": "...", "limit": N}
  HttpReply search(std::string_view body) const;
  // POST /api/summarize {"doc_ids": [...], "query": "...", "features": [...],
  //   "max_sentences": N | "ratio": R, "gamma", "alpha_tag", "beta_loc"}
  HttpReply summarize(std::string_view body, std::string_view format_param,
                      std::string_view accept) const;

  // Registers the API routes, plus /ui/ static files when ui_dir exists.
  void mount(httplib::Server& server,
             const std::filesystem::path& ui_dir = {}) const;

 private:
  const BlockStore& store_;
  SynonymMap synonyms_;
  std::string expected_version_;
  const Lexicon& lexicon_;
};

}  // namespace compsum

#endif  // COMPSUM_SERVICE_H_
