#include "compsum/service.h"

#include <spdlog/spdlog.h>

#include <sstream>

#include "httplib.h"
#include "compsum/json_codec.h"
#include "compsum/render.h"
#include "compsum/search.h"
#include "compsum/text.h"

namespace compsum {

using nlohmann::json;

namespace {

constexpr int kDefaultSearchLimit = 10;
constexpr int kDefaultSummarySentences = 3;

HttpReply json_reply(const json& value) {
  return HttpReply{200, "application/json", value.dump()};
}

json parse_body(std::string_view body) {
  json parsed = json::parse(body, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object()) {
    throw Error(ErrorCode::kInvalidArgument,
                "request body must be a JSON object");
  }
  return parsed;
}

template <typename T>
T field(const json& body, const char* name, T fallback) {
  auto it = body.find(name);
  if (it == body.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("field '") + name + "' has the wrong type");
  }
}

// Accepts a list of strings or one comma-separated string.
std::vector<std::string> string_list(const json& body, const char* name) {
  auto it = body.find(name);
  if (it == body.end() || it->is_null()) return {};
  std::vector<std::string> out;
  if (it->is_string()) {
    std::stringstream in(it->get<std::string>());
    std::string item;
    while (std::getline(in, item, ',')) {
      item = normalize_whitespace(item);
      if (!item.empty()) out.push_back(item);
    }
    return out;
  }
  if (!it->is_array()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("field '") + name + "' must be a list of strings");
  }
  for (const auto& item : *it) {
    if (!item.is_string()) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("field '") + name + "' must be a list of strings");
    }
    std::string value = normalize_whitespace(item.get<std::string>());
    if (!value.empty()) out.push_back(value);
  }
  return out;
}

WeightParams params_from(const json& body) {
  WeightParams params;
  params.gamma = field(body, "gamma", params.gamma);
  params.alpha_tag = field(body, "alpha_tag", params.alpha_tag);
  params.beta_loc = field(body, "beta_loc", params.beta_loc);
  bool has_count = body.contains("max_sentences") && !body["max_sentences"].is_null();
  bool has_ratio = body.contains("ratio") && !body["ratio"].is_null();
  if (has_count && has_ratio) {
    throw Error(ErrorCode::kInvalidArgument,
                "give either max_sentences or ratio, not both");
  }
  if (has_ratio) {
    params.budget = SummaryRatio{field(body, "ratio", 0.0)};
  } else {
    params.budget =
        SentenceCount{field(body, "max_sentences", kDefaultSummarySentences)};
  }
  validate_params(params);
  return params;
}

void to_httplib(const HttpReply& reply, httplib::Response& res) {
  res.status = reply.status;
  res.set_content(reply.body, reply.content_type);
}

}  // namespace

ComparativeSummary summarize_documents(
    const BlockStore& store, const std::vector<std::string>& doc_ids,
    const std::string& query, const std::vector<std::string>& features,
    const WeightParams& params, const SynonymMap& synonyms,
    const std::string& expected_version, const Lexicon& lexicon) {
  if (doc_ids.empty()) {
    throw Error(ErrorCode::kNoDocuments, "no documents selected");
  }
  validate_params(params);
  FeatureQuery fq = make_feature_query(query, features, synonyms, lexicon);
  std::vector<DocumentRecord> records;
  for (const auto& id : doc_ids) {
    records.push_back(store.load_document(id));
    if (!expected_version.empty() &&
        records.back().pipeline_version != expected_version) {
      spdlog::warn("document '{}' was indexed by '{}'; reindex for '{}'", id,
                   records.back().pipeline_version, expected_version);
    }
  }
  std::vector<DocumentSummary> columns;
  for (const auto& record : records) {
    columns.push_back(extract_summary(record, fq, params, lexicon));
  }
  return compose_comparative(std::move(columns), query, features);
}

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound:
      return 404;
    case ErrorCode::kEmptyQuery:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kNoDocuments:
    case ErrorCode::kLength:
      return 400;
    case ErrorCode::kNoBlocks:
    case ErrorCode::kUndefinedSimilarity:
      return 422;
    default:
      return 500;
  }
}

HttpReply error_reply(const Error& error) {
  json body = {{"error", error_code_name(error.code())},
               {"message", error.what()}};
  return HttpReply{http_status(error.code()), "application/json", body.dump()};
}

SummaryFormat negotiate_format(std::string_view format_param,
                               std::string_view accept) {
  if (format_param == "json") return SummaryFormat::kJson;
  if (format_param == "html") return SummaryFormat::kHtml;
  if (!format_param.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "format must be 'html' or 'json'");
  }
  std::string lower = to_lower_ascii(accept);
  bool wants_html = lower.find("text/html") != std::string::npos;
  bool wants_json = lower.find("application/json") != std::string::npos;
  return wants_html && !wants_json ? SummaryFormat::kHtml : SummaryFormat::kJson;
}

Service::Service(const BlockStore& store, SynonymMap synonyms,
                 std::string expected_version, const Lexicon& lexicon)
    : store_(store),
      synonyms_(std::move(synonyms)),
      expected_version_(std::move(expected_version)),
      lexicon_(lexicon) {}

HttpReply Service::documents() const {
  try {
    return json_reply(json(store_.list_documents()));
  } catch (const Error& e) {
    return error_reply(e);
  }
}

HttpReply Service::search(std::string_view body) const {
  try {
    json request = parse_body(body);
    std::string query = field<std::string>(request, "query", "");
    int limit = field(request, "limit", kDefaultSearchLimit);
    SearchIndex index(store_.load_all(), lexicon_);
    return json_reply(json(index.search(query, limit)));
  } catch (const Error& e) {
    return error_reply(e);
  }
}

HttpReply Service::summarize(std::string_view body,
                             std::string_view format_param,
                             std::string_view accept) const {
  try {
    SummaryFormat format = negotiate_format(format_param, accept);
    json request = parse_body(body);
    std::vector<std::string> doc_ids = string_list(request, "doc_ids");
    if (doc_ids.empty()) {
      throw Error(ErrorCode::kNoDocuments, "doc_ids must name a document");
    }
    std::string query = field<std::string>(request, "query", "");
    std::vector<std::string> features = string_list(request, "features");
    if (features.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "features must not be empty");
    }
    WeightParams params = params_from(request);
    for (const auto& id : doc_ids) {
      if (!store_.contains(id)) {
        json error = {{"error", error_code_name(ErrorCode::kNotFound)},
                      {"message", "unknown document '" + id + "'"},
                      {"doc_id", id}};
        return HttpReply{404, "application/json", error.dump()};
      }
    }
    ComparativeSummary summary =
        summarize_documents(store_, doc_ids, query, features, params, synonyms_,
                            expected_version_, lexicon_);
    if (format == SummaryFormat::kHtml) {
      return HttpReply{200, "text/html; charset=utf-8", render_html(summary)};
    }
    return json_reply(json(summary));
  } catch (const Error& e) {
    return error_reply(e);
  }
}

void Service::mount(httplib::Server& server,
                    const std::filesystem::path& ui_dir) const {
  server.Get("/api/documents",
             [this](const httplib::Request&, httplib::Response& res) {
               to_httplib(documents(), res);
             });
  server.Post("/api/search",
              [this](const httplib::Request& req, httplib::Response& res) {
                to_httplib(search(req.body), res);
              });
  server.Post("/api/summarize",
              [this](const httplib::Request& req, httplib::Response& res) {
                to_httplib(summarize(req.body, req.get_param_value("format"),
                                     req.get_header_value("Accept")),
                           res);
              });
  if (!ui_dir.empty() && std::filesystem::is_directory(ui_dir)) {
    server.set_mount_point("/ui", ui_dir.string());
  }
  server.set_logger([](const httplib::Request& req, const httplib::Response& res) {
    spdlog::info("{} {} -> {}", req.method, req.path, res.status);
  });
}

}  // namespace compsum
