// compsum: index HTML pages, search them and build comparative summaries.

#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "httplib.h"
#include "json.hpp"
#include "compsum/error.h"
#include "compsum/json_codec.h"
#include "compsum/pipeline.h"
#include "compsum/render.h"
#include "compsum/search.h"
#include "compsum/service.h"
#include "compsum/summarizer.h"

namespace {

using compsum::Error;
using compsum::ErrorCode;

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kEmptyQuery:
    case ErrorCode::kNoDocuments:
      return 2;
    case ErrorCode::kNotFound:
      return 3;
    case ErrorCode::kFetch:
      return 4;
    case ErrorCode::kEmptyDocument:
    case ErrorCode::kEncoding:
    case ErrorCode::kEmptyAfterClean:
    case ErrorCode::kParse:
      return 5;
    case ErrorCode::kStore:
    case ErrorCode::kValidation:
      return 6;
    default:
      return 1;
  }
}

void diagnose(const Error& e) {
  std::cerr << "compsum: " << compsum::error_code_name(e.code()) << ": "
            << e.what() << "\n";
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto first = item.find_first_not_of(" \t");
    auto last = item.find_last_not_of(" \t");
    if (first != std::string::npos) out.push_back(item.substr(first, last - first + 1));
  }
  return out;
}

struct IndexArgs {
  std::vector<std::string> sources;
  double alpha = compsum::kDefaultMergeThreshold;
  int timeout_ms = 10000;
  int delay_ms = 0;
};

struct SearchArgs {
  std::string query;
  int limit = 10;
  bool json = false;
};

struct SummarizeArgs {
  std::string docs;
  std::string query;
  std::string features;
  std::optional<int> sentences;
  std::optional<double> ratio;
  double gamma = 0.5;
  double alpha_tag = 1.0;
  double beta_loc = 1.0;
  std::string synonyms;
  std::string format = "html";
  std::string out;
};

struct ServeArgs {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string ui_dir;
  std::string synonyms;
};

int run_index(const std::string& store_dir, const IndexArgs& args) {
  compsum::PipelineOptions options;
  options.alpha = args.alpha;
  options.fetch.timeout = std::chrono::milliseconds(args.timeout_ms);
  options.fetch.per_host_delay = std::chrono::milliseconds(args.delay_ms);
  compsum::Pipeline pipeline(options);
  compsum::BlockStore store(store_dir);
  int status = 0;
  for (const auto& source : args.sources) {
    try {
      auto record = pipeline.index_source(source, store);
      std::cout << record.doc_id << "\n";
    } catch (const Error& e) {
      std::cerr << "compsum: " << source << ": "
                << compsum::error_code_name(e.code()) << ": " << e.what()
                << "\n";
      status = exit_code(e.code());
    }
  }
  return status;
}

int run_search(const std::string& store_dir, const SearchArgs& args) {
  compsum::BlockStore store(store_dir);
  compsum::SearchIndex index(store.load_all());
  auto results = index.search(args.query, args.limit);
  if (args.json) {
    std::cout << nlohmann::json(results).dump(2) << "\n";
    return 0;
  }
  for (const auto& r : results) {
    std::cout << r.doc_id << "\t" << r.score << "\t" << r.title << "\t"
              << r.snippet << "\n";
  }
  return 0;
}

int run_summarize(const std::string& store_dir, const SummarizeArgs& args) {
  compsum::WeightParams params;
  params.gamma = args.gamma;
  params.alpha_tag = args.alpha_tag;
  params.beta_loc = args.beta_loc;
  if (args.ratio) {
    params.budget = compsum::SummaryRatio{*args.ratio};
  } else if (args.sentences) {
    params.budget = compsum::SentenceCount{*args.sentences};
  }
  compsum::SynonymMap synonyms;
  if (!args.synonyms.empty()) synonyms = compsum::load_synonyms(args.synonyms);

  compsum::BlockStore store(store_dir);
  auto summary = compsum::summarize_documents(
      store, split_list(args.docs), args.query, split_list(args.features),
      params, synonyms, compsum::Pipeline().version());
  std::string body = args.format == "json"
                         ? nlohmann::json(summary).dump(2) + "\n"
                         : compsum::render_html(summary);
  if (args.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(args.out, std::ios::binary);
    out << body;
    if (!out) {
      throw Error(ErrorCode::kInvalidArgument, "cannot write " + args.out);
    }
  }
  return 0;
}

int run_serve(const std::string& store_dir, const ServeArgs& args) {
  compsum::SynonymMap synonyms;
  if (!args.synonyms.empty()) synonyms = compsum::load_synonyms(args.synonyms);
  compsum::BlockStore store(store_dir);
  compsum::Service service(store, synonyms, compsum::Pipeline().version());
  httplib::Server server;
  service.mount(server, args.ui_dir);
  spdlog::info("serving {} on http://{}:{}/", store_dir, args.host, args.port);
  if (!server.listen(args.host, args.port)) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot listen on " + args.host + ":" + std::to_string(args.port));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Comparative summaries of web pages"};
  app.require_subcommand(1);
  // Lets --store follow the subcommand name.
  app.fallthrough();
  std::string store_dir = "store";
  app.add_option("--store", store_dir, "Store directory")
      ->envname("STORE_DIR");

  IndexArgs index_args;
  auto* index_cmd = app.add_subcommand("index", "Index pages into the store");
  index_cmd->add_option("sources", index_args.sources, "Files or URLs")
      ->required();
  index_cmd->add_option("--alpha", index_args.alpha, "Merge threshold")
      ->check(CLI::Range(0.0, 1.0));
  index_cmd->add_option("--timeout-ms", index_args.timeout_ms);
  index_cmd->add_option("--delay-ms", index_args.delay_ms,
                        "Per-host delay between fetches");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Keyword search");
  search_cmd->add_option("query", search_args.query)->required();
  search_cmd->add_option("--limit", search_args.limit);
  search_cmd->add_flag("--json", search_args.json);

  SummarizeArgs sum_args;
  auto* sum_cmd = app.add_subcommand("summarize", "Comparative summary");
  sum_cmd->add_option("--docs", sum_args.docs, "Comma-separated doc ids")
      ->required();
  sum_cmd->add_option("--query", sum_args.query);
  sum_cmd->add_option("--features", sum_args.features,
                      "Comma-separated feature keywords")
      ->required();
  auto* sentences_opt = sum_cmd->add_option("--sentences", sum_args.sentences);
  auto* ratio_opt = sum_cmd->add_option("--ratio", sum_args.ratio);
  sentences_opt->excludes(ratio_opt);
  sum_cmd->add_option("--gamma", sum_args.gamma);
  sum_cmd->add_option("--alpha-tag", sum_args.alpha_tag);
  sum_cmd->add_option("--beta-loc", sum_args.beta_loc);
  sum_cmd->add_option("--synonyms", sum_args.synonyms, "Synonym groups file");
  sum_cmd->add_option("--format", sum_args.format)
      ->check(CLI::IsMember({"html", "json"}));
  sum_cmd->add_option("--out", sum_args.out);

  ServeArgs serve_args;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  serve_cmd->add_option("--host", serve_args.host);
  serve_cmd->add_option("--port", serve_args.port)->envname("PORT");
  serve_cmd->add_option("--ui", serve_args.ui_dir, "Static UI directory");
  serve_cmd->add_option("--synonyms", serve_args.synonyms);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*index_cmd) return run_index(store_dir, index_args);
    if (*search_cmd) return run_search(store_dir, search_args);
    if (*sum_cmd) return run_summarize(store_dir, sum_args);
    if (*serve_cmd) return run_serve(store_dir, serve_args);
  } catch (const Error& e) {
    diagnose(e);
    return exit_code(e.code());
  }
  return 0;
}
