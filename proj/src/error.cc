#include "compsum/error.h"

namespace compsum {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kFetch: return "fetch";
    case ErrorCode::kEmptyDocument: return "empty-document";
    case ErrorCode::kEncoding: return "encoding";
    case ErrorCode::kEmptyAfterClean: return "empty-after-clean";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kAbsentTerm: return "absent-term";
    case ErrorCode::kStore: return "store";
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kNotFound: return "not-found";
    case ErrorCode::kEmptyQuery: return "empty-query";
    case ErrorCode::kUndefinedSimilarity: return "undefined-similarity";
    case ErrorCode::kNoBlocks: return "no-blocks";
    case ErrorCode::kLength: return "length";
    case ErrorCode::kNoDocuments: return "no-documents";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

}  // namespace compsum
