#ifndef COMPSUM_ERROR_H_
#define COMPSUM_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace compsum {

// Every failure the library reports carries one of these codes. The CLI maps
// them to exit codes and the HTTP service to status codes.
enum class ErrorCode {
  kFetch,
  kEmptyDocument,
  kEncoding,
  kEmptyAfterClean,
  kParse,
  kAbsentTerm,
  kStore,
  kValidation,
  kNotFound,
  kEmptyQuery,
  kUndefinedSimilarity,
  kNoBlocks,
  kLength,
  kNoDocuments,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace compsum

#endif  // COMPSUM_ERROR_H_
