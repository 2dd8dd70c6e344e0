#ifndef COMPSUM_FETCH_H_
#define COMPSUM_FETCH_H_

#include <chrono>
#include <string>

namespace compsum {

struct FetchOptions {
  std::chrono::milliseconds timeout{10000};
  // Minimum spacing between two requests to the same host.
  std::chrono::milliseconds per_host_delay{0};
};

struct HttpResponse {
  long status = 0;
  std::string content_type;
  std::string body;
};

// GET with redirects followed. Throws Error(kFetch) on transport failure or
// an HTTP status >= 400.
HttpResponse http_get(const std::string& url, const FetchOptions& options);

}  // namespace compsum

#endif  // COMPSUM_FETCH_H_
