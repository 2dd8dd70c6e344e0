#include "compsum/fetch.h"

#include <curl/curl.h>

#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include "compsum/error.h"

namespace compsum {

namespace {

size_t write_body(char* data, size_t size, size_t count, void* user) {
  static_cast<std::string*>(user)->append(data, size * count);
  return size * count;
}

std::string host_of(const std::string& url) {
  size_t start = url.find("://");
  start = start == std::string::npos ? 0 : start + 3;
  size_t end = url.find_first_of("/?#", start);
  return url.substr(start, end == std::string::npos ? end : end - start);
}

void wait_for_host(const std::string& host,
                   std::chrono::milliseconds delay) {
  if (delay.count() <= 0) return;
  static std::mutex mutex;
  static std::map<std::string, std::chrono::steady_clock::time_point> next;
  std::chrono::steady_clock::time_point slot;
  {
    std::lock_guard lock(mutex);
    auto now = std::chrono::steady_clock::now();
    auto it = next.find(host);
    slot = (it == next.end() || it->second < now) ? now : it->second;
    next[host] = slot + delay;
  }
  std::this_thread::sleep_until(slot);
}

void ensure_global_init() {
  static std::once_flag once;
  std::call_once(once, [] { curl_global_init(CURL_GLOBAL_DEFAULT); });
}

}  // namespace

HttpResponse http_get(const std::string& url, const FetchOptions& options) {
  ensure_global_init();
  wait_for_host(host_of(url), options.per_host_delay);

  std::unique_ptr<CURL, decltype(&curl_easy_cleanup)> curl(curl_easy_init(),
                                                           curl_easy_cleanup);
  if (!curl) throw Error(ErrorCode::kFetch, "cannot initialise HTTP client");

  HttpResponse response;
  curl_easy_setopt(curl.get(), CURLOPT_URL, url.c_str());
  curl_easy_setopt(curl.get(), CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(curl.get(), CURLOPT_MAXREDIRS, 5L);
  curl_easy_setopt(curl.get(), CURLOPT_NOSIGNAL, 1L);
  curl_easy_setopt(curl.get(), CURLOPT_TIMEOUT_MS,
                   static_cast<long>(options.timeout.count()));
  curl_easy_setopt(curl.get(), CURLOPT_WRITEFUNCTION, write_body);
  curl_easy_setopt(curl.get(), CURLOPT_WRITEDATA, &response.body);
  curl_easy_setopt(curl.get(), CURLOPT_USERAGENT, "compsum/1.0");

  CURLcode rc = curl_easy_perform(curl.get());
  if (rc != CURLE_OK) {
    throw Error(ErrorCode::kFetch,
                "fetch " + url + " failed: " + curl_easy_strerror(rc));
  }
  curl_easy_getinfo(curl.get(), CURLINFO_RESPONSE_CODE, &response.status);
  char* content_type = nullptr;
  curl_easy_getinfo(curl.get(), CURLINFO_CONTENT_TYPE, &content_type);
  if (content_type != nullptr) response.content_type = content_type;
  if (response.status >= 400) {
    throw Error(ErrorCode::kFetch, "fetch " + url + " failed: HTTP " +
                                       std::to_string(response.status));
  }
  return response;
}

}  // namespace compsum
