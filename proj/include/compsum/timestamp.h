#ifndef COMPSUM_TIMESTAMP_H_
#define COMPSUM_TIMESTAMP_H_

#include <chrono>
#include <ctime>
#include <string>

namespace compsum {

// Current time as ISO-8601 UTC with second precision, e.g.
// "2024-05-01T12:00:00Z".
inline std::string utc_timestamp_now() {
  std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace compsum

#endif  // COMPSUM_TIMESTAMP_H_
