#ifndef COMPSUM_PORTER_STEMMER_H_
#define COMPSUM_PORTER_STEMMER_H_

#include <string>
#include <string_view>

namespace compsum {

// Classic Porter (1980) suffix stripping. Expects a lowercase word; words
// of length <= 2 or containing anything but a-z are returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace compsum

#endif  // COMPSUM_PORTER_STEMMER_H_
