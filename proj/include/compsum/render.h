#ifndef COMPSUM_RENDER_H_
#define COMPSUM_RENDER_H_

#include <string>

#include "compsum/summarizer.h"

namespace compsum {

// Standalone HTML page holding one table: a column per document headed by
// its title, a row per distinct subtitle (first-seen order) labelled in
// bold. Sentences appear as <span class="sentence" data-seq="N">.
std::string render_html(const ComparativeSummary& summary);

}  // namespace compsum

#endif  // COMPSUM_RENDER_H_
