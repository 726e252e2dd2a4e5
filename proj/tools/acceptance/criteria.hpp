#pragma once

#include <iosfwd>
#include <vector>

namespace hyperopic::acceptance {

struct Criterion {
    int id;
    const char* title;
    bool (*run)(std::ostream& log);
};

// The ten release criteria, in order. Each prints supporting detail to the
// log and returns its verdict; the caller prints the one-line summary.
const std::vector<Criterion>& criteria();

} // namespace hyperopic::acceptance
