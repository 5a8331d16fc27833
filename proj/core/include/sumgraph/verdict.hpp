#pragma once

#include <string>

namespace sumgraph {

// One checked inequality: lhs >= rhs under the check's comparison
// convention. `branch` records which side of a min{} was active.
struct Verdict {
    std::string name;
    double lhs = 0;
    double rhs = 0;
    std::string branch;
    bool holds = false;
    std::string details;
};

}  // namespace sumgraph
