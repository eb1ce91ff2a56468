#pragma once

// Machine-readable copies of the worked examples: rank tables,
// representation matrices, the construction-table scripts, the five
// example networks with their solutions, and the canonical index coding
// problem with its GF(4) code. Everything here is transcribed by hand and
// cross-checked by the test suite against the algorithms.

#include <string>
#include <vector>

namespace polymat {

struct BundledEntry {
    std::string name;
    std::string kind;  // "polymatroid", "representation", "network", ...
    std::string json;
};

const std::vector<BundledEntry>& bundled_examples();
const BundledEntry& bundled(const std::string& name);

}  // namespace polymat
