#pragma once

#include <string>
#include <variant>
#include <vector>

#include "resovar/screen.hpp"

namespace resovar {

using Payload = std::variant<CupData, ThreeForm>;

// Built-in example inputs with frozen expected invariants. The test suite
// recomputes every expected record against the live implementation.
struct CorpusEntry {
  std::string name;
  Payload payload;
  struct Expected {
    bool r1_full;
    Eigen::Index cup_image_dim;
    Parity parity;
    std::string verdict;  // Verdict::summary() form
  } expected;
};

const std::vector<std::string>& corpus_names();

// Throws std::invalid_argument listing the published names when unknown.
const CorpusEntry& corpus_get(const std::string& name);

const std::vector<CorpusEntry>& corpus_entries();

// Symplectic surface data: n = 2g, m = 1, e_{2i-1} cup e_{2i} = f.
CupData surface_cup_data(int genus);

}  // namespace resovar
