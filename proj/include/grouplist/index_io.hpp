#pragma once

#include <string>

#include "grouplist/corpus.hpp"
#include "grouplist/group_index.hpp"
#include "grouplist/inverted.hpp"

namespace grouplist {

/// The persisted unit: vocabulary, partition, group-lists and inverted lists.
struct IndexBundle {
    Vocabulary vocab;
    GroupIndex group;
    InvertedIndex inverted;
};

/// Full construction pipeline: stats, partition, sorted documents, tree,
/// codes, group-lists, inverted baseline.
IndexBundle build_index(const Corpus& corpus, double zeta);

// Versioned little-endian container; save -> load -> save is byte-identical.
void save_index(const IndexBundle& bundle, const std::string& path);
IndexBundle load_index(const std::string& path);

}  // namespace grouplist
