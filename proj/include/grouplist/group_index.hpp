#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grouplist/corpus.hpp"
#include "grouplist/ptree.hpp"

namespace grouplist {

struct GroupTuple {
    NodeCode code;
    std::vector<DocId> did_set;  // ascending, non-empty

    bool operator==(const GroupTuple&) const = default;
};

/// A term's index entry: tuples sorted by pre-order ascending, did_sets
/// pairwise disjoint, no tuple's node an ancestor of another's.
struct GroupList {
    std::vector<GroupTuple> tuples;

    bool operator==(const GroupList&) const = default;
};

struct GroupIndex {
    FrequencyPartition partition;
    std::vector<GroupList> lists;  // by TermId, frequent and infrequent alike
    std::uint32_t n_docs = 0;
};

GroupIndex generate_group_lists(const PTree& tree, const FrequencyPartition& partition,
                                std::uint32_t n_docs);

std::uint64_t total_tuples(const GroupIndex& index);
/// Raw uncompressed footprint: per tuple, two code integers plus the did_set.
std::uint64_t footprint_integers(const GroupIndex& index);

// One term per line, tuples as (<pre>,<post>):[ids]; terms in partition order.
std::string dump_group_lists(const GroupIndex& index, const Vocabulary& vocab);

}  // namespace grouplist
