#include "grouplist/group_index.hpp"

#include <sstream>

namespace grouplist {

GroupIndex generate_group_lists(const PTree& tree, const FrequencyPartition& partition,
                                std::uint32_t n_docs) {
    if (!tree.encoded) throw MissingCodes();
    GroupIndex index;
    index.partition = partition;
    index.n_docs = n_docs;
    index.lists.resize(partition.rank.size());

    // Preorder walk appends tuples in pre-order, so every list ends sorted.
    std::vector<NodeId> stack{tree.root()};
    while (!stack.empty()) {
        NodeId node_id = stack.back();
        stack.pop_back();
        const PTreeNode& node = tree.nodes[node_id];
        for (const TermRecord& rec : node.records)
            index.lists[rec.term].tuples.push_back(GroupTuple{node.code, rec.did_set});
        for (auto it = node.children.rbegin(); it != node.children.rend(); ++it)
            stack.push_back(*it);
    }
    return index;
}

std::uint64_t total_tuples(const GroupIndex& index) {
    std::uint64_t n = 0;
    for (const GroupList& list : index.lists) n += list.tuples.size();
    return n;
}

std::uint64_t footprint_integers(const GroupIndex& index) {
    std::uint64_t n = 0;
    for (const GroupList& list : index.lists)
        for (const GroupTuple& tuple : list.tuples) n += 2 + tuple.did_set.size();
    return n;
}

std::string dump_group_lists(const GroupIndex& index, const Vocabulary& vocab) {
    std::ostringstream out;
    for (TermId t : index.partition.order) {
        out << vocab.token(t);
        for (const GroupTuple& tuple : index.lists[t].tuples) {
            out << " (" << tuple.code.pre << ',' << tuple.code.post << "):[";
            for (std::size_t i = 0; i < tuple.did_set.size(); ++i) {
                if (i) out << ',';
                out << tuple.did_set[i];
            }
            out << ']';
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace grouplist
