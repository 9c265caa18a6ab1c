#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grouplist/corpus.hpp"

namespace grouplist {

using NodeId = std::uint32_t;
inline constexpr NodeId kNullNode = 0xFFFFFFFFu;

/// <pre-order, post-order> pair identifying a tree node.
struct NodeCode {
    std::uint32_t pre = 0;
    std::uint32_t post = 0;

    bool operator==(const NodeCode&) const = default;
};

/// True iff the node coded `a` is a proper ancestor of the node coded `d`.
constexpr bool ancestor_of(NodeCode a, NodeCode d) {
    return a.pre < d.pre && a.post > d.post;
}

struct TermRecord {
    TermId term = 0;
    std::vector<DocId> did_set;  // ascending
};

struct PTreeNode {
    // Label = the record terms, in arrival order. Internal nodes carry exactly
    // one frequent term; bucket leaves carry one or more infrequent terms.
    std::vector<TermRecord> records;
    NodeId parent = kNullNode;
    std::vector<NodeId> children;  // creation order
    NodeId bucket = kNullNode;     // the at-most-one bucket-leaf child
    bool is_bucket = false;
    NodeCode code;

    // Frequent-term children, sorted by term for O(log f) descent.
    std::vector<std::pair<TermId, NodeId>> child_by_term;
    // Bucket records sorted by term (buckets accumulate many labels).
    std::vector<std::pair<TermId, std::uint32_t>> record_by_term;

    const TermRecord* find_record(TermId t) const;
};

struct PTree {
    std::vector<PTreeNode> nodes;  // nodes[0] is the root
    bool encoded = false;

    PTree() { nodes.emplace_back(); }
    NodeId root() const { return 0; }
    std::size_t size() const { return nodes.size(); }
};

PTree build_ptree(std::span<const SortedDocument> sorted_docs, const FrequencyPartition& partition);
void insert_document(PTree& tree, const SortedDocument& doc, const FrequencyPartition& partition);
void assign_codes(PTree& tree);

// One node per line: depth, code, label, records. Deterministic; fixture tests
// diff against it.
std::string dump_tree(const PTree& tree, const Vocabulary& vocab);

}  // namespace grouplist
