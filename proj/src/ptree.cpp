#include "grouplist/ptree.hpp"

#include <algorithm>
#include <sstream>

namespace grouplist {

const TermRecord* PTreeNode::find_record(TermId t) const {
    if (!record_by_term.empty()) {
        auto it = std::lower_bound(record_by_term.begin(), record_by_term.end(), t,
                                   [](const auto& e, TermId v) { return e.first < v; });
        if (it != record_by_term.end() && it->first == t) return &records[it->second];
        return nullptr;
    }
    for (const TermRecord& rec : records)
        if (rec.term == t) return &rec;
    return nullptr;
}

namespace {

void append_doc(std::vector<DocId>& did_set, DocId id) {
    if (did_set.empty() || did_set.back() < id) {
        did_set.push_back(id);
        return;
    }
    auto it = std::lower_bound(did_set.begin(), did_set.end(), id);
    if (it == did_set.end() || *it != id) did_set.insert(it, id);
}

NodeId child_for_term(const PTreeNode& node, TermId t) {
    auto it = std::lower_bound(node.child_by_term.begin(), node.child_by_term.end(), t,
                               [](const auto& e, TermId v) { return e.first < v; });
    if (it != node.child_by_term.end() && it->first == t) return it->second;
    return kNullNode;
}

NodeId new_node(PTree& tree, NodeId parent, bool is_bucket) {
    NodeId id = static_cast<NodeId>(tree.nodes.size());
    tree.nodes.emplace_back();
    tree.nodes[id].parent = parent;
    tree.nodes[id].is_bucket = is_bucket;
    tree.nodes[parent].children.push_back(id);
    return id;
}

// Bucket labels grow; keep the sorted record index alongside.
std::vector<DocId>& bucket_record(PTreeNode& node, TermId t) {
    auto it = std::lower_bound(node.record_by_term.begin(), node.record_by_term.end(), t,
                               [](const auto& e, TermId v) { return e.first < v; });
    if (it != node.record_by_term.end() && it->first == t) return node.records[it->second].did_set;
    std::uint32_t idx = static_cast<std::uint32_t>(node.records.size());
    node.records.push_back(TermRecord{t, {}});
    node.record_by_term.insert(it, {t, idx});
    return node.records[idx].did_set;
}

}  // namespace

void insert_document(PTree& tree, const SortedDocument& doc, const FrequencyPartition& partition) {
    NodeId cur = tree.root();
    bool in_bucket = false;
    for (TermId t : doc.terms) {
        if (partition.is_frequent(t)) {
            if (in_bucket)
                throw RankOrderViolation("frequent term '" + std::to_string(t) +
                                         "' after an infrequent term in document " +
                                         std::to_string(doc.id));
            NodeId child = child_for_term(tree.nodes[cur], t);
            if (child == kNullNode) {
                child = new_node(tree, cur, false);
                tree.nodes[child].records.push_back(TermRecord{t, {}});
                auto& index = tree.nodes[cur].child_by_term;
                auto it = std::lower_bound(index.begin(), index.end(), t,
                                           [](const auto& e, TermId v) { return e.first < v; });
                index.insert(it, {t, child});
            }
            append_doc(tree.nodes[child].records.front().did_set, doc.id);
            cur = child;
        } else {
            if (!in_bucket) {
                // All of this document's infrequent terms share one bucket
                // leaf; create it only if the current node has none yet.
                if (tree.nodes[cur].bucket == kNullNode) {
                    NodeId b = new_node(tree, cur, true);
                    tree.nodes[cur].bucket = b;
                }
                cur = tree.nodes[cur].bucket;
                in_bucket = true;
            }
            append_doc(bucket_record(tree.nodes[cur], t), doc.id);
        }
    }
}

PTree build_ptree(std::span<const SortedDocument> sorted_docs,
                  const FrequencyPartition& partition) {
    if (sorted_docs.empty()) throw EmptyCorpus();
    PTree tree;
    for (const SortedDocument& doc : sorted_docs) insert_document(tree, doc, partition);
    return tree;
}

void assign_codes(PTree& tree) {
    std::uint32_t pre = 0, post = 0;
    // (node, index of the next child to visit)
    std::vector<std::pair<NodeId, std::size_t>> stack;
    stack.emplace_back(tree.root(), 0);
    tree.nodes[tree.root()].code.pre = pre++;
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (next < tree.nodes[node].children.size()) {
            NodeId child = tree.nodes[node].children[next++];
            tree.nodes[child].code.pre = pre++;
            stack.emplace_back(child, 0);
        } else {
            tree.nodes[node].code.post = post++;
            stack.pop_back();
        }
    }
    tree.encoded = true;
}

std::string dump_tree(const PTree& tree, const Vocabulary& vocab) {
    std::ostringstream out;
    // (node, depth); children pushed in reverse for creation-order output.
    std::vector<std::pair<NodeId, std::uint32_t>> stack{{tree.root(), 0}};
    while (!stack.empty()) {
        auto [node_id, depth] = stack.back();
        stack.pop_back();
        const PTreeNode& node = tree.nodes[node_id];
        out << depth << ' ';
        if (tree.encoded)
            out << '<' << node.code.pre << ',' << node.code.post << '>';
        else
            out << "<-,->";
        out << ' ';
        if (node_id == tree.root()) {
            out << "Root";
        } else {
            out << '[';
            for (std::size_t i = 0; i < node.records.size(); ++i) {
                if (i) out << ',';
                out << vocab.token(node.records[i].term);
            }
            out << ']';
        }
        for (const TermRecord& rec : node.records) {
            out << ' ' << vocab.token(rec.term) << ":{";
            for (std::size_t i = 0; i < rec.did_set.size(); ++i) {
                if (i) out << ',';
                out << rec.did_set[i];
            }
            out << '}';
        }
        out << '\n';
        for (auto it = node.children.rbegin(); it != node.children.rend(); ++it)
            stack.emplace_back(*it, depth + 1);
    }
    return out.str();
}

}  // namespace grouplist
