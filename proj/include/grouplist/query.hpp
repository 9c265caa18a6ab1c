#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grouplist/corpus.hpp"
#include "grouplist/group_index.hpp"
#include "grouplist/inverted.hpp"

namespace grouplist {

enum class QueryOp : std::uint8_t { And, Or };

struct Query {
    QueryOp op = QueryOp::And;
    std::vector<std::string> terms;
};

struct QueryResult {
    std::vector<DocId> doc_ids;  // ascending, duplicate-free

    bool operator==(const QueryResult&) const = default;
};

/// Query terms mapped to ids and partitioned; both halves rank-ascending
/// (the same total order the documents were sorted by).
struct SplitQuery {
    std::vector<TermId> frequent;
    std::vector<TermId> infrequent;
    std::vector<std::string> unknown;
};

SplitQuery split_query(const Query& q, const FrequencyPartition& partition,
                       const Vocabulary& vocab);

/// Fold over frequent-term lists in rank order: each step keeps the tuples of
/// the next list whose node has an ancestor in the running result. Linear
/// two-pointer pass per step.
GroupList join_frequent(const std::vector<const GroupList*>& lists);

/// Fold over infrequent-term lists: tuples match when they share a pre-order
/// (same leaf bucket); did_sets are intersected, empty intersections dropped.
GroupList join_infrequent(const std::vector<const GroupList*>& lists);

QueryResult band_query(const GroupIndex& index, const Vocabulary& vocab, const Query& q);
QueryResult bor_query(const GroupIndex& index, const Vocabulary& vocab, const Query& q);

/// Same Boolean semantics evaluated with posting-list merges.
QueryResult eval_inverted(const InvertedIndex& index, const Vocabulary& vocab, const Query& q);

/// Brute-force per-document membership scan; the independent correctness
/// reference for both engines.
QueryResult oracle_scan(const Corpus& corpus, const Query& q);

namespace detail {
// Result production as each engine naturally emits it, for timing runs: the
// group-list side concatenates tuple did_sets without canonicalizing order.
std::vector<DocId> band_collect(const GroupIndex& index, const Vocabulary& vocab, const Query& q);
std::vector<DocId> bor_collect(const GroupIndex& index, const Vocabulary& vocab, const Query& q);
std::vector<DocId> inverted_collect(const InvertedIndex& index, const Vocabulary& vocab,
                                    const Query& q);
}  // namespace detail

}  // namespace grouplist
