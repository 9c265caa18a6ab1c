#include "grouplist/query.hpp"

#include <algorithm>
#include <span>

namespace grouplist {

namespace {

std::vector<std::string> dedup_terms(const Query& q) {
    std::vector<std::string> out;
    for (const std::string& t : q.terms)
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    if (out.empty()) throw InvalidQuery("query has no terms");
    return out;
}

struct TupleRef {
    NodeCode code;
    std::span<const DocId> did;
};

std::vector<TupleRef> to_refs(const GroupList& list) {
    std::vector<TupleRef> refs;
    refs.reserve(list.tuples.size());
    for (const GroupTuple& t : list.tuples) refs.push_back({t.code, t.did_set});
    return refs;
}

// Keep the elements of `desc` that have a proper ancestor in `anc`. Both
// inputs are pre-sorted and internally ancestor-free, which also makes them
// post-sorted; each desc element has at most one ancestor in anc.
template <typename Anc, typename Desc>
std::vector<Desc> keep_descendants(const std::vector<Anc>& anc, std::vector<Desc> desc) {
    std::vector<Desc> kept;
    std::size_t i = 0, j = 0;
    while (i < anc.size() && j < desc.size()) {
        if (anc[i].code.post < desc[j].code.post) {
            ++i;  // closes before desc[j]; cannot contain it or anything later
        } else if (anc[i].code.pre < desc[j].code.pre) {
            kept.push_back(std::move(desc[j]));
            ++j;
        } else {
            ++j;  // desc[j] lies entirely before anc[i]
        }
    }
    return kept;
}

std::vector<TupleRef> join_frequent_refs(std::span<const GroupList* const> lists) {
    std::vector<TupleRef> result = to_refs(*lists[0]);
    for (std::size_t k = 1; k < lists.size() && !result.empty(); ++k)
        result = keep_descendants(result, to_refs(*lists[k]));
    return result;
}

struct OwnedTuple {
    NodeCode code;
    std::vector<DocId> did;
};

std::vector<DocId> intersect_sorted(std::span<const DocId> a, std::span<const DocId> b) {
    std::vector<DocId> out;
    out.reserve(std::min(a.size(), b.size()));
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<OwnedTuple> join_infrequent_owned(std::span<const GroupList* const> lists) {
    std::vector<OwnedTuple> result;
    result.reserve(lists[0]->tuples.size());
    for (const GroupTuple& t : lists[0]->tuples) result.push_back({t.code, t.did_set});
    for (std::size_t k = 1; k < lists.size() && !result.empty(); ++k) {
        const auto& next = lists[k]->tuples;
        std::vector<OwnedTuple> matched;
        std::size_t i = 0, j = 0;
        while (i < result.size() && j < next.size()) {
            if (result[i].code.pre == next[j].code.pre) {
                std::vector<DocId> common = intersect_sorted(result[i].did, next[j].did_set);
                if (!common.empty()) matched.push_back({result[i].code, std::move(common)});
                ++i;
                ++j;
            } else if (result[i].code.pre < next[j].code.pre) {
                ++i;
            } else {
                ++j;
            }
        }
        result = std::move(matched);
    }
    return result;
}

template <typename Tuples>
std::vector<DocId> concat_did_sets(const Tuples& tuples) {
    std::size_t total = 0;
    for (const auto& t : tuples) total += t.did.size();
    std::vector<DocId> out;
    out.reserve(total);
    for (const auto& t : tuples) out.insert(out.end(), t.did.begin(), t.did.end());
    return out;
}

std::vector<const GroupList*> lists_for(const GroupIndex& index, std::span<const TermId> terms) {
    std::vector<const GroupList*> lists;
    lists.reserve(terms.size());
    for (TermId t : terms) lists.push_back(&index.lists[t]);
    return lists;
}

}  // namespace

SplitQuery split_query(const Query& q, const FrequencyPartition& partition,
                       const Vocabulary& vocab) {
    SplitQuery split;
    for (const std::string& token : dedup_terms(q)) {
        auto id = vocab.find(token);
        if (!id) {
            split.unknown.push_back(token);
        } else if (partition.is_frequent(*id)) {
            split.frequent.push_back(*id);
        } else {
            split.infrequent.push_back(*id);
        }
    }
    auto by_rank = [&](TermId a, TermId b) { return partition.rank[a] < partition.rank[b]; };
    std::sort(split.frequent.begin(), split.frequent.end(), by_rank);
    std::sort(split.infrequent.begin(), split.infrequent.end(), by_rank);
    return split;
}

GroupList join_frequent(const std::vector<const GroupList*>& lists) {
    if (lists.empty()) throw InvalidQuery("join over zero group-lists");
    GroupList out;
    for (const TupleRef& ref : join_frequent_refs(lists))
        out.tuples.push_back(GroupTuple{ref.code, {ref.did.begin(), ref.did.end()}});
    return out;
}

GroupList join_infrequent(const std::vector<const GroupList*>& lists) {
    if (lists.empty()) throw InvalidQuery("join over zero group-lists");
    GroupList out;
    for (OwnedTuple& t : join_infrequent_owned(lists))
        out.tuples.push_back(GroupTuple{t.code, std::move(t.did)});
    return out;
}

namespace detail {

std::vector<DocId> band_collect(const GroupIndex& index, const Vocabulary& vocab,
                                const Query& q) {
    SplitQuery split = split_query(q, index.partition, vocab);
    if (!split.unknown.empty()) return {};  // conjunction with an unknown term

    if (split.infrequent.empty()) {
        auto joined = join_frequent_refs(lists_for(index, split.frequent));
        return concat_did_sets(joined);
    }
    auto inf = join_infrequent_owned(lists_for(index, split.infrequent));
    if (split.frequent.empty()) return concat_did_sets(inf);

    auto freq = join_frequent_refs(lists_for(index, split.frequent));
    auto matched = keep_descendants(freq, std::move(inf));
    return concat_did_sets(matched);
}

std::vector<DocId> bor_collect(const GroupIndex& index, const Vocabulary& vocab, const Query& q) {
    std::vector<std::span<const DocId>> parts;
    std::size_t known = 0;
    for (const std::string& token : dedup_terms(q)) {
        auto id = vocab.find(token);
        if (!id) continue;  // unknown terms are identity for union
        ++known;
        for (const GroupTuple& tuple : index.lists[*id].tuples) parts.emplace_back(tuple.did_set);
    }
    if (known == 0) throw InvalidQuery("all query terms unknown");
    return union_postings(parts);
}

std::vector<DocId> inverted_collect(const InvertedIndex& index, const Vocabulary& vocab,
                                    const Query& q) {
    std::vector<std::span<const DocId>> lists;
    if (q.op == QueryOp::And) {
        for (const std::string& token : dedup_terms(q)) {
            auto id = vocab.find(token);
            if (!id) return {};
            lists.emplace_back(index.postings[*id]);
        }
        return intersect_postings(lists);
    }
    std::size_t total = 0;
    for (const std::string& token : dedup_terms(q)) {
        auto id = vocab.find(token);
        if (!id) continue;
        lists.emplace_back(index.postings[*id]);
        total += lists.back().size();
    }
    if (lists.empty()) throw InvalidQuery("all query terms unknown");
    return union_postings(lists);
}

}  // namespace detail

QueryResult band_query(const GroupIndex& index, const Vocabulary& vocab, const Query& q) {
    std::vector<DocId> docs = detail::band_collect(index, vocab, q);
    std::sort(docs.begin(), docs.end());
    return QueryResult{std::move(docs)};
}

QueryResult bor_query(const GroupIndex& index, const Vocabulary& vocab, const Query& q) {
    return QueryResult{detail::bor_collect(index, vocab, q)};
}

QueryResult eval_inverted(const InvertedIndex& index, const Vocabulary& vocab, const Query& q) {
    return QueryResult{detail::inverted_collect(index, vocab, q)};
}

QueryResult oracle_scan(const Corpus& corpus, const Query& q) {
    std::vector<TermId> known;
    std::size_t unknown = 0;
    for (const std::string& token : dedup_terms(q)) {
        if (auto id = corpus.vocab.find(token))
            known.push_back(*id);
        else
            ++unknown;
    }
    QueryResult result;
    if (q.op == QueryOp::And) {
        if (unknown > 0) return result;
        for (const Document& doc : corpus.docs) {
            bool all = true;
            for (TermId t : known)
                if (!doc.contains(t)) {
                    all = false;
                    break;
                }
            if (all) result.doc_ids.push_back(doc.id);
        }
    } else {
        for (const Document& doc : corpus.docs) {
            for (TermId t : known)
                if (doc.contains(t)) {
                    result.doc_ids.push_back(doc.id);
                    break;
                }
        }
    }
    return result;
}

}  // namespace grouplist
