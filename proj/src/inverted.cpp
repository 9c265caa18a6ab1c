#include "grouplist/inverted.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace grouplist {

InvertedIndex build_inverted(const Corpus& corpus) {
    if (corpus.docs.empty()) throw EmptyCorpus();
    InvertedIndex index;
    index.n_docs = corpus.n_docs();
    index.postings.resize(corpus.vocab.size());
    for (const Document& doc : corpus.docs)
        for (TermId t : doc.terms) index.postings[t].push_back(doc.id);
    return index;
}

namespace {

// Exponential probe from a moving cursor, then binary search in the window.
std::size_t gallop_to(std::span<const DocId> list, std::size_t from, DocId target) {
    std::size_t lo = from, step = 1;
    while (lo + step < list.size() && list[lo + step] < target) {
        lo += step;
        step <<= 1;
    }
    std::size_t hi = std::min(lo + step, list.size());
    return std::lower_bound(list.begin() + lo, list.begin() + hi, target) - list.begin();
}

std::vector<DocId> gallop_intersect(std::span<const DocId> small, std::span<const DocId> large) {
    std::vector<DocId> out;
    out.reserve(small.size());
    std::size_t j = 0;
    for (DocId v : small) {
        j = gallop_to(large, j, v);
        if (j == large.size()) break;
        if (large[j] == v) {
            out.push_back(v);
            ++j;
        }
    }
    return out;
}

}  // namespace

std::vector<DocId> intersect_postings(std::span<const std::span<const DocId>> lists) {
    if (lists.empty()) throw InvalidQuery("intersection of zero posting lists");
    std::vector<std::size_t> order(lists.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return lists[a].size() < lists[b].size(); });

    std::vector<DocId> result(lists[order[0]].begin(), lists[order[0]].end());
    for (std::size_t k = 1; k < order.size() && !result.empty(); ++k)
        result = gallop_intersect(result, lists[order[k]]);
    return result;
}

std::vector<DocId> union_postings(std::span<const std::span<const DocId>> lists) {
    if (lists.empty()) throw InvalidQuery("union of zero posting lists");
    if (lists.size() == 1) return {lists[0].begin(), lists[0].end()};

    using Cursor = std::pair<DocId, std::size_t>;  // head value, list index
    auto greater = [](const Cursor& a, const Cursor& b) { return a.first > b.first; };
    std::priority_queue<Cursor, std::vector<Cursor>, decltype(greater)> heap(greater);
    std::vector<std::size_t> pos(lists.size(), 0);
    std::size_t total = 0;
    for (std::size_t i = 0; i < lists.size(); ++i) {
        total += lists[i].size();
        if (!lists[i].empty()) heap.push({lists[i][0], i});
    }
    std::vector<DocId> out;
    out.reserve(total);
    while (!heap.empty()) {
        auto [v, i] = heap.top();
        heap.pop();
        if (out.empty() || out.back() != v) out.push_back(v);
        if (++pos[i] < lists[i].size()) heap.push({lists[i][pos[i]], i});
    }
    return out;
}

std::uint64_t footprint_integers(const InvertedIndex& index) {
    std::uint64_t n = 0;
    for (const auto& postings : index.postings) n += postings.size();
    return n;
}

}  // namespace grouplist
