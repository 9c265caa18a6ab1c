#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grouplist/corpus.hpp"
#include "grouplist/synth.hpp"

namespace fixtures {

// The ten-document example corpus used across the fixture tests.
inline constexpr std::string_view kExampleCorpus =
    "a c\n"
    "b c e g h\n"
    "a b c e h\n"
    "b e\n"
    "a c d f i\n"
    "b c e h\n"
    "b e i\n"
    "a b c e f h\n"
    "a b c d e f\n"
    "d f\n";

inline grouplist::Corpus example_corpus() {
    return grouplist::load_corpus_text(kExampleCorpus);
}

// Expected term frequencies for the example corpus.
inline const std::vector<std::pair<std::string, std::uint32_t>> kExampleCounts = {
    {"a", 5}, {"b", 7}, {"c", 7}, {"d", 3}, {"e", 7},
    {"f", 4}, {"g", 1}, {"h", 4}, {"i", 2},
};

// Count-descending term order at zeta = 0.5: frequent prefix {b,c,e,a}.
inline const std::vector<std::string> kExampleOrder = {"b", "c", "e", "a", "f",
                                                       "h", "d", "i", "g"};
inline constexpr std::uint32_t kExampleFrequent = 4;

// Count-sorted documents (token sequences, document order preserved).
inline const std::vector<std::vector<std::string>> kExampleSorted = {
    {"c", "a"},
    {"b", "c", "e", "h", "g"},
    {"b", "c", "e", "a", "h"},
    {"b", "e"},
    {"c", "a", "f", "d", "i"},
    {"b", "c", "e", "h"},
    {"b", "e", "i"},
    {"b", "c", "e", "a", "f", "h"},
    {"b", "c", "e", "a", "f", "d"},
    {"f", "d"},
};

struct ExpectedTuple {
    std::uint32_t pre;
    std::uint32_t post;
    std::vector<grouplist::DocId> dids;
};

// Expected per-term group-lists after encoding the example tree.
inline const std::vector<std::pair<std::string, std::vector<ExpectedTuple>>> kExampleGroupLists = {
    {"b", {{4, 10, {2, 3, 4, 6, 7, 8, 9}}}},
    {"c", {{1, 2, {1, 5}}, {5, 7, {2, 3, 6, 8, 9}}}},
    {"e", {{6, 6, {2, 3, 6, 8, 9}}, {10, 9, {4, 7}}}},
    {"a", {{2, 1, {1, 5}}, {8, 5, {3, 8, 9}}}},
    {"f", {{3, 0, {5}}, {9, 4, {8, 9}}, {12, 11, {10}}}},
    {"h", {{7, 3, {2, 6}}, {9, 4, {3, 8}}}},
    {"d", {{3, 0, {5}}, {9, 4, {9}}, {12, 11, {10}}}},
    {"i", {{3, 0, {5}}, {11, 8, {7}}}},
    {"g", {{7, 3, {2}}}},
};

// Expected inverted lists for the same corpus.
inline const std::vector<std::pair<std::string, std::vector<grouplist::DocId>>>
    kExampleInverted = {
        {"b", {2, 3, 4, 6, 7, 8, 9}},
        {"c", {1, 2, 3, 5, 6, 8, 9}},
        {"e", {2, 3, 4, 6, 7, 8, 9}},
        {"a", {1, 3, 5, 8, 9}},
        {"f", {5, 8, 9, 10}},
        {"h", {2, 3, 6, 8}},
        {"d", {5, 9, 10}},
        {"i", {5, 7}},
        {"g", {2}},
};

// The canonical dump of the example group-lists, frozen for exact diffing.
inline constexpr std::string_view kExampleGroupDump =
    "b (4,10):[2,3,4,6,7,8,9]\n"
    "c (1,2):[1,5] (5,7):[2,3,6,8,9]\n"
    "e (6,6):[2,3,6,8,9] (10,9):[4,7]\n"
    "a (2,1):[1,5] (8,5):[3,8,9]\n"
    "f (3,0):[5] (9,4):[8,9] (12,11):[10]\n"
    "h (7,3):[2,6] (9,4):[3,8]\n"
    "d (3,0):[5] (9,4):[9] (12,11):[10]\n"
    "i (3,0):[5] (11,8):[7]\n"
    "g (7,3):[2]\n";

// Small random corpora for the equivalence and invariant sweeps.
inline grouplist::Corpus random_corpus(grouplist::Rng& rng, std::uint32_t max_docs = 40,
                                       std::uint32_t max_vocab = 12) {
    static const std::vector<std::string> pool = {"t0", "t1", "t2", "t3", "t4",  "t5",
                                                  "t6", "t7", "t8", "t9", "t10", "t11"};
    std::uint32_t n_docs = 1 + static_cast<std::uint32_t>(rng.next_below(max_docs));
    std::uint32_t vocab = 1 + static_cast<std::uint32_t>(rng.next_below(max_vocab));
    grouplist::CorpusBuilder builder;
    std::vector<std::uint32_t> idx(vocab);
    for (std::uint32_t d = 1; d <= n_docs; ++d) {
        std::uint32_t size = 1 + static_cast<std::uint32_t>(rng.next_below(vocab));
        for (std::uint32_t i = 0; i < vocab; ++i) idx[i] = i;
        std::vector<std::string_view> tokens;
        for (std::uint32_t i = 0; i < size; ++i) {
            std::size_t j = i + rng.next_below(vocab - i);
            std::swap(idx[i], idx[j]);
            tokens.push_back(pool[idx[i]]);
        }
        builder.add_document(d, tokens, d);
    }
    return builder.finish();
}

// Random query over the corpus vocabulary, with unknown terms and duplicates
// mixed in.
inline grouplist::Query random_query(grouplist::Rng& rng, const grouplist::Corpus& corpus,
                                     grouplist::QueryOp op, std::uint32_t max_len = 5) {
    static const std::vector<std::string> unknowns = {"zz0", "zz1"};
    grouplist::Query q;
    q.op = op;
    std::uint32_t len = 1 + static_cast<std::uint32_t>(rng.next_below(max_len));
    for (std::uint32_t i = 0; i < len; ++i) {
        // ~10% unknown terms; drawing with replacement yields duplicates.
        if (rng.next_below(10) == 0) {
            q.terms.push_back(unknowns[rng.next_below(unknowns.size())]);
        } else {
            auto t = static_cast<grouplist::TermId>(rng.next_below(corpus.vocab.size()));
            q.terms.push_back(corpus.vocab.token(t));
        }
    }
    return q;
}

}  // namespace fixtures
