#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "grouplist/index_io.hpp"
#include "grouplist/query.hpp"
#include "grouplist/synth.hpp"

using namespace grouplist;

namespace {

struct Setup {
    Corpus corpus;
    IndexBundle bundle;

    explicit Setup(double zeta = 0.5)
        : corpus(fixtures::example_corpus()), bundle(build_index(corpus, zeta)) {}

    const GroupList* list(const std::string& token) const {
        return &bundle.group.lists[*corpus.vocab.find(token)];
    }
    Query q(QueryOp op, std::vector<std::string> terms) const { return Query{op, std::move(terms)}; }
};

std::vector<DocId> ids(const QueryResult& r) { return r.doc_ids; }

}  // namespace

TEST_CASE("split_query partitions and orders by rank") {
    Setup s;
    SplitQuery split = split_query(s.q(QueryOp::And, {"h", "e", "b"}), s.bundle.group.partition,
                                   s.bundle.vocab);
    REQUIRE(split.frequent.size() == 2);
    CHECK(s.bundle.vocab.token(split.frequent[0]) == "b");
    CHECK(s.bundle.vocab.token(split.frequent[1]) == "e");
    REQUIRE(split.infrequent.size() == 1);
    CHECK(s.bundle.vocab.token(split.infrequent[0]) == "h");
    CHECK(split.unknown.empty());

    SplitQuery all_freq = split_query(s.q(QueryOp::And, {"a", "c"}), s.bundle.group.partition,
                                      s.bundle.vocab);
    CHECK(s.bundle.vocab.token(all_freq.frequent[0]) == "c");  // c outranks a
    CHECK(all_freq.infrequent.empty());

    SplitQuery unknown = split_query(s.q(QueryOp::And, {"z"}), s.bundle.group.partition,
                                     s.bundle.vocab);
    CHECK(unknown.frequent.empty());
    CHECK(unknown.infrequent.empty());
    CHECK(unknown.unknown == std::vector<std::string>{"z"});
}

TEST_CASE("join_frequent keeps descendant tuples") {
    Setup s;
    GroupList ba = join_frequent({s.list("b"), s.list("a")});
    REQUIRE(ba.tuples.size() == 1);
    CHECK(ba.tuples[0].code == NodeCode{8, 5});
    CHECK(ba.tuples[0].did_set == std::vector<DocId>{3, 8, 9});

    GroupList bce = join_frequent({s.list("b"), s.list("c"), s.list("e")});
    REQUIRE(bce.tuples.size() == 1);
    CHECK(bce.tuples[0].code == NodeCode{6, 6});
    CHECK(bce.tuples[0].did_set == std::vector<DocId>{2, 3, 6, 8, 9});

    GroupList single = join_frequent({s.list("b")});
    CHECK(single == *s.list("b"));

    CHECK_THROWS_AS(join_frequent({}), InvalidQuery);
}

TEST_CASE("join_infrequent matches tuples by shared leaf") {
    Setup s;
    GroupList fd = join_infrequent({s.list("f"), s.list("d")});
    REQUIRE(fd.tuples.size() == 3);
    CHECK(fd.tuples[0].code == NodeCode{3, 0});
    CHECK(fd.tuples[0].did_set == std::vector<DocId>{5});
    CHECK(fd.tuples[1].code == NodeCode{9, 4});
    CHECK(fd.tuples[1].did_set == std::vector<DocId>{9});
    CHECK(fd.tuples[2].code == NodeCode{12, 11});
    CHECK(fd.tuples[2].did_set == std::vector<DocId>{10});

    GroupList di = join_infrequent({s.list("d"), s.list("i")});
    REQUIRE(di.tuples.size() == 1);
    CHECK(di.tuples[0].code == NodeCode{3, 0});
    CHECK(di.tuples[0].did_set == std::vector<DocId>{5});

    GroupList single = join_infrequent({s.list("g")});
    CHECK(single == *s.list("g"));

    CHECK_THROWS_AS(join_infrequent({}), InvalidQuery);
}

TEST_CASE("band_query fixtures") {
    Setup s;
    CHECK(ids(band_query(s.bundle.group, s.bundle.vocab, s.q(QueryOp::And, {"b", "e", "h"}))) ==
          std::vector<DocId>{2, 3, 6, 8});
    CHECK(ids(band_query(s.bundle.group, s.bundle.vocab, s.q(QueryOp::And, {"c", "a"}))) ==
          std::vector<DocId>{1, 3, 5, 8, 9});
    CHECK(band_query(s.bundle.group, s.bundle.vocab, s.q(QueryOp::And, {"b", "zzz"}))
              .doc_ids.empty());
    CHECK_THROWS_AS(band_query(s.bundle.group, s.bundle.vocab, s.q(QueryOp::And, {})),
                    InvalidQuery);
}

TEST_CASE("bor_query fixtures") {
    Setup s;
    CHECK(ids(bor_query(s.bundle.group, s.bundle.vocab, s.q(QueryOp::Or, {"g", "i"}))) ==
          std::vector<DocId>{2, 5, 7});
    std::vector<DocId> b_docs = {2, 3, 4, 6, 7, 8, 9};
    CHECK(ids(bor_query(s.bundle.group, s.bundle.vocab, s.q(QueryOp::Or, {"b"}))) == b_docs);
    CHECK(ids(bor_query(s.bundle.group, s.bundle.vocab, s.q(QueryOp::Or, {"zzz", "b"}))) ==
          b_docs);
    CHECK_THROWS_AS(bor_query(s.bundle.group, s.bundle.vocab, s.q(QueryOp::Or, {"zzz"})),
                    InvalidQuery);
    CHECK_THROWS_AS(bor_query(s.bundle.group, s.bundle.vocab, s.q(QueryOp::Or, {})), InvalidQuery);
}

TEST_CASE("oracle_scan fixtures") {
    Setup s;
    CHECK(ids(oracle_scan(s.corpus, s.q(QueryOp::And, {"b", "e", "h"}))) ==
          std::vector<DocId>{2, 3, 6, 8});
    CHECK(ids(oracle_scan(s.corpus, s.q(QueryOp::Or, {"g"}))) == std::vector<DocId>{2});
    CHECK(ids(oracle_scan(s.corpus, s.q(QueryOp::And, {"a"}))) ==
          std::vector<DocId>{1, 3, 5, 8, 9});
    CHECK_THROWS_AS(oracle_scan(s.corpus, s.q(QueryOp::And, {})), InvalidQuery);
}

TEST_CASE("band result is invariant under term order and duplicates") {
    Setup s;
    std::vector<std::string> terms = {"b", "e", "h"};
    auto expected = ids(band_query(s.bundle.group, s.bundle.vocab, s.q(QueryOp::And, terms)));
    std::sort(terms.begin(), terms.end());
    do {
        CHECK(ids(band_query(s.bundle.group, s.bundle.vocab, s.q(QueryOp::And, terms))) ==
              expected);
    } while (std::next_permutation(terms.begin(), terms.end()));
    CHECK(ids(band_query(s.bundle.group, s.bundle.vocab,
                         s.q(QueryOp::And, {"h", "b", "e", "b", "h"}))) == expected);
}

TEST_CASE("three-way engine equivalence on random corpora") {
    Rng rng(31337);
    for (int iter = 0; iter < 100; ++iter) {
        Corpus corpus = fixtures::random_corpus(rng);
        double zeta = rng.next_unit_open();
        IndexBundle bundle = build_index(corpus, zeta);
        for (int qi = 0; qi < 10; ++qi) {
            QueryOp op = rng.next_below(2) == 0 ? QueryOp::And : QueryOp::Or;
            Query q = fixtures::random_query(rng, corpus, op);
            QueryResult oracle = oracle_scan(corpus, q);
            if (op == QueryOp::And) {
                CHECK(band_query(bundle.group, bundle.vocab, q) == oracle);
                CHECK(eval_inverted(bundle.inverted, bundle.vocab, q) == oracle);
            } else {
                bool all_unknown = true;
                for (const auto& t : q.terms)
                    if (corpus.vocab.find(t)) all_unknown = false;
                if (all_unknown) {
                    CHECK(oracle.doc_ids.empty());
                    CHECK_THROWS_AS(bor_query(bundle.group, bundle.vocab, q), InvalidQuery);
                    CHECK_THROWS_AS(eval_inverted(bundle.inverted, bundle.vocab, q), InvalidQuery);
                } else {
                    CHECK(bor_query(bundle.group, bundle.vocab, q) == oracle);
                    CHECK(eval_inverted(bundle.inverted, bundle.vocab, q) == oracle);
                }
            }
        }
    }
}

TEST_CASE("termset joins satisfy the union property and list invariants") {
    Rng rng(60601);
    for (int iter = 0; iter < 60; ++iter) {
        Corpus corpus = fixtures::random_corpus(rng);
        double zeta = rng.next_unit_open();
        IndexBundle bundle = build_index(corpus, zeta);
        const FrequencyPartition& part = bundle.group.partition;

        Query q = fixtures::random_query(rng, corpus, QueryOp::And);
        SplitQuery split = split_query(q, part, bundle.vocab);
        if (!split.unknown.empty()) continue;

        // Joined frequent side: union of did_sets equals the AND of just the
        // frequent terms, and the output keeps the group-list shape.
        if (!split.frequent.empty()) {
            std::vector<const GroupList*> lists;
            Query sub{QueryOp::And, {}};
            for (TermId t : split.frequent) {
                lists.push_back(&bundle.group.lists[t]);
                sub.terms.push_back(bundle.vocab.token(t));
            }
            GroupList joined = join_frequent(lists);
            std::vector<DocId> merged;
            for (const auto& tuple : joined.tuples)
                merged.insert(merged.end(), tuple.did_set.begin(), tuple.did_set.end());
            std::sort(merged.begin(), merged.end());
            CHECK(merged == oracle_scan(corpus, sub).doc_ids);
            for (std::size_t i = 1; i < joined.tuples.size(); ++i)
                CHECK(joined.tuples[i - 1].code.pre < joined.tuples[i].code.pre);
            for (std::size_t i = 0; i < joined.tuples.size(); ++i)
                for (std::size_t j = 0; j < joined.tuples.size(); ++j)
                    if (i != j)
                        CHECK_FALSE(ancestor_of(joined.tuples[i].code, joined.tuples[j].code));
        }
        if (!split.infrequent.empty()) {
            std::vector<const GroupList*> lists;
            Query sub{QueryOp::And, {}};
            for (TermId t : split.infrequent) {
                lists.push_back(&bundle.group.lists[t]);
                sub.terms.push_back(bundle.vocab.token(t));
            }
            GroupList joined = join_infrequent(lists);
            std::vector<DocId> merged;
            for (const auto& tuple : joined.tuples)
                merged.insert(merged.end(), tuple.did_set.begin(), tuple.did_set.end());
            std::sort(merged.begin(), merged.end());
            CHECK(merged == oracle_scan(corpus, sub).doc_ids);
        }
    }
}

TEST_CASE("conjunction is contained in disjunction") {
    Rng rng(8086);
    for (int iter = 0; iter < 50; ++iter) {
        Corpus corpus = fixtures::random_corpus(rng);
        IndexBundle bundle = build_index(corpus, rng.next_unit_open());
        Query q = fixtures::random_query(rng, corpus, QueryOp::And);
        bool any_known = false;
        for (const auto& t : q.terms)
            if (corpus.vocab.find(t)) any_known = true;
        if (!any_known) continue;
        auto conj = band_query(bundle.group, bundle.vocab, q).doc_ids;
        q.op = QueryOp::Or;
        auto disj = bor_query(bundle.group, bundle.vocab, q).doc_ids;
        CHECK(std::includes(disj.begin(), disj.end(), conj.begin(), conj.end()));
    }
}
