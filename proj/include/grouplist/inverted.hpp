#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "grouplist/corpus.hpp"

namespace grouplist {

struct InvertedIndex {
    std::vector<std::vector<DocId>> postings;  // by TermId, strictly increasing
    std::uint32_t n_docs = 0;
};

InvertedIndex build_inverted(const Corpus& corpus);

// k-way merges over sorted inputs. Intersection folds shortest-first with a
// galloping pass; union is a heap merge with dedup.
std::vector<DocId> intersect_postings(std::span<const std::span<const DocId>> lists);
std::vector<DocId> union_postings(std::span<const std::span<const DocId>> lists);

std::uint64_t footprint_integers(const InvertedIndex& index);

}  // namespace grouplist
