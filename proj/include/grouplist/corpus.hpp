#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "grouplist/errors.hpp"

namespace grouplist {

using TermId = std::uint32_t;
using DocId = std::uint32_t;

/// Dense token <-> TermId mapping. Ids are assigned in first-seen order.
class Vocabulary {
public:
    TermId add(std::string_view token);
    std::optional<TermId> find(std::string_view token) const;
    const std::string& token(TermId t) const { return tokens_[t]; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(tokens_.size()); }
    const std::vector<std::string>& tokens() const { return tokens_; }

    bool operator==(const Vocabulary& other) const { return tokens_ == other.tokens_; }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, TermId> ids_;
};

/// One document: id plus its duplicate-free term set (TermIds ascending).
struct Document {
    DocId id = 0;
    std::vector<TermId> terms;

    bool contains(TermId t) const;
    bool operator==(const Document&) const = default;
};

struct Corpus {
    std::vector<Document> docs;  // doc ids strictly increasing
    Vocabulary vocab;

    std::uint32_t n_docs() const { return static_cast<std::uint32_t>(docs.size()); }
};

/// Incremental corpus construction shared by the text loader and the generator.
/// Enforces the corpus invariants (non-empty term sets, strictly increasing ids).
class CorpusBuilder {
public:
    // line_no is only used for diagnostics.
    void add_document(DocId id, std::span<const std::string_view> tokens, std::size_t line_no);
    Corpus finish();

private:
    Corpus corpus_;
};

// Text format: one document per line, tokens split on ASCII whitespace,
// optional "<id>\t<tokens>" form with an explicit positive decimal id.
Corpus load_corpus(std::istream& in);
Corpus load_corpus_text(std::string_view text);
Corpus load_corpus_file(const std::string& path);
void write_corpus(const Corpus& corpus, std::ostream& out);

struct TermStats {
    std::vector<std::uint32_t> count;  // by TermId; number of docs containing the term
    std::uint32_t n_docs = 0;
};

TermStats compute_term_stats(const Corpus& corpus);

/// Terms split into frequent/infrequent at threshold zeta*|D| and totally
/// ordered by (count desc, token asc).
struct FrequencyPartition {
    double zeta = 0.0;
    double threshold = 0.0;            // zeta * n_docs
    std::vector<TermId> order;         // all terms, count desc / token asc
    std::uint32_t n_frequent = 0;      // 'order' prefix length that is frequent
    std::vector<std::uint32_t> rank;   // TermId -> position in 'order'

    bool is_frequent(TermId t) const { return rank[t] < n_frequent; }
    std::span<const TermId> frequent() const { return {order.data(), n_frequent}; }
    std::span<const TermId> infrequent() const {
        return {order.data() + n_frequent, order.size() - n_frequent};
    }
};

FrequencyPartition partition_terms(const Corpus& corpus, const TermStats& stats, double zeta);

/// Document with terms reordered rank-ascending (most frequent first).
struct SortedDocument {
    DocId id = 0;
    std::vector<TermId> terms;

    bool operator==(const SortedDocument&) const = default;
};

std::vector<SortedDocument> sort_corpus(const Corpus& corpus, const FrequencyPartition& partition);

// Accepts "0.5" or "50%"; throws InvalidThreshold outside [0,1].
double parse_zeta(std::string_view text);

}  // namespace grouplist
