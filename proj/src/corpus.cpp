#include "grouplist/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace grouplist {

TermId Vocabulary::add(std::string_view token) {
    auto it = ids_.find(std::string(token));
    if (it != ids_.end()) return it->second;
    TermId id = static_cast<TermId>(tokens_.size());
    tokens_.emplace_back(token);
    ids_.emplace(tokens_.back(), id);
    return id;
}

std::optional<TermId> Vocabulary::find(std::string_view token) const {
    auto it = ids_.find(std::string(token));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

bool Document::contains(TermId t) const {
    return std::binary_search(terms.begin(), terms.end(), t);
}

void CorpusBuilder::add_document(DocId id, std::span<const std::string_view> tokens,
                                 std::size_t line_no) {
    if (tokens.empty()) throw MalformedDocument(line_no, "blank document");
    if (id == 0) throw MalformedDocument(line_no, "document id must be positive");
    if (!corpus_.docs.empty() && id <= corpus_.docs.back().id) {
        const auto& ds = corpus_.docs;
        auto it = std::lower_bound(ds.begin(), ds.end(), id,
                                   [](const Document& d, DocId v) { return d.id < v; });
        if (it != ds.end() && it->id == id) throw DuplicateDocId(id);
        throw MalformedDocument(line_no, "document id " + std::to_string(id) +
                                             " not increasing");
    }
    Document doc;
    doc.id = id;
    doc.terms.reserve(tokens.size());
    for (std::string_view tok : tokens) doc.terms.push_back(corpus_.vocab.add(tok));
    std::sort(doc.terms.begin(), doc.terms.end());
    doc.terms.erase(std::unique(doc.terms.begin(), doc.terms.end()), doc.terms.end());
    corpus_.docs.push_back(std::move(doc));
}

Corpus CorpusBuilder::finish() {
    if (corpus_.docs.empty()) throw EmptyCorpus();
    return std::move(corpus_);
}

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

std::vector<std::string_view> split_tokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) ++i;
        std::size_t start = i;
        while (i < s.size() && !is_space(s[i])) ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

// "<id>\t<tokens>" when the text before the first tab is a positive decimal.
std::optional<DocId> explicit_id(std::string_view line, std::string_view& rest) {
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0) return std::nullopt;
    std::string_view head = line.substr(0, tab);
    DocId id = 0;
    auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), id);
    if (ec != std::errc() || ptr != head.data() + head.size() || id == 0) return std::nullopt;
    rest = line.substr(tab + 1);
    return id;
}

}  // namespace

Corpus load_corpus(std::istream& in) {
    CorpusBuilder builder;
    std::string line;
    std::size_t line_no = 0;
    bool any_line = false;
    while (std::getline(in, line)) {
        ++line_no;
        any_line = true;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view body = line;
        DocId id = static_cast<DocId>(line_no);
        std::string_view rest;
        if (auto ex = explicit_id(body, rest)) {
            id = *ex;
            body = rest;
        }
        auto tokens = split_tokens(body);
        builder.add_document(id, tokens, line_no);
    }
    if (!any_line) throw EmptyCorpus();
    return builder.finish();
}

Corpus load_corpus_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return load_corpus(in);
}

Corpus load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open corpus file: " + path);
    return load_corpus(in);
}

void write_corpus(const Corpus& corpus, std::ostream& out) {
    // Ids are re-derivable from line numbers only when dense; write them
    // explicitly otherwise.
    bool dense = corpus.docs.back().id == corpus.n_docs();
    for (const Document& doc : corpus.docs) {
        if (!dense) out << doc.id << '\t';
        for (std::size_t i = 0; i < doc.terms.size(); ++i) {
            if (i) out << ' ';
            out << corpus.vocab.token(doc.terms[i]);
        }
        out << '\n';
    }
}

TermStats compute_term_stats(const Corpus& corpus) {
    if (corpus.docs.empty()) throw EmptyCorpus();
    TermStats stats;
    stats.n_docs = corpus.n_docs();
    stats.count.assign(corpus.vocab.size(), 0);
    for (const Document& doc : corpus.docs)
        for (TermId t : doc.terms) ++stats.count[t];
    return stats;
}

FrequencyPartition partition_terms(const Corpus& corpus, const TermStats& stats, double zeta) {
    if (!(zeta >= 0.0 && zeta <= 1.0))
        throw InvalidThreshold("zeta must lie in [0,1], got " + std::to_string(zeta));
    if (stats.count.size() != corpus.vocab.size())
        throw InternalInconsistency("term stats do not match corpus vocabulary");

    FrequencyPartition part;
    part.zeta = zeta;
    part.threshold = zeta * static_cast<double>(stats.n_docs);
    part.order.resize(corpus.vocab.size());
    for (TermId t = 0; t < part.order.size(); ++t) part.order[t] = t;
    std::sort(part.order.begin(), part.order.end(), [&](TermId a, TermId b) {
        if (stats.count[a] != stats.count[b]) return stats.count[a] > stats.count[b];
        return corpus.vocab.token(a) < corpus.vocab.token(b);
    });
    // "not less than" the threshold: the frequent zone is an order prefix.
    std::uint32_t n_freq = 0;
    while (n_freq < part.order.size() &&
           static_cast<double>(stats.count[part.order[n_freq]]) >= part.threshold)
        ++n_freq;
    part.n_frequent = n_freq;
    part.rank.assign(part.order.size(), 0);
    for (std::uint32_t pos = 0; pos < part.order.size(); ++pos) part.rank[part.order[pos]] = pos;
    return part;
}

std::vector<SortedDocument> sort_corpus(const Corpus& corpus,
                                        const FrequencyPartition& partition) {
    if (partition.rank.size() != corpus.vocab.size())
        throw InternalInconsistency("partition does not cover the corpus vocabulary");
    std::vector<SortedDocument> out;
    out.reserve(corpus.docs.size());
    for (const Document& doc : corpus.docs) {
        SortedDocument sd;
        sd.id = doc.id;
        sd.terms = doc.terms;
        std::sort(sd.terms.begin(), sd.terms.end(),
                  [&](TermId a, TermId b) { return partition.rank[a] < partition.rank[b]; });
        out.push_back(std::move(sd));
    }
    return out;
}

double parse_zeta(std::string_view text) {
    std::string s(text);
    bool percent = !s.empty() && s.back() == '%';
    if (percent) s.pop_back();
    double value = 0.0;
    try {
        std::size_t pos = 0;
        value = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw InvalidThreshold("cannot parse threshold '" + std::string(text) + "'");
    }
    if (percent) value /= 100.0;
    if (!(value >= 0.0 && value <= 1.0))
        throw InvalidThreshold("threshold '" + std::string(text) + "' outside [0,1]");
    return value;
}

}  // namespace grouplist
