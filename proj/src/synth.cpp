#include "grouplist/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace grouplist {

namespace {

std::uint32_t poisson_small(Rng& rng, double lambda) {
    double limit = std::exp(-lambda);
    double prod = rng.next_unit_open();
    std::uint32_t n = 0;
    while (prod > limit) {
        ++n;
        prod *= rng.next_unit_open();
    }
    return n;
}

// Split into chunks so exp(-lambda) stays representable.
std::uint32_t poisson(Rng& rng, double lambda) {
    std::uint32_t n = 0;
    while (lambda > 30.0) {
        n += poisson_small(rng, 30.0);
        lambda -= 30.0;
    }
    return n + poisson_small(rng, lambda);
}

std::string term_token(std::uint32_t k, std::uint32_t width) {
    std::string digits = std::to_string(k);
    std::string out = "t";
    out.append(width > digits.size() ? width - digits.size() : 0, '0');
    out += digits;
    return out;
}

void validate(const GeneratorParams& p) {
    if (p.n_docs == 0 || p.avg_doc_size == 0 || p.n_terms == 0)
        throw InvalidParams("n_docs, avg_doc_size and n_terms must be positive");
    if (p.avg_doc_size > p.n_terms)
        throw InvalidParams("avg_doc_size exceeds the term universe");
    if (!(p.skew >= 0.0) || !std::isfinite(p.skew))
        throw InvalidParams("skew must be a finite non-negative value");
}

}  // namespace

Corpus generate_corpus(const GeneratorParams& params) {
    validate(params);
    const std::uint32_t m = params.n_terms;
    Rng rng(params.seed);

    std::vector<double> inv_weight(m);
    for (std::uint32_t k = 0; k < m; ++k)
        inv_weight[k] = std::pow(static_cast<double>(k) + 1.0, params.skew);

    std::uint32_t width = static_cast<std::uint32_t>(std::to_string(m - 1).size());
    std::vector<std::string> tokens(m);
    for (std::uint32_t k = 0; k < m; ++k) tokens[k] = term_token(k, width);

    CorpusBuilder builder;
    std::vector<double> key(m);
    std::vector<std::uint32_t> idx(m);
    std::vector<std::string_view> doc_tokens;
    for (std::uint32_t d = 1; d <= params.n_docs; ++d) {
        std::uint32_t size =
            std::clamp<std::uint32_t>(poisson(rng, params.avg_doc_size), 1, m);
        // Weighted sampling without replacement via exponential keys: the
        // `size` smallest keys win; ties broken by index for determinism.
        for (std::uint32_t k = 0; k < m; ++k)
            key[k] = -std::log(rng.next_unit_open()) * inv_weight[k];
        std::iota(idx.begin(), idx.end(), 0u);
        auto by_key = [&](std::uint32_t a, std::uint32_t b) {
            if (key[a] != key[b]) return key[a] < key[b];
            return a < b;
        };
        if (size < m) std::nth_element(idx.begin(), idx.begin() + size, idx.end(), by_key);
        std::sort(idx.begin(), idx.begin() + size);

        doc_tokens.clear();
        for (std::uint32_t i = 0; i < size; ++i) doc_tokens.push_back(tokens[idx[i]]);
        builder.add_document(d, doc_tokens, d);
    }
    return builder.finish();
}

const char* to_string(QueryClass cls) {
    switch (cls) {
        case QueryClass::FQ: return "FQ";
        case QueryClass::MQ: return "MQ";
        case QueryClass::IQ: return "IQ";
    }
    return "?";
}

QueryWorkload sample_workload(const FrequencyPartition& partition, const Vocabulary& vocab,
                              QueryClass cls, std::span<const std::uint32_t> lengths,
                              std::uint32_t queries_per_group, QueryOp op, std::uint64_t seed) {
    if (queries_per_group == 0) throw InvalidParams("queries_per_group must be positive");
    if (lengths.empty()) throw InvalidParams("no query lengths requested");

    std::span<const TermId> pool;
    switch (cls) {
        case QueryClass::FQ: pool = partition.frequent(); break;
        case QueryClass::MQ: pool = partition.order; break;
        case QueryClass::IQ: pool = partition.infrequent(); break;
    }

    Rng rng(seed);
    QueryWorkload workload;
    std::vector<TermId> buf(pool.begin(), pool.end());
    for (std::uint32_t length : lengths) {
        if (length == 0) throw InvalidParams("query length must be positive");
        if (pool.size() < length)
            throw InsufficientTerms(std::string(to_string(cls)) + " pool has " +
                                    std::to_string(pool.size()) + " terms, need " +
                                    std::to_string(length));
        QueryGroup group;
        group.name = std::string(to_string(cls)) + std::to_string(length);
        group.cls = cls;
        group.length = length;
        group.queries.reserve(queries_per_group);
        for (std::uint32_t qi = 0; qi < queries_per_group; ++qi) {
            Query q;
            q.op = op;
            for (std::uint32_t i = 0; i < length; ++i) {
                std::size_t j = i + rng.next_below(buf.size() - i);
                std::swap(buf[i], buf[j]);
                q.terms.push_back(vocab.token(buf[i]));
            }
            group.queries.push_back(std::move(q));
        }
        workload.groups.push_back(std::move(group));
    }
    return workload;
}

}  // namespace grouplist
