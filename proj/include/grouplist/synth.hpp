#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "grouplist/corpus.hpp"
#include "grouplist/query.hpp"

namespace grouplist {

/// Deterministic RNG helpers on top of the standardized mt19937_64 stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next_u64() { return eng_(); }
    /// Uniform in the open interval (0,1).
    double next_unit_open() {
        return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
    }
    /// Unbiased uniform draw from [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        std::uint64_t reject_below = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            std::uint64_t r = eng_();
            if (r >= reject_below) return r % n;
        }
    }

private:
    std::mt19937_64 eng_;
};

struct GeneratorParams {
    std::uint32_t n_docs = 0;
    std::uint32_t avg_doc_size = 0;
    std::uint32_t n_terms = 0;
    double skew = 0.0;  // popularity exponent; 0 = uniform
    std::uint64_t seed = 0;
};

/// Documents get Poisson-distributed sizes (min 1, capped at n_terms) and
/// terms drawn without replacement from a Zipf-like popularity distribution.
Corpus generate_corpus(const GeneratorParams& params);

enum class QueryClass : std::uint8_t { FQ, MQ, IQ };

const char* to_string(QueryClass cls);

struct QueryGroup {
    std::string name;  // e.g. "FQ2"
    QueryClass cls = QueryClass::FQ;
    std::uint32_t length = 0;
    std::vector<Query> queries;
};

struct QueryWorkload {
    std::vector<QueryGroup> groups;
};

/// One group per requested length, each with `queries_per_group` queries drawn
/// uniformly without replacement from the class pool (frequent / all /
/// infrequent terms).
QueryWorkload sample_workload(const FrequencyPartition& partition, const Vocabulary& vocab,
                              QueryClass cls, std::span<const std::uint32_t> lengths,
                              std::uint32_t queries_per_group, QueryOp op, std::uint64_t seed);

}  // namespace grouplist
