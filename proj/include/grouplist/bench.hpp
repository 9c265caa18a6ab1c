#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grouplist/corpus.hpp"
#include "grouplist/synth.hpp"

namespace grouplist {

struct BenchOptions {
    // Brute-force oracle cross-checks per group (spread over the group).
    std::uint32_t oracle_samples_per_group = 20;
};

struct GroupReport {
    std::string name;
    QueryOp op = QueryOp::And;
    std::uint32_t length = 0;
    std::uint32_t n_queries = 0;
    double group_mean_us = 0.0;
    double group_median_us = 0.0;
    double inverted_mean_us = 0.0;
    double inverted_median_us = 0.0;
    double mean_result_size = 0.0;
    bool correct = true;
};

struct IndexStatsReport {
    std::uint32_t n_docs = 0;
    std::uint32_t vocab_size = 0;
    std::uint32_t n_frequent = 0;
    double zeta = 0.0;
    std::uint64_t tuple_count = 0;
    double mean_did_set_size = 0.0;
    std::uint64_t group_integers = 0;
    std::uint64_t inverted_integers = 0;
};

struct BenchReport {
    IndexStatsReport stats;
    std::vector<GroupReport> groups;
    bool all_correct = true;
};

/// Builds both indexes, verifies every query across engines (plus a sampled
/// brute-force check), then times each engine sequentially with the
/// verification pass serving as warm-up. Throws CorrectnessFailure on any
/// result mismatch.
BenchReport run_benchmark(const Corpus& corpus, double zeta, const QueryWorkload& workload,
                          const BenchOptions& options = {});

std::string format_report_text(const BenchReport& report);
std::string report_to_json(const BenchReport& report);
/// Summary grid: one column per query group, one row per engine (seconds).
std::string format_report_grid(const BenchReport& report);

}  // namespace grouplist
