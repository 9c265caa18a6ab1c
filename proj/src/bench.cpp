#include "grouplist/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "grouplist/group_index.hpp"
#include "grouplist/index_io.hpp"
#include "grouplist/query.hpp"

namespace grouplist {

namespace {

using Clock = std::chrono::steady_clock;

void keep_alive(const std::vector<DocId>& v) {
    asm volatile("" : : "g"(v.data()) : "memory");
}

std::string describe(const Query& q) {
    std::string out = q.op == QueryOp::And ? "AND {" : "OR {";
    for (std::size_t i = 0; i < q.terms.size(); ++i) {
        if (i) out += ' ';
        out += q.terms[i];
    }
    out += '}';
    return out;
}

double mean_of(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

double median_of(std::vector<double> xs) {
    if (xs.empty()) return 0.0;
    std::sort(xs.begin(), xs.end());
    std::size_t mid = xs.size() / 2;
    if (xs.size() % 2 == 1) return xs[mid];
    return 0.5 * (xs[mid - 1] + xs[mid]);
}

QueryResult run_group_engine(const IndexBundle& bundle, const Query& q) {
    return q.op == QueryOp::And ? band_query(bundle.group, bundle.vocab, q)
                                : bor_query(bundle.group, bundle.vocab, q);
}

}  // namespace

BenchReport run_benchmark(const Corpus& corpus, double zeta, const QueryWorkload& workload,
                          const BenchOptions& options) {
    IndexBundle bundle = build_index(corpus, zeta);

    BenchReport report;
    report.stats.n_docs = bundle.group.n_docs;
    report.stats.vocab_size = bundle.vocab.size();
    report.stats.n_frequent = bundle.group.partition.n_frequent;
    report.stats.zeta = zeta;
    report.stats.tuple_count = total_tuples(bundle.group);
    report.stats.group_integers = footprint_integers(bundle.group);
    report.stats.inverted_integers = footprint_integers(bundle.inverted);
    report.stats.mean_did_set_size =
        report.stats.tuple_count == 0
            ? 0.0
            : static_cast<double>(report.stats.group_integers - 2 * report.stats.tuple_count) /
                  static_cast<double>(report.stats.tuple_count);

    for (const QueryGroup& group : workload.groups) {
        GroupReport gr;
        gr.name = group.name;
        gr.length = group.length;
        gr.n_queries = static_cast<std::uint32_t>(group.queries.size());
        if (!group.queries.empty()) gr.op = group.queries.front().op;

        // Verification pass; doubles as the warm-up iteration for timing.
        std::size_t stride =
            std::max<std::size_t>(1, group.queries.size() /
                                         std::max<std::uint32_t>(1, options.oracle_samples_per_group));
        double result_sizes = 0.0;
        for (std::size_t qi = 0; qi < group.queries.size(); ++qi) {
            const Query& q = group.queries[qi];
            QueryResult via_group = run_group_engine(bundle, q);
            QueryResult via_inverted = eval_inverted(bundle.inverted, bundle.vocab, q);
            if (via_group != via_inverted)
                throw CorrectnessFailure("engines disagree on " + describe(q));
            if (qi % stride == 0) {
                QueryResult via_oracle = oracle_scan(corpus, q);
                if (via_group != via_oracle)
                    throw CorrectnessFailure("oracle disagrees on " + describe(q));
            }
            result_sizes += static_cast<double>(via_group.doc_ids.size());
        }
        gr.mean_result_size =
            group.queries.empty() ? 0.0 : result_sizes / static_cast<double>(group.queries.size());

        // Timed passes, one engine at a time.
        std::vector<double> group_us, inverted_us;
        group_us.reserve(group.queries.size());
        inverted_us.reserve(group.queries.size());
        for (const Query& q : group.queries) {
            auto t0 = Clock::now();
            std::vector<DocId> docs = q.op == QueryOp::And
                                          ? detail::band_collect(bundle.group, bundle.vocab, q)
                                          : detail::bor_collect(bundle.group, bundle.vocab, q);
            auto t1 = Clock::now();
            keep_alive(docs);
            group_us.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
        }
        for (const Query& q : group.queries) {
            auto t0 = Clock::now();
            std::vector<DocId> docs = detail::inverted_collect(bundle.inverted, bundle.vocab, q);
            auto t1 = Clock::now();
            keep_alive(docs);
            inverted_us.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
        }
        gr.group_mean_us = mean_of(group_us);
        gr.group_median_us = median_of(group_us);
        gr.inverted_mean_us = mean_of(inverted_us);
        gr.inverted_median_us = median_of(inverted_us);
        gr.correct = true;
        report.groups.push_back(std::move(gr));
    }
    return report;
}

std::string format_report_text(const BenchReport& report) {
    std::ostringstream out;
    out << std::setprecision(6);
    const IndexStatsReport& s = report.stats;
    out << "[index]\n"
        << "n_docs = " << s.n_docs << '\n'
        << "vocab = " << s.vocab_size << '\n'
        << "zeta = " << s.zeta << '\n'
        << "frequent_terms = " << s.n_frequent << '\n'
        << "tuples = " << s.tuple_count << '\n'
        << "mean_did_set_size = " << s.mean_did_set_size << '\n'
        << "group_list_integers = " << s.group_integers << '\n'
        << "inverted_integers = " << s.inverted_integers << '\n';
    for (const GroupReport& g : report.groups) {
        out << "\n[group " << g.name << "]\n"
            << "op = " << (g.op == QueryOp::And ? "and" : "or") << '\n'
            << "length = " << g.length << '\n'
            << "queries = " << g.n_queries << '\n'
            << "group_list_mean_us = " << g.group_mean_us << '\n'
            << "group_list_median_us = " << g.group_median_us << '\n'
            << "inverted_mean_us = " << g.inverted_mean_us << '\n'
            << "inverted_median_us = " << g.inverted_median_us << '\n'
            << "mean_result_size = " << g.mean_result_size << '\n'
            << "correct = " << (g.correct ? "true" : "false") << '\n';
    }
    out << "\nall_correct = " << (report.all_correct ? "true" : "false") << '\n';
    return out.str();
}

std::string report_to_json(const BenchReport& report) {
    nlohmann::json j;
    const IndexStatsReport& s = report.stats;
    j["index"] = {{"n_docs", s.n_docs},
                  {"vocab", s.vocab_size},
                  {"zeta", s.zeta},
                  {"frequent_terms", s.n_frequent},
                  {"tuples", s.tuple_count},
                  {"mean_did_set_size", s.mean_did_set_size},
                  {"group_list_integers", s.group_integers},
                  {"inverted_integers", s.inverted_integers}};
    j["groups"] = nlohmann::json::array();
    for (const GroupReport& g : report.groups) {
        j["groups"].push_back({{"name", g.name},
                               {"op", g.op == QueryOp::And ? "and" : "or"},
                               {"length", g.length},
                               {"queries", g.n_queries},
                               {"group_list_mean_us", g.group_mean_us},
                               {"group_list_median_us", g.group_median_us},
                               {"inverted_mean_us", g.inverted_mean_us},
                               {"inverted_median_us", g.inverted_median_us},
                               {"mean_result_size", g.mean_result_size},
                               {"correct", g.correct}});
    }
    j["all_correct"] = report.all_correct;
    return j.dump(2);
}

std::string format_report_grid(const BenchReport& report) {
    std::ostringstream out;
    auto total_seconds = [](double mean_us, std::uint32_t n) {
        return mean_us * static_cast<double>(n) / 1e6;
    };
    out << std::left << std::setw(16) << "engine";
    for (const GroupReport& g : report.groups) out << std::right << std::setw(10) << g.name;
    out << '\n' << std::left << std::setw(16) << "inverted";
    out << std::fixed << std::setprecision(3);
    for (const GroupReport& g : report.groups)
        out << std::right << std::setw(10) << total_seconds(g.inverted_mean_us, g.n_queries);
    out << '\n' << std::left << std::setw(16) << "group-list";
    for (const GroupReport& g : report.groups)
        out << std::right << std::setw(10) << total_seconds(g.group_mean_us, g.n_queries);
    out << '\n';
    return out.str();
}

}  // namespace grouplist
