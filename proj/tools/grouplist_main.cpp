#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grouplist/bench.hpp"
#include "grouplist/corpus.hpp"
#include "grouplist/group_index.hpp"
#include "grouplist/index_io.hpp"
#include "grouplist/query.hpp"
#include "grouplist/synth.hpp"

namespace gl = grouplist;

namespace {

struct BuildArgs {
    std::string input;
    std::string zeta = "0.5";
    std::string out;
};

struct QueryArgs {
    std::string index;
    std::string op;
    std::vector<std::string> terms;
    std::string engine = "grouplist";
    std::string input;  // corpus, required by the oracle engine
    std::string format = "lines";
};

struct GenArgs {
    gl::GeneratorParams params;
    std::string out;
};

struct BenchArgs {
    std::string input;
    bool use_gen = false;
    gl::GeneratorParams params;
    std::string zeta = "0.5";
    std::string classes = "FQ,MQ,IQ";
    std::string lengths = "2,4,6";
    std::uint32_t queries_per_group = 200;
    std::string op = "and";
    std::uint64_t seed = 1;
    std::string report;
    std::string report_json;
};

gl::QueryOp parse_op(const std::string& s) {
    if (s == "and" || s == "AND") return gl::QueryOp::And;
    if (s == "or" || s == "OR") return gl::QueryOp::Or;
    throw gl::InvalidQuery("unknown operator '" + s + "' (expected and|or)");
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int cmd_build(const BuildArgs& args) {
    gl::Corpus corpus = gl::load_corpus_file(args.input);
    double zeta = gl::parse_zeta(args.zeta);
    gl::IndexBundle bundle = gl::build_index(corpus, zeta);
    gl::save_index(bundle, args.out);
    std::cout << "docs = " << bundle.group.n_docs << '\n'
              << "terms = " << bundle.vocab.size() << '\n'
              << "frequent_terms = " << bundle.group.partition.n_frequent << '\n'
              << "tuples = " << gl::total_tuples(bundle.group) << '\n'
              << "index = " << args.out << '\n';
    return 0;
}

void print_result(const gl::QueryResult& result, const std::string& format) {
    if (format == "json") {
        std::cout << '[';
        for (std::size_t i = 0; i < result.doc_ids.size(); ++i) {
            if (i) std::cout << ',';
            std::cout << result.doc_ids[i];
        }
        std::cout << "]\n";
        return;
    }
    for (gl::DocId id : result.doc_ids) std::cout << id << '\n';
}

int cmd_query(const QueryArgs& args) {
    gl::Query q;
    q.op = parse_op(args.op);
    q.terms = args.terms;

    gl::QueryResult result;
    if (args.engine == "oracle") {
        gl::Corpus corpus = gl::load_corpus_file(args.input);
        result = gl::oracle_scan(corpus, q);
    } else {
        gl::IndexBundle bundle = gl::load_index(args.index);
        if (args.engine == "grouplist") {
            result = q.op == gl::QueryOp::And ? gl::band_query(bundle.group, bundle.vocab, q)
                                              : gl::bor_query(bundle.group, bundle.vocab, q);
        } else if (args.engine == "inverted") {
            result = gl::eval_inverted(bundle.inverted, bundle.vocab, q);
        } else {
            throw gl::InvalidQuery("unknown engine '" + args.engine + "'");
        }
    }
    print_result(result, args.format);
    return 0;
}

int cmd_gen(const GenArgs& args) {
    gl::Corpus corpus = gl::generate_corpus(args.params);
    std::ofstream out(args.out);
    if (!out) throw gl::Error("cannot open '" + args.out + "' for writing");
    gl::write_corpus(corpus, out);
    out.flush();
    if (!out) throw gl::Error("write failed for '" + args.out + "'");
    std::cout << "docs = " << corpus.n_docs() << '\n'
              << "terms = " << corpus.vocab.size() << '\n'
              << "corpus = " << args.out << '\n';
    return 0;
}

int cmd_bench(const BenchArgs& args) {
    gl::Corpus corpus = args.use_gen ? gl::generate_corpus(args.params)
                                     : gl::load_corpus_file(args.input);
    double zeta = gl::parse_zeta(args.zeta);

    gl::TermStats stats = gl::compute_term_stats(corpus);
    gl::FrequencyPartition partition = gl::partition_terms(corpus, stats, zeta);

    std::vector<std::uint32_t> lengths;
    for (const std::string& s : split_csv(args.lengths))
        lengths.push_back(static_cast<std::uint32_t>(std::stoul(s)));

    gl::QueryOp op = parse_op(args.op);
    gl::QueryWorkload workload;
    for (const std::string& cls_name : split_csv(args.classes)) {
        gl::QueryClass cls;
        if (cls_name == "FQ" || cls_name == "fq") cls = gl::QueryClass::FQ;
        else if (cls_name == "MQ" || cls_name == "mq") cls = gl::QueryClass::MQ;
        else if (cls_name == "IQ" || cls_name == "iq") cls = gl::QueryClass::IQ;
        else throw gl::InvalidParams("unknown query class '" + cls_name + "'");
        gl::QueryWorkload part = gl::sample_workload(partition, corpus.vocab, cls, lengths,
                                                     args.queries_per_group, op, args.seed);
        for (auto& g : part.groups) workload.groups.push_back(std::move(g));
    }

    gl::BenchReport report = gl::run_benchmark(corpus, zeta, workload);
    std::cout << gl::format_report_grid(report);
    if (!args.report.empty()) {
        std::ofstream out(args.report);
        if (!out) throw gl::Error("cannot open '" + args.report + "' for writing");
        out << gl::format_report_text(report);
    }
    if (!args.report_json.empty()) {
        std::ofstream out(args.report_json);
        if (!out) throw gl::Error("cannot open '" + args.report_json + "' for writing");
        out << gl::report_to_json(report);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"group-list index: build, query, generate and benchmark"};
    app.require_subcommand(1);

    BuildArgs build_args;
    auto* build = app.add_subcommand("build", "build an index from a corpus file");
    build->add_option("--input", build_args.input, "corpus text file")->required();
    build->add_option("--zeta", build_args.zeta, "frequency threshold, fraction or percent");
    build->add_option("--out", build_args.out, "output index file")->required();

    QueryArgs query_args;
    auto* query = app.add_subcommand("query", "run a Boolean query against an index");
    query->add_option("--index", query_args.index, "index file")->required();
    query->add_option("--op", query_args.op, "and | or")->required();
    query->add_option("--terms", query_args.terms, "query terms")->required()->expected(-1);
    query->add_option("--engine", query_args.engine, "grouplist | inverted | oracle");
    query->add_option("--input", query_args.input, "corpus file (oracle engine)");
    query->add_option("--format", query_args.format, "lines | json");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a synthetic corpus");
    gen->add_option("--docs", gen_args.params.n_docs, "number of documents")->required();
    gen->add_option("--avg-size", gen_args.params.avg_doc_size, "average document size")->required();
    gen->add_option("--terms", gen_args.params.n_terms, "term universe size")->required();
    gen->add_option("--skew", gen_args.params.skew, "popularity skew exponent");
    gen->add_option("--seed", gen_args.params.seed, "random seed");
    gen->add_option("--out", gen_args.out, "output corpus file")->required();

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "compare group-list and inverted-index engines");
    auto* bench_input = bench->add_option("--input", bench_args.input, "corpus text file");
    auto* bench_gen = bench->add_flag("--gen", bench_args.use_gen, "generate the corpus instead");
    bench_input->excludes(bench_gen);
    bench->add_option("--docs", bench_args.params.n_docs, "generated document count");
    bench->add_option("--avg-size", bench_args.params.avg_doc_size, "generated document size");
    bench->add_option("--terms", bench_args.params.n_terms, "generated term universe");
    bench->add_option("--skew", bench_args.params.skew, "generated popularity skew");
    bench->add_option("--zeta", bench_args.zeta, "frequency threshold");
    bench->add_option("--classes", bench_args.classes, "comma list of FQ,MQ,IQ");
    bench->add_option("--lengths", bench_args.lengths, "comma list of query lengths");
    bench->add_option("--queries-per-group", bench_args.queries_per_group, "queries per group");
    bench->add_option("--op", bench_args.op, "and | or");
    bench->add_option("--seed", bench_args.seed, "random seed");
    bench->add_option("--report", bench_args.report, "write key/value report here");
    bench->add_option("--report-json", bench_args.report_json, "write JSON report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(build_args);
        if (query->parsed()) {
            if (query_args.engine == "oracle" && query_args.input.empty()) {
                std::cerr << "--engine oracle requires --input <corpus>\n";
                return 2;
            }
            return cmd_query(query_args);
        }
        if (gen->parsed()) return cmd_gen(gen_args);
        if (bench->parsed()) {
            if (!bench_args.use_gen && bench_args.input.empty()) {
                std::cerr << "bench requires --input <corpus> or --gen\n";
                return 2;
            }
            return cmd_bench(bench_args);
        }
    } catch (const gl::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
