#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "grouplist/bench.hpp"
#include "grouplist/corpus.hpp"
#include "grouplist/group_index.hpp"
#include "grouplist/index_io.hpp"
#include "grouplist/query.hpp"
#include "grouplist/synth.hpp"

namespace py = pybind11;
using namespace grouplist;

namespace {

QueryOp parse_op(const std::string& op) {
    if (op == "and" || op == "AND") return QueryOp::And;
    if (op == "or" || op == "OR") return QueryOp::Or;
    throw InvalidQuery("unknown operator '" + op + "' (expected 'and' or 'or')");
}

QueryClass parse_class(const std::string& cls) {
    if (cls == "FQ") return QueryClass::FQ;
    if (cls == "MQ") return QueryClass::MQ;
    if (cls == "IQ") return QueryClass::IQ;
    throw InvalidParams("unknown query class '" + cls + "'");
}

std::vector<DocId> run_query(const IndexBundle& bundle, const std::string& op,
                             const std::vector<std::string>& terms, const std::string& engine) {
    Query q{parse_op(op), terms};
    if (engine == "grouplist")
        return (q.op == QueryOp::And ? band_query(bundle.group, bundle.vocab, q)
                                     : bor_query(bundle.group, bundle.vocab, q))
            .doc_ids;
    if (engine == "inverted") return eval_inverted(bundle.inverted, bundle.vocab, q).doc_ids;
    throw InvalidQuery("unknown engine '" + engine + "'");
}

}  // namespace

PYBIND11_MODULE(_grouplist, m) {
    m.doc() = "Group-list index: construction, Boolean queries and benchmarks";

    py::register_exception<Error>(m, "GroupListError");

    py::class_<Corpus>(m, "Corpus")
        .def_property_readonly("n_docs", &Corpus::n_docs)
        .def_property_readonly("vocab_size", [](const Corpus& c) { return c.vocab.size(); })
        .def("tokens", [](const Corpus& c) { return c.vocab.tokens(); })
        .def("__len__", &Corpus::n_docs);

    py::class_<IndexBundle>(m, "Index")
        .def_property_readonly("n_docs", [](const IndexBundle& b) { return b.group.n_docs; })
        .def_property_readonly("vocab_size", [](const IndexBundle& b) { return b.vocab.size(); })
        .def_property_readonly("n_frequent",
                               [](const IndexBundle& b) { return b.group.partition.n_frequent; })
        .def_property_readonly("zeta", [](const IndexBundle& b) { return b.group.partition.zeta; })
        .def_property_readonly("tuple_count",
                               [](const IndexBundle& b) { return total_tuples(b.group); })
        .def_property_readonly("group_integers",
                               [](const IndexBundle& b) { return footprint_integers(b.group); })
        .def_property_readonly("inverted_integers",
                               [](const IndexBundle& b) { return footprint_integers(b.inverted); })
        .def("group_list",
             [](const IndexBundle& b, const std::string& token) {
                 std::vector<std::tuple<std::uint32_t, std::uint32_t, std::vector<DocId>>> out;
                 auto id = b.vocab.find(token);
                 if (!id) return out;
                 for (const GroupTuple& t : b.group.lists[*id].tuples)
                     out.emplace_back(t.code.pre, t.code.post, t.did_set);
                 return out;
             })
        .def("postings", [](const IndexBundle& b, const std::string& token) {
            std::vector<DocId> out;
            if (auto id = b.vocab.find(token)) out = b.inverted.postings[*id];
            return out;
        });

    m.def("load_corpus", &load_corpus_file, py::arg("path"));
    m.def("load_corpus_text", [](const std::string& text) { return load_corpus_text(text); },
          py::arg("text"));
    m.def(
        "generate_corpus",
        [](std::uint32_t n_docs, std::uint32_t avg_doc_size, std::uint32_t n_terms, double skew,
           std::uint64_t seed) {
            return generate_corpus({n_docs, avg_doc_size, n_terms, skew, seed});
        },
        py::arg("n_docs"), py::arg("avg_doc_size"), py::arg("n_terms"), py::arg("skew") = 0.0,
        py::arg("seed") = 1);
    m.def(
        "write_corpus",
        [](const Corpus& corpus, const std::string& path) {
            std::ofstream out(path);
            if (!out) throw Error("cannot open '" + path + "' for writing");
            write_corpus(corpus, out);
        },
        py::arg("corpus"), py::arg("path"));
    m.def("corpus_text", [](const Corpus& corpus) {
        std::ostringstream out;
        write_corpus(corpus, out);
        return out.str();
    });

    m.def("build_index", &build_index, py::arg("corpus"), py::arg("zeta"));
    m.def("save_index", &save_index, py::arg("index"), py::arg("path"));
    m.def("load_index", &load_index, py::arg("path"));
    m.def("parse_zeta", [](const std::string& text) { return parse_zeta(text); },
          py::arg("text"));

    m.def("query", &run_query, py::arg("index"), py::arg("op"), py::arg("terms"),
          py::arg("engine") = "grouplist");
    m.def(
        "oracle_scan",
        [](const Corpus& corpus, const std::string& op, const std::vector<std::string>& terms) {
            return oracle_scan(corpus, Query{parse_op(op), terms}).doc_ids;
        },
        py::arg("corpus"), py::arg("op"), py::arg("terms"));

    m.def(
        "benchmark_json",
        [](const Corpus& corpus, double zeta, const std::vector<std::string>& classes,
           const std::vector<std::uint32_t>& lengths, std::uint32_t queries_per_group,
           const std::string& op, std::uint64_t seed) {
            TermStats stats = compute_term_stats(corpus);
            FrequencyPartition part = partition_terms(corpus, stats, zeta);
            QueryWorkload workload;
            for (const std::string& cls : classes) {
                QueryWorkload w = sample_workload(part, corpus.vocab, parse_class(cls), lengths,
                                                  queries_per_group, parse_op(op), seed);
                for (auto& g : w.groups) workload.groups.push_back(std::move(g));
            }
            return report_to_json(run_benchmark(corpus, zeta, workload));
        },
        py::arg("corpus"), py::arg("zeta"), py::arg("classes") = std::vector<std::string>{"FQ", "MQ", "IQ"},
        py::arg("lengths") = std::vector<std::uint32_t>{2, 4, 6}, py::arg("queries_per_group") = 20,
        py::arg("op") = "and", py::arg("seed") = 1);
}
