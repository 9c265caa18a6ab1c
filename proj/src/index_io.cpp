#include "grouplist/index_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "grouplist/ptree.hpp"

namespace grouplist {

IndexBundle build_index(const Corpus& corpus, double zeta) {
    TermStats stats = compute_term_stats(corpus);
    FrequencyPartition partition = partition_terms(corpus, stats, zeta);
    std::vector<SortedDocument> sorted = sort_corpus(corpus, partition);
    PTree tree = build_ptree(sorted, partition);
    assign_codes(tree);

    IndexBundle bundle;
    bundle.vocab = corpus.vocab;
    bundle.group = generate_group_lists(tree, partition, corpus.n_docs());
    bundle.inverted = build_inverted(corpus);
    return bundle;
}

namespace {

constexpr char kMagic[4] = {'G', 'L', 'I', 'X'};
constexpr std::uint8_t kVersion = 1;

class Writer {
public:
    explicit Writer(const std::string& path) : out_(path, std::ios::binary) {
        if (!out_) throw IndexWriteError("cannot open '" + path + "' for writing");
    }
    void u8(std::uint8_t v) { out_.put(static_cast<char>(v)); }
    void u32(std::uint32_t v) {
        char buf[4];
        for (int i = 0; i < 4; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
        out_.write(buf, 4);
    }
    void u64(std::uint64_t v) {
        char buf[8];
        for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
        out_.write(buf, 8);
    }
    void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
    void bytes(const char* data, std::size_t n) { out_.write(data, static_cast<std::streamsize>(n)); }
    void finish(const std::string& path) {
        out_.flush();
        if (!out_) throw IndexWriteError("write failed for '" + path + "'");
    }

private:
    std::ofstream out_;
};

class Reader {
public:
    explicit Reader(const std::string& path) : in_(path, std::ios::binary) {
        if (!in_) throw IndexFormatError("cannot open index file '" + path + "'");
    }
    std::uint8_t u8() {
        int c = in_.get();
        if (c == EOF) throw IndexFormatError("truncated index file");
        return static_cast<std::uint8_t>(c);
    }
    std::uint32_t u32() {
        char buf[4];
        read(buf, 4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(buf[i])) << (8 * i);
        return v;
    }
    std::uint64_t u64() {
        char buf[8];
        read(buf, 8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[i])) << (8 * i);
        return v;
    }
    double f64() { return std::bit_cast<double>(u64()); }
    void read(char* buf, std::size_t n) {
        in_.read(buf, static_cast<std::streamsize>(n));
        if (in_.gcount() != static_cast<std::streamsize>(n))
            throw IndexFormatError("truncated index file");
    }
    bool at_eof() { return in_.peek() == EOF; }

private:
    std::ifstream in_;
};

void write_did_set(Writer& w, const std::vector<DocId>& dids) {
    w.u32(static_cast<std::uint32_t>(dids.size()));
    for (DocId d : dids) w.u32(d);
}

std::vector<DocId> read_did_set(Reader& r, std::uint32_t n_docs) {
    std::uint32_t n = r.u32();
    if (n == 0 || n > n_docs) throw IndexFormatError("bad did_set length");
    std::vector<DocId> dids(n);
    for (auto& d : dids) d = r.u32();
    for (std::size_t i = 1; i < dids.size(); ++i)
        if (dids[i] <= dids[i - 1]) throw IndexFormatError("did_set not strictly increasing");
    return dids;
}

}  // namespace

void save_index(const IndexBundle& bundle, const std::string& path) {
    if (path.empty()) throw IndexWriteError("empty index path");
    Writer w(path);
    w.bytes(kMagic, 4);
    w.u8(kVersion);
    w.u32(bundle.group.n_docs);
    w.f64(bundle.group.partition.zeta);

    const auto& tokens = bundle.vocab.tokens();
    w.u32(static_cast<std::uint32_t>(tokens.size()));
    for (const std::string& tok : tokens) {
        w.u32(static_cast<std::uint32_t>(tok.size()));
        w.bytes(tok.data(), tok.size());
    }

    const FrequencyPartition& part = bundle.group.partition;
    w.u32(part.n_frequent);
    for (TermId t : part.order) w.u32(t);

    for (const GroupList& list : bundle.group.lists) {
        w.u32(static_cast<std::uint32_t>(list.tuples.size()));
        for (const GroupTuple& tuple : list.tuples) {
            w.u32(tuple.code.pre);
            w.u32(tuple.code.post);
            write_did_set(w, tuple.did_set);
        }
    }

    for (const auto& postings : bundle.inverted.postings) write_did_set(w, postings);
    w.finish(path);
}

IndexBundle load_index(const std::string& path) {
    Reader r(path);
    char magic[4];
    r.read(magic, 4);
    if (std::memcmp(magic, kMagic, 4) != 0) throw IndexFormatError("bad magic bytes");
    std::uint8_t version = r.u8();
    if (version != kVersion)
        throw IndexVersionError("unsupported index version " + std::to_string(version));

    IndexBundle bundle;
    std::uint32_t n_docs = r.u32();
    double zeta = r.f64();
    if (!(zeta >= 0.0 && zeta <= 1.0)) throw IndexFormatError("threshold outside [0,1]");

    std::uint32_t n_terms = r.u32();
    for (std::uint32_t i = 0; i < n_terms; ++i) {
        std::uint32_t len = r.u32();
        if (len > (1u << 20)) throw IndexFormatError("token length implausible");
        std::string tok(len, '\0');
        r.read(tok.data(), len);
        if (bundle.vocab.add(tok) != i) throw IndexFormatError("duplicate vocabulary token");
    }

    FrequencyPartition part;
    part.zeta = zeta;
    part.threshold = zeta * static_cast<double>(n_docs);
    part.n_frequent = r.u32();
    if (part.n_frequent > n_terms) throw IndexFormatError("frequent count exceeds vocabulary");
    part.order.resize(n_terms);
    part.rank.assign(n_terms, n_terms);
    for (std::uint32_t pos = 0; pos < n_terms; ++pos) {
        TermId t = r.u32();
        if (t >= n_terms || part.rank[t] != n_terms)
            throw IndexFormatError("term order is not a permutation");
        part.order[pos] = t;
        part.rank[t] = pos;
    }

    bundle.group.partition = std::move(part);
    bundle.group.n_docs = n_docs;
    bundle.group.lists.resize(n_terms);
    for (auto& list : bundle.group.lists) {
        std::uint32_t n_tuples = r.u32();
        list.tuples.resize(n_tuples);
        std::uint32_t prev_pre = 0;
        bool first = true;
        for (auto& tuple : list.tuples) {
            tuple.code.pre = r.u32();
            tuple.code.post = r.u32();
            if (!first && tuple.code.pre <= prev_pre)
                throw IndexFormatError("group-list not sorted by pre-order");
            prev_pre = tuple.code.pre;
            first = false;
            tuple.did_set = read_did_set(r, n_docs);
        }
    }

    bundle.inverted.n_docs = n_docs;
    bundle.inverted.postings.resize(n_terms);
    for (auto& postings : bundle.inverted.postings) postings = read_did_set(r, n_docs);

    if (!r.at_eof()) throw IndexFormatError("trailing bytes after index payload");
    return bundle;
}

}  // namespace grouplist
