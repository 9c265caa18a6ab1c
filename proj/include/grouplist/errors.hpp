#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grouplist {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyCorpus : Error {
    EmptyCorpus() : Error("corpus is empty") {}
    using Error::Error;
};

struct MalformedDocument : Error {
    MalformedDocument(std::size_t line_no, const std::string& what)
        : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    std::size_t line;
};

struct DuplicateDocId : Error {
    explicit DuplicateDocId(std::uint64_t id)
        : Error("duplicate document id " + std::to_string(id)) {}
};

struct InvalidThreshold : Error {
    using Error::Error;
};

struct InternalInconsistency : Error {
    using Error::Error;
};

struct RankOrderViolation : Error {
    using Error::Error;
};

struct MissingCodes : Error {
    MissingCodes() : Error("tree has no pre/post-order codes; run assign_codes first") {}
};

struct IndexWriteError : Error {
    using Error::Error;
};

struct IndexFormatError : Error {
    using Error::Error;
};

struct IndexVersionError : Error {
    using Error::Error;
};

struct InvalidQuery : Error {
    using Error::Error;
};

struct InvalidParams : Error {
    using Error::Error;
};

struct InsufficientTerms : Error {
    using Error::Error;
};

struct CorrectnessFailure : Error {
    using Error::Error;
};

}  // namespace grouplist
