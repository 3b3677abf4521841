#pragma once

#include <stdexcept>
#include <string>

namespace nepstem {

// Base class for all data-level errors raised by the toolkit. The CLI maps
// these to exit code 2; usage errors stay with the argument parser.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyAfterNormalization : Error {
    using Error::Error;
};

struct MissingFile : Error {
    using Error::Error;
};

struct MalformedEntry : Error {
    using Error::Error;
};

struct DuplicateId : Error {
    using Error::Error;
};

struct MalformedRecord : Error {
    using Error::Error;
};

struct DuplicateWord : Error {
    using Error::Error;
};

struct EmptyCorpus : Error {
    using Error::Error;
};

struct ModeMismatch : Error {
    using Error::Error;
};

struct UnlabeledDocument : Error {
    using Error::Error;
};

struct ClassTooSmall : Error {
    using Error::Error;
};

struct NonPositiveAlpha : Error {
    using Error::Error;
};

struct EmptyVocabulary : Error {
    using Error::Error;
};

}  // namespace nepstem
