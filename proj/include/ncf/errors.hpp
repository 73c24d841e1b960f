#ifndef NCF_ERRORS_HPP
#define NCF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ncf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct SeriesUndefined : Error {
    using Error::Error;
};

struct NotInvertible : Error {
    using Error::Error;
};

struct NotAdmissible : Error {
    using Error::Error;
};

struct InvalidDirection : Error {
    using Error::Error;
};

struct RankNotCertified : Error {
    using Error::Error;
};

struct AlphabetMismatch : Error {
    using Error::Error;
};

struct SingularAtAllProbes : Error {
    using Error::Error;
};

struct SingularPencil : Error {
    using Error::Error;
};

struct StepSingular : Error {
    using Error::Error;
};

struct PatternBilinear : Error {
    using Error::Error;
};

struct SingularIterate : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

struct UnknownLetter : Error {
    using Error::Error;
};

} // namespace ncf

#endif
