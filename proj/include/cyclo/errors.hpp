#pragma once

#include <stdexcept>
#include <string>

namespace cyclo {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// validate_cayley failures
struct BadEntry : Error {
    using Error::Error;
};
struct NoIdentity : Error {
    using Error::Error;
};
struct NotLatin : Error {
    using Error::Error;
};
struct NotAssociative : Error {
    NotAssociative(const std::string& what, int a, int b, int c)
        : Error(what), a(a), b(b), c(c) {}
    int a, b, c;  // witness triple: (a*b)*c != a*(b*c)
};

// Cayley text format problems (structure, not semantics).
struct FormatError : Error {
    using Error::Error;
};

// constructions
struct ProductTooLarge : Error {
    using Error::Error;
};
struct ClosureTooLarge : Error {
    using Error::Error;
};
struct NotAPermutation : Error {
    using Error::Error;
};
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position(position) {}
    std::size_t position;  // byte offset into the expression text
};

// subgroups
struct LatticeTooLarge : Error {
    using Error::Error;
};
struct NotASubgroup : Error {
    using Error::Error;
};
struct PrimeDoesNotDivide : Error {
    using Error::Error;
};

// oracle
struct OrderTooLarge : Error {
    using Error::Error;
};

}  // namespace cyclo
