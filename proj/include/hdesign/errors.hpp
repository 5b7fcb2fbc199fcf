#ifndef HDESIGN_ERRORS_HPP
#define HDESIGN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hdesign {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A search guard or node/time budget was hit.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

class InvalidOrdering : public Error {
public:
    using Error::Error;
};

class DegeneratePattern : public Error {
public:
    using Error::Error;
};

class NotBipartite : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// A construction tried to reuse an edge or produced a non-injective copy.
class ConstructionViolation : public Error {
public:
    using Error::Error;
};

class InsufficientTemplate : public Error {
public:
    using Error::Error;
};

class ExtensionRejected : public Error {
public:
    using Error::Error;
};

} // namespace hdesign

#endif // HDESIGN_ERRORS_HPP
