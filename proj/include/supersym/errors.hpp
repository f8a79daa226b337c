#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace supersym {

// Domain-level failure: a well-formed request whose input lies outside the
// operation's domain (non-symmetric input, oversized component, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input is not quasi-symmetric (nonzero residual after M-extraction).
class NotQuasiSymmetric : public DomainError {
public:
    explicit NotQuasiSymmetric(const std::string& msg) : DomainError(msg) {}
};

// Quasi-symmetric input has no preimage in the symmetric subspace.
class NotSymmetric : public DomainError {
public:
    explicit NotSymmetric(const std::string& msg) : DomainError(msg) {}
};

// The coloring expansion was requested for a graph with a component
// carrying two or more white vertices.
class MultiWhiteComponent : public DomainError {
public:
    explicit MultiWhiteComponent(const std::string& msg) : DomainError(msg) {}
};

// Expression syntax error; offset is a byte position into the source.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " at offset " + std::to_string(offset)), offset_(offset)
    {
    }
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace supersym
