#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gspline {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input file or JSON document.
class ParseError : public Error {
public:
    using Error::Error;
};

// Bad numeric input (zero modulus, non-positive weight, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class InvalidVertex : public Error {
public:
    explicit InvalidVertex(int v)
        : Error("vertex index out of range: " + std::to_string(v)), vertex(v) {}
    int vertex;
};

// Operation requires a simple graph but the input has parallel edges.
class NotSimple : public Error {
public:
    using Error::Error;
};

class Disconnected : public Error {
public:
    using Error::Error;
};

// Spline length does not match the graph's vertex count.
class LengthMismatch : public Error {
public:
    LengthMismatch(std::size_t got, std::size_t want)
        : Error("spline has " + std::to_string(got) + " entries, graph has " +
                std::to_string(want) + " vertices"),
          got(got), want(want) {}
    std::size_t got;
    std::size_t want;
};

class ZeroSpline : public Error {
public:
    ZeroSpline() : Error("the zero spline has no leading term") {}
};

// Path enumeration found more paths than the caller's limit. `found` carries
// the partial count so the caller can raise the limit.
class PathExplosion : public Error {
public:
    PathExplosion(std::size_t limit, std::size_t found)
        : Error("path enumeration exceeded limit of " + std::to_string(limit) + " paths"),
          limit(limit), found(found) {}
    std::size_t limit;
    std::size_t found;
};

// Spline enumeration would produce more splines than the cap.
class CapExceeded : public Error {
public:
    explicit CapExceeded(std::size_t cap)
        : Error("spline enumeration exceeded cap of " + std::to_string(cap)), cap(cap) {}
    std::size_t cap;
};

// CRT brute-force scan range is too large to iterate.
class ScanTooLarge : public Error {
public:
    using Error::Error;
};

// Divisor scan in the minimality oracle exceeded its bound.
class SearchBoundExceeded : public Error {
public:
    using Error::Error;
};

// Exact division failed during basis decomposition. For a verified spline this
// signals a broken basis, not a data condition.
class NotInSpan : public Error {
public:
    explicit NotInSpan(std::size_t index)
        : Error("entry " + std::to_string(index + 1) +
                " is not divisible by the basis leading term"),
          index(index) {}
    std::size_t index;
};

}  // namespace gspline
