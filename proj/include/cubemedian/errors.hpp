#pragma once

#include <stdexcept>
#include <string>

namespace cubemedian {

// Base for every error raised by the library. The CLI maps ResourceError to
// exit status 2 and everything else to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad generator index, unknown symbol, bad JSON field.
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured cap (ball vertices, DOT nodes, search radius) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A query needs vertices outside the materialized region.
class RegionError : public Error {
 public:
  using Error::Error;
};

// A precondition on the mathematical input does not hold (non-median graph,
// non-convex set, non-geodesic path, invalid ray).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A property guaranteed by the theory failed. Always indicates a bug in a
// provider or an algorithm, never bad user input.
class ProviderError : public Error {
 public:
  using Error::Error;
};

}  // namespace cubemedian
