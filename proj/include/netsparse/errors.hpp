#pragma once

#include <stdexcept>
#include <string>

namespace netsparse {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonFiniteInput : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct InsufficientHistory : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct CyclicGraph : Error {
  using Error::Error;
};

struct MultiplePaths : Error {
  explicit MultiplePaths(int vertex)
      : Error("vertex " + std::to_string(vertex) + " has more than one path to the estimator"),
        vertex(vertex) {}
  int vertex;
};

struct Unreachable : Error {
  explicit Unreachable(int vertex)
      : Error("vertex " + std::to_string(vertex) + " has no path to the estimator"),
        vertex(vertex) {}
  int vertex;
};

struct SeedMismatch : Error {
  using Error::Error;
};

struct MissingTrace : Error {
  using Error::Error;
};

}  // namespace netsparse
