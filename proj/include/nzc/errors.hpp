#pragma once

#include <stdexcept>
#include <string>

namespace nzc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An edge endpoint is outside [0, vertex_count).
struct InvalidEdge : Error {
  using Error::Error;
};

/// An edge joins a vertex to itself.
struct SelfLoopRejected : Error {
  using Error::Error;
};

/// The explicit vertex enumeration would exceed the configured cap.
struct ExplicitTooLarge : Error {
  using Error::Error;
};

/// A formula evaluation needed an injected symbol value that was not supplied.
struct MissingSymbolInput : Error {
  using Error::Error;
};

struct EmptyGrid : Error {
  using Error::Error;
};

struct UnsupportedFormat : Error {
  using Error::Error;
};

/// Malformed textual input (edge lists, grid lists, config files).
struct ParseError : Error {
  using Error::Error;
};

/// Command invocation problem; the CLI maps this to exit status 64.
struct UsageError : Error {
  using Error::Error;
};

}  // namespace nzc
