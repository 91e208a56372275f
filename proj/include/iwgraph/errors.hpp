#pragma once

#include <stdexcept>
#include <string>

namespace iwgraph {

// The CLI maps each of these onto its own exit code.

/// Malformed or inconsistent input (config, graph, group, voltage data).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain, e.g. on a disconnected graph.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size bound would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace iwgraph
