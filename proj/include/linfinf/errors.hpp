#pragma once

#include <stdexcept>
#include <string>

namespace linfinf {

/// A figure contains a positive-area box, so it is not a countable union of
/// finite-measure sets and cannot be restricted to.
struct NotSigmaFinite : std::runtime_error {
  explicit NotSigmaFinite(const std::string& what) : std::runtime_error(what) {}
};

/// The L1 norm of the function is infinite; the pairing is undefined.
struct NotIntegrable : std::runtime_error {
  explicit NotIntegrable(const std::string& what) : std::runtime_error(what) {}
};

/// Norm-attainment witness requested for a germ of norm zero.
struct ZeroGerm : std::runtime_error {
  explicit ZeroGerm(const std::string& what) : std::runtime_error(what) {}
};

/// Line-form weights failed the finite-sup validation.
struct Unbounded : std::runtime_error {
  explicit Unbounded(const std::string& what) : std::runtime_error(what) {}
};

/// Input is outside the class an operation can handle exactly.
struct Unsupported : std::runtime_error {
  explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed serialized input. `path` locates the offending element.
struct ParseError : std::runtime_error {
  std::string path;
  ParseError(std::string path_, const std::string& what)
      : std::runtime_error(path_ + ": " + what), path(std::move(path_)) {}
};

}  // namespace linfinf
