#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bdim {

using ElementId = std::uint32_t;
using ElementPair = std::pair<ElementId, ElementId>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Relations whose closure forces x < x.
struct CycleError : Error {
  using Error::Error;
};

struct OverlapError : Error {
  using Error::Error;
};

// merge_at_cut inputs whose supports do not meet in exactly the cut point.
struct BadIntersectionError : Error {
  using Error::Error;
};

struct DisconnectedError : Error {
  using Error::Error;
};

struct SameZError : Error {
  using Error::Error;
};

struct NotIncomparableError : Error {
  using Error::Error;
};

/// Raised when a set of incomparable pairs contains an alternating cycle.
/// The offending cycle is attached so callers can report it.
struct NotReversibleError : Error {
  NotReversibleError(const std::string& what, std::vector<ElementPair> cycle)
      : Error(what), certificate(std::move(cycle)) {}
  std::vector<ElementPair> certificate;
};

struct NotForestError : Error {
  using Error::Error;
};

struct BudgetError : Error {
  using Error::Error;
};

struct SupportError : Error {
  using Error::Error;
};

struct SingleComponentError : Error {
  using Error::Error;
};

// Input files and JSON documents that do not parse.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace bdim
