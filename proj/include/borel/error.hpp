#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace borel {

/// Arbitrary-precision integer used for every count.
using bigint = boost::multiprecision::cpp_int;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the ground set of the poset it is used with.
struct ground_set_error : error {
  using error::error;
};

/// A caller-visible size limit would be exceeded.
struct cap_exceeded : error {
  using error::error;
};

struct parse_error : error {
  using error::error;
};

struct precondition_error : error {
  using error::error;
};

/// A structural claim (lattice, graded, ...) does not hold for the input.
struct structure_error : error {
  using error::error;
};

}  // namespace borel
