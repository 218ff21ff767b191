#pragma once

#include <stdexcept>
#include <string>

namespace slicebundle {

// Shared error taxonomy. Every throwing contract in the library uses one of
// these types so callers can dispatch on the failure kind.
struct ZeroDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotUnit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotOrthonormal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CenterMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArityUnsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonInvertibleConstantTerm : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfDomain : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PoleHit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FrameMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainUnsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coefficient of a component series sticks out of the complex plane C(i)
// of its bound frame.
struct OffSliceCoefficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file or option value (CLI exits with code 2 on these).
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace slicebundle
