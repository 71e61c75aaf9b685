#pragma once

#include <stdexcept>

namespace qss {

// Input text could not be parsed (stabilizer files, Pauli words, secret specs).
class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands disagree in p, length or qudit count.
class DimensionMismatch : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural invariant failed: non-prime modulus, non-commuting generators,
// phase-convention violation, out-of-range index set, ...
class ValidationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// p^n exceeds the configured dense-simulation cap.
class CapExceeded : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Companion-basis extraction failed orthonormality: the tested set is not a
// qualified set (equivalently, its complement is not forbidden).
class NotQualified : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// |J| < k + ell: no room to carve the padding register out of the J block.
class PaddingError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input state is not a codeword of the bundle's code, or the auxiliary
// registers fail to disentangle on reconstruction.
class NotACodeword : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qss
