#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotcert {

/// Bad caller input: malformed files, unknown labels, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MoveErrorKind {
  TriangleAbsent,
  LabelClash,
  DegreeNotThree,
  EdgeAbsent,
  VertexAbsent,
};

const char* to_string(MoveErrorKind kind);

class MoveError : public InputError {
 public:
  MoveError(MoveErrorKind kind, const std::string& detail)
      : InputError(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}
  MoveErrorKind kind() const { return kind_; }

 private:
  MoveErrorKind kind_;
};

/// A move script failed; `step()` is the zero-based index of the failing move.
class ScriptError : public InputError {
 public:
  ScriptError(std::size_t step, const MoveError& cause)
      : InputError("step " + std::to_string(step) + ": " + cause.what()), step_(step), kind_(cause.kind()) {}
  std::size_t step() const { return step_; }
  MoveErrorKind kind() const { return kind_; }

 private:
  std::size_t step_;
  MoveErrorKind kind_;
};

/// Unparseable or structurally invalid file content. `where()` names the
/// offending location (a JSON pointer, or a byte offset for syntax errors).
class FormatError : public InputError {
 public:
  FormatError(const std::string& where, const std::string& what)
      : InputError(where.empty() ? what : where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// An arc id is attached to the wrong number of rotation-list slots.
class AttachmentError : public FormatError {
 public:
  using FormatError::FormatError;
};

/// A diagram exceeds the crossing bound of an invariant computation.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace knotcert
