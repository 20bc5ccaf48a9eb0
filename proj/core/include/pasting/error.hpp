#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pasting {

enum class ErrorKind {
  UnknownFace,
  InvalidScheme,
  InvalidOrder,
  InvalidMove,
  InvalidLabelling,
  SigmaNotFound,
  SwapNotIndependent,
  MoveNotApplicable,
  FaceAbsent,
  DisconnectedOverlap,
  NotCaseA,
  NotCaseB,
  ShapeMismatch,
  LabelOnMergedFace,
  PairsNotDisjoint,
  UnsupportedConfiguration,
  ParseError,
};

std::string_view toString(ErrorKind kind);

/// Exception carrying a machine-readable kind; the message names the offending ids.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(std::string(toString(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace pasting
