#pragma once

#include <stdexcept>
#include <string>

namespace tabgen {

// Base for all library errors. The CLI maps IoError/ParseError to exit
// code 1 and everything else (validation failures) to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

// tabledoc
struct RaggedGrid : Error {
  using Error::Error;
};
struct InvalidDocument : Error {
  using Error::Error;
};

// tokenizer
struct CorpusTooSmall : Error {
  using Error::Error;
};
struct UnknownId : Error {
  using Error::Error;
};

// pretrain_data
struct NoCells : Error {
  using Error::Error;
};
struct MalformedTarget : Error {
  using Error::Error;
};

// model
struct InvalidConfig : Error {
  using Error::Error;
};
struct IdOutOfRange : Error {
  using Error::Error;
};
struct LengthExceeded : Error {
  using Error::Error;
};
struct ShapeMismatch : Error {
  using Error::Error;
};
struct PadOnlyTarget : Error {
  using Error::Error;
};
struct VersionMismatch : Error {
  using Error::Error;
};
struct CorruptFile : Error {
  using Error::Error;
};

// trainer
struct NonFiniteLoss : Error {
  using Error::Error;
};

// sqlexec
struct SqlSyntaxError : Error {
  SqlSyntaxError(const std::string& msg, size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
  size_t position;
};
struct UnknownColumn : Error {
  using Error::Error;
};
struct EmptyResult : Error {
  using Error::Error;
};
struct NonNumericAggregate : Error {
  using Error::Error;
};

// tasks
struct CellOutOfBounds : Error {
  using Error::Error;
};

// metrics
struct LengthMismatch : Error {
  using Error::Error;
};

}  // namespace tabgen
