#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncreal {

/// Base of every error the library raises. kind() is the stable,
/// machine-readable name used in CLI error reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("ParseError", what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Path of child indices from the root of an expression tree to a node.
using ExprPath = std::vector<int>;

std::string path_to_string(const ExprPath& path);

/// An inverse inside an expression is singular at the evaluation point.
class DomainError : public Error {
 public:
  DomainError(ExprPath path, const std::string& subexpr)
      : Error("DomainError",
              "singular inverse at " + path_to_string(path) + ": " + subexpr),
        path_(std::move(path)) {}
  const ExprPath& path() const { return path_; }

 private:
  ExprPath path_;
};

/// The constant term of an inverted subexpression is singular at the
/// expansion point.
class NotInvertibleAtPoint : public Error {
 public:
  NotInvertibleAtPoint(ExprPath path, const std::string& subexpr)
      : Error("NotInvertibleAtPoint",
              "constant term not invertible at " + path_to_string(path) + ": " + subexpr),
        path_(std::move(path)) {}
  const ExprPath& path() const { return path_; }

 private:
  ExprPath path_;
};

#define NCREAL_SIMPLE_ERROR(Name)                                      \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(#Name, what) {}     \
  }

NCREAL_SIMPLE_ERROR(ShapeError);
NCREAL_SIMPLE_ERROR(NotSymmetric);
NCREAL_SIMPLE_ERROR(NotInvertible);
NCREAL_SIMPLE_ERROR(PencilSingular);
NCREAL_SIMPLE_ERROR(NotSimilar);
NCREAL_SIMPLE_ERROR(NotUnique);
NCREAL_SIMPLE_ERROR(NotSymmetricFunction);
NCREAL_SIMPLE_ERROR(NotTotallyReduced);
NCREAL_SIMPLE_ERROR(NoDomainPoint);
NCREAL_SIMPLE_ERROR(FormatError);
NCREAL_SIMPLE_ERROR(UsageError);

#undef NCREAL_SIMPLE_ERROR

inline std::string path_to_string(const ExprPath& path) {
  std::string out = "root";
  for (int step : path) out += "." + std::to_string(step);
  return out;
}

}  // namespace ncreal
