#ifndef HLPARSE_ERRORS_H_
#define HLPARSE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace hlparse {

// A precondition of an operation was violated by the caller.
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// Malformed input text. line is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A sentence parsed fine but its head structure is not a tree.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Two treebanks that must be parallel are not.
class MismatchError : public std::runtime_error {
 public:
  MismatchError(const std::string& what, int sentence_index)
      : std::runtime_error(what), sentence_index_(sentence_index) {}
  int sentence_index() const { return sentence_index_; }  // 1-based

 private:
  int sentence_index_;
};

// Corrupt or incompatible model file.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hlparse

#endif  // HLPARSE_ERRORS_H_
