#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace threadlens {

enum class ErrorCode {
  InvalidId,
  DuplicateId,
  UnknownParent,
  CycleDetected,
  InvalidDuplicateRef,
  UnknownPost,
  EmptySubThread,
  AllPostsDuplicates,
  NotAPermutation,
  UnknownPostInAssignment,
  EmptyTopicList,
  NoLabelsPresent,
  EmptyThread,
  InvalidFlags,
  UnlabeledPost,
  InvalidConfig,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Raised by the codec; `where` names the JSON path or line/column of the problem.
class ParseError : public Error {
public:
  ParseError(std::string where, const std::string& message)
      : Error(ErrorCode::Parse, where + ": " + message), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

private:
  std::string where_;
};

}  // namespace threadlens
