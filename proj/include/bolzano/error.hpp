#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bolzano {

/// Sequence index; valid indices start at 1.
using Index = std::int64_t;

enum class ErrorKind {
  DivisionByZero,
  ZeroBase,
  InvalidIndex,
  InvalidArgument,
  NegativePowerDelay,
  LazyPatchUnsupported,
  LazyInput,
  ZeroDivisor,
  DegreeCapExceeded,
  BaseOne,
  NegativePowerTerm,
  DomainViolation,
  ZeroProbeValue,
  NotFinite,
  InvalidProbe,
  NotInfinitelyClose,
  LimitExceeded,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the engine. `operation` names the public
/// operation that rejected its input; `index` is set for errors tied to a
/// sequence position (domain violations, zero probe values).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string operation, std::optional<Index> index = {},
        std::string detail = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& operation() const noexcept { return operation_; }
  std::optional<Index> index() const noexcept { return index_; }
  const std::string& detail() const noexcept { return detail_; }

  /// Kind name, with the index appended as `Kind(n)` when present.
  std::string message() const;

 private:
  ErrorKind kind_;
  std::string operation_;
  std::optional<Index> index_;
  std::string detail_;
};

}  // namespace bolzano
