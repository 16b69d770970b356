#include "bolzano/error.hpp"

namespace bolzano {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroBase: return "ZeroBase";
    case ErrorKind::InvalidIndex: return "InvalidIndex";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NegativePowerDelay: return "NegativePowerDelay";
    case ErrorKind::LazyPatchUnsupported: return "LazyPatchUnsupported";
    case ErrorKind::LazyInput: return "LazyInput";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::BaseOne: return "BaseOne";
    case ErrorKind::NegativePowerTerm: return "NegativePowerTerm";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::ZeroProbeValue: return "ZeroProbeValue";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::InvalidProbe: return "InvalidProbe";
    case ErrorKind::NotInfinitelyClose: return "NotInfinitelyClose";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& operation,
                    std::optional<Index> index, const std::string& detail) {
  std::string out = operation + ": " + std::string(to_string(kind));
  if (index) out += "(" + std::to_string(*index) + ")";
  if (!detail.empty()) out += ": " + detail;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, std::string operation, std::optional<Index> index,
             std::string detail)
    : std::runtime_error(compose(kind, operation, index, detail)),
      kind_(kind),
      operation_(std::move(operation)),
      index_(index),
      detail_(std::move(detail)) {}

std::string Error::message() const {
  std::string out(to_string(kind_));
  if (index_) out += "(" + std::to_string(*index_) + ")";
  return out;
}

}  // namespace bolzano
