#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fusionkit {

enum class ErrorKind {
  InconsistentPresentation,
  TooLarge,
  NotAutomorphism,
  Singular,
  SearchExhausted,
  NotACocycle,
  ShapeMismatch,
  NoFpfElement,
  NotInSylow,
  NotWeaklyClosed,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// that callers (the CLI in particular) can map it to a report status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InconsistentPresentation: return "InconsistentPresentation";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NoFpfElement: return "NoFpfElement";
    case ErrorKind::NotInSylow: return "NotInSylow";
    case ErrorKind::NotWeaklyClosed: return "NotWeaklyClosed";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace fusionkit
