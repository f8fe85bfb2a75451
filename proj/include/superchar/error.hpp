#pragma once

#include <stdexcept>
#include <string>

namespace superchar {

// Machine-readable error classes; scripted sweeps classify failures by code.
enum class ErrorCode { Atypical, NotDominant, BadPrime, Range };

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Atypical: return "E_ATYPICAL";
    case ErrorCode::NotDominant: return "E_NOT_DOMINANT";
    case ErrorCode::BadPrime: return "E_BAD_PRIME";
    case ErrorCode::Range: return "E_RANGE";
  }
  return "E_UNKNOWN";
}

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Always-on internal invariant check (survives NDEBUG builds).
inline void check(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("invariant violated: ") + what);
}

}  // namespace superchar
