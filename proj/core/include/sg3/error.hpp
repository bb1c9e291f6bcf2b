#ifndef SG3_ERROR_HPP_
#define SG3_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sg3 {

enum class ErrorKind {
  kNonCoprime,
  kNotSorted,
  kNotMinimal,
  kD3TooLarge,
  kResourceLimit,
  kNumeratorShape,
  kUnsupportedR,
  kNotSymmetric,
};

std::string_view error_name(ErrorKind kind);

// Validation errors are the first four kinds; everything else signals a
// configuration limit or a violated structural assumption.
inline bool is_validation_error(ErrorKind kind) {
  return kind == ErrorKind::kNonCoprime || kind == ErrorKind::kNotSorted ||
         kind == ErrorKind::kNotMinimal || kind == ErrorKind::kD3TooLarge;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNonCoprime: return "NonCoprime";
    case ErrorKind::kNotSorted: return "NotSorted";
    case ErrorKind::kNotMinimal: return "NotMinimal";
    case ErrorKind::kD3TooLarge: return "D3TooLarge";
    case ErrorKind::kResourceLimit: return "ResourceLimit";
    case ErrorKind::kNumeratorShape: return "NumeratorShapeError";
    case ErrorKind::kUnsupportedR: return "UnsupportedR";
    case ErrorKind::kNotSymmetric: return "NotSymmetric";
  }
  return "Unknown";
}

}  // namespace sg3

#endif  // SG3_ERROR_HPP_
