#ifndef BRAIDORDER_ERRORS_HPP
#define BRAIDORDER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace braidorder {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two objects that must live on the same strand count do not.
class StrandMismatch : public Error {
 public:
  explicit StrandMismatch(const std::string& what) : Error(what) {}
};

/// A strand count below the smallest admissible value (2).
class StrandTooSmall : public Error {
 public:
  explicit StrandTooSmall(const std::string& what) : Error(what) {}
};

/// A generator or position index outside its valid range.
class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

/// Downward shift applied to a letter it would push below 1.
class LetterTooSmall : public Error {
 public:
  explicit LetterTooSmall(const std::string& what) : Error(what) {}
};

/// A word strayed outside the parabolic submonoid it must live in.
class MembershipViolation : public Error {
 public:
  explicit MembershipViolation(const std::string& what) : Error(what) {}
};

/// Two codes from different contexts (strand count or arrangement) compared.
class ContextMismatch : public Error {
 public:
  explicit ContextMismatch(const std::string& what) : Error(what) {}
};

/// A signed word was used where a positive word is required.
class NotPositive : public Error {
 public:
  explicit NotPositive(const std::string& what) : Error(what) {}
};

/// A brute-force enumeration exceeded its configured budget.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

/// An internal invariant failed; indicates a bug, not a caller error.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace braidorder

#endif  // BRAIDORDER_ERRORS_HPP
