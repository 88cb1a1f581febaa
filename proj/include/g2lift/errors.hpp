#ifndef G2LIFT_ERRORS_HPP
#define G2LIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace g2lift {

struct InsufficientPrecision : std::runtime_error {
  explicit InsufficientPrecision(const std::string& what) : std::runtime_error(what) {}
};

struct NotPositiveDefinite : std::runtime_error {
  explicit NotPositiveDefinite(const std::string& what) : std::runtime_error(what) {}
};

struct DegeneratePair : std::runtime_error {
  explicit DegeneratePair(const std::string& what) : std::runtime_error(what) {}
};

struct MissingEntry : std::runtime_error {
  explicit MissingEntry(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct DuplicateClassError : std::runtime_error {
  explicit DuplicateClassError(const std::string& what) : std::runtime_error(what) {}
};

struct CuspidalityError : std::runtime_error {
  explicit CuspidalityError(const std::string& what) : std::runtime_error(what) {}
};

struct WeightError : std::runtime_error {
  explicit WeightError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace g2lift

#endif
