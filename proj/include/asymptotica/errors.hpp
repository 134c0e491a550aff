#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asymptotica {

/// Base of every error the library throws. `category()` decides the CLI exit code.
class Error : public std::runtime_error {
 public:
  enum class Category { Domain, Numeric, Configuration };

  explicit Error(const std::string& what, Category category = Category::Domain)
      : std::runtime_error(what), category_(category) {}

  Category category() const noexcept { return category_; }

 private:
  Category category_;
};

#define ASYMPTOTICA_DEFINE_ERROR(Name, Cat)                                   \
  class Name : public Error {                                                 \
   public:                                                                    \
    explicit Name(const std::string& what) : Error(what, Category::Cat) {}   \
  };

// Field arithmetic.
ASYMPTOTICA_DEFINE_ERROR(DomainMismatch, Domain)
ASYMPTOTICA_DEFINE_ERROR(DivisionByZero, Domain)
ASYMPTOTICA_DEFINE_ERROR(NoSquareRoot, Domain)
ASYMPTOTICA_DEFINE_ERROR(NotPositive, Domain)
ASYMPTOTICA_DEFINE_ERROR(Unordered, Domain)
ASYMPTOTICA_DEFINE_ERROR(NotFinite, Domain)
ASYMPTOTICA_DEFINE_ERROR(ZeroHasNoClass, Domain)
ASYMPTOTICA_DEFINE_ERROR(InvalidElement, Domain)

// Numerical machinery.
ASYMPTOTICA_DEFINE_ERROR(Infeasible, Numeric)
ASYMPTOTICA_DEFINE_ERROR(NumericError, Numeric)
ASYMPTOTICA_DEFINE_ERROR(CoverageError, Numeric)
ASYMPTOTICA_DEFINE_ERROR(NumericalInconsistency, Numeric)
ASYMPTOTICA_DEFINE_ERROR(NoClassicalSolution, Numeric)
ASYMPTOTICA_DEFINE_ERROR(NoSolutionFound, Numeric)

// Harness.
ASYMPTOTICA_DEFINE_ERROR(ConfigError, Configuration)

#undef ASYMPTOTICA_DEFINE_ERROR

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position), Category::Configuration),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace asymptotica
