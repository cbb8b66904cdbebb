#ifndef LIEBALL_ERRORS_HPP
#define LIEBALL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lieball {

// parameter outside the admissible range (pole, Wallach bound, ...)
class parameter_error : public std::domain_error {
 public:
  explicit parameter_error(const std::string& what) : std::domain_error(what) {}
};

// a series, quadrature or iteration failed to reach its tolerance
class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// a principal-branch power could not be certified along the homotopy
class branch_error : public std::runtime_error {
 public:
  explicit branch_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lieball

#endif
