#pragma once

#include <stdexcept>
#include <string>

namespace gbf {

// Thrown when an iterative or adaptive numerical scheme fails to reach its
// target accuracy (quadrature budget exhausted, divergent integral, ...).
// Domain/precondition violations throw std::domain_error instead.
class numerical_error : public std::runtime_error {
  public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gbf
