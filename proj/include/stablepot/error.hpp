#pragma once

#include <stdexcept>
#include <string>

namespace stablepot {

// Invalid numeric parameter (alpha out of range, negative radius, ...).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Evaluation requested exactly at a non-removable singularity.
class SingularityError : public std::domain_error {
public:
    explicit SingularityError(const std::string& what) : std::domain_error(what) {}
};

// Point outside the set where the operation is defined.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Adaptive quadrature ran out of budget before reaching its target.
// Carries the partial value and the error actually achieved.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double partial_value, double achieved_error)
        : std::runtime_error(what), partial_value(partial_value), achieved_error(achieved_error) {}
    double partial_value;
    double achieved_error;
};

// Perturbation series requested outside its certified contraction regime.
class NonContractiveError : public std::runtime_error {
public:
    NonContractiveError(const std::string& what, double contraction_factor)
        : std::runtime_error(what), contraction_factor(contraction_factor) {}
    double contraction_factor;
};

}  // namespace stablepot
