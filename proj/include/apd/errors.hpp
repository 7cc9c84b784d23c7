#ifndef APD_ERRORS_HPP
#define APD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace apd {

struct ZeroDenominator : std::domain_error {
    explicit ZeroDenominator(const std::string& what) : std::domain_error(what) {}
};

struct ZeroDivisor : std::domain_error {
    explicit ZeroDivisor(const std::string& what) : std::domain_error(what) {}
};

// A coefficient denominator vanishes at the requested lambda.
struct PoleAtLambda : std::domain_error {
    explicit PoleAtLambda(const std::string& what) : std::domain_error(what) {}
};

// Parameter outside the defined domain (lambda <= 0, lambda = 1, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

struct OrderMismatch : std::invalid_argument {
    explicit OrderMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NonUnitConstantTerm : std::domain_error {
    explicit NonUnitConstantTerm(const std::string& what) : std::domain_error(what) {}
};

struct IndexBeyondOrder : std::out_of_range {
    explicit IndexBeyondOrder(const std::string& what) : std::out_of_range(what) {}
};

struct OrderTooSmall : std::invalid_argument {
    explicit OrderTooSmall(const std::string& what) : std::invalid_argument(what) {}
};

struct BadIndex : std::invalid_argument {
    explicit BadIndex(const std::string& what) : std::invalid_argument(what) {}
};

struct MissingParameter : std::invalid_argument {
    explicit MissingParameter(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace apd

#endif
