#pragma once

#include <stdexcept>
#include <string>

namespace cylhardy {

// Thrown when a numerical routine cannot certify its target accuracy.
// Carries the best available estimate so callers can still inspect it.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& msg, double best_value, double best_error)
        : std::runtime_error(msg), best_value_(best_value), best_error_(best_error) {}

    double best_value() const noexcept { return best_value_; }
    double best_error() const noexcept { return best_error_; }

private:
    double best_value_;
    double best_error_;
};

// Invalid parameter combinations reuse std::domain_error; these helpers keep
// message formatting in one place.
[[noreturn]] inline void throw_domain(const std::string& msg) {
    throw std::domain_error(msg);
}

} // namespace cylhardy
