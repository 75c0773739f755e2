#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace fzwave {

namespace detail {
inline std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}
} // namespace detail

// Out-of-range input. `field` names the offending parameter, `interval` the
// admissible set in plain notation, e.g. "(0,1)".
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string field, std::string interval, double value)
        : std::invalid_argument(field + " = " + detail::short_num(value) + " is outside " + interval),
          field_(std::move(field)), interval_(std::move(interval)), value_(value) {}
    ValidationError(std::string field, std::string what)
        : std::invalid_argument(what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }
    const std::string& interval() const noexcept { return interval_; }
    double value() const noexcept { return value_; }

private:
    std::string field_;
    std::string interval_;
    double value_ = 0.0;
};

// Argument valid as a parameter set but outside the operation's domain
// (point on the branch cut, t <= 0 where t > 0 is needed, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A numerical procedure could not reach its target. `estimate` is the best
// error estimate achieved before giving up.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double estimate)
        : std::runtime_error(what + " (achieved error estimate " + detail::short_num(estimate) + ")"),
          estimate_(estimate) {}

    double estimate() const noexcept { return estimate_; }

private:
    double estimate_;
};

} // namespace fzwave
