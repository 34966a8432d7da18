#pragma once

#include <stdexcept>
#include <string>

namespace g2inv {

// Domain errors carry a stable name that the CLI surfaces verbatim,
// e.g. "NonSymmetric", "NotLagrangian", "RokhlinViolation".
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(const std::string& name, const std::string& what) {
    throw DomainError(name, what);
}

}  // namespace g2inv
