#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fourfold {

// Domain error carrying a stable machine-readable name ("NotCalabiYau",
// "BoxViolation", ...). The CLI surfaces the name to the user and tests
// match on it.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void raise(const std::string& name, const std::string& message) {
    throw Error(name, message);
}

}  // namespace fourfold
