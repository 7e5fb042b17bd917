#ifndef GREENRING_ERRORS_HPP
#define GREENRING_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace greenring {

/* Raised when an operation would build a matrix larger than the configured
 * dimension cap.  Carries the name of the blocking object so callers can
 * report exactly what was skipped. */
class CapExceededError : public std::runtime_error {
public:
    CapExceededError(std::string object, std::size_t dim, std::size_t cap)
        : std::runtime_error(object + ": dimension " + std::to_string(dim) +
                             " exceeds cap " + std::to_string(cap)),
          object_(std::move(object)), dim_(dim), cap_(cap) {}

    const std::string& object() const noexcept { return object_; }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::string object_;
    std::size_t dim_;
    std::size_t cap_;
};

/* Internal consistency failure: a quantity that is provably an integer or
 * provably nonnegative came out otherwise.  Never clamped, always fatal. */
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace greenring

#endif
