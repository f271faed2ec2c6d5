#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gstar {

// Invalid or inconsistent input data.  The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// A construction that must verify did not.  Exit code 3.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured budget.  Exit code 4.
// Carries the exact required count so callers can raise limits knowingly.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, std::uint64_t required, std::uint64_t budget)
        : std::runtime_error(what + ": requires " + std::to_string(required) +
                             ", budget " + std::to_string(budget)),
          required_(required),
          budget_(budget) {}
    std::uint64_t required() const { return required_; }
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

// Reduction mod p changed the independence pattern of the input forms.
class BadReductionError : public ValidationError {
public:
    explicit BadReductionError(std::uint32_t p)
        : ValidationError("bad_reduction",
                          "rank pattern changes modulo " + std::to_string(p)),
          p_(p) {}
    std::uint32_t prime() const { return p_; }

private:
    std::uint32_t p_;
};

}  // namespace gstar
