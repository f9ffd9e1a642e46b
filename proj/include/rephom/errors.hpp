#pragma once

#include <stdexcept>
#include <string>

namespace rephom {

// Stable machine-readable error codes. The CLI maps categories to exit codes:
// config -> 2, math domain -> 3, budget -> 4.
enum class ErrorCode {
    ConfigError,
    NotInvertible,
    RelatorViolated,
    OrderViolated,
    ComplexInvalid,
    Unsupported,
    BudgetExceeded,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ConfigError: return "config_error";
        case ErrorCode::NotInvertible: return "not_invertible";
        case ErrorCode::RelatorViolated: return "relator_violated";
        case ErrorCode::OrderViolated: return "order_violated";
        case ErrorCode::ComplexInvalid: return "complex_invalid";
        case ErrorCode::Unsupported: return "unsupported";
        case ErrorCode::BudgetExceeded: return "budget_exceeded";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}

    ErrorCode code() const { return code_; }

    int exit_code() const {
        switch (code_) {
            case ErrorCode::ConfigError: return 2;
            case ErrorCode::BudgetExceeded: return 4;
            default: return 3;
        }
    }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

} // namespace rephom
