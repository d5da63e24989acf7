#pragma once

#include <stdexcept>
#include <string>

namespace jetgerm {

/// Failure kinds surfaced by the kernel and the simulator.
enum class errc {
    degree_mismatch,
    nonvanishing_constant_term,
    not_divisible_at_truncation,
    parallel_fields,
    order_too_low,
    mode_mismatch,
    domain_violation,
    budget_exhausted,
    precondition_violated,
    not_a_saddle,
    singular,
    divide_by_zero,
    unknown_command,
    malformed_input,
};

const char* errc_name(errc c);

/// Typed error carrying an errc; the CLI maps these to exit status 1.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::nonvanishing_constant_term: return "NonvanishingConstantTerm";
        case errc::not_divisible_at_truncation: return "NotDivisibleAtTruncation";
        case errc::parallel_fields: return "ParallelFields";
        case errc::order_too_low: return "OrderTooLow";
        case errc::mode_mismatch: return "ModeMismatch";
        case errc::domain_violation: return "DomainViolation";
        case errc::budget_exhausted: return "BudgetExhausted";
        case errc::precondition_violated: return "PreconditionViolated";
        case errc::not_a_saddle: return "NotASaddle";
        case errc::singular: return "Singular";
        case errc::divide_by_zero: return "DivideByZero";
        case errc::unknown_command: return "UnknownCommand";
        case errc::malformed_input: return "MalformedInput";
    }
    return "UnknownError";
}

} // namespace jetgerm
