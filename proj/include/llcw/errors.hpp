#ifndef LLCW_ERRORS_HPP
#define LLCW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace llcw {

/// Bad configuration (e.g. a root-of-unity order not dividing the conductor).
struct config_error : std::runtime_error {
    explicit config_error(const std::string& m) : std::runtime_error(m) {}
};

/// An operation was called outside its stated domain.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& m) : std::runtime_error(m) {}
};

/// An identity that must hold by construction failed; indicates a bug.
struct consistency_error : std::runtime_error {
    explicit consistency_error(const std::string& m) : std::runtime_error(m) {}
};

/// Fixed-precision p-adic comparison could not be decided.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& m) : std::runtime_error(m) {}
};

} // namespace llcw

#endif
