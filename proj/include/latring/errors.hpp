#ifndef LATRING_ERRORS_HPP
#define LATRING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latring {

/* Error taxonomy; the CLI maps these onto exit codes. */

// Malformed descriptor / series / JSON input.  Exit code 2.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A window was too small to certify a conductor or to decide membership.  Exit code 3.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured enumeration cap was exceeded.  Exit code 4.
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Precondition violated by the caller (composite p, gcd != 1, division by zero, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A runtime-verified mathematical invariant failed.  Always a bug, never user error.
struct check_error : std::logic_error {
    explicit check_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void check(bool ok, const std::string& msg) {
    if (!ok) throw check_error(msg);
}

}  // namespace latring

#endif
