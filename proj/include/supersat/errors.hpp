#pragma once

#include <stdexcept>
#include <string>

namespace supersat {

struct OutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SelfLoop : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DuplicateEdge : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EdgeAbsent : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedHeader : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PreconditionViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Overflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RegimeViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Infeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class UnrealizableReason { parity, density, unsupported };

inline const char* to_string(UnrealizableReason r) {
    switch (r) {
        case UnrealizableReason::parity: return "parity";
        case UnrealizableReason::density: return "density";
        case UnrealizableReason::unsupported: return "unsupported";
    }
    return "unknown";
}

struct Unrealizable : std::runtime_error {
    UnrealizableReason reason;
    Unrealizable(UnrealizableReason r, const std::string& what)
        : std::runtime_error(what + " (" + to_string(r) + ")"), reason(r) {}
};

}  // namespace supersat
