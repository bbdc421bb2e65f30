#pragma once

#include <stdexcept>
#include <string>

namespace copbench {

// Failure kinds surfaced by library operations. Each operation documents
// which kinds it can raise.
enum class Err {
    FormatError,
    InternalCheckFailed,
    NotAPrimePower,
    NotFactorizable,
    IndexOutOfRange,
    VectorOutOfRange,
    NotC4Free,
    ModeHypothesisViolated,
    DegenerateDegree,
    BadVectorLength,
    EvenOrder,
    CycleTooShort,
    DisconnectedSplit,
    SplitPropertyViolated,
    SizeExceeded,
    BudgetExceeded,
    Disconnected,
    ExceedsKmax,
    IllegalMove,
    HypothesisViolated,
    NotNonBipartite,
    NotK2TFree,
    NoValidThreshold,
    GirthTooSmall,
    EmptyFamily,
    IsolatedVertex,
    NotRegular,
    EmptyEdge,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err kind, const std::string& msg)
        : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}
    Err kind() const { return kind_; }

private:
    Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

// Internal postcondition check; not a user error when it fires.
inline void check(bool ok, const std::string& msg) {
    if (!ok) fail(Err::InternalCheckFailed, msg);
}

} // namespace copbench
