/// @file errors.hpp
/// @brief Error taxonomy shared by the library and the command line tool.
///
/// Three kinds of failure are distinguished because they map to distinct
/// process exit codes:
///   * InputError  — the problem statement itself is defective (unreadable
///                   file, non-homogeneous generator, hypothesis violation
///                   such as a non-regular sequence).  Exit code 1.
///   * CheckError  — the input was accepted but an internal cross-check or
///                   a certified verification failed.  Exit code 2.
///   * InternalError — a structural invariant of the kernel itself broke;
///                   treated as a check failure at the CLI boundary but kept
///                   separate so tests can tell the two apart.

#pragma once

#include <stdexcept>
#include <string>

namespace logres {

struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct CheckError : std::runtime_error {
    explicit CheckError(const std::string& what) : std::runtime_error(what) {}
};

struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Kernel invariant assertion.  Unlike assert() this is always on: the
/// library prefers a loud stop over a silently wrong certificate.
inline void require_internal(bool cond, const std::string& what) {
    if (!cond) throw InternalError("internal invariant violated: " + what);
}

inline void require_input(bool cond, const std::string& what) {
    if (!cond) throw InputError(what);
}

inline void require_check(bool cond, const std::string& what) {
    if (!cond) throw CheckError("verification failed: " + what);
}

} // namespace logres
