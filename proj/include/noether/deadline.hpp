#ifndef NOETHER_DEADLINE_HPP
#define NOETHER_DEADLINE_HPP

#include <chrono>
#include <optional>

#include "noether/errors.hpp"

namespace noether {

/// Cooperative wall-clock deadline. Long-running loops call check(); the CLI
/// arms it from NOETHER_TIMEOUT_SECS. Disarmed by default.
class Deadline {
public:
    static void arm(std::chrono::seconds budget) {
        expiry() = std::chrono::steady_clock::now() + budget;
    }
    static void disarm() { expiry().reset(); }

    static void check() {
        const auto& e = expiry();
        if (e && std::chrono::steady_clock::now() > *e)
            throw TimeoutError("computation exceeded NOETHER_TIMEOUT_SECS");
    }

private:
    static std::optional<std::chrono::steady_clock::time_point>& expiry() {
        static std::optional<std::chrono::steady_clock::time_point> e;
        return e;
    }
};

} // namespace noether

#endif
