#pragma once

#include <stdexcept>
#include <string>

namespace infimax {

/// A truncated index list ran out of entries before the requested
/// expansion depth or accuracy was reached.
class depth_exhausted_error : public std::runtime_error {
public:
    explicit depth_exhausted_error(const std::string& what, std::size_t depth_reached = 0)
        : std::runtime_error(what), depth_reached_(depth_reached) {}
    std::size_t depth_reached() const noexcept { return depth_reached_; }

private:
    std::size_t depth_reached_;
};

/// No path of the requested depth produces the given window.
class no_match_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The window is too short to pin down a unique path of the requested depth.
class ambiguous_window_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computed covector iterate violated the (-,-,+) sign pattern; the
/// covector was not computed accurately enough for the requested depth.
class sign_violation_error : public std::runtime_error {
public:
    sign_violation_error(const std::string& what, std::size_t level)
        : std::runtime_error(what), level_(level) {}
    std::size_t level() const noexcept { return level_; }

private:
    std::size_t level_;
};

} // namespace infimax
