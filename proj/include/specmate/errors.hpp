#pragma once

#include <stdexcept>
#include <string>

namespace specmate {

// Malformed external input (graph6 strings, adjacency files, CLI values).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal invariant failed.  This never indicates bad input; it means a
// bug in this library, so it derives from logic_error and is not meant to be
// caught by normal drivers.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// An enumeration grew past the configured cap.  The pipeline converts this
// into an Undecided verdict instead of spending unbounded time.
struct cap_exceeded : std::runtime_error {
    std::string stage;       // which enumeration overflowed
    unsigned long long cap;  // limit that was in force

    cap_exceeded(std::string stage_, unsigned long long cap_, const std::string& what_)
        : std::runtime_error(what_), stage(std::move(stage_)), cap(cap_) {}
};

}  // namespace specmate
