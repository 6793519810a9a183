#pragma once

#include <stdexcept>
#include <string>

namespace tc {

// Bad arguments to a library call (negative sizes, out-of-range epsilon, ...).
struct InvalidParams : std::invalid_argument {
    explicit InvalidParams(const std::string& what) : std::invalid_argument(what) {}
};

// An exhaustive routine was asked to run above its configured size cap.
struct SizeCapExceeded : std::runtime_error {
    explicit SizeCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A safety cap (triangle count, component count) was hit mid-run.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A randomized generator exhausted its retry budget.
struct GenerationFailed : std::runtime_error {
    explicit GenerationFailed(const std::string& what) : std::runtime_error(what) {}
};

// The reconstruction loop terminated with uncovered vertices.
struct IncompleteCover : std::runtime_error {
    explicit IncompleteCover(const std::string& what, long long remaining_)
        : std::runtime_error(what), remaining(remaining_) {}
    long long remaining;
};

// No epsilon in the search grid produced a full reconstruction.
struct NotNearTensor : std::runtime_error {
    explicit NotNearTensor(const std::string& what) : std::runtime_error(what) {}
};

// A coloring handed to a checker is not a proper 3-coloring.
struct NotAProperColoring : std::runtime_error {
    explicit NotAProperColoring(const std::string& what) : std::runtime_error(what) {}
};

// The assignment handed to the completeness construction does not satisfy the instance.
struct UnsatisfiedAssignment : std::runtime_error {
    explicit UnsatisfiedAssignment(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tc
