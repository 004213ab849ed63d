#ifndef MIB_ERRORS_HPP
#define MIB_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace mib {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An unknown variable name, or a name clash.
struct NameError : Error {
    using Error::Error;
};

// Two tables (or distributions) that were expected to live on the same
// outcome space do not.
struct ShapeError : Error {
    using Error::Error;
};

// A precondition on the arguments was violated (overlapping variable sets,
// out-of-range indices, ...).
struct ArgumentError : Error {
    using Error::Error;
};

// Conditioning on evidence whose probability is zero.
struct ZeroProbabilityError : Error {
    using Error::Error;
};

// A table would exceed the configured cell cap.
struct CapacityError : Error {
    using Error::Error;
};

// A graph that was required to be acyclic is not.
struct CycleError : Error {
    using Error::Error;
};

// Parameter outside the mathematically covered range (e.g. beta >= 1 where
// the gamma transformation is singular).
struct DomainError : Error {
    using Error::Error;
};

// Two supposedly equivalent internal computations disagree.
struct InternalConsistencyError : Error {
    using Error::Error;
};

// An update produced a conditional row with zero total weight: every value
// had infinite distortion, which indicates disjoint supports in the input.
struct DegenerateRowError : Error {
    using Error::Error;
};

// Derivative requested at a boundary point of the parameter simplex.
struct BoundaryError : Error {
    using Error::Error;
};

// Problem validation failed; carries one diagnostic per violation.
struct ValidationError : Error {
    std::vector<std::string> violations;
    explicit ValidationError(std::vector<std::string> v)
        : Error(join(v)), violations(std::move(v)) {}

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "invalid problem:";
        for (const auto& m : v) {
            s += "\n  - " + m;
        }
        return s;
    }
};

// Input file could not be parsed; `line` is 1-based, 0 if not applicable.
struct ParseError : Error {
    int line;
    ParseError(const std::string& msg, int line_no = 0)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
};

}  // namespace mib

#endif
