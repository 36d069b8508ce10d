#ifndef RSVO_ERRORS_HPP
#define RSVO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rsvo {

/// Both personality scores of a pair are zero; the R-SVO ratio is undefined.
struct DegeneratePairError : std::domain_error {
    explicit DegeneratePairError(const std::string& what) : std::domain_error(what) {}
};

/// A value lies outside its documented domain (e.g. an SVO angle outside [0, pi/2]).
struct OutOfRangeError : std::domain_error {
    explicit OutOfRangeError(const std::string& what) : std::domain_error(what) {}
};

/// Initial agent positions violate the pairwise safety set.
struct UnsafeStartError : std::runtime_error {
    explicit UnsafeStartError(const std::string& what) : std::runtime_error(what) {}
};

/// Hard-mode QP with an empty feasible polytope.
struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// Scenario file could not be parsed; `where` names the file/field.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Scenario parsed but violates an invariant; message names the offending field.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rsvo

#endif  // RSVO_ERRORS_HPP
