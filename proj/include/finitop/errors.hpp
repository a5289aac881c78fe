#pragma once

#include <stdexcept>
#include <string>

namespace finitop {

/// Base class for all domain errors raised by the library.
struct TopologyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A set family handed to a space constructor violates the topology axioms.
/// Carries a human-readable description of the witnessing defect (missing
/// empty/full set, or a pair whose union/intersection is absent).
struct NotATopology : TopologyError {
    using TopologyError::TopologyError;
};

/// An operation was asked to run above its supported point bound.
struct BoundExceeded : TopologyError {
    using TopologyError::TopologyError;
};

/// Subspace of the empty set requested.
struct EmptyCarrier : TopologyError {
    using TopologyError::TopologyError;
};

/// A custom set operator failed the closure-operator axioms.
struct NotAClosureOperator : TopologyError {
    using TopologyError::TopologyError;
};

/// A map that must be bijective is not.
struct NotABijection : TopologyError {
    using TopologyError::TopologyError;
};

/// A catalog computation left the described-set algebra. Supported family
/// rules never do this; seeing it means a rule table defect.
struct UnrepresentableSet : TopologyError {
    using TopologyError::TopologyError;
};

/// Requested verdict is not implemented for the catalog family.
struct UnsupportedAxiom : TopologyError {
    using TopologyError::TopologyError;
};

/// Error while reading a `.space` document. Position is 1-based.
struct ParseError : TopologyError {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& what_)
        : TopologyError("line " + std::to_string(line_) + ":" + std::to_string(column_) + ": " +
                        what_),
          line(line_),
          column(column_) {}
};

/// Syntactically malformed `.space` input (unknown keyword, bad set literal).
struct SyntaxError : ParseError {
    using ParseError::ParseError;
};

/// Well-formed but meaningless `.space` input (index out of range, mixed
/// construction styles, missing point count).
struct SemanticError : ParseError {
    using ParseError::ParseError;
};

}  // namespace finitop
