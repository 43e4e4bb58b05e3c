#pragma once

#include <stdexcept>
#include <string>

namespace sphere {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Inversion was requested for a ring element that is not a unit.
struct NotInvertible : Error {
    explicit NotInvertible(const std::string& what = "element is not invertible") : Error(what) {}
};

/// Vector/operand ranks do not match the space they are used with.
struct RankMismatch : Error {
    explicit RankMismatch(const std::string& what = "rank mismatch") : Error(what) {}
};

/// Generators that were required to be independent are linearly dependent.
struct DependentGenerators : Error {
    explicit DependentGenerators(const std::string& what = "generators are linearly dependent")
        : Error(what) {}
};

/// A verification strategy cannot run on the given ring or carrier.
struct InfeasibleStrategy : Error {
    explicit InfeasibleStrategy(const std::string& what = "strategy infeasible here") : Error(what) {}
};

/// Requested sphere q^{-1}(c) contains no points in the search domain.
struct EmptySphere : Error {
    explicit EmptySphere(const std::string& what = "sphere is empty") : Error(what) {}
};

/// A magma operation was called with the wrong arity.
struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& what = "arity mismatch") : Error(what) {}
};

/// Input loop is not an inverse loop.
struct NotInverseLoop : Error {
    explicit NotInverseLoop(const std::string& what = "not an inverse loop") : Error(what) {}
};

/// Doubling parameter is not central / not fixed by the involution / wrong order.
struct NonCentralParameter : Error {
    explicit NonCentralParameter(const std::string& what = "parameter not admissible for doubling")
        : Error(what) {}
};

/// The supplied permutation is not an involutive anti-automorphism.
struct InvolutionNotAntiAutomorphism : Error {
    explicit InvolutionNotAntiAutomorphism(const std::string& what = "not an involutive anti-automorphism")
        : Error(what) {}
};

/// A doubling-chain stage received an invalid (eps, mu) choice.
struct InvalidStageParameter : Error {
    explicit InvalidStageParameter(const std::string& what = "invalid stage parameter") : Error(what) {}
};

/// Malformed input file or inline descriptor.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace sphere
