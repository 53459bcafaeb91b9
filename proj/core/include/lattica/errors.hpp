#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lattica {

// Base class for every structured failure the library reports. Callers that
// only want a message can catch this; callers that want the offending
// elements catch the concrete type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A pair of elements has no unique least upper bound (or greatest lower
// bound, when `join_side` is false). `candidates` holds the minimal upper
// bounds (maximal lower bounds) actually found; empty means none exist.
struct NotALatticeError : Error {
    int x, y;
    bool join_side;
    std::vector<int> candidates;
    NotALatticeError(int x_, int y_, bool join_side_, std::vector<int> cand, const std::string& msg)
        : Error(msg), x(x_), y(y_), join_side(join_side_), candidates(std::move(cand)) {}
};

// The order has no global bottom or no global top.
struct UnboundedError : Error {
    using Error::Error;
};

// The cover input closes into a relation that is not antisymmetric,
// i.e. the cover digraph has a cycle.
struct NotAPartialOrderError : Error {
    int x, y;
    NotAPartialOrderError(int x_, int y_, const std::string& msg) : Error(msg), x(x_), y(y_) {}
};

struct NotInvolutiveError : Error {
    int x;
    NotInvolutiveError(int x_, const std::string& msg) : Error(msg), x(x_) {}
};

struct NotOrderReversingError : Error {
    int x, y;
    NotOrderReversingError(int x_, int y_, const std::string& msg) : Error(msg), x(x_), y(y_) {}
};

// A complement map passed as the weak (interior-style) complement breaks one
// of its defining identities at `x`.
struct BrouwerAxiomError : Error {
    int x;
    BrouwerAxiomError(int x_, const std::string& msg) : Error(msg), x(x_) {}
};

struct MissingBrouwerError : Error {
    using Error::Error;
};

// Signature demands an operation the structure does not carry.
struct SignatureMismatchError : Error {
    using Error::Error;
};

// Brute-force enumeration refused: the universe exceeds the configured cap.
struct TooLargeError : Error {
    int n, limit;
    TooLargeError(int n_, int limit_, const std::string& msg) : Error(msg), n(n_), limit(limit_) {}
};

struct NotACongruenceError : Error {
    using Error::Error;
};

// Subset handed to restrict_to_subuniverse is not closed under the
// signature's operations; `x`/`y` generate the escaping value `image`.
struct NotSubalgebraError : Error {
    int x, y, image;
    NotSubalgebraError(int x_, int y_, int image_, const std::string& msg)
        : Error(msg), x(x_), y(y_), image(image_) {}
};

struct TrivialSummandError : Error {
    using Error::Error;
};

struct TrivialSeedError : Error {
    using Error::Error;
};

struct NotPseudoKleeneError : Error {
    using Error::Error;
};

struct ConditionSViolatedError : Error {
    using Error::Error;
};

// Construction argument outside its documented domain (chain(0), m(0), ...).
struct DomainError : Error {
    using Error::Error;
};

}  // namespace lattica
