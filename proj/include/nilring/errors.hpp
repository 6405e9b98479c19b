#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace nilring {

/// Base class for all nilring errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A constructor parameter failed validation (n <= 0, m < 2, ...).
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// Operation tables do not form a unital ring. Carries the name of the
/// failing axiom and the lexicographically first witness triple.
/// Axioms that quantify over fewer than three elements leave the unused
/// slots at zero.
class AxiomViolation : public Error {
public:
    AxiomViolation(std::string axiom, std::array<int, 3> witness)
        : Error("ring axiom violated: " + axiom + " at (" +
                std::to_string(witness[0]) + "," + std::to_string(witness[1]) + "," +
                std::to_string(witness[2]) + ")"),
          axiom_(std::move(axiom)),
          witness_(witness) {}

    const std::string& axiom() const { return axiom_; }
    const std::array<int, 3>& witness() const { return witness_; }

private:
    std::string axiom_;
    std::array<int, 3> witness_;
};

/// A configured enumeration cap (ring order, endomorphism count, hom rank)
/// would be exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A two-sided ideal was required.
class SidednessError : public Error {
public:
    using Error::Error;
};

/// Binary ideal operation over distinct rings.
class MixedRing : public Error {
public:
    using Error::Error;
};

/// Binary ideal operation over ideals of different sidedness.
class MixedSidedness : public Error {
public:
    using Error::Error;
};

/// Operation is only defined for commutative rings.
class NotCommutative : public Error {
public:
    using Error::Error;
};

/// The element criterion assumes a non-zero ideal; the definitional test is
/// authoritative for the zero ideal.
class ZeroIdealNotCovered : public Error {
public:
    using Error::Error;
};

/// Multiplicative closure of the seed reached 0. Carries the product chain
/// that produced 0, for diagnostics.
class ZeroInClosure : public Error {
public:
    ZeroInClosure(const std::string& chain)
        : Error("multiplicative closure contains 0: " + chain), chain_(chain) {}

    const std::string& chain() const { return chain_; }

private:
    std::string chain_;
};

/// A module map that must be injective is not.
class NotMono : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same invariant disagree. This is a
/// test-surface signal; it indicates a bug, not a property of the input.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

/// Corpus file failed to parse or validate.
class CorpusParseError : public Error {
public:
    using Error::Error;
};

}  // namespace nilring
