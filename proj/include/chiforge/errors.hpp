#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chiforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad constructor arguments: out-of-range endpoints, loops, size mismatches.
struct ConstructionError : Error {
    using Error::Error;
};

// Malformed graph6 / DIMACS input. `offset` is a byte offset for graph6
// and a line number for line-oriented formats.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t offset)
        : Error(what), offset(offset) {}
    std::size_t offset;
};

// An exact search ran out of its node budget. Carries the best bounds seen
// (and, for coloring searches, the best coloring) so the caller can report
// them; never a silently approximate answer.
struct BudgetExceeded : Error {
    BudgetExceeded(const std::string& what, std::uint64_t nodes, int best_lower, int best_upper)
        : Error(what), nodes(nodes), best_lower(best_lower), best_upper(best_upper) {}
    std::uint64_t nodes;
    int best_lower;
    int best_upper;
    std::vector<int> best_coloring;  // empty when no coloring is known
};

// A size cap was exceeded (enumeration, perfection test).
struct BudgetError : Error {
    using Error::Error;
};

// Input is not a member of the class a routine requires. Optionally carries
// the forbidden-pattern witness vertices.
struct NotInClass : Error {
    NotInClass(const std::string& what, std::vector<int> witness = {})
        : Error(what), witness(std::move(witness)) {}
    std::vector<int> witness;
};

struct NotCograph : NotInClass {
    using NotInClass::NotInClass;
};
struct NotChordal : NotInClass {
    using NotInClass::NotInClass;
};
struct NotPseudoSplit : NotInClass {
    using NotInClass::NotInClass;
};
struct NotMultipartite : NotInClass {
    using NotInClass::NotInClass;
};
struct NotTwoK2Free : NotInClass {
    using NotInClass::NotInClass;
};

// An exact coloring used more colors than the caller's class guarantee;
// the class assumption was false.
struct BoundViolated : Error {
    BoundViolated(int chi, int bound)
        : Error("exact coloring needs " + std::to_string(chi) + " colors, caller asserted <= " +
                std::to_string(bound)),
          chi(chi),
          bound(bound) {}
    int chi;
    int bound;
};

// A runtime check of a decomposition step failed on this input. `claim`
// names the check; `vertices` are the offenders. Reachable only when the
// class precondition was false.
struct StructureViolation : Error {
    StructureViolation(const std::string& claim, std::vector<int> vertices)
        : Error("structure violation [" + claim + "]"), claim(claim), vertices(std::move(vertices)) {}
    std::string claim;
    std::vector<int> vertices;
};

struct Disconnected : Error {
    using Error::Error;
};

// A certificate failed independent re-verification.
struct CertificateError : Error {
    using Error::Error;
};

struct UnknownClass : Error {
    using Error::Error;
};

}  // namespace chiforge
