#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tldp/fan.hpp"

namespace tldp {

/// Raised when a rewrite meets a configuration the calculus forbids, e.g. a
/// contractible -1 vertex whose second neighbor is not exactly -2.
struct StructureViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Lex-least representative over all rotations and both orientations.
WeightedCycle canonical_cycle(const WeightedCycle& c);

/// True iff the two cycles agree up to rotation/reflection.
bool cycles_equivalent(const WeightedCycle& a, const WeightedCycle& b);

/// Cheap validity: length >= 3, weight sum 12-3n, exactly three entries >= -1.
bool is_valid_cycle(const WeightedCycle& c);

/// Contracts vertex i (weight must be -1, length >= 4): removes it and
/// increments both neighbors.
WeightedCycle blow_down(const WeightedCycle& c, size_t i);

/// Inserts a -1 vertex on the edge between i and i+1 and decrements both
/// endpoints. Inverse of blow_down.
WeightedCycle blow_up(const WeightedCycle& c, size_t edge);

/// True iff every -1 vertex has both neighbors >= -2.
bool is_basic(const WeightedCycle& c);

/// The five terminal dual graphs.
struct BasicType {
    enum Kind { P2, Std0, Std1, Std2, ThreeA2 } kind = P2;
    i64 n = 0; // defined (>= 2) for Std0/Std1/Std2 only

    friend bool operator==(const BasicType&, const BasicType&) = default;
    std::string str() const;
};

/// The Figure-1 weight cycle of a basic type.
WeightedCycle basic_cycle(const BasicType& b);

/// Matches a cycle against the five patterns up to rotation/reflection.
std::optional<BasicType> basic_type(const WeightedCycle& c);

/// One deterministic cascade step: canonicalizes c, contracts the
/// lowest-index -1 vertex having a neighbor <= -3 (its other neighbor must
/// be exactly -2). Returns the canonical pre-step cycle, the contracted
/// index, and the resulting cycle; nullopt when c is already basic.
struct CascadeStep {
    WeightedCycle before; // canonical form the index refers to
    size_t removed_index = 0;
    WeightedCycle after;
};
std::optional<CascadeStep> cascade_step(const WeightedCycle& c);

/// Full run to a basic surface, asserting at every step that the number of
/// singular chains and the quantity trace - 3L are preserved.
struct CascadeTrace {
    WeightedCycle start; // canonical
    std::vector<CascadeStep> steps;
    WeightedCycle terminal; // canonical
    BasicType basic;
    size_t length() const { return steps.size(); }
};
CascadeTrace run_cascade(const WeightedCycle& c);

/// Maximal cyclic runs of weights <= -2, negated and canonicalized,
/// in lex-sorted order.
std::vector<SingularityType> singular_chains(const WeightedCycle& c);

enum class FiberType { F0, I0, I, II0, II };
std::string fiber_type_str(FiberType f);

/// [[s1, A, s2, B]]: the two section weights plus the types of the two fiber
/// arcs between them, canonically ordered.
struct FibrationProfile {
    i64 s1 = 0;
    FiberType fiber_a = FiberType::F0;
    i64 s2 = 0;
    FiberType fiber_b = FiberType::F0;

    friend bool operator==(const FibrationProfile&, const FibrationProfile&) = default;
    std::string str() const;
};

/// Locates the two sections of the ruling and classifies both fiber arcs by
/// contractibility. b is the cascade target of c; P2 is rejected.
FibrationProfile fibration_profile(const WeightedCycle& c, const BasicType& b);

/// n rounds of paired blow-ups on the three-A2 graph, tracking the chosen
/// pair of -2 curves; the result carries singularities 2·A_{n+2} + [n+2,n+2].
struct BrauerFamilyMember {
    WeightedCycle cycle;
    FanoTriangle triangle;
};
BrauerFamilyMember brauer_family(i64 n);

/// All basic types reachable by exhausting every admissible blow-down choice
/// (not just the deterministic one). Size 1 everywhere means the cascade is
/// confluent on that input.
std::set<std::string> explore_basic_types(const WeightedCycle& c);

} // namespace tldp
