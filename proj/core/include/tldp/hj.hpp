#pragma once

#include <optional>
#include <vector>

#include "tldp/lattice.hpp"
#include "tldp/rational.hpp"

namespace tldp {

/// A Hirzebruch–Jung continued-fraction chain [n1,...,nl], meaning
/// n1 - 1/(n2 - 1/(... - 1/nl)). Entries are >= 2 for genuine singularity
/// chains; hj_eval also accepts entries equal to 1 (see ProjectiveValue).
using HJChain = std::vector<i64>;

/// Value on the projective line Q ∪ {∞}, normalized: gcd(|num|,|den|) == 1,
/// den >= 0, and ∞ is (1,0). hj_eval is total under this arithmetic: a zero
/// sub-value simply makes the next level infinite (1/∞ = 0 going back down).
struct ProjectiveValue {
    i64 num = 1;
    i64 den = 0;

    bool is_infinite() const { return den == 0; }
    bool is_zero() const { return den != 0 && num == 0; }
    Rational finite() const {
        if (is_infinite()) throw std::domain_error("value is infinite (NotEvaluable)");
        return Rational(num, den);
    }
    friend bool operator==(const ProjectiveValue&, const ProjectiveValue&) = default;
};

/// Evaluates a chain right-to-left over the projective line. Empty chains
/// evaluate to ∞ (the error state of an empty tail).
ProjectiveValue hj_eval(const HJChain& chain);

/// hj_eval restricted to finite results; throws domain_error otherwise.
Rational hj_eval_finite(const HJChain& chain);

/// The unique all-entries->=2 expansion of r/a, for r > a >= 1 coprime.
HJChain hj_expand(i64 r, i64 a);

/// Given m with entries >= 2, the unique chain n (entries >= 2) with
/// hj_eval(n ++ [1] ++ m) == 0. If hj_eval(m) = q/q1 then
/// hj_eval(reverse(n)) = q/(q - q1).
HJChain zero_complement(const HJChain& m);

/// For chain with hj_eval = r/a, returns (r/a, r/a*) where a·a* ≡ 1 (mod r):
/// the fractions attached to the two reading directions of the chain.
std::pair<Rational, Rational> chain_reversal_fraction(const HJChain& chain);

/// Cyclic quotient singularity type: the canonically oriented HJ chain
/// (lex-min of the chain and its reversal) plus the group order r.
struct SingularityType {
    HJChain chain;
    i64 order = 0;

    friend bool operator==(const SingularityType&, const SingularityType&) = default;
    friend auto operator<=>(const SingularityType&, const SingularityType&) = default;

    /// Canonicalizes an arbitrary-orientation chain (entries >= 2, nonempty).
    static SingularityType from_chain(const HJChain& chain);
    /// From the fraction r/a (r > a >= 1 coprime), expanding first.
    static SingularityType from_fraction(i64 r, i64 a);

    std::string str() const; // "[2,3,2]"
};

/// The singularity of the 2-dimensional cone spanned by primitive u, w with
/// det(u,w) >= 1. Returns the chain in the orientation u -> w plus the order;
/// order 1 means the cone is smooth (empty chain).
struct ConeSingularity {
    HJChain chain; // oriented from u to w; empty iff smooth
    i64 order = 1;
};
ConeSingularity cone_singularity(const Vec& u, const Vec& w);

/// The lattice points to insert strictly between u and w so consecutive
/// determinants are all 1 (the Newton boundary of the cone), in order.
std::vector<Vec> resolve_cone(const Vec& u, const Vec& w);

} // namespace tldp
