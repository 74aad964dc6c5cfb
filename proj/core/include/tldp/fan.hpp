#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tldp/hj.hpp"
#include "tldp/lattice.hpp"

namespace tldp {

/// Weight cycle of a resolved fan, one entry per ray in cyclic order
/// (self-intersection numbers of the corresponding curves).
using WeightedCycle = std::vector<i64>;

/// Three primitive vertices in counterclockwise order with the origin
/// strictly interior: det of each consecutive pair is positive.
class FanoTriangle {
  public:
    FanoTriangle(const Vec& v1, const Vec& v2, const Vec& v3);

    /// Accepts the vertex set in either orientation and fixes ccw order.
    static FanoTriangle from_vertices(const Vec& v1, const Vec& v2, const Vec& v3);

    const std::array<Vec, 3>& vertices() const { return v_; }
    const Vec& operator[](int i) const { return v_[static_cast<size_t>(i)]; }

    friend bool operator==(const FanoTriangle&, const FanoTriangle&) = default;

    std::string str() const;

  private:
    std::array<Vec, 3> v_;
};

/// Minimal resolution of the face fan of a Fano triangle: all rays in ccw
/// cyclic order, each consecutive det equal to 1, wall relation
/// rays[i-1] + rays[i+1] == -weights[i]·rays[i], exactly three marked rays
/// (the triangle's), marked weights >= -1, unmarked <= -2.
struct ResolvedFan {
    std::vector<Vec> rays;
    WeightedCycle weights;
    std::vector<bool> marked;

    size_t size() const { return rays.size(); }
    /// Throws std::logic_error when any structural invariant fails.
    void check() const;
};

/// Minimal resolution; first ray is the triangle's first vertex.
ResolvedFan resolve(const FanoTriangle& t);

/// Just the weight cycle of resolve(t).
WeightedCycle cycle_of(const FanoTriangle& t);

enum class RealizeError { NoClosure, WrongWinding, WrongMarkedCount };

struct RealizeResult {
    std::optional<ResolvedFan> fan;           // engaged on success
    RealizeError error = RealizeError::NoClosure;

    bool ok() const { return fan.has_value(); }
    /// The Fano triangle spanned by the marked rays (success only).
    FanoTriangle triangle() const;
};

/// Inverse of cycle_of: propagates rays from the seed (1,0),(0,1) by the wall
/// relation and accepts iff the cycle closes up, winds exactly once, and has
/// exactly three weights >= -1.
RealizeResult realize(const WeightedCycle& cycle);

/// Complete GL(2,Z) invariant: the lex-least image of the triangle over all
/// unimodular maps sending some adjacent ray pair of resolve(t) to the
/// standard basis (both determinant signs), vertices normalized cyclically.
FanoTriangle canonical_form(const FanoTriangle& t);

/// (v1+v2+v3)/3, exact.
RationalVec barycenter(const FanoTriangle& t);

/// Area centroid of the dual polygon {y : <y,v_i> >= -1}, exact (shoelace).
RationalVec dual_barycenter(const FanoTriangle& t);

/// Flattened canonical vertices, handy as an ordering/dedup key.
std::array<i64, 6> canonical_key(const FanoTriangle& canonical);

} // namespace tldp
