#include "tldp/fan.hpp"

#include <algorithm>

namespace tldp {

FanoTriangle::FanoTriangle(const Vec& v1, const Vec& v2, const Vec& v3) : v_{v1, v2, v3} {
    for (const Vec& v : v_)
        if (!is_primitive(v)) throw std::invalid_argument("triangle vertex is not primitive");
    if (det(v1, v2) <= 0 || det(v2, v3) <= 0 || det(v3, v1) <= 0)
        throw std::invalid_argument("vertices are not ccw with the origin strictly interior");
}

FanoTriangle FanoTriangle::from_vertices(const Vec& v1, const Vec& v2, const Vec& v3) {
    if (det(v1, v2) > 0 && det(v2, v3) > 0 && det(v3, v1) > 0) return {v1, v2, v3};
    return {v1, v3, v2};
}

std::string FanoTriangle::str() const {
    return "{" + v_[0].str() + "," + v_[1].str() + "," + v_[2].str() + "}";
}

void ResolvedFan::check() const {
    size_t n = rays.size();
    if (n < 3 || weights.size() != n || marked.size() != n)
        throw std::logic_error("fan: size mismatch");
    int marks = 0;
    i64 wsum = 0;
    for (size_t i = 0; i < n; ++i) {
        const Vec& prev = rays[(i + n - 1) % n];
        const Vec& next = rays[(i + 1) % n];
        if (!is_primitive(rays[i])) throw std::logic_error("fan: ray not primitive");
        if (det(rays[i], next) != 1) throw std::logic_error("fan: consecutive det != 1");
        if (prev + next != rays[i] * neg(weights[i]))
            throw std::logic_error("fan: wall relation fails");
        if (marked[i]) {
            ++marks;
            if (weights[i] < -1) throw std::logic_error("fan: marked ray with weight < -1");
        } else if (weights[i] > -2) {
            throw std::logic_error("fan: unmarked ray with weight > -2");
        }
        wsum = add(wsum, weights[i]);
    }
    if (marks != 3) throw std::logic_error("fan: marked ray count != 3");
    if (wsum != 12 - 3 * static_cast<i64>(n)) throw std::logic_error("fan: weight sum rule fails");
}

ResolvedFan resolve(const FanoTriangle& t) {
    ResolvedFan f;
    for (int i = 0; i < 3; ++i) {
        const Vec& u = t[i];
        const Vec& w = t[(i + 1) % 3];
        f.rays.push_back(u);
        f.marked.push_back(true);
        for (const Vec& r : resolve_cone(u, w)) {
            f.rays.push_back(r);
            f.marked.push_back(false);
        }
    }
    size_t n = f.rays.size();
    f.weights.resize(n);
    for (size_t i = 0; i < n; ++i) {
        const Vec& prev = f.rays[(i + n - 1) % n];
        const Vec& cur = f.rays[i];
        const Vec& next = f.rays[(i + 1) % n];
        Vec s = prev + next; // collinear with cur, so one coordinate decides
        i64 k = cur.x != 0 ? s.x / cur.x : s.y / cur.y;
        if (cur * k != s) throw std::logic_error("wall relation has no integer solution");
        f.weights[i] = neg(k);
    }
    f.check();
    return f;
}

WeightedCycle cycle_of(const FanoTriangle& t) { return resolve(t).weights; }

FanoTriangle RealizeResult::triangle() const {
    if (!fan) throw std::logic_error("triangle() on failed realization");
    std::vector<Vec> m;
    for (size_t i = 0; i < fan->size(); ++i)
        if (fan->marked[i]) m.push_back(fan->rays[i]);
    return {m[0], m[1], m[2]};
}

namespace {

// Tie rule: a ray on the positive x-axis counts as above the axis.
bool above_axis(const Vec& v) { return v.y > 0 || (v.y == 0 && v.x > 0); }

} // namespace

RealizeResult realize(const WeightedCycle& cycle) {
    size_t n = cycle.size();
    if (n < 3) return {std::nullopt, RealizeError::NoClosure};

    std::vector<Vec> rays(n + 2);
    rays[0] = {1, 0};
    rays[1] = {0, 1};
    for (size_t i = 1; i <= n; ++i)
        rays[i + 1] = rays[i] * neg(cycle[i % n]) - rays[i - 1];
    if (rays[n] != rays[0] || rays[n + 1] != rays[1])
        return {std::nullopt, RealizeError::NoClosure};
    rays.resize(n);

    int crossings = 0;
    for (size_t i = 0; i < n; ++i)
        if (!above_axis(rays[i]) && above_axis(rays[(i + 1) % n])) ++crossings;
    if (crossings != 1) return {std::nullopt, RealizeError::WrongWinding};

    int marks = 0;
    for (i64 w : cycle)
        if (w >= -1) ++marks;
    if (marks != 3) return {std::nullopt, RealizeError::WrongMarkedCount};

    ResolvedFan f;
    f.rays = std::move(rays);
    f.weights = cycle;
    f.marked.resize(n);
    for (size_t i = 0; i < n; ++i) f.marked[i] = cycle[i] >= -1;
    f.check();
    return {std::move(f), RealizeError::NoClosure};
}

namespace {

using Key = std::array<i64, 6>;

Key flatten(const std::array<Vec, 3>& v) {
    return {v[0].x, v[0].y, v[1].x, v[1].y, v[2].x, v[2].y};
}

// Lex-least cyclic rotation of a ccw vertex triple.
std::array<Vec, 3> cyclic_min(std::array<Vec, 3> v) {
    std::array<Vec, 3> best = v;
    Key bk = flatten(best);
    for (int r = 0; r < 2; ++r) {
        std::rotate(v.begin(), v.begin() + 1, v.end());
        Key k = flatten(v);
        if (k < bk) {
            bk = k;
            best = v;
        }
    }
    return best;
}

} // namespace

FanoTriangle canonical_form(const FanoTriangle& t) {
    ResolvedFan f = resolve(t);
    size_t n = f.size();
    std::optional<std::array<Vec, 3>> best;
    Key bestk{};
    auto offer = [&](const std::array<Vec, 3>& cand) {
        auto norm = cyclic_min(cand);
        Key k = flatten(norm);
        if (!best || k < bestk) {
            best = norm;
            bestk = k;
        }
    };
    for (size_t i = 0; i < n; ++i) {
        const Vec& p = f.rays[i];
        const Vec& q = f.rays[(i + 1) % n];
        // inverse of the column matrix [p q] (det 1) sends (p,q) to (e1,e2)
        UnimodularMap plus(q.y, neg(q.x), neg(p.y), p.x);
        // reflected choice: det -1, sends (p,q) to (e2,e1)
        UnimodularMap minus = UnimodularMap(0, 1, 1, 0).compose(plus);
        std::array<Vec, 3> img_p, img_m;
        for (int j = 0; j < 3; ++j) {
            img_p[static_cast<size_t>(j)] = plus.apply(t[j]);
            // reversal restores ccw order after an orientation flip
            img_m[static_cast<size_t>(2 - j)] = minus.apply(t[j]);
        }
        offer(img_p);
        offer(img_m);
    }
    return {(*best)[0], (*best)[1], (*best)[2]};
}

RationalVec barycenter(const FanoTriangle& t) {
    Vec s = t[0] + t[1] + t[2];
    return {Rational(s.x, 3), Rational(s.y, 3)};
}

RationalVec dual_barycenter(const FanoTriangle& t) {
    // dual vertex for the cone (v_i, v_{i+1}): <y,v_i> = <y,v_{i+1}> = -1
    std::array<RationalVec, 3> y;
    for (int i = 0; i < 3; ++i) {
        const Vec& a = t[i];
        const Vec& b = t[(i + 1) % 3];
        i64 d = det(a, b);
        y[static_cast<size_t>(i)] = {Rational(sub(a.y, b.y), d), Rational(sub(b.x, a.x), d)};
    }
    // shoelace centroid; the dual vertices inherit ccw order
    Rational area2(0), cx(0), cy(0);
    for (size_t i = 0; i < 3; ++i) {
        const RationalVec& p = y[i];
        const RationalVec& q = y[(i + 1) % 3];
        Rational cross = p.x * q.y - p.y * q.x;
        area2 += cross;
        cx += (p.x + q.x) * cross;
        cy += (p.y + q.y) * cross;
    }
    if (area2.is_zero()) throw std::logic_error("dual polygon is degenerate");
    Rational scale = Rational(1) / (Rational(3) * area2);
    return {cx * scale, cy * scale};
}

std::array<i64, 6> canonical_key(const FanoTriangle& t) { return flatten(t.vertices()); }

} // namespace tldp
