#include "tldp/hj.hpp"

#include <algorithm>
#include <numeric>

namespace tldp {

ProjectiveValue hj_eval(const HJChain& chain) {
    // Right-to-left: v -> n - 1/v as the Möbius step (p,q) -> (n*p - q, p),
    // starting from ∞ = (1,0). Division never happens, so entries of any
    // sign are accepted and the result is exact.
    i64 p = 1, q = 0;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        i64 np = sub(mul(*it, p), q);
        q = p;
        p = np;
    }
    if (q < 0) { p = neg(p); q = neg(q); }
    if (q == 0) return {1, 0};
    i64 g = std::gcd(p, q);
    return {p / g, q / g};
}

Rational hj_eval_finite(const HJChain& chain) { return hj_eval(chain).finite(); }

HJChain hj_expand(i64 r, i64 a) {
    if (!(r > a && a >= 1)) throw std::invalid_argument("hj_expand needs r > a >= 1");
    if (std::gcd(r, a) != 1) throw std::invalid_argument("hj_expand needs gcd(r,a) == 1");
    HJChain out;
    while (a > 0) {
        i64 c = (r + a - 1) / a; // ceil(r/a), >= 2 since r > a
        out.push_back(c);
        i64 next_a = sub(mul(c, a), r);
        r = a;
        a = next_a;
    }
    return out;
}

HJChain zero_complement(const HJChain& m) {
    Rational v = hj_eval_finite(m);
    i64 q = v.num(), q1 = v.den();
    if (!(q > q1 && q1 >= 1)) throw std::invalid_argument("chain must evaluate to q/q1 with q > q1 >= 1");
    HJChain n = hj_expand(q, q - q1);
    std::reverse(n.begin(), n.end());
    return n;
}

std::pair<Rational, Rational> chain_reversal_fraction(const HJChain& chain) {
    HJChain rev(chain.rbegin(), chain.rend());
    return {hj_eval_finite(chain), hj_eval_finite(rev)};
}

SingularityType SingularityType::from_chain(const HJChain& chain) {
    if (chain.empty()) throw std::invalid_argument("singularity chain is empty");
    for (i64 c : chain)
        if (c < 2) throw std::invalid_argument("singularity chain entry < 2");
    HJChain rev(chain.rbegin(), chain.rend());
    SingularityType t;
    t.chain = std::min(chain, rev);
    t.order = hj_eval_finite(chain).num();
    return t;
}

SingularityType SingularityType::from_fraction(i64 r, i64 a) {
    return from_chain(hj_expand(r, a));
}

std::string SingularityType::str() const {
    std::string s = "[";
    for (size_t i = 0; i < chain.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(chain[i]);
    }
    return s + "]";
}

namespace {

// Normalizes cone(u,w) by a det-1 map to cone((1,0),(p,r)) with 0 <= p < r.
// Returns (r, p).
std::pair<i64, i64> normalized_cone(const Vec& u, const Vec& w) {
    if (!is_primitive(u) || !is_primitive(w))
        throw std::invalid_argument("cone generators must be primitive");
    i64 r = det(u, w);
    if (r < 1) throw std::invalid_argument("cone generators must be positively oriented");
    Vec img = UnimodularMap::sending_to_e1(u).apply(w); // = (p0, r)
    i64 p = img.x % r;
    if (p < 0) p += r;
    return {r, p};
}

} // namespace

ConeSingularity cone_singularity(const Vec& u, const Vec& w) {
    auto [r, p] = normalized_cone(u, w);
    ConeSingularity out;
    out.order = r;
    if (r > 1) out.chain = hj_expand(r, r - p); // chain read from the u side
    return out;
}

std::vector<Vec> resolve_cone(const Vec& u, const Vec& w) {
    std::vector<Vec> inserted;
    Vec cur = u;
    while (true) {
        auto [r, p] = normalized_cone(cur, w);
        if (r == 1) break;
        // first Newton-boundary point after cur: ((r-p)·cur + w) / r
        i64 m = r - p;
        Vec t{(add(mul(m, cur.x), w.x)) / r, (add(mul(m, cur.y), w.y)) / r};
        if (det(cur, t) != 1) throw std::logic_error("cone resolution step broke unimodularity");
        inserted.push_back(t);
        cur = t;
    }
    return inserted;
}

} // namespace tldp
