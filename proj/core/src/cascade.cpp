#include "tldp/cascade.hpp"

#include <algorithm>

namespace tldp {

namespace {

WeightedCycle least_rotation(const WeightedCycle& c) {
    size_t n = c.size();
    size_t best = 0;
    for (size_t i = 1; i < n; ++i) {
        for (size_t k = 0; k < n; ++k) {
            i64 a = c[(i + k) % n], b = c[(best + k) % n];
            if (a != b) {
                if (a < b) best = i;
                break;
            }
        }
    }
    WeightedCycle out(n);
    for (size_t k = 0; k < n; ++k) out[k] = c[(best + k) % n];
    return out;
}

i64 exceptional_trace(const WeightedCycle& c) {
    i64 t = 0;
    for (i64 w : c)
        if (w <= -2) t = add(t, neg(w));
    return t;
}

i64 exceptional_count(const WeightedCycle& c) {
    i64 l = 0;
    for (i64 w : c)
        if (w <= -2) ++l;
    return l;
}

} // namespace

WeightedCycle canonical_cycle(const WeightedCycle& c) {
    if (c.empty()) throw std::invalid_argument("empty cycle");
    WeightedCycle fwd = least_rotation(c);
    WeightedCycle rev(c.rbegin(), c.rend());
    rev = least_rotation(rev);
    return std::min(fwd, rev);
}

bool cycles_equivalent(const WeightedCycle& a, const WeightedCycle& b) {
    return a.size() == b.size() && canonical_cycle(a) == canonical_cycle(b);
}

bool is_valid_cycle(const WeightedCycle& c) {
    size_t n = c.size();
    if (n < 3) return false;
    i64 sum = 0;
    int marks = 0;
    for (i64 w : c) {
        sum = add(sum, w);
        if (w >= -1) ++marks;
    }
    return sum == 12 - 3 * static_cast<i64>(n) && marks == 3;
}

WeightedCycle blow_down(const WeightedCycle& c, size_t i) {
    size_t n = c.size();
    if (i >= n) throw std::invalid_argument("vertex index out of range");
    if (n < 4) throw std::invalid_argument("cycle too short to blow down");
    if (c[i] != -1) throw std::invalid_argument("blow_down target weight is not -1");
    WeightedCycle out = c;
    out[(i + n - 1) % n] = add(out[(i + n - 1) % n], 1);
    out[(i + 1) % n] = add(out[(i + 1) % n], 1);
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
}

WeightedCycle blow_up(const WeightedCycle& c, size_t edge) {
    size_t n = c.size();
    if (edge >= n) throw std::invalid_argument("edge index out of range");
    if (n < 3) throw std::invalid_argument("cycle too short to blow up");
    WeightedCycle out = c;
    out[edge] = sub(out[edge], 1);
    out[(edge + 1) % n] = sub(out[(edge + 1) % n], 1);
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(edge) + 1, -1);
    return out;
}

bool is_basic(const WeightedCycle& c) {
    size_t n = c.size();
    for (size_t i = 0; i < n; ++i) {
        if (c[i] != -1) continue;
        if (c[(i + n - 1) % n] < -2 || c[(i + 1) % n] < -2) return false;
    }
    return true;
}

std::string BasicType::str() const {
    switch (kind) {
        case P2: return "P2";
        case Std0: return "std0(" + std::to_string(n) + ")";
        case Std1: return "std1(" + std::to_string(n) + ")";
        case Std2: return "std2(" + std::to_string(n) + ")";
        case ThreeA2: return "3A2";
    }
    return "?";
}

WeightedCycle basic_cycle(const BasicType& b) {
    switch (b.kind) {
        case BasicType::P2: return {1, 1, 1};
        case BasicType::Std0: break;
        case BasicType::Std1: break;
        case BasicType::Std2: break;
        case BasicType::ThreeA2: return {-1, -2, -2, -1, -2, -2, -1, -2, -2};
    }
    if (b.n < 2) throw std::invalid_argument("std family needs n >= 2");
    switch (b.kind) {
        case BasicType::Std0: return {0, neg(b.n), 0, b.n};
        case BasicType::Std1: return {0, neg(b.n), -2, -1, -2, sub(b.n, 1)};
        case BasicType::Std2: return {-2, neg(b.n), -2, -1, -2, sub(b.n, 2), -2, -1};
        default: break;
    }
    throw std::logic_error("unreachable");
}

std::optional<BasicType> basic_type(const WeightedCycle& c) {
    WeightedCycle cc = canonical_cycle(c);
    auto try_match = [&](BasicType b) -> std::optional<BasicType> {
        if (canonical_cycle(basic_cycle(b)) == cc) return b;
        return std::nullopt;
    };
    switch (cc.size()) {
        case 3: return try_match({BasicType::P2, 0});
        case 4: {
            i64 n = *std::max_element(cc.begin(), cc.end());
            if (n >= 2) return try_match({BasicType::Std0, n});
            break;
        }
        case 6: {
            i64 n = neg(*std::min_element(cc.begin(), cc.end()));
            if (n >= 2) return try_match({BasicType::Std1, n});
            break;
        }
        case 8: {
            i64 n = neg(*std::min_element(cc.begin(), cc.end()));
            if (n >= 2) return try_match({BasicType::Std2, n});
            break;
        }
        case 9: return try_match({BasicType::ThreeA2, 0});
        default: break;
    }
    return std::nullopt;
}

std::optional<CascadeStep> cascade_step(const WeightedCycle& c) {
    if (!is_valid_cycle(c)) throw std::invalid_argument("not a valid weight cycle");
    WeightedCycle cc = canonical_cycle(c);
    if (is_basic(cc)) return std::nullopt;
    size_t n = cc.size();
    for (size_t i = 0; i < n; ++i) {
        if (cc[i] != -1) continue;
        i64 left = cc[(i + n - 1) % n];
        i64 right = cc[(i + 1) % n];
        if (left > -3 && right > -3) continue; // not contractible along the cascade
        i64 other = left <= -3 ? right : left;
        if (left <= -3 && right <= -3)
            throw StructureViolation("-1 vertex with two neighbors <= -3");
        if (other != -2)
            throw StructureViolation("-1 vertex whose second neighbor is not -2");
        return CascadeStep{cc, i, blow_down(cc, i)};
    }
    throw std::logic_error("non-basic cycle without admissible vertex");
}

CascadeTrace run_cascade(const WeightedCycle& c) {
    if (!is_valid_cycle(c)) throw std::invalid_argument("not a valid weight cycle");
    CascadeTrace trace;
    trace.start = canonical_cycle(c);

    size_t chains = singular_chains(trace.start).size();
    i64 inv = sub(exceptional_trace(trace.start), mul(3, exceptional_count(trace.start)));

    WeightedCycle cur = trace.start;
    while (auto step = cascade_step(cur)) {
        cur = step->after;
        if (singular_chains(cur).size() != chains)
            throw StructureViolation("cascade step changed the singular point count");
        if (sub(exceptional_trace(cur), mul(3, exceptional_count(cur))) != inv)
            throw StructureViolation("cascade step changed trace - 3L");
        trace.steps.push_back(std::move(*step));
    }
    trace.terminal = canonical_cycle(cur);
    auto b = basic_type(trace.terminal);
    if (!b) throw StructureViolation("terminal cycle matches no basic graph");
    trace.basic = *b;
    return trace;
}

std::vector<SingularityType> singular_chains(const WeightedCycle& c) {
    size_t n = c.size();
    size_t start = n;
    for (size_t i = 0; i < n; ++i)
        if (c[i] >= -1) {
            start = i;
            break;
        }
    if (start == n) throw std::invalid_argument("cycle has no marked vertex");

    std::vector<SingularityType> out;
    HJChain run;
    for (size_t k = 1; k <= n; ++k) {
        i64 w = c[(start + k) % n];
        if (w <= -2) {
            run.push_back(neg(w));
        } else if (!run.empty()) {
            out.push_back(SingularityType::from_chain(run));
            run.clear();
        }
    }
    if (!run.empty()) out.push_back(SingularityType::from_chain(run));
    std::sort(out.begin(), out.end());
    return out;
}

std::string fiber_type_str(FiberType f) {
    switch (f) {
        case FiberType::F0: return "F0";
        case FiberType::I0: return "I0";
        case FiberType::I: return "I";
        case FiberType::II0: return "II0";
        case FiberType::II: return "II";
    }
    return "?";
}

std::string FibrationProfile::str() const {
    return "[[" + std::to_string(s1) + "," + fiber_type_str(fiber_a) + "," +
           std::to_string(s2) + "," + fiber_type_str(fiber_b) + "]]";
}

namespace {

// Classifies a fiber arc by repeated contraction of its leftmost -1
// component; exact pattern matches are checked before contracting so the
// minimal configurations report their own type.
std::optional<FiberType> classify_fiber(std::vector<i64> a) {
    static const std::vector<i64> kI0 = {-2, -1, -2};
    static const std::vector<i64> kII0 = {-1, -2, -2, -1};
    bool contracted = false;
    while (!a.empty()) {
        if (a.size() == 1 && a[0] == 0)
            return contracted ? std::nullopt : std::optional(FiberType::F0);
        if (a == kI0) return contracted ? FiberType::I : FiberType::I0;
        if (a == kII0) return contracted ? FiberType::II : FiberType::II0;
        size_t i = 0;
        while (i < a.size() && a[i] != -1) ++i;
        if (i == a.size()) return std::nullopt;
        if (i > 0) a[i - 1] = add(a[i - 1], 1);
        if (i + 1 < a.size()) a[i + 1] = add(a[i + 1], 1);
        a.erase(a.begin() + static_cast<std::ptrdiff_t>(i));
        contracted = true;
    }
    return std::nullopt;
}

} // namespace

FibrationProfile fibration_profile(const WeightedCycle& c, const BasicType& b) {
    if (b.kind == BasicType::P2) throw std::invalid_argument("P2 carries no ruling");
    if (!is_valid_cycle(c)) throw std::invalid_argument("not a valid weight cycle");
    size_t n = c.size();

    std::optional<std::array<i64, 4>> best_key;
    FibrationProfile best;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            std::vector<i64> arc_a, arc_b;
            for (size_t k = (i + 1) % n; k != j; k = (k + 1) % n) arc_a.push_back(c[k]);
            for (size_t k = (j + 1) % n; k != i; k = (k + 1) % n) arc_b.push_back(c[k]);
            if (arc_a.empty() || arc_b.empty()) continue;
            auto fa = classify_fiber(arc_a);
            if (!fa) continue;
            auto fb = classify_fiber(arc_b);
            if (!fb) continue;
            std::array<i64, 4> key{c[i], c[j], static_cast<i64>(*fa), static_cast<i64>(*fb)};
            if (!best_key || key < *best_key) {
                best_key = key;
                best = {c[i], *fa, c[j], *fb};
            }
        }
    }
    if (!best_key) throw StructureViolation("no section pair decomposes the cycle into fibers");
    return best;
}

BrauerFamilyMember brauer_family(i64 n) {
    if (n < 0) throw std::invalid_argument("family index must be >= 0");
    WeightedCycle cycle = basic_cycle({BasicType::ThreeA2, 0});
    // the chosen pair of adjacent -2 curves sits at positions c1, c1+1, with
    // a -1 curve on each far side
    size_t c1 = 1;
    for (i64 round = 0; round < n; ++round) {
        cycle = blow_up(cycle, c1 - 1); // at C1 ∩ E1'
        ++c1;                           // insertion shifted C1 and C2 right
        cycle = blow_up(cycle, c1 + 1); // at C2 ∩ E2'
    }
    auto r = realize(cycle);
    if (!r.ok()) throw std::logic_error("family cycle failed to realize");
    return {std::move(cycle), r.triangle()};
}

std::set<std::string> explore_basic_types(const WeightedCycle& c) {
    std::set<WeightedCycle> seen;
    std::set<std::string> out;
    std::vector<WeightedCycle> stack{canonical_cycle(c)};
    while (!stack.empty()) {
        WeightedCycle cur = std::move(stack.back());
        stack.pop_back();
        if (!seen.insert(cur).second) continue;
        if (is_basic(cur)) {
            auto b = basic_type(cur);
            out.insert(b ? b->str() : "unrecognized:" + std::to_string(cur.size()));
            continue;
        }
        size_t n = cur.size();
        for (size_t i = 0; i < n; ++i) {
            if (cur[i] != -1) continue;
            i64 left = cur[(i + n - 1) % n];
            i64 right = cur[(i + 1) % n];
            if (left > -3 && right > -3) continue;
            if ((left <= -3 && right != -2) || (right <= -3 && left != -2))
                throw StructureViolation("inadmissible -1 neighborhood");
            stack.push_back(canonical_cycle(blow_down(cur, i)));
        }
    }
    return out;
}

} // namespace tldp
