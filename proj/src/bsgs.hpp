#pragma once

// Generic Schreier-Sims machinery.  Elements E are matrices or permutations;
// the group acts on 128-bit canonical point keys through a caller-supplied
// action map.  Composition is left-to-right throughout:
//     act(mul(g, h), x) == act(h, act(g, x)).
//
// Schreier vectors store generator indices; transversal elements are
// recomposed on demand, so memory stays proportional to the orbit sizes.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

namespace gfv {

using Key = unsigned __int128;

struct KeyHash {
    std::size_t operator()(Key k) const {
        std::uint64_t lo = static_cast<std::uint64_t>(k);
        std::uint64_t hi = static_cast<std::uint64_t>(k >> 64);
        std::uint64_t x = lo * 0x9e3779b97f4a7c15ull ^ (hi + 0xbf58476d1ce4e5b9ull);
        x ^= x >> 31;
        return static_cast<std::size_t>(x * 0x94d049bb133111ebull);
    }
};

class EngineError : public std::runtime_error {
public:
    explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

template <class E>
struct GroupOps {
    E id;
    std::function<E(const E&, const E&)> mul;  // left-to-right
    std::function<E(const E&)> inv;
    std::function<bool(const E&)> is_id;
    // a point of the action moved by a non-identity element (base extension)
    std::function<Key(const E&)> moved_point;
};

template <class E>
using Action = std::function<Key(const E&, Key)>;

struct OrbitData {
    std::vector<Key> points;  // BFS order, points[0] = start
    std::unordered_map<Key, std::uint32_t, KeyHash> index;
    std::vector<std::int32_t> from;  // predecessor point index (-1 at root)
    std::vector<std::int32_t> gen;   // local generator index used
};

template <class E>
OrbitData orbit(const std::vector<E>& gens, const Action<E>& act, Key start,
                std::size_t budget = (1u << 24)) {
    OrbitData o;
    o.points.push_back(start);
    o.index[start] = 0;
    o.from.push_back(-1);
    o.gen.push_back(-1);
    for (std::size_t head = 0; head < o.points.size(); ++head) {
        Key p = o.points[head];
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            Key q = act(gens[gi], p);
            if (o.index.count(q)) continue;
            if (o.points.size() >= budget) throw EngineError("budget-exceeded");
            o.index[q] = static_cast<std::uint32_t>(o.points.size());
            o.points.push_back(q);
            o.from.push_back(static_cast<std::int32_t>(head));
            o.gen.push_back(static_cast<std::int32_t>(gi));
        }
    }
    return o;
}

template <class E>
class BsgsChain {
public:
    GroupOps<E> ops;
    Action<E> act;
    std::vector<E> strong, strong_inv;
    std::vector<std::size_t> depth;  // per strong generator: # leading base points fixed

    struct Level {
        Key base;
        std::vector<std::uint32_t> gidx;  // strong-generator indices active here
        OrbitData orb;
    };
    std::vector<Level> levels;

    mpz_class order() const {
        mpz_class n = 1;
        for (const auto& lv : levels) n *= static_cast<unsigned long>(lv.orb.points.size());
        return n;
    }

    std::vector<Key> base() const {
        std::vector<Key> b;
        for (const auto& lv : levels) b.push_back(lv.base);
        return b;
    }

    // transversal element mapping base of the level to the orbit point
    E rep(std::size_t lvl, std::uint32_t pt) const {
        const Level& L = levels[lvl];
        E g = ops.id;
        std::int32_t cur = static_cast<std::int32_t>(pt);
        // collect path generators root -> pt, then compose in order
        std::vector<std::uint32_t> path;
        while (L.orb.from[cur] >= 0) {
            path.push_back(L.gidx[L.orb.gen[cur]]);
            cur = L.orb.from[cur];
        }
        for (std::size_t i = path.size(); i-- > 0;) g = ops.mul(g, strong[path[i]]);
        return g;
    }

    E rep_inv(std::size_t lvl, std::uint32_t pt) const {
        const Level& L = levels[lvl];
        E g = ops.id;
        std::int32_t cur = static_cast<std::int32_t>(pt);
        while (L.orb.from[cur] >= 0) {
            g = ops.mul(g, strong_inv[L.gidx[L.orb.gen[cur]]]);
            cur = L.orb.from[cur];
        }
        return g;
    }

    // Sift g through the chain starting at the given level.  On success the
    // residue is the identity; otherwise residue holds the first failure and
    // fail_level the level where the base image left the orbit (or
    // levels.size() if the residue fixes every base point).
    bool sift_from(std::size_t start, const E& g, E* residue_out,
                   std::size_t* fail_level = nullptr) const {
        E h = g;
        for (std::size_t i = start; i < levels.size(); ++i) {
            Key img = act(h, levels[i].base);
            auto it = levels[i].orb.index.find(img);
            if (it == levels[i].orb.index.end()) {
                if (residue_out) *residue_out = h;
                if (fail_level) *fail_level = i;
                return false;
            }
            h = ops.mul(h, rep_inv(i, it->second));
        }
        if (ops.is_id(h)) {
            if (residue_out) *residue_out = ops.id;
            return true;
        }
        if (residue_out) *residue_out = h;
        if (fail_level) *fail_level = levels.size();
        return false;
    }

    bool member(const E& g) const { return sift_from(0, g, nullptr); }
};

// ---------------------------------------------------------------------------

template <class E>
class ChainBuilder {
public:
    ChainBuilder(std::vector<E> gens, GroupOps<E> ops, Action<E> act,
                 std::optional<mpz_class> known_order,
                 std::vector<Key> base_hint = {}, std::size_t orbit_budget = (1u << 24))
        : known_(std::move(known_order)), orbit_budget_(orbit_budget) {
        chain_.ops = std::move(ops);
        chain_.act = std::move(act);
        for (Key b : base_hint) add_level(b);
        for (const E& g : gens) {
            if (chain_.ops.is_id(g)) continue;
            insert_strong(g);
        }
        if (chain_.levels.empty() && !done()) {
            // trivial group
        }
        if (!done() && known_) random_closure();
        if (!done()) {
            for (std::size_t i = chain_.levels.size(); i-- > 0;) {
                complete_level(i);
                if (done()) break;
            }
        }
        if (known_ && chain_.order() != *known_)
            throw EngineError("order-mismatch: got " + chain_.order().get_str() +
                              " expected " + known_->get_str());
    }

    BsgsChain<E> take() { return std::move(chain_); }

private:
    BsgsChain<E> chain_;
    std::optional<mpz_class> known_;
    std::size_t orbit_budget_;

    bool done() const { return known_ && chain_.order() == *known_; }

    void add_level(Key base) {
        typename BsgsChain<E>::Level lv;
        lv.base = base;
        chain_.levels.push_back(std::move(lv));
        rebuild_orbit(chain_.levels.size() - 1);
    }

    std::vector<E> level_gens(std::size_t lvl) const {
        std::vector<E> gs;
        for (std::uint32_t gi : chain_.levels[lvl].gidx) gs.push_back(chain_.strong[gi]);
        return gs;
    }

    void rebuild_orbit(std::size_t lvl) {
        auto& L = chain_.levels[lvl];
        L.gidx.clear();
        for (std::uint32_t gi = 0; gi < chain_.strong.size(); ++gi)
            if (chain_.depth[gi] >= lvl) L.gidx.push_back(gi);
        L.orb = orbit(level_gens(lvl), chain_.act, L.base, orbit_budget_);
    }

    // append one generator to a level and grow its orbit incrementally
    void extend_orbit(std::size_t lvl, std::uint32_t gi) {
        auto& L = chain_.levels[lvl];
        L.gidx.push_back(gi);
        auto& o = L.orb;
        std::size_t old_size = o.points.size();
        // seed: new generator applied to the existing orbit
        for (std::size_t head = 0; head < old_size; ++head) {
            Key q = chain_.act(chain_.strong[gi], o.points[head]);
            if (o.index.count(q)) continue;
            if (o.points.size() >= orbit_budget_) throw EngineError("budget-exceeded");
            o.index[q] = static_cast<std::uint32_t>(o.points.size());
            o.points.push_back(q);
            o.from.push_back(static_cast<std::int32_t>(head));
            o.gen.push_back(static_cast<std::int32_t>(L.gidx.size() - 1));
        }
        // BFS the new points with every active generator
        for (std::size_t head = old_size; head < o.points.size(); ++head) {
            for (std::size_t lg = 0; lg < L.gidx.size(); ++lg) {
                Key q = chain_.act(chain_.strong[L.gidx[lg]], o.points[head]);
                if (o.index.count(q)) continue;
                if (o.points.size() >= orbit_budget_) throw EngineError("budget-exceeded");
                o.index[q] = static_cast<std::uint32_t>(o.points.size());
                o.points.push_back(q);
                o.from.push_back(static_cast<std::int32_t>(head));
                o.gen.push_back(static_cast<std::int32_t>(lg));
            }
        }
    }

    // register g as a strong generator; returns its depth
    std::size_t insert_strong(const E& g) {
        std::size_t d = 0;
        while (d < chain_.levels.size() &&
               chain_.act(g, chain_.levels[d].base) == chain_.levels[d].base)
            ++d;
        if (d == chain_.levels.size()) {
            Key moved = chain_.ops.moved_point(g);
            if (chain_.act(g, moved) == moved)
                throw EngineError("moved_point returned a fixed point");
            add_level(moved);
        }
        chain_.strong.push_back(g);
        chain_.strong_inv.push_back(chain_.ops.inv(g));
        chain_.depth.push_back(d);
        std::uint32_t gi = static_cast<std::uint32_t>(chain_.strong.size() - 1);
        for (std::size_t i = 0; i <= d && i < chain_.levels.size(); ++i) extend_orbit(i, gi);
        return d;
    }

    void random_closure() {
        std::mt19937_64 rng(0x5EED);
        if (chain_.strong.empty()) return;
        E h = chain_.ops.id;
        unsigned misses = 0;
        for (unsigned iter = 0; iter < 20000 && misses < 60; ++iter) {
            h = chain_.ops.mul(h, chain_.strong[rng() % chain_.strong.size()]);
            E res;
            if (!chain_.sift_from(0, h, &res)) {
                insert_strong(res);
                misses = 0;
                if (done()) return;
            } else {
                ++misses;
            }
        }
    }

    // make level i closed under Schreier generators (levels > i already closed)
    void complete_level(std::size_t i) {
        for (;;) {
            if (done()) return;
            bool restart = false;
            auto& L = chain_.levels[i];
            for (std::size_t oi = 0; oi < L.orb.points.size() && !restart; ++oi) {
                E u = chain_.rep(i, static_cast<std::uint32_t>(oi));
                for (std::size_t lg = 0; lg < L.gidx.size() && !restart; ++lg) {
                    const E& g = chain_.strong[L.gidx[lg]];
                    Key tgt = chain_.act(g, L.orb.points[oi]);
                    auto it = L.orb.index.find(tgt);
                    if (it == L.orb.index.end())
                        throw EngineError("orbit-closure-violated");
                    E s = chain_.ops.mul(chain_.ops.mul(u, g),
                                         chain_.rep_inv(i, it->second));
                    E res;
                    if (chain_.sift_from(i + 1, s, &res)) continue;
                    std::size_t d = insert_strong(res);
                    if (done()) return;
                    for (std::size_t k = d; k > i; --k) {
                        complete_level(k);
                        if (done()) return;
                    }
                    restart = true;
                }
            }
            if (!restart) return;
        }
    }
};

template <class E>
BsgsChain<E> schreier_sims(const std::vector<E>& gens, GroupOps<E> ops, Action<E> act,
                           std::optional<mpz_class> known_order,
                           std::vector<Key> base_hint = {},
                           std::size_t orbit_budget = (1u << 24)) {
    ChainBuilder<E> b(gens, std::move(ops), std::move(act), std::move(known_order),
                      std::move(base_hint), orbit_budget);
    return b.take();
}

// orbit of the first point of `universe` under `gens` equals the whole set?
template <class E>
bool is_transitive_on(const std::vector<E>& gens, const Action<E>& act,
                      const OrbitData& universe) {
    OrbitData sub = orbit(gens, act, universe.points.at(0), universe.points.size() + 1);
    if (sub.points.size() > universe.points.size())
        throw EngineError("point-not-in-universe");
    return sub.points.size() == universe.points.size();
}

// generators of the stabilizer of `point`: rebuild the chain with the point
// as first base entry, then collect strong generators fixing it
template <class E>
std::vector<E> point_stabilizer(const BsgsChain<E>& chain, Key point,
                                mpz_class* stab_order = nullptr) {
    std::vector<E> gens = chain.strong;
    ChainBuilder<E> b(gens, chain.ops, chain.act, chain.order(), {point});
    BsgsChain<E> c2 = b.take();
    std::vector<E> out;
    for (std::size_t gi = 0; gi < c2.strong.size(); ++gi)
        if (c2.depth[gi] >= 1) out.push_back(c2.strong[gi]);
    if (stab_order) {
        mpz_class n = 1;
        for (std::size_t i = 1; i < c2.levels.size(); ++i)
            n *= static_cast<unsigned long>(c2.levels[i].orb.points.size());
        *stab_order = n;
    }
    return out;
}

// kernel of a parity homomorphism onto Z/2 via Schreier generators over the
// transversal {1, t}; caller supplies the generator parities
template <class E>
std::vector<E> index2_kernel(const std::vector<E>& gens, const std::vector<int>& parity,
                             const GroupOps<E>& ops) {
    int any = -1;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (parity[i] % 2 == 1) { any = static_cast<int>(i); break; }
    if (any < 0) return gens;
    const E& t = gens[any];
    E tinv = ops.inv(t);
    std::vector<E> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const E& g = gens[i];
        if (parity[i] % 2 == 0) {
            out.push_back(g);
            out.push_back(ops.mul(ops.mul(t, g), tinv));
        } else {
            out.push_back(ops.mul(g, tinv));
            out.push_back(ops.mul(t, g));
        }
    }
    std::vector<E> dedup;
    for (const E& g : out)
        if (!ops.is_id(g)) dedup.push_back(g);
    return dedup;
}

// exact |A ∩ B| by traversing every element of A (|A| within budget) and
// sifting it into B's chain
template <class E>
mpz_class tiny_intersection_order(const BsgsChain<E>& A, const BsgsChain<E>& B,
                                  unsigned long budget = 10000000ul) {
    if (A.order() > mpz_class(budget)) throw EngineError("budget-exceeded");
    // materialize transversals per level
    std::vector<std::vector<E>> trans(A.levels.size());
    for (std::size_t i = 0; i < A.levels.size(); ++i)
        for (std::uint32_t p = 0; p < A.levels[i].orb.points.size(); ++p)
            trans[i].push_back(A.rep(i, p));
    if (A.levels.empty()) return B.member(A.ops.id) ? 1 : 0;
    mpz_class count = 0;
    // DFS from the deepest level upward: element = u_{L-1} * ... * u_0
    std::function<void(std::size_t, const E&)> walk = [&](std::size_t lvl, const E& h) {
        if (lvl == 0) {
            for (const E& u : trans[0])
                if (B.member(A.ops.mul(h, u))) ++count;
            return;
        }
        for (const E& u : trans[lvl]) walk(lvl - 1, A.ops.mul(h, u));
    };
    walk(A.levels.size() - 1, A.ops.id);
    return count;
}

}  // namespace gfv
