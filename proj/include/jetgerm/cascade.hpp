#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jetgerm/germ.hpp"
#include "jetgerm/mat2.hpp"

namespace jetgerm {

/// Element-type hooks for the commutator cascade. Two instantiations are
/// provided: germs at a fixed truncation degree (triviality always means
/// "identity modulo degree N") and exact 2x2 matrices (absolute triviality).
template <class E>
struct CascadeTraits;

template <JetScalar S>
struct CascadeTraits<Germ<S>> {
    static constexpr bool truncated = true;
    static bool is_identity(const Germ<S>& g) { return g == Germ<S>::identity(g.trunc()); }
    static Germ<S> invert(const Germ<S>& g) { return germ_invert(g); }
    static Germ<S> commutator(const Germ<S>& a, const Germ<S>& ainv, const Germ<S>& b,
                              const Germ<S>& binv) {
        return germ_compose(germ_compose(germ_compose(binv, ainv), b), a);
    }
    /// Contact order when tangent to the identity, -1 otherwise.
    static int contact(const Germ<S>& g) { return is_tangent(g) ? contact_order(g) : -1; }
    static std::string key(const Germ<S>& g) {
        std::string s;
        auto comp = [&](const Jet2<S>& f) {
            for (const auto& [m, c] : f.terms())
                s += std::to_string(m.i) + "," + std::to_string(m.j) + ":" + ScalarOps<S>::repr(c) + ";";
            s += "|";
        };
        comp(g.f1());
        comp(g.f2());
        return s;
    }
};

template <JetScalar S>
struct CascadeTraits<Mat2<S>> {
    static constexpr bool truncated = false;
    static bool is_identity(const Mat2<S>& m) { return m.is_identity(); }
    static Mat2<S> invert(const Mat2<S>& m) { return mat_inverse(m); }
    static Mat2<S> commutator(const Mat2<S>& a, const Mat2<S>& ainv, const Mat2<S>& b,
                              const Mat2<S>& binv) {
        return binv * ainv * b * a;
    }
    static int contact(const Mat2<S>&) { return -1; }
    static std::string key(const Mat2<S>& m) {
        return ScalarOps<S>::repr(m.a) + "|" + ScalarOps<S>::repr(m.b) + "|" + ScalarOps<S>::repr(m.c) +
               "|" + ScalarOps<S>::repr(m.d);
    }
};

template <class E>
struct CascadeItem {
    E value;
    std::string word;   // bracket expression in the generator labels
    long word_length;   // letters when fully expanded in the generators
    int contact;        // germ mode: contact order if tangent, else -1
};

template <class E>
struct CascadeLevel {
    std::vector<CascadeItem<E>> items;
    bool overflowed = false;         // hit the per-level cap; set is a prefix
    bool truncation_forced = false;  // emptied by the contact-order floor, not computed
    int min_contact = -1;            // over tangent items; -1 if none
};

template <class E>
struct CascadeReport {
    std::vector<CascadeLevel<E>> levels; // levels[0] = S(0)
    std::optional<int> degeneration_index;
    bool truncation_forced = false; // the reported index is a floor artifact
    bool any_overflow = false;      // some level was capped: later triviality is inconclusive
    int trunc_degree = -1;          // germ mode only
};

namespace detail {

template <class E>
int level_min_contact(const std::vector<CascadeItem<E>>& items) {
    int mc = -1;
    for (const auto& it : items)
        if (it.contact >= 0 && (mc < 0 || it.contact < mc)) mc = it.contact;
    return mc;
}

template <class E>
bool all_tangent(const std::vector<CascadeItem<E>>& items) {
    for (const auto& it : items)
        if (it.contact < 0) return false;
    return true;
}

} // namespace detail

/// One cascade step: every commutator [F1^{e1}, F2^{e2}] over the four sign
/// choices, F1 from the current level and F2 from current-plus-previous
/// (previous empty at the first step), deduplicated by value with identity
/// elements removed. Enumeration order is deterministic; when the cap hits,
/// the kept set is the enumeration prefix and the level is flagged.
///
/// floor_degree > 0 enables a germ-mode shortcut that never changes the
/// result: a pair of tangent elements with contact orders r, s and
/// r + s - 1 > N has commutator identity mod N, so it is skipped unevaluated.
template <class E>
CascadeLevel<E> cascade_step(const std::vector<CascadeItem<E>>& sj,
                             const std::vector<CascadeItem<E>>& sjm1, std::size_t cap = 512,
                             int floor_degree = -1) {
    using T = CascadeTraits<E>;
    CascadeLevel<E> out;

    // F2 pool: S(j) followed by S(j-1), as a value-set.
    std::vector<const CascadeItem<E>*> pool;
    {
        std::set<std::string> seen;
        for (const auto& it : sj)
            if (seen.insert(T::key(it.value)).second) pool.push_back(&it);
        for (const auto& it : sjm1)
            if (seen.insert(T::key(it.value)).second) pool.push_back(&it);
    }

    std::vector<std::array<E, 2>> pool_pm;
    pool_pm.reserve(pool.size());
    for (const auto* it : pool) pool_pm.push_back({it->value, T::invert(it->value)});

    std::set<std::string> seen_out;
    const int signs[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}}; // 0 = +1, 1 = -1
    for (const auto& f1 : sj) {
        std::array<E, 2> f1_pm = {f1.value, T::invert(f1.value)};
        for (std::size_t p = 0; p < pool.size(); ++p) {
            const auto& f2 = *pool[p];
            if (floor_degree > 0 && f1.contact >= 0 && f2.contact >= 0 &&
                f1.contact + f2.contact - 1 > floor_degree)
                continue;
            for (const auto& sg : signs) {
                E c = T::commutator(f1_pm[sg[0]], f1_pm[1 - sg[0]], pool_pm[p][sg[1]],
                                    pool_pm[p][1 - sg[1]]);
                if (T::is_identity(c)) continue;
                if (!seen_out.insert(T::key(c)).second) continue;
                if (out.items.size() >= cap) {
                    out.overflowed = true;
                    out.min_contact = detail::level_min_contact(out.items);
                    return out;
                }
                const char* e1 = sg[0] ? "^-1" : "";
                const char* e2 = sg[1] ? "^-1" : "";
                int contact = T::contact(c);
                out.items.push_back(CascadeItem<E>{std::move(c),
                                                   "[" + f1.word + e1 + "," + f2.word + e2 + "]",
                                                   2 * (f1.word_length + f2.word_length), contact});
            }
        }
    }
    out.min_contact = detail::level_min_contact(out.items);
    return out;
}

struct CascadeOptions {
    std::size_t cap = 512;
    int trunc_degree = -1; // germ mode: N, enables the contact-order floor
};

/// Runs the cascade from S(0) for up to max_levels steps. Stops early when a
/// level comes out trivial (degeneration) or, in germ mode with every
/// relevant element tangent to the identity, when the contact-order floor
/// min(S(j)) + min(S(j) u S(j-1)) - 1 already exceeds N: the next level is
/// then trivial for truncation reasons alone and is flagged as such rather
/// than computed.
template <class E>
CascadeReport<E> run_cascade(std::vector<CascadeItem<E>> s0, int max_levels,
                             const CascadeOptions& opt = {}) {
    if (max_levels < 1) fail(errc::precondition_violated, "need at least one cascade level");
    if (s0.empty()) fail(errc::precondition_violated, "empty generator set");
    CascadeReport<E> rep;
    rep.trunc_degree = opt.trunc_degree;

    CascadeLevel<E> base;
    base.items = std::move(s0);
    for (auto& it : base.items) it.contact = CascadeTraits<E>::contact(it.value);
    base.min_contact = detail::level_min_contact(base.items);
    rep.levels.push_back(std::move(base));

    for (int j = 0; j < max_levels; ++j) {
        const auto& sj = rep.levels[j].items;
        static const std::vector<CascadeItem<E>> empty;
        const auto& sjm1 = j >= 1 ? rep.levels[j - 1].items : empty;

        if (CascadeTraits<E>::truncated && opt.trunc_degree > 0 && detail::all_tangent(sj) &&
            (j == 0 || detail::all_tangent(sjm1))) {
            int m1 = detail::level_min_contact(sj);
            int m2 = m1;
            if (j >= 1) {
                int mp = detail::level_min_contact(sjm1);
                if (mp >= 0 && mp < m2) m2 = mp;
            }
            if (m1 >= 0 && m1 + m2 - 1 > opt.trunc_degree) {
                CascadeLevel<E> forced;
                forced.truncation_forced = true;
                rep.levels.push_back(std::move(forced));
                rep.degeneration_index = j + 1;
                rep.truncation_forced = true;
                return rep;
            }
        }

        CascadeLevel<E> next =
            cascade_step(sj, sjm1, opt.cap, CascadeTraits<E>::truncated ? opt.trunc_degree : -1);
        rep.any_overflow = rep.any_overflow || next.overflowed;
        bool empty_level = next.items.empty();
        rep.levels.push_back(std::move(next));
        if (empty_level) {
            rep.degeneration_index = j + 1;
            return rep;
        }
    }
    return rep; // no degeneration within budget
}

/// Convenience: initial items from labeled generators.
template <class E>
std::vector<CascadeItem<E>> make_generators(const std::vector<E>& gens,
                                            const std::vector<std::string>& labels = {}) {
    std::vector<CascadeItem<E>> out;
    out.reserve(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        std::string label = k < labels.size() ? labels[k] : "g" + std::to_string(k + 1);
        out.push_back(CascadeItem<E>{gens[k], std::move(label), 1, CascadeTraits<E>::contact(gens[k])});
    }
    return out;
}

struct DegenerationRow {
    int degree;
    std::optional<int> degeneration_index;
    bool truncation_forced;
};

/// Reruns a germ cascade at several truncation degrees. A degeneration index
/// that is stable in N is evidence of genuine collapse of the jet data; an
/// index that keeps growing with N points at truncation artifacts.
template <JetScalar S>
std::vector<DegenerationRow> degeneration_vs_truncation(const std::vector<Germ<S>>& gens,
                                                        const std::vector<int>& degrees,
                                                        int max_levels, std::size_t cap = 512) {
    std::vector<DegenerationRow> rows;
    for (int n : degrees) {
        std::vector<Germ<S>> re;
        re.reserve(gens.size());
        for (const auto& g : gens) re.push_back(Germ<S>(g.f1().retrunc(n), g.f2().retrunc(n)));
        CascadeOptions opt;
        opt.cap = cap;
        opt.trunc_degree = n;
        auto rep = run_cascade(make_generators(re), max_levels, opt);
        rows.push_back({n, rep.degeneration_index, rep.truncation_forced});
    }
    return rows;
}

} // namespace jetgerm
