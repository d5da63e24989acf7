#pragma once

#include <map>
#include <vector>

#include "jetgerm/exp_log.hpp"
#include "jetgerm/vector_field.hpp"

namespace jetgerm {

/// Exact linear span of vector fields modulo degree N, kept in reduced row
/// echelon form over the monomial coordinates (component, then graded order).
/// RREF is canonical, so two spans are equal iff their rows match; all
/// pivoting is exact rational arithmetic.
class LieSpan {
public:
    using VF = VectorField<CRat>;

    explicit LieSpan(int n) : n_(n), mon_count_((n + 1) * (n + 2) / 2) {}

    int trunc() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    bool is_zero() const { return rows_.empty(); }

    /// Basis in echelon order (each field is the reduced row representative).
    std::vector<VF> basis() const {
        std::vector<VF> out;
        out.reserve(rows_.size());
        for (const auto& r : rows_) out.push_back(from_coords(r));
        return out;
    }

    /// Adds a field to the span; returns true when the dimension grew.
    bool insert(const VF& x) {
        if (x.trunc() != n_) fail(errc::degree_mismatch, "span degree differs");
        std::map<int, CRat> v = to_coords(x);
        reduce(v);
        if (v.empty()) return false;
        // normalize the pivot to 1, then eliminate it from the other rows
        CRat lead = v.begin()->second;
        for (auto& [k, c] : v) c = c / lead;
        int piv = v.begin()->first;
        for (auto& r : rows_) {
            auto it = r.find(piv);
            if (it == r.end()) continue;
            CRat f = it->second;
            axpy(r, v, -f);
        }
        auto pos = rows_.begin();
        while (pos != rows_.end() && pos->begin()->first < piv) ++pos;
        rows_.insert(pos, std::move(v));
        return true;
    }

    bool contains(const VF& x) const {
        std::map<int, CRat> v = to_coords(x);
        reduce(v);
        return v.empty();
    }

    bool contains_span(const LieSpan& other) const {
        for (const auto& r : other.rows_) {
            std::map<int, CRat> v = r;
            reduce(v);
            if (!v.empty()) return false;
        }
        return true;
    }

    friend bool operator==(const LieSpan& a, const LieSpan& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const LieSpan& a, const LieSpan& b) { return !(a == b); }

private:
    // coordinate index: component (a=0, b=1) major, then monomials in graded
    // order — total degree, then x-exponent
    int mon_rank(const Mon2& m) const { return m.deg() * (m.deg() + 1) / 2 + m.i; }

    std::map<int, CRat> to_coords(const VF& x) const {
        std::map<int, CRat> v;
        for (const auto& [m, c] : x.a().terms()) v.emplace(mon_rank(m), c);
        for (const auto& [m, c] : x.b().terms()) v.emplace(mon_count_ + mon_rank(m), c);
        return v;
    }

    VF from_coords(const std::map<int, CRat>& v) const {
        Jet2<CRat> a(n_), b(n_);
        for (const auto& [k, c] : v) {
            int rank = k < mon_count_ ? k : k - mon_count_;
            int d = 0;
            while ((d + 1) * (d + 2) / 2 <= rank) ++d;
            int i = rank - d * (d + 1) / 2;
            (k < mon_count_ ? a : b).add_term(i, d - i, c);
        }
        return VF(std::move(a), std::move(b));
    }

    static void axpy(std::map<int, CRat>& dst, const std::map<int, CRat>& src, const CRat& f) {
        for (const auto& [k, c] : src) {
            auto it = dst.find(k);
            if (it == dst.end()) {
                CRat v = c * f;
                if (!v.is_zero()) dst.emplace(k, std::move(v));
            } else {
                it->second += c * f;
                if (it->second.is_zero()) dst.erase(it);
            }
        }
    }

    void reduce(std::map<int, CRat>& v) const {
        for (const auto& r : rows_) {
            if (v.empty()) return;
            auto it = v.find(r.begin()->first);
            if (it == v.end()) continue;
            CRat f = it->second;
            axpy(v, r, -f);
        }
    }

    int n_;
    int mon_count_;
    std::vector<std::map<int, CRat>> rows_; // RREF, sorted by pivot index
};

/// Smallest bracket-closed span containing the generators modulo degree N.
/// Worklist closure: every dimension growth enqueues brackets with the whole
/// current basis; brackets strictly raise order, so the dimension is bounded
/// and the loop terminates.
inline LieSpan generate_algebra(const std::vector<VectorField<CRat>>& gens, int n) {
    using VF = VectorField<CRat>;
    LieSpan g(n);
    std::vector<VF> basis;
    std::vector<VF> work;
    for (const auto& x : gens) {
        if (!is_order_two_plus(x)) fail(errc::order_too_low, "algebra generators need order >= 2");
        work.push_back(VF(x.a().retrunc(n), x.b().retrunc(n)));
    }
    while (!work.empty()) {
        VF x = std::move(work.back());
        work.pop_back();
        if (!g.insert(x)) continue;
        for (const auto& b : basis) work.push_back(bracket(x, b));
        basis.push_back(std::move(x));
    }
    return g;
}

namespace detail {

/// Span of all pairwise brackets between two bases; by bilinearity this is
/// the span of [u, v] over the two full spans.
inline LieSpan bracket_span(const LieSpan& left, const LieSpan& right) {
    LieSpan out(left.trunc());
    auto lb = left.basis();
    auto rb = right.basis();
    for (const auto& u : lb)
        for (const auto& v : rb) out.insert(bracket(u, v));
    return out;
}

} // namespace detail

/// D^0 = g, D^{j+1} = [D^j, D^j]; the chain is returned through its first
/// zero term. Brackets raise order, so the chain always hits zero modulo
/// degree N; the derived length is stamped with N by every caller.
inline std::vector<LieSpan> derived_series(const LieSpan& g) {
    std::vector<LieSpan> out{g};
    while (!out.back().is_zero()) {
        LieSpan next = detail::bracket_span(out.back(), out.back());
        if (next == out.back()) break; // defensive; cannot happen for order>=2 fields
        out.push_back(std::move(next));
    }
    return out;
}

/// Smallest j with D^j = 0 (0 for the zero algebra, 1 for abelian, ...).
inline int derived_length(const LieSpan& g) {
    return static_cast<int>(derived_series(g).size()) - 1;
}

/// C^0 = g, C^1 = D^1, C^j = [g, C^{j-1}], through the first zero term.
inline std::vector<LieSpan> lower_central_series(const LieSpan& g) {
    std::vector<LieSpan> out{g};
    while (!out.back().is_zero()) {
        LieSpan next = detail::bracket_span(g, out.back());
        if (next == out.back()) break; // defensive
        out.push_back(std::move(next));
    }
    return out;
}

/// Smallest j with C^j = 0, i.e. the nilpotency length modulo degree N.
/// Truncation always terminates the chain, so non-nilpotency can only be
/// inferred by watching this value grow with N.
inline int nilpotency_length(const LieSpan& g) {
    return static_cast<int>(lower_central_series(g).size()) - 1;
}

/// Algebra generated by the logarithms of tangent-to-identity germs.
inline LieSpan group_algebra(const std::vector<Germ<CRat>>& gens, int n) {
    std::vector<VectorField<CRat>> logs;
    logs.reserve(gens.size());
    for (const auto& f : gens) logs.push_back(log_germ(f));
    return generate_algebra(logs, n);
}

enum class AbelianClass { NotAbelian, Dimension1, LinearSpan2, ParallelFamily };

inline const char* abelian_class_name(AbelianClass c) {
    switch (c) {
        case AbelianClass::NotAbelian: return "NotAbelian";
        case AbelianClass::Dimension1: return "Dimension1";
        case AbelianClass::LinearSpan2: return "LinearSpan2";
        case AbelianClass::ParallelFamily: return "ParallelFamily";
    }
    return "?";
}

/// Abelian-type classification modulo degree N. A non-parallel pair inside
/// an abelian span pins the dimension to two; otherwise all members are
/// mutually parallel at this truncation (wedge is bilinear, so checking
/// basis pairs covers the whole span).
inline AbelianClass classify_abelian(const LieSpan& g) {
    LieSpan d1 = detail::bracket_span(g, g);
    if (!d1.is_zero()) return AbelianClass::NotAbelian;
    if (g.dim() <= 1) return AbelianClass::Dimension1;
    auto basis = g.basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!wedge(basis[i], basis[j]).is_zero()) return AbelianClass::LinearSpan2;
    return AbelianClass::ParallelFamily;
}

} // namespace jetgerm
