#ifndef EFGL_EFGL_HPP
#define EFGL_EFGL_HPP

#include <efgl/characters.hpp>
#include <efgl/rg.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace efgl {

template <class C>
using SparseVec = std::map<long, C>; // basis index -> coefficient

template <class C>
using SparseMat = std::map<std::pair<long, long>, C>; // (s,t) -> coefficient

// Multiplicative (G,F)-equivariant formal group law over R(G)[v,v^-1].
// Structure constants come from the product/action/coproduct recursions:
//   y(V^i) y(V^j) = e(b) y(V^{i-1}) y(V^j) + (1 - v e(b)) y(V^{i-1}) y(V^{j+1}),
//       b = dual(alpha_{j+1}) alpha_i
//   l_a y(V^i)    = e(b) l_a y(V^{i-1}) + (1 - v e(b)) l_a y(V^{i-1}) y(V^1),
//       b = a alpha_i dual(alpha_1)
//   Delta y(V^i)  = Delta y(V^{i-1}) (e(alpha_i) + (1 - v e(alpha_i)) Delta ybar)
// with Delta ybar = ybar(x)1 + 1(x)ybar - v ybar(x)ybar and
// ybar = e(dual(alpha_1)) + dual(dual(alpha_1)) y(V^1) in the basis.
class MultModel {
public:
    using Ring = RGRing;
    using C = RGElement;

    MultModel(GroupSpec group, FlagSpec flag, long window)
        : group_(std::move(group)), flag_(std::move(flag)), window_(window), ring_(group_) {
        if (flag_.group() != group_) throw GroupMismatch("flag characters not in the model group");
        long needed = required_horizon(window_);
        if (flag_.horizon() < needed) throw HorizonExceeded(needed, flag_.horizon());
        if (window_ < 0) throw WindowExceeded(window_, 0);
    }

    static long required_horizon(long window) { return window + 1; }

    const GroupSpec& group() const { return group_; }
    const FlagSpec& flag() const { return flag_; }
    long window() const { return window_; }
    const Ring& ring() const { return ring_; }

    static constexpr bool filtered_model = false;
    long entry_cap() const { return window_; }
    C prec(const C& x, long) const { return x; } // exact model, no filtration
    std::string model_id() const { return "multiplicative over " + ring_.name(); }
    std::string ring_name() const { return ring_.name(); }

    C euler(const Character& chi) const { return ring_.euler(chi); }

    // b^{i,j}: requires i+j <= window (the recursion walks j up to i+j)
    SparseVec<C> b(long i, long j) const {
        if (i < 0 || j < 0) throw WindowExceeded(std::min(i, j), window_);
        if (i + j > window_) throw WindowExceeded(i + j, window_);
        return b_rec(i, j);
    }

    SparseVec<C> d(const Character& alpha, long i) const {
        if (i < 0 || i > window_) throw WindowExceeded(i, window_);
        return d_rec(alpha, i);
    }

    SparseMat<C> f(long i) const {
        if (i < 0 || i > window_) throw WindowExceeded(i, window_);
        return f_rec(i);
    }

private:
    SparseVec<C> b_rec(long i, long j) const {
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = bcache_.find({i, j});
            if (it != bcache_.end()) return it->second;
        }
        SparseVec<C> out;
        if (i == 0) {
            out.emplace(j, ring_.one());
        } else {
            Character beta = char_mul(char_dual(flag_.at(j + 1)), flag_.at(i));
            C e = ring_.euler(beta);
            C u = ring_.one_minus_v_euler(beta);
            for (const auto& [s, val] : b_rec(i - 1, j)) accum(out, s, ring_.mul(e, val));
            for (const auto& [s, val] : b_rec(i - 1, j + 1)) accum(out, s, ring_.mul(u, val));
        }
        std::lock_guard<std::mutex> lk(mu_);
        return bcache_.emplace(std::make_pair(i, j), std::move(out)).first->second;
    }

    SparseVec<C> d_rec(const Character& alpha, long i) const {
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = dcache_.find({alpha, i});
            if (it != dcache_.end()) return it->second;
        }
        SparseVec<C> out;
        if (i == 0) {
            out.emplace(0, ring_.one());
        } else {
            Character beta = char_mul(char_mul(alpha, flag_.at(i)), char_dual(flag_.at(1)));
            C e = ring_.euler(beta);
            C u = ring_.one_minus_v_euler(beta);
            auto prev = d_rec(alpha, i - 1);
            for (const auto& [s, val] : prev) accum(out, s, ring_.mul(e, val));
            for (const auto& [s, val] : prev) {
                C uval = ring_.mul(u, val);
                for (const auto& [t, bv] : b_rec(s, 1)) accum(out, t, ring_.mul(uval, bv));
            }
        }
        std::lock_guard<std::mutex> lk(mu_);
        return dcache_.emplace(std::make_pair(alpha, i), std::move(out)).first->second;
    }

    // multiply a basis-coefficient vector by ybar = y(epsilon)
    SparseVec<C> ybar_mul(const SparseVec<C>& vec) const {
        Character a1dual = char_dual(flag_.at(1));
        C e = ring_.euler(a1dual);
        C u = ring_.one_minus_v_euler(a1dual);
        SparseVec<C> out;
        for (const auto& [s, val] : vec) {
            accum(out, s, ring_.mul(e, val));
            C uval = ring_.mul(u, val);
            for (const auto& [t, bv] : b_rec(s, 1)) accum(out, t, ring_.mul(uval, bv));
        }
        return out;
    }

    SparseMat<C> f_rec(long i) const {
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = fcache_.find(i);
            if (it != fcache_.end()) return it->second;
        }
        SparseMat<C> out;
        if (i == 0) {
            out.emplace(std::make_pair(0L, 0L), ring_.one());
        } else {
            auto prev = f_rec(i - 1);
            const Character& ai = flag_.at(i);
            C e = ring_.euler(ai);
            C u = ring_.one_minus_v_euler(ai);
            // prev * Delta(ybar): Y(x)1 + 1(x)Y - v Y(x)Y slotwise
            SparseMat<C> mixed;
            for (const auto& [st, val] : prev) {
                SparseVec<C> one{{st.first, val}};
                for (const auto& [s2, v2] : ybar_mul(one)) accumm(mixed, s2, st.second, v2);
            }
            for (const auto& [st, val] : prev) {
                SparseVec<C> one{{st.second, val}};
                for (const auto& [t2, v2] : ybar_mul(one)) accumm(mixed, st.first, t2, v2);
            }
            C negv = ring_.neg(ring_.v(1));
            for (const auto& [st, val] : prev) {
                SparseVec<C> one{{st.first, val}};
                for (const auto& [s2, v2] : ybar_mul(one)) {
                    SparseVec<C> two{{st.second, v2}};
                    for (const auto& [t2, v3] : ybar_mul(two))
                        accumm(mixed, s2, t2, ring_.mul(negv, v3));
                }
            }
            for (const auto& [st, val] : prev) accumm(out, st.first, st.second, ring_.mul(e, val));
            for (const auto& [st, val] : mixed) accumm(out, st.first, st.second, ring_.mul(u, val));
        }
        std::lock_guard<std::mutex> lk(mu_);
        return fcache_.emplace(i, std::move(out)).first->second;
    }

    void accum(SparseVec<C>& m, long s, const C& v) const {
        auto it = m.find(s);
        if (it == m.end()) {
            if (!ring_.is_zero(v)) m.emplace(s, v);
        } else {
            it->second = ring_.add(it->second, v);
            if (ring_.is_zero(it->second)) m.erase(it);
        }
    }
    void accumm(SparseMat<C>& m, long s, long t, const C& v) const {
        auto it = m.find({s, t});
        if (it == m.end()) {
            if (!ring_.is_zero(v)) m.emplace(std::make_pair(s, t), v);
        } else {
            it->second = ring_.add(it->second, v);
            if (ring_.is_zero(it->second)) m.erase(it);
        }
    }

    GroupSpec group_;
    FlagSpec flag_;
    long window_;
    Ring ring_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<long, long>, SparseVec<C>> bcache_;
    mutable std::map<std::pair<Character, long>, SparseVec<C>> dcache_;
    mutable std::map<long, SparseMat<C>> fcache_;
};

inline std::shared_ptr<MultModel> build_multiplicative(const GroupSpec& g, const FlagSpec& flag,
                                                       long window) {
    return std::make_shared<MultModel>(g, flag, window);
}

// ---------------------------------------------------------------- elements

template <class Model>
struct ModuleElement {
    std::shared_ptr<const Model> model;
    SparseVec<typename Model::C> coeffs;

    static ModuleElement basis(std::shared_ptr<const Model> m, long i) {
        if (i < 0 || i > m->window()) throw WindowExceeded(i, m->window());
        ModuleElement x{m, {}};
        x.coeffs.emplace(i, m->ring().one());
        return x;
    }
    bool operator==(const ModuleElement& o) const { return coeffs == o.coeffs; }
};

template <class Model>
struct TensorElement {
    std::shared_ptr<const Model> model;
    SparseMat<typename Model::C> coeffs;
    bool operator==(const TensorElement& o) const { return coeffs == o.coeffs; }
};

namespace detail {
template <class Model, class C>
void put(const Model& m, SparseVec<C>& out, long s, const C& v) {
    auto it = out.find(s);
    if (it == out.end()) {
        if (!m.ring().is_zero(v)) out.emplace(s, v);
    } else {
        it->second = m.ring().add(it->second, v);
        if (m.ring().is_zero(it->second)) out.erase(it);
    }
}
template <class Model, class C>
void putm(const Model& m, SparseMat<C>& out, long s, long t, const C& v) {
    auto it = out.find({s, t});
    if (it == out.end()) {
        if (!m.ring().is_zero(v)) out.emplace(std::make_pair(s, t), v);
    } else {
        it->second = m.ring().add(it->second, v);
        if (m.ring().is_zero(it->second)) out.erase(it);
    }
}
} // namespace detail

// Bilinear extension of the b-table. Components beyond the window raise for
// exact models and are truncated away for filtered (completed) models, whose
// true support is infinite.
template <class Model>
ModuleElement<Model> mul_elements(const ModuleElement<Model>& x, const ModuleElement<Model>& y) {
    if (x.model != y.model) throw ModelMismatch("elements of different tables");
    const Model& m = *x.model;
    ModuleElement<Model> out{x.model, {}};
    for (const auto& [i, xc] : x.coeffs)
        for (const auto& [j, yc] : y.coeffs) {
            auto xy = m.ring().mul(xc, yc);
            for (const auto& [s, bv] : m.b(i, j)) {
                if (s > m.window()) {
                    if constexpr (!Model::filtered_model) throw WindowExceeded(s, m.window());
                    else continue;
                }
                detail::put(m, out.coeffs, s, m.ring().mul(xy, bv));
            }
        }
    return out;
}

template <class Model>
ModuleElement<Model> act(const Character& alpha, const ModuleElement<Model>& x) {
    const Model& m = *x.model;
    ModuleElement<Model> out{x.model, {}};
    for (const auto& [i, xc] : x.coeffs)
        for (const auto& [s, dv] : m.d(alpha, i)) {
            if (s > m.window()) {
                if constexpr (!Model::filtered_model) throw WindowExceeded(s, m.window());
                else continue;
            }
            detail::put(m, out.coeffs, s, m.ring().mul(xc, dv));
        }
    return out;
}

template <class Model>
TensorElement<Model> coproduct(const ModuleElement<Model>& x) {
    const Model& m = *x.model;
    TensorElement<Model> out{x.model, {}};
    for (const auto& [i, xc] : x.coeffs)
        for (const auto& [st, fv] : m.f(i)) {
            if (st.first > m.window() || st.second > m.window()) {
                if constexpr (!Model::filtered_model)
                    throw WindowExceeded(std::max(st.first, st.second), m.window());
                else continue;
            }
            detail::putm(m, out.coeffs, st.first, st.second, m.ring().mul(xc, fv));
        }
    return out;
}

// ---------------------------------------------------------------- restriction

// Coefficientwise restriction of a multiplicative table along H -> G.
// The result equals the table of build_multiplicative(H, restricted flag, N).
struct RestrictedTable {
    GroupSpec group;
    FlagSpec flag;
    long window = 0;
    std::map<std::pair<long, long>, SparseVec<RGElement>> b;
    std::map<std::pair<Character, long>, SparseVec<RGElement>> d;
    std::map<long, SparseMat<RGElement>> f;
};

inline RGElement restrict_rg(const RGElement& x, const SubgroupSpec& sub) {
    RGRing rh(sub.target());
    RGElement out = rh.zero();
    for (const auto& [k, c] : x.terms()) out.add_term(sub.restrict_char(k.second), k.first, c);
    return out;
}

inline RestrictedTable restrict_model(const MultModel& table, const SubgroupSpec& sub) {
    if (sub.source() != table.group())
        throw GroupMismatch("subgroup map source differs from the table group");
    RestrictedTable out;
    out.group = sub.target();
    out.flag = sub.restrict_flag(table.flag());
    out.window = table.window();
    long n = table.window();
    for (long i = 0; i <= n; ++i)
        for (long j = 0; i + j <= n; ++j) {
            SparseVec<RGElement> row;
            for (const auto& [s, v] : table.b(i, j)) {
                auto r = restrict_rg(v, sub);
                if (!r.is_zero()) row.emplace(s, std::move(r));
            }
            out.b.emplace(std::make_pair(i, j), std::move(row));
        }
    for (const auto& alpha : table.flag().window_charset())
        for (long i = 0; i <= n; ++i) {
            SparseVec<RGElement> row;
            for (const auto& [s, v] : table.d(alpha, i)) {
                auto r = restrict_rg(v, sub);
                if (!r.is_zero()) row.emplace(s, std::move(r));
            }
            out.d.emplace(std::make_pair(sub.restrict_char(alpha), i), std::move(row));
        }
    for (long i = 0; i <= n; ++i) {
        SparseMat<RGElement> mat;
        for (const auto& [st, v] : table.f(i)) {
            auto r = restrict_rg(v, sub);
            if (!r.is_zero()) mat.emplace(st, std::move(r));
        }
        out.f.emplace(i, std::move(mat));
    }
    return out;
}

} // namespace efgl

#endif
