#ifndef EFGL_QUOTIENT_HPP
#define EFGL_QUOTIENT_HPP

#include <efgl/series.hpp>

#include <map>
#include <vector>

namespace efgl {

// Rewrite data for one quotient variable: x^top -> sum_{k<top} rew[k] x^k.
template <class C>
struct VarRelation {
    std::size_t var = 0;
    int top = 0;
    std::vector<C> rewrite;     // size top, coefficients of x^0..x^{top-1}
    std::vector<C> original;    // the relation series coefficients as given
};

// Relations, one per quotient variable, each univariate and monic-at-top
// after preparation. Reduction is plain top-power rewriting; no Groebner
// machinery is needed because relations never mix variables.
template <class BR>
class QuotientSpec {
public:
    using C = typename BR::Elem;

    QuotientSpec() = default;

    // relation: univariate series in ambient variable `var`; coefficients
    // c_0..c_D with c_0 = 0. Prepared either by its invertible top
    // coefficient, or, failing that, by an invertible lowest coefficient
    // (the relation is then an associate of x^k0 in the truncated ring).
    void add_relation(const SeriesRing<BR>& sr, std::size_t var,
                      const typename SeriesRing<BR>::Elem& relation) {
        const BR& base = sr.base;
        std::vector<C> c((std::size_t)sr.degree() + 1, base.zero());
        for (const auto& [e, co] : relation.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0 && i != var)
                    throw NonMonicRelation("relation mentions more than one variable");
            c[(std::size_t)e[var]] = co;
        }
        if (!base.is_zero(c[0]))
            throw NonMonicRelation("relation has a nonzero constant term");
        int top = -1;
        for (int k = (int)c.size() - 1; k >= 1; --k)
            if (!base.is_zero(c[(std::size_t)k])) { top = k; break; }
        if (top < 0) throw NonMonicRelation("zero relation");

        VarRelation<C> r;
        r.var = var;
        r.original = c;
        if (auto inv = base.try_invert(c[(std::size_t)top])) {
            r.top = top;
            r.rewrite.resize((std::size_t)top, base.zero());
            for (int k = 1; k < top; ++k)
                r.rewrite[(std::size_t)k] = base.neg(base.mul(*inv, c[(std::size_t)k]));
        } else {
            int bottom = 0;
            for (int k = 1; k <= top; ++k)
                if (!base.is_zero(c[(std::size_t)k])) { bottom = k; break; }
            if (auto binv = base.try_invert(c[(std::size_t)bottom])) {
                // c_bottom invertible: the relation is x^bottom times a unit
                // power series, so the ideal it generates is (x^bottom).
                (void)binv;
                r.top = bottom;
                r.rewrite.assign((std::size_t)bottom, base.zero());
            } else {
                throw NonMonicRelation(
                    "relation top coefficient is not invertible; use rational coefficients");
            }
        }
        rels_[var] = std::move(r);
    }

    const std::map<std::size_t, VarRelation<C>>& relations() const { return rels_; }
    bool empty() const { return rels_.empty(); }

    typename SeriesRing<BR>::Elem normal_form(const SeriesRing<BR>& sr,
                                              const typename SeriesRing<BR>::Elem& x) const {
        using Elem = typename SeriesRing<BR>::Elem;
        Elem cur = x;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [var, rel] : rels_) {
                Elem out(sr.ctx);
                for (const auto& [e, co] : cur.terms()) {
                    if (e[var] < rel.top) {
                        sr.add_term(out, e, co);
                        continue;
                    }
                    changed = true;
                    // x^a -> x^{a-top} * rewrite
                    for (int k = 0; k < rel.top; ++k) {
                        if (sr.base.is_zero(rel.rewrite[(std::size_t)k])) continue;
                        std::vector<int> e2 = e;
                        e2[var] = e[var] - rel.top + k;
                        sr.add_term(out, std::move(e2), sr.base.mul(co, rel.rewrite[(std::size_t)k]));
                    }
                }
                cur = std::move(out);
            }
        }
        return cur;
    }

private:
    std::map<std::size_t, VarRelation<C>> rels_;
};

} // namespace efgl

#endif
