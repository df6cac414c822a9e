#ifndef EFGL_FGL_HPP
#define EFGL_FGL_HPP

#include <efgl/series.hpp>

#include <string>
#include <vector>

namespace efgl {

// One-dimensional formal group law F(u,w) over a coefficient ring, truncated
// at total degree D. Unit, commutativity and associativity are checked at
// construction (associativity via a trivariate substitution).
template <class BR>
class Fgl {
public:
    using C = typename BR::Elem;
    using SR = SeriesRing<BR>;
    using Elem = typename SR::Elem;

    Fgl() = default;

    static Fgl make(const BR& base, long degree, const Elem& F_in_uw, const SR& uw_ring,
                    std::string id, bool check = true) {
        Fgl law;
        law.base_ = base;
        law.deg_ = degree;
        law.uw_ = uw_ring;
        law.F_ = F_in_uw;
        law.id_ = std::move(id);
        if (check) law.validate();
        return law;
    }

    static Fgl additive(const BR& base, long degree) {
        SR uw(base, {"u", "w"}, degree);
        return make(base, degree, uw.add(uw.var(0), uw.var(1)), uw, "additive");
    }

    // F = u + w - v u w for a unit-or-scalar v of the base ring
    static Fgl multiplicative(const BR& base, long degree, const C& v,
                              const std::string& vname) {
        SR uw(base, {"u", "w"}, degree);
        Elem F = uw.add(uw.var(0), uw.var(1));
        F = uw.sub(F, uw.scale(v, uw.mul(uw.var(0), uw.var(1))));
        return make(base, degree, F, uw, "multiplicative(" + vname + ")");
    }

    const BR& base() const { return base_; }
    long degree() const { return deg_; }
    const SR& uw_ring() const { return uw_; }
    const Elem& F() const { return F_; }
    const std::string& id() const { return id_; }

    // coefficient a_{s,t} of u^s w^t
    C coeff(int s, int t) const { return uw_.coeff(F_, {s, t}); }

    // F(x, y) for series x, y over an arbitrary context sharing the base ring
    template <class SR2>
    typename SR2::Elem eval(const SR2& sr, const typename SR2::Elem& x,
                            const typename SR2::Elem& y) const {
        // direct coefficient evaluation; tolerates nonzero constant terms in x
        using E = typename SR2::Elem;
        std::vector<E> xp{sr.one()}, yp{sr.one()};
        int xmax = uw_.max_exponent(F_, 0), ymax = uw_.max_exponent(F_, 1);
        for (int i = 1; i <= xmax; ++i) xp.push_back(sr.mul(xp.back(), x));
        for (int i = 1; i <= ymax; ++i) yp.push_back(sr.mul(yp.back(), y));
        E out = sr.zero();
        for (const auto& [e, c] : F_.terms())
            out = sr.add(out, sr.scale(c, sr.mul(xp[(std::size_t)e[0]], yp[(std::size_t)e[1]])));
        return out;
    }

    void validate() const {
        SR t_ring(base_, {"t"}, deg_);
        auto t = t_ring.var(0);
        // unitality: F(t, 0) = t = F(0, t)
        if (!t_ring.eq(eval(t_ring, t, t_ring.zero()), t) ||
            !t_ring.eq(eval(t_ring, t_ring.zero(), t), t))
            throw ModelMismatch("law fails unitality at degree " + std::to_string(deg_));
        // commutativity
        if (!uw_.eq(F_, eval(uw_, uw_.var(1), uw_.var(0))))
            throw ModelMismatch("law fails commutativity");
        // associativity: F(F(u,w),x) = F(u,F(w,x)) in three variables
        SR tri(base_, {"u", "w", "x"}, deg_);
        auto u = tri.var(0), w = tri.var(1), x = tri.var(2);
        auto lhs = eval(tri, eval(tri, u, w), x);
        auto rhs = eval(tri, u, eval(tri, w, x));
        if (!tri.eq(lhs, rhs)) throw ModelMismatch("law fails associativity");
    }

private:
    BR base_;
    long deg_ = 0;
    SR uw_;
    Elem F_;
    std::string id_;
};

// evaluate a univariate series at an element of another context over the same base
template <class BR>
typename SeriesRing<BR>::Elem eval_univariate(const SeriesRing<BR>& uni,
                                              const typename SeriesRing<BR>::Elem& f,
                                              const SeriesRing<BR>& target,
                                              const typename SeriesRing<BR>::Elem& x) {
    auto out = target.zero();
    std::vector<typename SeriesRing<BR>::Elem> xp{target.one()};
    int m = uni.max_exponent(f, 0);
    for (int i = 1; i <= m; ++i) xp.push_back(target.mul(xp.back(), x));
    for (const auto& [e, c] : f.terms()) out = target.add(out, target.scale(c, xp[(std::size_t)e[0]]));
    return out;
}

// Universal law over Q[m_1..m_{D-1}]: F = exp(log u + log w) with
// log t = t + m_1 t^2 + ... ; exp is the compositional inverse of log.
inline Fgl<QPolyRing> build_universal_rational(long degree) {
    if (degree < 1) throw ModelMismatch("universal law needs degree >= 1");
    std::vector<std::string> gens;
    std::vector<long> weights;
    for (long i = 1; i < degree; ++i) {
        gens.push_back("m" + std::to_string(i));
        weights.push_back(i);
    }
    QPolyRing base = QPolyRing::make(gens, weights);
    SeriesRing<QPolyRing> t_ring(base, {"t"}, degree);
    auto log_t = t_ring.var(0);
    for (long i = 1; i < degree; ++i) {
        typename SeriesRing<QPolyRing>::Elem term(t_ring.ctx);
        t_ring.add_term(term, {(int)(i + 1)}, base.gen((std::size_t)(i - 1)));
        log_t = t_ring.add(log_t, term);
    }
    auto exp_t = t_ring.comp_inverse(log_t);
    SeriesRing<QPolyRing> uw(base, {"u", "w"}, degree);
    auto lu = eval_univariate(t_ring, log_t, uw, uw.var(0));
    auto lw = eval_univariate(t_ring, log_t, uw, uw.var(1));
    auto F = eval_univariate(t_ring, exp_t, uw, uw.add(lu, lw));
    return Fgl<QPolyRing>::make(base, degree, F, uw, "universal(" + std::to_string(degree) + ")");
}

// F^n(t): F^0 = 0, F^{n+1}(u) = F(F^n(u), u). Computed by the induction.
template <class BR>
typename SeriesRing<BR>::Elem n_series(const Fgl<BR>& law, long n, const SeriesRing<BR>& t_ring) {
    auto t = t_ring.var(0);
    auto cur = t_ring.zero();
    for (long k = 0; k < n; ++k) cur = law.eval(t_ring, cur, t);
    return cur;
}

template <class BR>
typename SeriesRing<BR>::Elem n_series(const Fgl<BR>& law, long n) {
    SeriesRing<BR> t_ring(law.base(), {"t"}, law.degree());
    return n_series(law, n, t_ring);
}

// iota(t) with F(t, iota(t)) = 0, solved degree by degree.
template <class BR>
typename SeriesRing<BR>::Elem inverse_series(const Fgl<BR>& law, const SeriesRing<BR>& t_ring) {
    auto t = t_ring.var(0);
    auto iota = t_ring.neg(t);
    for (long n = 2; n <= law.degree(); ++n) {
        auto rem = law.eval(t_ring, t, iota);
        auto cn = t_ring.coeff(rem, {(int)n});
        if (t_ring.base.is_zero(cn)) continue;
        typename SeriesRing<BR>::Elem corr(t_ring.ctx);
        t_ring.add_term(corr, {(int)n}, t_ring.base.neg(cn));
        iota = t_ring.add(iota, corr);
    }
    if (!t_ring.is_zero(law.eval(t_ring, t, iota)))
        throw ModelMismatch("formal inverse could not be solved");
    return iota;
}

template <class BR>
typename SeriesRing<BR>::Elem inverse_series(const Fgl<BR>& law) {
    SeriesRing<BR> t_ring(law.base(), {"t"}, law.degree());
    return inverse_series(law, t_ring);
}

// Left fold x_1 +_F x_2 +_F ...; empty list gives 0.
template <class BR, class SR2>
typename SR2::Elem formal_sum(const Fgl<BR>& law, const SR2& sr,
                              const std::vector<typename SR2::Elem>& xs) {
    for (const auto& x : xs)
        if (!sr.base.is_zero(sr.constant_term(x)))
            throw ConstantTermSubstitution("formal_sum argument has a constant term");
    auto acc = sr.zero();
    bool first = true;
    for (const auto& x : xs) {
        if (first) {
            acc = x;
            first = false;
        } else {
            acc = law.eval(sr, acc, x);
        }
    }
    return acc;
}

} // namespace efgl

#endif
