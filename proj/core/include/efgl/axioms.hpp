#ifndef EFGL_AXIOMS_HPP
#define EFGL_AXIOMS_HPP

#include <efgl/efgl.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace efgl {

struct AxiomResult {
    std::string name;
    bool pass = true;
    std::string detail; // first counterexample, or a note
};

struct AxiomReport {
    std::vector<AxiomResult> results;
    bool pass = true;

    AxiomResult& add(const std::string& name) {
        results.push_back({name, true, ""});
        return results.back();
    }
    void fail(AxiomResult& r, const std::string& detail) {
        if (r.pass) {
            r.pass = false;
            r.detail = detail;
        }
        pass = false;
    }
    std::string summary() const {
        std::ostringstream os;
        for (const auto& r : results) {
            os << (r.pass ? "pass" : "FAIL") << "  " << r.name;
            if (!r.detail.empty()) os << "  [" << r.detail << "]";
            os << "\n";
        }
        return os.str();
    }
};

namespace detail {

// filtered equality: both sides truncated to the precision the model
// guarantees at combined output index sigma; exact models ignore sigma.
template <class Model>
bool eq_at(const Model& m, const typename Model::C& a, const typename Model::C& b, long sigma) {
    return m.ring().eq(m.prec(a, sigma), m.prec(b, sigma));
}

template <class Model>
typename Model::C vec_at(const Model& m, const SparseVec<typename Model::C>& v, long s) {
    auto it = v.find(s);
    return it == v.end() ? m.ring().zero() : it->second;
}

template <class Model>
typename Model::C mat_at(const Model& m, const SparseMat<typename Model::C>& v, long s, long t) {
    auto it = v.find({s, t});
    return it == v.end() ? m.ring().zero() : it->second;
}

} // namespace detail

// Runs the (R), (A), (T) identities, the lower-support proxy for (I) and the
// on-window finiteness conditions (1)-(3) on the model's window. Exact for
// the multiplicative model; completed models are checked at the precision
// their truncation supports (see CompletedModel::prec).
template <class Model>
AxiomReport check_axioms(const Model& m,
                         const std::vector<Character>& charset_in = {}) {
    using namespace detail;
    AxiomReport rep;
    const long n = m.window();
    const long cap = m.entry_cap();
    const auto& R = m.ring();
    const Character eps = Character::trivial(m.group());

    std::vector<Character> charset = charset_in;
    if (charset.empty()) charset = m.flag().window_charset();

    auto pair_in_range = [&](long i, long j) {
        if constexpr (Model::filtered_model) return i <= n && j <= n;
        else return i + j <= n;
    };

    // (R) unit: b^{0,j}_s = delta^j_s
    {
        auto& r = rep.add("b-unit");
        for (long j = 0; j <= n; ++j) {
            auto row = m.b(0, j);
            bool ok = row.size() == 1 && row.count(j) && R.eq(row.at(j), R.one());
            if (!ok) rep.fail(r, "b^{0," + std::to_string(j) + "} is not the delta row");
        }
    }

    // (R) commutativity: b^{i,j} = b^{j,i}
    {
        auto& r = rep.add("b-symmetry");
        for (long i = 0; i <= n; ++i)
            for (long j = i; j <= n; ++j) {
                if (!pair_in_range(i, j)) continue;
                if (!(m.b(i, j) == m.b(j, i)))
                    rep.fail(r, "b^{" + std::to_string(i) + "," + std::to_string(j) + "}");
            }
    }

    // (R) associativity
    {
        auto& r = rep.add("b-associativity");
        for (long i = 0; i <= n; ++i)
            for (long j = 0; j <= n; ++j)
                for (long k = 0; k <= n; ++k) {
                    if constexpr (!Model::filtered_model) {
                        if (i + j + k > n) continue;
                    }
                    // lhs: expand (ij) then with k; rhs: (jk) then with i
                    SparseVec<typename Model::C> lhs, rhs;
                    for (const auto& [s, bv] : m.b(i, j)) {
                        if (s > cap - 0) continue;
                        for (const auto& [u, bv2] : m.b(s, k))
                            detail::put(m, lhs, u, R.mul(bv, bv2));
                    }
                    for (const auto& [s, bv] : m.b(j, k)) {
                        if (s > cap - 0) continue;
                        for (const auto& [u, bv2] : m.b(i, s))
                            detail::put(m, rhs, u, R.mul(bv, bv2));
                    }
                    for (long u = 0; u <= (Model::filtered_model ? n : cap); ++u) {
                        if (!eq_at(m, vec_at(m, lhs, u), vec_at(m, rhs, u), u)) {
                            rep.fail(r, "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                            std::to_string(k) + ") at s=" + std::to_string(u));
                            break;
                        }
                    }
                }
    }

    // (I) proxy: b^{i,j}_s = 0 for s < max(i,j)
    {
        auto& r = rep.add("b-lower-support");
        for (long i = 0; i <= n; ++i)
            for (long j = 0; j <= n; ++j) {
                if (!pair_in_range(i, j)) continue;
                auto row = m.b(i, j);
                for (long s = 0; s < std::max(i, j); ++s)
                    if (!eq_at(m, vec_at(m, row, s), R.zero(), s))
                        rep.fail(r, "b^{" + std::to_string(i) + "," + std::to_string(j) + "}_" +
                                        std::to_string(s) + " nonzero");
            }
    }

    // condition (1) on the window: for fixed i,s the entries vanish once j > s
    {
        auto& r = rep.add("b-window-finiteness");
        for (long i = 0; i <= n; ++i)
            for (long j = 0; j <= n; ++j) {
                if (!pair_in_range(i, j)) continue;
                auto row = m.b(i, j);
                for (const auto& [s, v] : row)
                    if (s < j && !eq_at(m, v, R.zero(), s))
                        rep.fail(r, "b^{" + std::to_string(i) + "," + std::to_string(j) + "}_" +
                                        std::to_string(s));
            }
    }

    // (A) unit: d(eps) = identity
    {
        auto& r = rep.add("d-unit");
        for (long i = 0; i <= n; ++i) {
            auto row = m.d(eps, i);
            bool ok = row.size() == 1 && row.count(i) && R.eq(row.at(i), R.one());
            if (!ok) rep.fail(r, "d(1)^" + std::to_string(i) + " is not the delta row");
        }
    }

    // (A) composition: sum_s d(beta)^i_s d(alpha)^s_u = d(alpha beta)^i_u
    {
        auto& r = rep.add("d-composition");
        for (const auto& alpha : charset)
            for (const auto& beta : charset) {
                Character ab = char_mul(alpha, beta);
                for (long i = 0; i <= n; ++i) {
                    SparseVec<typename Model::C> lhs;
                    for (const auto& [s, dv] : m.d(beta, i)) {
                        if (s > cap) continue;
                        for (const auto& [u, dv2] : m.d(alpha, s))
                            detail::put(m, lhs, u, R.mul(dv, dv2));
                    }
                    auto rhs = m.d(ab, i);
                    for (long u = 0; u <= (Model::filtered_model ? n : cap); ++u)
                        if (!eq_at(m, vec_at(m, lhs, u), vec_at(m, rhs, u), u)) {
                            rep.fail(r, "alpha=" + alpha.str() + " beta=" + beta.str() +
                                            " i=" + std::to_string(i) + " s=" + std::to_string(u));
                            break;
                        }
                }
            }
    }

    // (A) the action is through ring homomorphisms
    {
        auto& r = rep.add("action-ring-hom");
        for (const auto& alpha : charset)
            for (long i = 0; i <= n; ++i)
                for (long j = 0; j <= n; ++j) {
                    if (!pair_in_range(i, j)) continue;
                    SparseVec<typename Model::C> lhs, rhs;
                    for (const auto& [s, bv] : m.b(i, j)) {
                        if (s > cap) continue;
                        for (const auto& [u, dv] : m.d(alpha, s))
                            detail::put(m, lhs, u, R.mul(bv, dv));
                    }
                    for (const auto& [s, dv1] : m.d(alpha, i))
                        for (const auto& [t, dv2] : m.d(alpha, j)) {
                            if (s > cap || t > cap) continue;
                            auto dd = R.mul(dv1, dv2);
                            for (const auto& [u, bv] : m.b(s, t))
                                detail::put(m, rhs, u, R.mul(dd, bv));
                        }
                    for (long u = 0; u <= (Model::filtered_model ? n : cap); ++u)
                        if (!eq_at(m, vec_at(m, lhs, u), vec_at(m, rhs, u), u)) {
                            rep.fail(r, "alpha=" + alpha.str() + " (i,j)=(" + std::to_string(i) +
                                            "," + std::to_string(j) + ") s=" + std::to_string(u));
                            break;
                        }
                }
    }

    // condition (2) on the window: d(alpha)^i_s dies once enough factors
    // alpha*alpha_k hit the trivial character (pigeonhole on Euler zeros)
    {
        auto& r = rep.add("d-window-finiteness");
        for (const auto& alpha : charset) {
            long k0 = m.flag().first_occurrence(char_dual(alpha));
            if (k0 == 0) {
                rep.fail(r, "CharacterNotInWindow: dual of " + alpha.str() +
                                " never occurs in the flag window; vanishing threshold "
                                "cannot be certified");
                continue;
            }
            for (long s = 0; s <= n; ++s) {
                // count trivial hits along the flag to certify the threshold
                for (long i = 0; i <= cap; ++i) {
                    long hits = 0;
                    for (long k = 1; k <= i; ++k)
                        if (char_mul(alpha, m.flag().at(k)).is_trivial()) ++hits;
                    if (hits <= s) continue; // below threshold, nothing claimed
                    if (!eq_at(m, vec_at(m, m.d(alpha, i), s), R.zero(), s))
                        rep.fail(r, "d(" + alpha.str() + ")^" + std::to_string(i) + "_" +
                                        std::to_string(s) + " nonzero past threshold");
                }
            }
        }
    }

    // (T) counit row of Delta y(V^1): f^1_{s,0} = delta^s_1 = f^1_{0,s}
    {
        auto& r = rep.add("f-counit-row");
        auto f1 = m.f(1);
        if (!R.eq(mat_at(m, f1, 1, 0), R.one())) rep.fail(r, "f^1_{1,0} != 1");
        if (!R.eq(mat_at(m, f1, 0, 1), R.one())) rep.fail(r, "f^1_{0,1} != 1");
        for (const auto& [st, v] : f1) {
            if (st.second == 0 && st.first != 1 && !R.is_zero(v))
                rep.fail(r, "f^1_{" + std::to_string(st.first) + ",0} nonzero");
            if (st.first == 0 && st.second != 1 && !R.is_zero(v))
                rep.fail(r, "f^1_{0," + std::to_string(st.second) + "} nonzero");
        }
    }

    // (T) cocommutativity
    {
        auto& r = rep.add("f-cocommutativity");
        for (long i = 0; i <= n; ++i) {
            auto fi = m.f(i);
            for (const auto& [st, v] : fi)
                if (!R.eq(v, mat_at(m, fi, st.second, st.first)))
                    rep.fail(r, "f^" + std::to_string(i) + "_{" + std::to_string(st.first) + "," +
                                    std::to_string(st.second) + "}");
        }
    }

    // (T) coassociativity
    {
        auto& r = rep.add("f-coassociativity");
        for (long i = 0; i <= n; ++i) {
            auto fi = m.f(i);
            for (long t = 0; t <= n; ++t)
                for (long u = 0; u <= n; ++u)
                    for (long w = 0; w <= n; ++w) {
                        long sigma = t + u + w;
                        typename Model::C lhs = R.zero(), rhs = R.zero();
                        for (long s = 0; s <= cap; ++s) {
                            auto f1v = mat_at(m, fi, s, t);
                            if (!R.is_zero(f1v)) lhs = R.add(lhs, R.mul(f1v, mat_at(m, m.f(s), u, w)));
                            auto f2v = mat_at(m, fi, u, s);
                            if (!R.is_zero(f2v)) rhs = R.add(rhs, R.mul(f2v, mat_at(m, m.f(s), w, t)));
                        }
                        if (!eq_at(m, lhs, rhs, sigma)) {
                            rep.fail(r, "i=" + std::to_string(i) + " (t,u,w)=(" + std::to_string(t) +
                                            "," + std::to_string(u) + "," + std::to_string(w) + ")");
                        }
                    }
        }
    }

    // (T) equivariance: Delta l_{ab} = (l_a (x) l_b) Delta on basis elements
    {
        auto& r = rep.add("f-equivariance");
        for (const auto& alpha : charset)
            for (const auto& beta : charset) {
                Character ab = char_mul(alpha, beta);
                for (long i = 0; i <= n; ++i) {
                    for (long s = 0; s <= n; ++s)
                        for (long t = 0; t <= n; ++t) {
                            long sigma = s + t;
                            typename Model::C lhs = R.zero(), rhs = R.zero();
                            for (const auto& [i2, dv] : m.d(ab, i)) {
                                if (i2 > cap) continue;
                                lhs = R.add(lhs, R.mul(dv, mat_at(m, m.f(i2), s, t)));
                            }
                            for (const auto& [st2, fv] : m.f(i)) {
                                auto ds = vec_at(m, m.d(alpha, st2.first), s);
                                if (R.is_zero(ds)) continue;
                                auto dt = vec_at(m, m.d(beta, st2.second), t);
                                if (R.is_zero(dt)) continue;
                                rhs = R.add(rhs, R.mul(fv, R.mul(ds, dt)));
                            }
                            if (!eq_at(m, lhs, rhs, sigma))
                                rep.fail(r, "alpha=" + alpha.str() + " beta=" + beta.str() +
                                                " i=" + std::to_string(i) + " (s,t)=(" +
                                                std::to_string(s) + "," + std::to_string(t) + ")");
                        }
                }
            }
    }

    // condition (3) on the window: f^i_{s,t} dies once the flag supplies more
    // than s+t trivial characters among alpha_1..alpha_i
    {
        auto& r = rep.add("f-window-finiteness");
        bool has_eps = m.flag().first_occurrence(eps) != 0;
        if (!has_eps) {
            rep.fail(r, "CharacterNotInWindow: the trivial character never occurs in the flag "
                        "window; vanishing threshold cannot be certified");
        } else {
            for (long s = 0; s <= n; ++s)
                for (long t = 0; t <= n; ++t)
                    for (long i = 0; i <= cap; ++i) {
                        long hits = 0;
                        for (long k = 1; k <= i; ++k)
                            if (m.flag().at(k).is_trivial()) ++hits;
                        if (hits <= s + t) continue;
                        if (!eq_at(m, mat_at(m, m.f(i), s, t), R.zero(), s + t))
                            rep.fail(r, "f^" + std::to_string(i) + "_{" + std::to_string(s) + "," +
                                            std::to_string(t) + "} nonzero past threshold");
                    }
        }
    }

    return rep;
}

// ---------------------------------------------------------------- grading

// Weighted homogeneity of the completed-universal model: with weights
// z,t -> +1 and m_k -> -k, entries are homogeneous of weight i+j-s (b),
// i-s (d), i-s-t (f). `check_negative_vanishing` additionally asserts the
// entry is zero whenever that weight is negative.
struct GradingReport {
    bool homogeneous = true;
    bool negative_vanishing = true;
    std::string first_inhomogeneous;
    std::string first_negative_nonzero;
};

inline bool qpoly_series_homogeneous(const Series<QPoly>& x, long weight) {
    for (const auto& [e, c] : x.terms()) {
        long zt = 0;
        for (int v : e) zt += v;
        for (const auto& [me, mc] : c.terms()) {
            (void)mc;
            long w = zt - c.monomial_weight(me);
            if (w != weight) return false;
        }
    }
    return true;
}

template <class Model>
GradingReport check_grading(const Model& m) {
    GradingReport rep;
    const long n = m.window();
    auto note = [&](bool hom, const std::string& what, bool nonzero_negative) {
        if (!hom && rep.homogeneous) {
            rep.homogeneous = false;
            rep.first_inhomogeneous = what;
        }
        if (nonzero_negative && rep.negative_vanishing) {
            rep.negative_vanishing = false;
            rep.first_negative_nonzero = what;
        }
    };
    for (long i = 0; i <= n; ++i)
        for (long j = 0; j <= n; ++j) {
            auto row = m.b(i, j);
            for (const auto& [s, v] : row) {
                if (s > n) continue;
                long w = i + j - s;
                note(qpoly_series_homogeneous(v, w),
                     "b^{" + std::to_string(i) + "," + std::to_string(j) + "}_" + std::to_string(s),
                     w < 0 && !v.is_zero());
            }
        }
    for (const auto& alpha : m.flag().window_charset())
        for (long i = 0; i <= n; ++i) {
            auto row = m.d(alpha, i);
            for (const auto& [s, v] : row) {
                if (s > n) continue;
                long w = i - s;
                note(qpoly_series_homogeneous(v, w),
                     "d(" + alpha.str() + ")^" + std::to_string(i) + "_" + std::to_string(s),
                     w < 0 && !v.is_zero());
            }
        }
    for (long i = 0; i <= n; ++i) {
        auto fi = m.f(i);
        for (const auto& [st, v] : fi) {
            if (st.first > n || st.second > n) continue;
            long w = i - st.first - st.second;
            note(qpoly_series_homogeneous(v, w),
                 "f^" + std::to_string(i) + "_{" + std::to_string(st.first) + "," +
                     std::to_string(st.second) + "}",
                 w < 0 && !v.is_zero());
        }
    }
    return rep;
}

} // namespace efgl

#endif
