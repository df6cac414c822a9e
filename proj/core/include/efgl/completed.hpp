#ifndef EFGL_COMPLETED_HPP
#define EFGL_COMPLETED_HPP

#include <efgl/efgl.hpp>
#include <efgl/pointring.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace efgl {

// Completed model of a (truncated) base law: coefficients live in the point
// ring L[[t_1..t_s, z_1..z_r]]/(F^{n_j}(t_j)) at degree D. Basis elements
// y(V^i) are expanded as polynomials in ybar = y(epsilon); structure
// constants come back through the adic triangular solve.
//
// Entries at basis index s are exact modulo z,t-degree > D - s (the model of
// a degree-D law resolves no finer); entry values are the canonical fixpoint
// of the conversion and are stable under enlarging the internal caps.
template <class BR>
class CompletedModel {
public:
    using Base = BR;
    using PR = PointRingPresentation<BR>;
    using Val = typename PR::Elem;
    using C = Val;

    // ring surface for generic table code
    struct Ring {
        const PR* pr = nullptr;
        C zero() const { return pr->series_ring().zero(); }
        C one() const { return pr->series_ring().one(); }
        C add(const C& a, const C& b) const { return pr->series_ring().add(a, b); }
        C sub(const C& a, const C& b) const { return pr->series_ring().sub(a, b); }
        C neg(const C& a) const { return pr->series_ring().neg(a); }
        C mul(const C& a, const C& b) const { return pr->mul(a, b); }
        bool is_zero(const C& a) const { return a.is_zero(); }
        bool eq(const C& a, const C& b) const { return a == b; }
        std::string str(const C& a) const { return pr->series_ring().str(a); }
        std::string name() const { return pr->str(); }
    };

    CompletedModel(const Fgl<BR>& base_law, GroupSpec group, FlagSpec flag, long window, long degree)
        : group_(std::move(group)), flag_(std::move(flag)), window_(window), deg_(degree) {
        if (flag_.group() != group_) throw GroupMismatch("flag characters not in the model group");
        if (base_law.degree() != degree)
            throw ModelMismatch("base law truncation differs from the model degree");
        pring_ = PR::present(group_, base_law, degree);
        ring_.pr = &pring_;
        icap_ = window_ + deg_;
        long smear = deg_ >= 3 ? deg_ * (deg_ - 2) : 1;
        ycap_ = icap_ + smear + 2;
        long needed = required_horizon(window_, deg_);
        if (flag_.horizon() < needed) throw HorizonExceeded(needed, flag_.horizon());
        basis_.resize((std::size_t)ycap_ + 1);
        basis_[0] = YPoly{pring_.series_ring().one()};
        for (long s = 1; s <= ycap_; ++s)
            basis_[(std::size_t)s] =
                ymul(basis_[(std::size_t)s - 1], ypoly_of(euler(flag_.at(s))));
    }

    static long required_horizon(long window, long degree) {
        long icap = window + degree;
        long smear = degree >= 3 ? degree * (degree - 2) : 1;
        return icap + smear + 2;
    }

    const GroupSpec& group() const { return group_; }
    const FlagSpec& flag() const { return flag_; }
    long window() const { return window_; }
    long degree() const { return deg_; }
    const Ring& ring() const { return ring_; }
    const PR& point_ring() const { return pring_; }

    static constexpr bool filtered_model = true;
    long entry_cap() const { return icap_; }
    std::string model_id() const {
        return "completed(" + pring_.law().id() + ", D=" + std::to_string(deg_) + ")";
    }
    std::string ring_name() const { return pring_.str(); }

    // truncate to the precision available at output-index weight sigma
    C prec(const C& x, long sigma) const {
        return pring_.series_ring().truncate(x, deg_ - sigma);
    }

    C euler(const Character& chi) const { return pring_.phi_euler(chi); }

    // y(V^i) as a polynomial in ybar (exact ypoly, no conversion)
    using YPoly = std::vector<Val>;
    const YPoly& basis_expansion(long s) const {
        if (s < 0 || s > ycap_) throw WindowExceeded(s, ycap_);
        return basis_[(std::size_t)s];
    }

    // g(beta)_j: y(beta) = F(e(beta), ybar) = sum_j g(beta)_j ybar^j
    std::vector<Val> expand_character(const Character& beta) const {
        return ypoly_of(euler(beta));
    }

    SparseVec<C> b(long i, long j) const {
        if (i < 0 || j < 0 || i > icap_ || j > icap_)
            throw WindowExceeded(std::max(i, j), icap_);
        std::pair<long, long> key{std::min(i, j), std::max(i, j)};
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = bcache_.find(key);
            if (it != bcache_.end()) return it->second;
        }
        auto out = convert(ymul(basis_[(std::size_t)key.first], basis_[(std::size_t)key.second]));
        std::lock_guard<std::mutex> lk(mu_);
        return bcache_.emplace(key, std::move(out)).first->second;
    }

    SparseVec<C> d(const Character& alpha, long i) const {
        if (i < 0 || i > icap_) throw WindowExceeded(i, icap_);
        std::pair<Character, long> key{alpha, i};
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = dcache_.find(key);
            if (it != dcache_.end()) return it->second;
        }
        YPoly cur{pring_.series_ring().one()};
        for (long k = 1; k <= i; ++k)
            cur = ymul(cur, ypoly_of(euler(char_mul(alpha, flag_.at(k)))));
        auto out = convert(cur);
        std::lock_guard<std::mutex> lk(mu_);
        return dcache_.emplace(std::move(key), std::move(out)).first->second;
    }

    SparseMat<C> f(long i) const {
        if (i < 0 || i > icap_) throw WindowExceeded(i, icap_);
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = fcache_.find(i);
            if (it != fcache_.end()) return it->second;
        }
        auto out = convert2(delta_basis(i));
        std::lock_guard<std::mutex> lk(mu_);
        return fcache_.emplace(i, std::move(out)).first->second;
    }

private:
    // --- ybar-polynomial machinery (vectors indexed by ybar power) ---

    YPoly ypoly_of(const Val& e) const {
        const auto& sr = pring_.series_ring();
        const auto& law = pring_.law();
        int smax = law.uw_ring().max_exponent(law.F(), 0);
        int tmax = law.uw_ring().max_exponent(law.F(), 1);
        std::vector<Val> epow{sr.one()};
        for (int s = 1; s <= smax; ++s) epow.push_back(pring_.mul(epow.back(), e));
        YPoly out((std::size_t)std::min<long>(tmax, ycap_) + 1, sr.zero());
        for (const auto& [ex, c] : law.F().terms()) {
            int s = ex[0], t = ex[1];
            if (t > ycap_) continue;
            out[(std::size_t)t] =
                sr.add(out[(std::size_t)t], sr.scale(c, epow[(std::size_t)s]));
        }
        for (auto& v : out) v = pring_.reduce(v);
        trim(out);
        return out;
    }

    YPoly ymul(const YPoly& a, const YPoly& b) const {
        const auto& sr = pring_.series_ring();
        YPoly out(std::min<std::size_t>(a.size() + b.size() - 1, (std::size_t)ycap_ + 1), sr.zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (b[j].is_zero() || i + j > (std::size_t)ycap_) continue;
                out[i + j] = sr.add(out[i + j], pring_.mul(a[i], b[j]));
            }
        }
        trim(out);
        return out;
    }

    void trim(YPoly& a) const {
        while (!a.empty() && a.back().is_zero()) a.pop_back();
        if (a.empty()) a.push_back(pring_.series_ring().zero());
    }

    // Solve sum_s out_s * basis(s) = x by the adic fixpoint a <- c - a*(M - I).
    SparseVec<C> convert(const YPoly& x) const {
        const auto& sr = pring_.series_ring();
        std::vector<Val> c((std::size_t)ycap_ + 1, sr.zero());
        for (std::size_t j = 0; j < x.size() && j <= (std::size_t)ycap_; ++j) c[j] = x[j];
        std::vector<Val> a = c;
        long max_iters = 4 * ycap_ + 4 * deg_ + 16;
        for (long iter = 0; iter < max_iters; ++iter) {
            std::vector<Val> next = c;
            for (long s = 0; s <= ycap_; ++s) {
                if (a[(std::size_t)s].is_zero()) continue;
                const YPoly& row = basis_[(std::size_t)s];
                for (std::size_t j = 0; j < row.size(); ++j) {
                    if (row[j].is_zero()) continue;
                    Val m = row[j];
                    if ((long)j == s) {
                        m = sr.sub(m, sr.one());
                        if (m.is_zero()) continue;
                    }
                    next[j] = sr.sub(next[j], pring_.mul(a[(std::size_t)s], m));
                }
            }
            if (next == a) {
                SparseVec<C> out;
                for (long s = 0; s <= ycap_; ++s)
                    if (!a[(std::size_t)s].is_zero()) out.emplace(s, a[(std::size_t)s]);
                return out;
            }
            a = std::move(next);
        }
        throw ConversionDivergence("basis conversion did not stabilize; relation/flag inconsistency");
    }

    // --- tensor (coproduct) machinery ---

    using TPoly = std::map<std::pair<long, long>, Val>; // (u-power, w-power) -> coefficient

    TPoly tmul(const TPoly& a, const TPoly& b) const {
        const auto& sr = pring_.series_ring();
        TPoly out;
        for (const auto& [ea, va] : a)
            for (const auto& [eb, vb] : b) {
                long s = ea.first + eb.first, t = ea.second + eb.second;
                if (s > ycap_ || t > ycap_) continue;
                Val prod = pring_.mul(va, vb);
                if (prod.is_zero()) continue;
                auto it = out.find({s, t});
                if (it == out.end()) out.emplace(std::make_pair(s, t), std::move(prod));
                else {
                    it->second = sr.add(it->second, prod);
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        return out;
    }

    // F(e, X) for a tensor element X: sum_{s,t} a_{s,t} e^s X^t
    TPoly teval_law(const Val& e, const TPoly& X) const {
        const auto& sr = pring_.series_ring();
        const auto& law = pring_.law();
        int smax = law.uw_ring().max_exponent(law.F(), 0);
        int tmax = law.uw_ring().max_exponent(law.F(), 1);
        std::vector<Val> epow{sr.one()};
        for (int s = 1; s <= smax; ++s) epow.push_back(pring_.mul(epow.back(), e));
        std::vector<TPoly> xpow{TPoly{{{0, 0}, sr.one()}}};
        for (int t = 1; t <= tmax; ++t) xpow.push_back(tmul(xpow.back(), X));
        TPoly out;
        for (const auto& [ex, cf] : law.F().terms()) {
            Val scalar = sr.scale(cf, epow[(std::size_t)ex[0]]);
            if (scalar.is_zero()) continue;
            for (const auto& [key, xv] : xpow[(std::size_t)ex[1]]) {
                Val add = pring_.mul(scalar, xv);
                if (add.is_zero()) continue;
                auto it = out.find(key);
                if (it == out.end()) out.emplace(key, std::move(add));
                else {
                    it->second = sr.add(it->second, add);
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
        return out;
    }

    TPoly delta_basis(long i) const {
        const auto& sr = pring_.series_ring();
        // Delta(ybar) = F(u, w) with u = ybar(x)1, w = 1(x)ybar
        TPoly dy;
        for (const auto& [ex, cf] : pring_.law().F().terms()) {
            if (ex[0] > ycap_ || ex[1] > ycap_) continue;
            dy.emplace(std::make_pair((long)ex[0], (long)ex[1]), sr.from_base(cf));
        }
        TPoly cur{{{0, 0}, sr.one()}};
        for (long k = 1; k <= i; ++k) cur = tmul(cur, teval_law(euler(flag_.at(k)), dy));
        return cur;
    }

    // two-axis version of convert()
    SparseMat<C> convert2(const TPoly& x) const {
        const auto& sr = pring_.series_ring();
        TPoly a = x;
        long max_iters = 4 * ycap_ + 4 * deg_ + 16;
        for (int axis = 0; axis < 2; ++axis) {
            TPoly c = a;
            bool done = false;
            for (long iter = 0; iter < max_iters && !done; ++iter) {
                TPoly next = c;
                for (const auto& [key, av] : a) {
                    long s = axis == 0 ? key.first : key.second;
                    const YPoly& row = basis_[(std::size_t)s];
                    for (std::size_t j = 0; j < row.size(); ++j) {
                        if (row[j].is_zero()) continue;
                        Val m = row[j];
                        if ((long)j == s) {
                            m = sr.sub(m, sr.one());
                            if (m.is_zero()) continue;
                        }
                        std::pair<long, long> key2 =
                            axis == 0 ? std::make_pair((long)j, key.second)
                                      : std::make_pair(key.first, (long)j);
                        Val sub = pring_.mul(av, m);
                        if (sub.is_zero()) continue;
                        auto it = next.find(key2);
                        if (it == next.end()) next.emplace(key2, sr.neg(sub));
                        else {
                            it->second = sr.sub(it->second, sub);
                            if (it->second.is_zero()) next.erase(it);
                        }
                    }
                }
                if (next == a) done = true;
                else a = std::move(next);
            }
            if (!done)
                throw ConversionDivergence("tensor conversion did not stabilize");
        }
        SparseMat<C> out;
        for (const auto& [key, v] : a)
            if (!v.is_zero()) out.emplace(key, v);
        return out;
    }

    GroupSpec group_;
    FlagSpec flag_;
    long window_ = 0, deg_ = 0, icap_ = 0, ycap_ = 0;
    PR pring_;
    Ring ring_;
    std::vector<YPoly> basis_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<long, long>, SparseVec<C>> bcache_;
    mutable std::map<std::pair<Character, long>, SparseVec<C>> dcache_;
    mutable std::map<long, SparseMat<C>> fcache_;
};

template <class BR>
std::shared_ptr<CompletedModel<BR>> build_completed(const Fgl<BR>& base, const GroupSpec& g,
                                                    const FlagSpec& flag, long window, long degree) {
    return std::make_shared<CompletedModel<BR>>(base, g, flag, window, degree);
}

} // namespace efgl

#endif
