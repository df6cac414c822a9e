#ifndef EFGL_FLAGCHANGE_HPP
#define EFGL_FLAGCHANGE_HPP

#include <efgl/efgl.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace efgl {

// y(V^i_S) = prod_{1<=k<=i, k not in S} y(alpha_k); zero when max S > i.
struct GappedIndex {
    long i = 0;
    std::set<long> S;

    bool is_zero_by_convention() const {
        return !S.empty() && *S.rbegin() > i;
    }
    std::string str() const {
        std::ostringstream os;
        os << "(" << i << ",{";
        bool first = true;
        for (long k : S) {
            os << (first ? "" : ",") << k;
            first = false;
        }
        os << "})";
        return os.str();
    }
};

namespace detail {
template <class Model>
void require_compatible(const Model& src, const Model& dst) {
    if (src.group() != dst.group())
        throw ModelMismatch("flag change requires models of the same group");
    if (src.model_id() != dst.model_id())
        throw ModelMismatch("flag change requires the same constructor and parameters");
}
} // namespace detail

// Coefficients a^{i,S}_j with psi o phibar (y(V^i_S)) = sum_j a^{i,S}_j y(W^j):
// the product over k of l_{alpha_k dual(beta_1)} y(W^1) expanded through the
// target model's d- and b-tables.
template <class Model>
SparseVec<typename Model::C> change_coeffs(const Model& src, const Model& dst,
                                           const GappedIndex& idx) {
    detail::require_compatible(src, dst);
    const auto& R = dst.ring();
    SparseVec<typename Model::C> row;
    if (idx.is_zero_by_convention()) return row;
    if (idx.i < 0) throw WindowExceeded(idx.i, src.window());
    row.emplace(0, R.one());
    Character beta1_dual = char_dual(dst.flag().at(1));
    for (long k = 1; k <= idx.i; ++k) {
        if (idx.S.count(k)) continue;
        Character chi = char_mul(src.flag().at(k), beta1_dual);
        auto vec = dst.d(chi, 1);
        SparseVec<typename Model::C> next;
        for (const auto& [s1, v1] : row)
            for (const auto& [s2, v2] : vec) {
                if (s1 > dst.entry_cap() || s2 > dst.entry_cap()) continue;
                auto vv = R.mul(v1, v2);
                for (const auto& [u, bv] : dst.b(s1, s2))
                    detail::put(dst, next, u, R.mul(vv, bv));
            }
        row = std::move(next);
    }
    return row;
}

// Matrix of a^{i,S}_j for plain indices i <= imax (S empty).
template <class Model>
std::vector<SparseVec<typename Model::C>> change_matrix(const Model& src, const Model& dst,
                                                        long imax) {
    std::vector<SparseVec<typename Model::C>> rows;
    for (long i = 0; i <= imax; ++i) rows.push_back(change_coeffs(src, dst, GappedIndex{i, {}}));
    return rows;
}

struct RoundtripReport {
    bool identity = true;
    long fail_i = -1, fail_j = -1;
    std::string summary() const {
        if (identity) return "identity";
        return "FAILED at (" + std::to_string(fail_i) + "," + std::to_string(fail_j) + ")";
    }
};

// Composes F->F' with F'->F on plain indices i <= window and compares with
// the identity matrix, exactly. Backward rows are computed for every index
// in the forward support (which may exceed the report window).
template <class Model>
RoundtripReport roundtrip_check(const Model& mF, const Model& mF2, long window) {
    detail::require_compatible(mF, mF2);
    const auto& R = mF.ring();
    RoundtripReport rep;
    if (window > mF.window()) throw WindowExceeded(window, mF.window());
    auto fwd = change_matrix(mF, mF2, window);
    for (long i = 0; i <= window && rep.identity; ++i) {
        SparseVec<typename Model::C> comp;
        for (const auto& [j, v1] : fwd[(std::size_t)i]) {
            auto back = change_coeffs(mF2, mF, GappedIndex{j, {}});
            for (const auto& [k, v2] : back) detail::put(mF, comp, k, R.mul(v1, v2));
        }
        for (long k = 0; k <= mF.entry_cap() && rep.identity; ++k) {
            auto it = comp.find(k);
            auto val = it == comp.end() ? R.zero() : it->second;
            bool ok = (k == i) ? R.eq(val, R.one()) : R.is_zero(val);
            if (!ok) {
                rep.identity = false;
                rep.fail_i = i;
                rep.fail_j = k;
            }
        }
    }
    return rep;
}

struct VanishingProfile {
    long threshold = 0; // smallest I with a^{i,S}_j = 0 for all I <= i <= i_max
    std::vector<std::pair<long, std::string>> nonzero; // (i, printed value) below it
};

template <class Model>
VanishingProfile vanishing_profile(const Model& src, const Model& dst, const std::set<long>& S,
                                   long j, long i_max) {
    detail::require_compatible(src, dst);
    if (i_max > src.entry_cap()) throw WindowExceeded(i_max, src.entry_cap());
    const auto& R = dst.ring();
    VanishingProfile out;
    std::vector<bool> zero((std::size_t)i_max + 1, true);
    std::vector<std::string> printed((std::size_t)i_max + 1);
    for (long i = 0; i <= i_max; ++i) {
        auto row = change_coeffs(src, dst, GappedIndex{i, S});
        auto it = row.find(j);
        if (it != row.end() && !R.is_zero(it->second)) {
            zero[(std::size_t)i] = false;
            printed[(std::size_t)i] = R.str(it->second);
        }
    }
    long I = i_max + 1;
    while (I > 0 && zero[(std::size_t)I - 1]) --I;
    out.threshold = I;
    for (long i = 0; i < I; ++i)
        if (!zero[(std::size_t)i]) out.nonzero.emplace_back(i, printed[(std::size_t)i]);
    return out;
}

} // namespace efgl

#endif
