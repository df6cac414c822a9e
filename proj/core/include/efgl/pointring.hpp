#ifndef EFGL_POINTRING_HPP
#define EFGL_POINTRING_HPP

#include <efgl/characters.hpp>
#include <efgl/fgl.hpp>
#include <efgl/quotient.hpp>

#include <memory>
#include <string>
#include <vector>

namespace efgl {

// The completed point ring L[[t_1..t_s, z_1..z_r]] / (F^{n_1}(t_1), ...,
// F^{n_s}(t_s)) for a base law over L, truncated at degree D. Elements are
// kept in normal form.
template <class BR>
class PointRingPresentation {
public:
    using C = typename BR::Elem;
    using SR = SeriesRing<BR>;
    using Elem = typename SR::Elem;

    PointRingPresentation() = default;

    static PointRingPresentation present(const GroupSpec& group, const Fgl<BR>& law, long degree) {
        PointRingPresentation p;
        p.group_ = group;
        p.law_ = law;
        p.deg_ = degree;
        std::vector<std::string> vars;
        for (std::size_t j = 0; j < group.finite_orders().size(); ++j)
            vars.push_back("t" + std::to_string(j + 1));
        for (long k = 0; k < group.torus_rank(); ++k)
            vars.push_back("z" + std::to_string(k + 1));
        p.sr_ = SR(law.base(), vars, degree);
        p.quot_ = std::make_shared<QuotientSpec<BR>>();
        SeriesRing<BR> t_ring(law.base(), {"t"}, degree);
        auto quot = std::make_shared<QuotientSpec<BR>>();
        for (std::size_t j = 0; j < group.finite_orders().size(); ++j) {
            auto rel_uni = n_series(law, group.finite_orders()[j], t_ring);
            auto rel = eval_univariate(t_ring, rel_uni, p.sr_, p.sr_.var(j));
            p.relation_strings_.push_back(p.sr_.str(rel));
            quot->add_relation(p.sr_, j, rel);
        }
        p.quot_ = std::move(quot);
        return p;
    }

    const GroupSpec& group() const { return group_; }
    const Fgl<BR>& law() const { return law_; }
    long degree() const { return deg_; }
    const SR& series_ring() const { return sr_; }
    const QuotientSpec<BR>& quotient() const { return *quot_; }
    const std::vector<std::string>& relation_strings() const { return relation_strings_; }

    Elem reduce(const Elem& x) const { return quot_->normal_form(sr_, x); }

    Elem add(const Elem& a, const Elem& b) const { return sr_.add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return sr_.sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(sr_.mul(a, b)); }

    // e(chi): formal sum over the base law of the [a_j]-series at t_j and the
    // [c_k]-series at z_k; negative exponents go through the formal inverse.
    Elem phi_euler(const Character& chi) const {
        if (chi.group() != group_) throw GroupMismatch("phi_euler: character not in the group");
        std::vector<Elem> parts;
        std::size_t s = group_.finite_orders().size();
        for (std::size_t j = 0; j < s; ++j) {
            long a = chi.finite_exponents()[j];
            if (a != 0) parts.push_back(power_series_at(a, sr_.var(j)));
        }
        for (long k = 0; k < group_.torus_rank(); ++k) {
            long c = chi.torus_exponents()[(std::size_t)k];
            if (c != 0) parts.push_back(power_series_at(c, sr_.var(s + (std::size_t)k)));
        }
        return reduce(formal_sum(law_, sr_, parts));
    }

    std::string str() const {
        std::string out = law_.base().name() + "[[";
        for (std::size_t i = 0; i < sr_.nvars(); ++i) out += (i ? "," : "") + sr_.ctx->vars[i];
        out += "]]";
        if (!relation_strings_.empty()) {
            out += " / (";
            for (std::size_t i = 0; i < relation_strings_.size(); ++i)
                out += (i ? ", " : "") + relation_strings_[i];
            out += ")";
        }
        return out;
    }

private:
    // [n]-series of the law evaluated at a variable, n possibly negative
    Elem power_series_at(long n, const Elem& x) const {
        SeriesRing<BR> t_ring(law_.base(), {"t"}, deg_);
        auto nser = n_series(law_, std::abs(n), t_ring);
        if (n < 0) {
            auto iota = inverse_series(law_, t_ring);
            nser = t_ring.substitute(iota, {nser}); // [-n] = iota o [n]
        }
        return reduce(eval_univariate(t_ring, nser, sr_, x));
    }

    GroupSpec group_;
    Fgl<BR> law_;
    long deg_ = 0;
    SR sr_;
    std::shared_ptr<const QuotientSpec<BR>> quot_;
    std::vector<std::string> relation_strings_;
};

template <class BR>
PointRingPresentation<BR> present(const GroupSpec& group, const Fgl<BR>& law, long degree) {
    return PointRingPresentation<BR>::present(group, law, degree);
}

} // namespace efgl

#endif
