#ifndef EFGL_RG_HPP
#define EFGL_RG_HPP

#include <efgl/characters.hpp>
#include <efgl/numeric.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <utility>

namespace efgl {

// Element of R(G)[v,v^-1]: finite integer combination of characters times
// Laurent powers of v. With the trivial group this is plain Z[v,v^-1].
class RGElement {
public:
    using Key = std::pair<long, Character>; // (v-exponent, character)
    using Terms = std::map<Key, Int>;

    RGElement() = default;
    explicit RGElement(GroupSpec g) : group_(std::move(g)) {}

    const GroupSpec& group() const { return group_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Character& chi, long vexp, const Int& c) {
        if (c == 0) return;
        if (chi.group() != group_) throw GroupMismatch("RG term from a different group");
        auto it = terms_.find({vexp, chi});
        if (it == terms_.end()) {
            terms_.emplace(Key{vexp, chi}, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool operator==(const RGElement& o) const {
        return group_ == o.group_ && terms_ == o.terms_;
    }

    std::string str() const;

private:
    GroupSpec group_;
    Terms terms_;
};

struct RGRing {
    using Elem = RGElement;
    GroupSpec group;

    RGRing() = default;
    explicit RGRing(GroupSpec g) : group(std::move(g)) {}

    Elem zero() const { return Elem(group); }
    Elem one() const { return from_int(1); }
    Elem from_int(long n) const {
        Elem e(group);
        e.add_term(Character::trivial(group), 0, n);
        return e;
    }
    Elem character(const Character& chi, long vexp = 0, const Int& c = 1) const {
        Elem e(group);
        e.add_term(chi, vexp, c);
        return e;
    }
    Elem v(long exp = 1) const { return character(Character::trivial(group), exp); }

    Elem add(const Elem& a, const Elem& b) const {
        check(a, b);
        Elem out = a;
        for (const auto& [k, c] : b.terms()) out.add_term(k.second, k.first, c);
        return out;
    }
    Elem neg(const Elem& a) const {
        Elem out(group);
        for (const auto& [k, c] : a.terms()) out.add_term(k.second, k.first, -c);
        return out;
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem mul(const Elem& a, const Elem& b) const {
        check(a, b);
        Elem out(group);
        for (const auto& [ka, ca] : a.terms())
            for (const auto& [kb, cb] : b.terms())
                out.add_term(char_mul(ka.second, kb.second), ka.first + kb.first, ca * cb);
        return out;
    }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    // Units are single terms +-chi * v^k.
    std::optional<Elem> try_invert(const Elem& a) const {
        if (a.terms().size() != 1) return std::nullopt;
        const auto& [k, c] = *a.terms().begin();
        if (c != 1 && c != -1) return std::nullopt;
        Elem out(group);
        out.add_term(char_dual(k.second), -k.first, c);
        return out;
    }

    // Exact division by a unit; throws if b is not a unit.
    Elem div_unit(const Elem& a, const Elem& b) const {
        auto inv = try_invert(b);
        if (!inv) throw NonMonicRelation("division by a non-unit of R(G)[v,v^-1]");
        return mul(a, *inv);
    }

    // Euler class e(alpha) = (1 - dual(alpha)) v^-1.
    Elem euler(const Character& alpha) const {
        Elem e(group);
        e.add_term(Character::trivial(group), -1, 1);
        e.add_term(char_dual(alpha), -1, -1);
        return e;
    }
    // 1 - v e(alpha) = dual(alpha).
    Elem one_minus_v_euler(const Character& alpha) const {
        return character(char_dual(alpha));
    }

    std::string str(const Elem& a) const { return a.str(); }
    std::string name() const {
        return group.is_trivial() ? "Z[v,v^-1]" : "R(" + group.str() + ")[v,v^-1]";
    }

private:
    void check(const Elem& a, const Elem& b) const {
        if (a.group() != b.group()) throw GroupMismatch("RG arithmetic across different groups");
    }
};

inline std::string RGElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Int coef = c;
        if (first) {
            if (coef < 0) {
                os << "-";
                coef = -coef;
            }
        } else {
            os << (coef < 0 ? " - " : " + ");
            if (coef < 0) coef = -coef;
        }
        const Character& chi = k.second;
        long vexp = k.first;
        std::string body;
        if (!chi.is_trivial()) body = chi.str();
        if (vexp != 0) {
            if (!body.empty()) body += "*";
            body += "v";
            if (vexp != 1) body += "^" + std::to_string(vexp);
        }
        if (body.empty()) {
            os << coef.str();
        } else {
            if (coef != 1) os << coef.str() << "*";
            os << body;
        }
        first = false;
    }
    return os.str();
}

} // namespace efgl

#endif
