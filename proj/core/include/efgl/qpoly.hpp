#ifndef EFGL_QPOLY_HPP
#define EFGL_QPOLY_HPP

#include <efgl/errors.hpp>
#include <efgl/numeric.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace efgl {

// Exponent-vector ordering: total degree first, then lexicographic.
struct GradedLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        long da = std::accumulate(a.begin(), a.end(), 0L);
        long db = std::accumulate(b.begin(), b.end(), 0L);
        if (da != db) return da < db;
        return a < b;
    }
};

struct QPolyCtx {
    std::vector<std::string> gens;
    std::vector<long> weights; // grading weight per generator

    bool operator==(const QPolyCtx& o) const { return gens == o.gens && weights == o.weights; }
};

// Polynomial over Q in named generators; exact, never truncated. Used for
// the graded ring Q[m_1,...,m_k] underneath the rational universal law.
class QPoly {
public:
    using Terms = std::map<std::vector<int>, Rat, GradedLexLess>;

    QPoly() = default;
    explicit QPoly(std::shared_ptr<const QPolyCtx> ctx) : ctx_(std::move(ctx)) {}

    const std::shared_ptr<const QPolyCtx>& ctx() const { return ctx_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(std::vector<int> exps, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(std::move(exps), c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool operator==(const QPoly& o) const { return terms_ == o.terms_; }

    // weighted degree of a monomial under ctx weights
    long monomial_weight(const std::vector<int>& exps) const {
        long w = 0;
        for (std::size_t i = 0; i < exps.size(); ++i) w += exps[i] * ctx_->weights[i];
        return w;
    }

    std::string str() const;

private:
    std::shared_ptr<const QPolyCtx> ctx_;
    Terms terms_;
};

struct QPolyRing {
    using Elem = QPoly;
    std::shared_ptr<const QPolyCtx> ctx;

    QPolyRing() : ctx(std::make_shared<QPolyCtx>()) {}
    explicit QPolyRing(std::shared_ptr<const QPolyCtx> c) : ctx(std::move(c)) {}
    static QPolyRing make(std::vector<std::string> gens, std::vector<long> weights) {
        auto c = std::make_shared<QPolyCtx>();
        c->gens = std::move(gens);
        c->weights = std::move(weights);
        return QPolyRing(std::move(c));
    }

    Elem zero() const { return Elem(ctx); }
    Elem one() const { return from_rat(1); }
    Elem from_int(long n) const { return from_rat(Rat(n)); }
    Elem from_rat(const Rat& q) const {
        Elem e(ctx);
        e.add_term(std::vector<int>(ctx->gens.size(), 0), q);
        return e;
    }
    Elem gen(std::size_t i) const {
        Elem e(ctx);
        std::vector<int> exps(ctx->gens.size(), 0);
        exps.at(i) = 1;
        e.add_term(std::move(exps), 1);
        return e;
    }

    Elem add(const Elem& a, const Elem& b) const {
        check(a, b);
        Elem out = a.ctx() ? a : Elem(ctx);
        for (const auto& [e, c] : b.terms()) out.add_term(e, c);
        return out;
    }
    Elem neg(const Elem& a) const {
        Elem out(ctx);
        for (const auto& [e, c] : a.terms()) out.add_term(e, -c);
        return out;
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem mul(const Elem& a, const Elem& b) const {
        check(a, b);
        Elem out(ctx);
        for (const auto& [ea, ca] : a.terms())
            for (const auto& [eb, cb] : b.terms()) {
                std::vector<int> e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(std::move(e), ca * cb);
            }
        return out;
    }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a.terms() == b.terms(); }

    // Units are the nonzero constants.
    std::optional<Elem> try_invert(const Elem& a) const {
        if (a.terms().size() != 1) return std::nullopt;
        const auto& [e, c] = *a.terms().begin();
        if (std::any_of(e.begin(), e.end(), [](int x) { return x != 0; })) return std::nullopt;
        return from_rat(Rat(1) / c);
    }

    std::string str(const Elem& a) const { return a.str(); }
    std::string name() const {
        if (ctx->gens.empty()) return "Q";
        std::string s = "Q[";
        for (std::size_t i = 0; i < ctx->gens.size(); ++i) s += (i ? "," : "") + ctx->gens[i];
        return s + "]";
    }

private:
    void check(const Elem& a, const Elem& b) const {
        if (a.ctx() && b.ctx() && !(*a.ctx() == *b.ctx()))
            throw ModelMismatch("QPoly arithmetic across different generator contexts");
    }
};

inline std::string QPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat coef = c;
        if (first) {
            if (coef < 0) {
                os << "-";
                coef = -coef;
            }
        } else {
            os << (coef < 0 ? " - " : " + ");
            if (coef < 0) coef = -coef;
        }
        std::string body;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!body.empty()) body += "*";
            body += ctx_->gens[i];
            if (e[i] != 1) body += "^" + std::to_string(e[i]);
        }
        if (body.empty()) {
            os << coef;
        } else {
            if (coef != 1) os << coef << "*";
            os << body;
        }
        first = false;
    }
    return os.str();
}

} // namespace efgl

#endif
