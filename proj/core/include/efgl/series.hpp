#ifndef EFGL_SERIES_HPP
#define EFGL_SERIES_HPP

#include <efgl/errors.hpp>
#include <efgl/qpoly.hpp>

#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace efgl {

struct SeriesCtx {
    std::vector<std::string> vars;
    long degree = 0; // truncation: total degree <= degree

    bool operator==(const SeriesCtx& o) const { return vars == o.vars && degree == o.degree; }
};

// Sparse multivariate power series truncated at total degree D. Coefficients
// live in a base ring B; all arithmetic goes through SeriesRing<B>.
template <class Coeff>
class Series {
public:
    using Terms = std::map<std::vector<int>, Coeff, GradedLexLess>;

    Series() = default;
    explicit Series(std::shared_ptr<const SeriesCtx> ctx) : ctx_(std::move(ctx)) {}

    const std::shared_ptr<const SeriesCtx>& ctx() const { return ctx_; }
    const Terms& terms() const { return terms_; }
    Terms& terms() { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    long total_degree(const std::vector<int>& e) const {
        return std::accumulate(e.begin(), e.end(), 0L);
    }

    bool operator==(const Series& o) const { return terms_ == o.terms_; }

private:
    std::shared_ptr<const SeriesCtx> ctx_;
    Terms terms_;
};

template <class BR>
struct SeriesRing {
    using B = BR;
    using C = typename BR::Elem;
    using Elem = Series<C>;

    BR base;
    std::shared_ptr<const SeriesCtx> ctx;

    SeriesRing() = default;
    SeriesRing(BR base_ring, std::vector<std::string> vars, long degree) : base(std::move(base_ring)) {
        auto c = std::make_shared<SeriesCtx>();
        c->vars = std::move(vars);
        c->degree = degree;
        ctx = std::move(c);
    }

    long degree() const { return ctx->degree; }
    std::size_t nvars() const { return ctx->vars.size(); }

    Elem zero() const { return Elem(ctx); }
    Elem one() const { return from_base(base.one()); }
    Elem from_base(const C& c) const {
        Elem e(ctx);
        add_term(e, std::vector<int>(nvars(), 0), c);
        return e;
    }
    Elem from_int(long n) const { return from_base(base.from_int(n)); }
    Elem var(std::size_t i) const {
        Elem e(ctx);
        std::vector<int> exps(nvars(), 0);
        exps.at(i) = 1;
        add_term(e, std::move(exps), base.one());
        return e;
    }
    Elem var(const std::string& name) const {
        for (std::size_t i = 0; i < nvars(); ++i)
            if (ctx->vars[i] == name) return var(i);
        throw ModelMismatch("unknown series variable " + name);
    }

    void add_term(Elem& e, std::vector<int> exps, const C& c) const {
        if (base.is_zero(c)) return;
        if (e.total_degree(exps) > degree()) return;
        auto it = e.terms().find(exps);
        if (it == e.terms().end()) {
            e.terms().emplace(std::move(exps), c);
        } else {
            it->second = base.add(it->second, c);
            if (base.is_zero(it->second)) e.terms().erase(it);
        }
    }

    Elem add(const Elem& a, const Elem& b) const {
        check(a, b);
        Elem out = a;
        if (!out.ctx()) out = Elem(ctx);
        for (const auto& [e, c] : b.terms()) add_term(out, e, c);
        return out;
    }
    Elem neg(const Elem& a) const {
        Elem out(ctx);
        for (const auto& [e, c] : a.terms()) out.terms().emplace(e, base.neg(c));
        return out;
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem mul(const Elem& a, const Elem& b) const {
        check(a, b);
        Elem out(ctx);
        for (const auto& [ea, ca] : a.terms()) {
            long da = a.total_degree(ea);
            for (const auto& [eb, cb] : b.terms()) {
                if (da + b.total_degree(eb) > degree()) continue;
                std::vector<int> e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                add_term(out, std::move(e), base.mul(ca, cb));
            }
        }
        return out;
    }
    Elem scale(const C& c, const Elem& a) const {
        Elem out(ctx);
        for (const auto& [e, co] : a.terms()) add_term(out, e, base.mul(c, co));
        return out;
    }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a.terms() == b.terms(); }

    C constant_term(const Elem& a) const {
        std::vector<int> z(nvars(), 0);
        auto it = a.terms().find(z);
        return it == a.terms().end() ? base.zero() : it->second;
    }
    C coeff(const Elem& a, const std::vector<int>& e) const {
        auto it = a.terms().find(e);
        return it == a.terms().end() ? base.zero() : it->second;
    }

    // drop monomials of total degree > bound (bound < 0 drops everything)
    Elem truncate(const Elem& a, long bound) const {
        Elem out(ctx);
        for (const auto& [e, c] : a.terms())
            if (a.total_degree(e) <= bound) out.terms().emplace(e, c);
        return out;
    }

    Elem pow(const Elem& a, long n) const {
        Elem out = one();
        for (long i = 0; i < n; ++i) out = mul(out, a);
        return out;
    }

    // Substitute assignments[i] for variable i (full assignment). Substituted
    // series must have zero constant term: truncated data cannot see how the
    // dropped tail would feed a constant shift back into low degrees.
    Elem substitute(const Elem& f, const std::vector<Elem>& assignments) const {
        if (assignments.size() != nvars())
            throw ModelMismatch("substitute: one series per variable is required");
        for (std::size_t i = 0; i < assignments.size(); ++i) {
            check(f, assignments[i]);
            if (!base.is_zero(constant_term(assignments[i])) && max_exponent(f, i) > 0)
                throw ConstantTermSubstitution("nonzero constant term substituted for " +
                                               ctx->vars[i]);
        }
        // powers are built lazily per variable
        std::vector<std::vector<Elem>> pows(nvars());
        for (std::size_t i = 0; i < nvars(); ++i) pows[i].push_back(one());
        auto power = [&](std::size_t i, int k) -> const Elem& {
            while ((int)pows[i].size() <= k) pows[i].push_back(mul(pows[i].back(), assignments[i]));
            return pows[i][k];
        };
        Elem out(ctx);
        for (const auto& [e, c] : f.terms()) {
            Elem term = from_base(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) term = mul(term, power(i, e[i]));
            out = add(out, term);
        }
        return out;
    }

    // Compositional inverse of a univariate series with f(0)=0 and invertible
    // linear coefficient: returns g with f(g(t)) = t = g(f(t)) up to degree D.
    Elem comp_inverse(const Elem& f) const {
        if (nvars() != 1) throw ModelMismatch("comp_inverse needs a univariate context");
        if (!base.is_zero(constant_term(f)))
            throw NonUnitLinearCoefficient("series has a nonzero constant term");
        C lin = coeff(f, {1});
        auto inv = base.try_invert(lin);
        if (!inv) throw NonUnitLinearCoefficient("linear coefficient is not invertible");
        Elem g = scale(*inv, var(0));
        for (long n = 2; n <= degree(); ++n) {
            Elem comp = substitute(f, {g});
            C cn = coeff(comp, {(int)n});
            if (base.is_zero(cn)) continue;
            Elem corr(ctx);
            add_term(corr, {(int)n}, base.neg(base.mul(*inv, cn)));
            g = add(g, corr);
        }
        return g;
    }

    int max_exponent(const Elem& f, std::size_t i) const {
        int m = 0;
        for (const auto& [e, c] : f.terms()) m = std::max(m, e[i]);
        return m;
    }

    std::string str(const Elem& a) const {
        if (a.is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : a.terms()) {
            std::string cs = base.str(c);
            bool negated = false;
            if (cs.size() > 1 && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
                cs.find(" - ") == std::string::npos) {
                negated = true;
                cs = cs.substr(1);
            }
            os << (first ? (negated ? "-" : "") : (negated ? " - " : " + "));
            std::string body;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!body.empty()) body += "*";
                body += ctx->vars[i];
                if (e[i] != 1) body += "^" + std::to_string(e[i]);
            }
            bool needs_parens = cs.find(" + ") != std::string::npos ||
                                cs.find(" - ") != std::string::npos;
            if (body.empty()) {
                os << (needs_parens ? "(" + cs + ")" : cs);
            } else {
                if (cs != "1") os << (needs_parens ? "(" + cs + ")" : cs) << "*";
                os << body;
            }
            first = false;
        }
        return os.str();
    }

    void check(const Elem& a, const Elem& b) const {
        if (a.ctx() && b.ctx() && !(*a.ctx() == *b.ctx()))
            throw ModelMismatch("series over different variable lists or truncation degrees");
    }
};

} // namespace efgl

#endif
