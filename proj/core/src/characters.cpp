#include <efgl/characters.hpp>

#include <algorithm>
#include <sstream>

namespace efgl {

namespace {

long mod_reduce(long e, long n) {
    long r = e % n;
    return r < 0 ? r + n : r;
}

std::string finite_gen_name(std::size_t j) {
    // a, b, c, ... in declaration order ('t' is reserved for torus generators)
    static const char* names = "abcdefghijklmnopqrs";
    if (j < 19) return std::string(1, names[j]);
    return "g" + std::to_string(j + 1);
}

} // namespace

GroupSpec::GroupSpec(long torus_rank, std::vector<long> finite_orders) : rank_(torus_rank) {
    if (torus_rank < 0) throw ParseError("torus rank must be nonnegative");
    for (long n : finite_orders) {
        if (n < 1) throw ParseError("finite factor order must be >= 1");
        if (n > 1) orders_.push_back(n); // order-1 factors are trivial
    }
}

std::string GroupSpec::str() const {
    if (is_trivial()) return "1";
    std::ostringstream os;
    bool first = true;
    for (long n : orders_) {
        if (!first) os << " x ";
        os << "Z/" << n;
        first = false;
    }
    for (long k = 0; k < rank_; ++k) {
        if (!first) os << " x ";
        os << "Gm";
        first = false;
    }
    return os.str();
}

Character::Character(const GroupSpec& g, std::vector<long> finite_exponents,
                     std::vector<long> torus_exponents)
    : group_(g), fin_(std::move(finite_exponents)), tor_(std::move(torus_exponents)) {
    if (fin_.size() != g.finite_orders().size() || tor_.size() != (std::size_t)g.torus_rank())
        throw GroupMismatch("character exponent shape does not match the group");
    for (std::size_t j = 0; j < fin_.size(); ++j) fin_[j] = mod_reduce(fin_[j], g.finite_orders()[j]);
}

Character Character::trivial(const GroupSpec& g) {
    return Character(g, std::vector<long>(g.finite_orders().size(), 0),
                     std::vector<long>(g.torus_rank(), 0));
}

bool Character::is_trivial() const {
    return std::all_of(fin_.begin(), fin_.end(), [](long e) { return e == 0; }) &&
           std::all_of(tor_.begin(), tor_.end(), [](long e) { return e == 0; });
}

std::strong_ordering Character::operator<=>(const Character& o) const {
    if (auto c = fin_ <=> o.fin_; c != 0) return c;
    return tor_ <=> o.tor_;
}

std::string Character::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < fin_.size(); ++j) {
        if (fin_[j] == 0) continue;
        if (!first) os << "*";
        os << finite_gen_name(j);
        if (fin_[j] != 1) os << "^" << fin_[j];
        first = false;
    }
    for (std::size_t k = 0; k < tor_.size(); ++k) {
        if (tor_[k] == 0) continue;
        if (!first) os << "*";
        os << "t" << (k + 1);
        if (tor_[k] != 1) os << "^" << tor_[k];
        first = false;
    }
    if (first) return "1";
    return os.str();
}

Character char_mul(const Character& a, const Character& b) {
    if (a.group() != b.group())
        throw GroupMismatch("char_mul across different groups");
    std::vector<long> f = a.finite_exponents(), t = a.torus_exponents();
    for (std::size_t j = 0; j < f.size(); ++j) f[j] += b.finite_exponents()[j];
    for (std::size_t k = 0; k < t.size(); ++k) t[k] += b.torus_exponents()[k];
    return Character(a.group(), std::move(f), std::move(t));
}

Character char_dual(const Character& a) {
    std::vector<long> f = a.finite_exponents(), t = a.torus_exponents();
    for (auto& e : f) e = -e;
    for (auto& e : t) e = -e;
    return Character(a.group(), std::move(f), std::move(t));
}

Character char_pow(const Character& a, long n) {
    std::vector<long> f = a.finite_exponents(), t = a.torus_exponents();
    for (auto& e : f) e *= n;
    for (auto& e : t) e *= n;
    return Character(a.group(), std::move(f), std::move(t));
}

FlagSpec::FlagSpec(std::vector<Character> preperiod, std::vector<Character> period, long horizon)
    : pre_(std::move(preperiod)), per_(std::move(period)), horizon_(horizon) {
    if (per_.empty()) throw ParseError("flag period must be nonempty");
    if (horizon_ < 1) throw ParseError("flag horizon must be positive");
    const GroupSpec& g = per_.front().group();
    for (const auto& c : pre_)
        if (c.group() != g) throw GroupMismatch("flag characters from different groups");
    for (const auto& c : per_)
        if (c.group() != g) throw GroupMismatch("flag characters from different groups");
}

const GroupSpec& FlagSpec::group() const { return per_.front().group(); }

const Character& FlagSpec::at(long i) const {
    if (i < 1) throw HorizonExceeded(i, horizon_);
    if (i > horizon_) throw HorizonExceeded(i, horizon_);
    if ((std::size_t)i <= pre_.size()) return pre_[i - 1];
    return per_[(i - 1 - pre_.size()) % per_.size()];
}

FlagSpec FlagSpec::with_horizon(long horizon) const { return FlagSpec(pre_, per_, horizon); }

std::vector<Character> FlagSpec::window_charset() const {
    std::vector<Character> out;
    long upto = std::min<long>(horizon_, (long)(pre_.size() + per_.size()));
    for (long i = 1; i <= upto; ++i) {
        const Character& c = at(i);
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long FlagSpec::first_occurrence(const Character& chi) const {
    long upto = std::min<long>(horizon_, (long)(pre_.size() + per_.size()));
    for (long i = 1; i <= upto; ++i)
        if (at(i) == chi) return i;
    // the tail is periodic; nothing new appears past pre+period
    return 0;
}

std::string FlagSpec::str() const {
    std::ostringstream os;
    os << "pre:[";
    for (std::size_t i = 0; i < pre_.size(); ++i) os << (i ? "," : "") << pre_[i].str();
    os << "]; period:[";
    for (std::size_t i = 0; i < per_.size(); ++i) os << (i ? "," : "") << per_[i].str();
    os << "]; horizon:" << horizon_;
    return os.str();
}

std::vector<Character> check_window_completeness(const FlagSpec& flag,
                                                 const std::vector<Character>& charset) {
    std::vector<Character> missing;
    for (const auto& c : charset)
        if (flag.first_occurrence(c) == 0) missing.push_back(c);
    return missing;
}

void require_window_completeness(const FlagSpec& flag, const std::vector<Character>& charset) {
    auto missing = check_window_completeness(flag, charset);
    if (!missing.empty()) {
        std::string what = "flag window lacks occurrence of";
        for (const auto& c : missing) what += " " + c.str();
        throw CharacterNotInWindow(what);
    }
}

SubgroupSpec::SubgroupSpec(GroupSpec source, GroupSpec target, std::vector<Character> finite_images,
                           std::vector<Character> torus_images)
    : source_(std::move(source)), target_(std::move(target)), fin_img_(std::move(finite_images)),
      tor_img_(std::move(torus_images)) {
    if (fin_img_.size() != source_.finite_orders().size() ||
        tor_img_.size() != (std::size_t)source_.torus_rank())
        throw GroupMismatch("subgroup map must give an image per generator of the source");
    for (std::size_t j = 0; j < fin_img_.size(); ++j) {
        if (fin_img_[j].group() != target_)
            throw GroupMismatch("generator image lies in the wrong group");
        // order of the image must divide n_j
        if (!char_pow(fin_img_[j], source_.finite_orders()[j]).is_trivial())
            throw GroupMismatch("image of a finite generator has incompatible order");
    }
    for (const auto& c : tor_img_)
        if (c.group() != target_) throw GroupMismatch("generator image lies in the wrong group");
}

Character SubgroupSpec::restrict_char(const Character& chi) const {
    if (chi.group() != source_) throw GroupMismatch("restrict: character not in the source group");
    Character out = Character::trivial(target_);
    for (std::size_t j = 0; j < fin_img_.size(); ++j)
        out = char_mul(out, char_pow(fin_img_[j], chi.finite_exponents()[j]));
    for (std::size_t k = 0; k < tor_img_.size(); ++k)
        out = char_mul(out, char_pow(tor_img_[k], chi.torus_exponents()[k]));
    return out;
}

FlagSpec SubgroupSpec::restrict_flag(const FlagSpec& f) const {
    std::vector<Character> pre, per;
    for (const auto& c : f.preperiod()) pre.push_back(restrict_char(c));
    for (const auto& c : f.period()) per.push_back(restrict_char(c));
    return FlagSpec(std::move(pre), std::move(per), f.horizon());
}

} // namespace efgl
