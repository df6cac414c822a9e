#ifndef EFGL_CHARACTERS_HPP
#define EFGL_CHARACTERS_HPP

#include <efgl/errors.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace efgl {

// Character lattice data of a split diagonalizable group G = Z^r x prod Z/n_j.
// Only the lattice is modeled; the base field never appears.
class GroupSpec {
public:
    GroupSpec() = default;
    GroupSpec(long torus_rank, std::vector<long> finite_orders);

    long torus_rank() const { return rank_; }
    const std::vector<long>& finite_orders() const { return orders_; }
    bool is_trivial() const { return rank_ == 0 && orders_.empty(); }

    bool operator==(const GroupSpec&) const = default;

    std::string str() const;

private:
    long rank_ = 0;
    std::vector<long> orders_; // order-1 factors are dropped at construction
};

// Element of G* = Z^r (+) sum Z/n_j. Finite exponents are stored reduced.
class Character {
public:
    Character() = default;
    Character(const GroupSpec& g, std::vector<long> finite_exponents,
              std::vector<long> torus_exponents);

    static Character trivial(const GroupSpec& g);

    const GroupSpec& group() const { return group_; }
    const std::vector<long>& finite_exponents() const { return fin_; }
    const std::vector<long>& torus_exponents() const { return tor_; }
    bool is_trivial() const;

    bool operator==(const Character&) const = default;
    std::strong_ordering operator<=>(const Character& o) const;

    std::string str() const;

private:
    GroupSpec group_;
    std::vector<long> fin_;
    std::vector<long> tor_;
};

Character char_mul(const Character& a, const Character& b);
Character char_dual(const Character& a);
Character char_pow(const Character& a, long n);

// Eventually periodic flag with a finite readable horizon. Completeness of
// the induced infinite sequence is a declared contract, checked on demand
// against a finite character set.
class FlagSpec {
public:
    FlagSpec() = default;
    FlagSpec(std::vector<Character> preperiod, std::vector<Character> period, long horizon);

    const std::vector<Character>& preperiod() const { return pre_; }
    const std::vector<Character>& period() const { return per_; }
    long horizon() const { return horizon_; }
    const GroupSpec& group() const;

    // alpha_i for 1 <= i <= horizon; HorizonExceeded beyond, never a wrap.
    const Character& at(long i) const;

    // Same flag with a larger readable horizon.
    FlagSpec with_horizon(long horizon) const;

    // Distinct characters visible in [1, horizon].
    std::vector<Character> window_charset() const;

    // index of the first occurrence of chi within [1, horizon], or 0.
    long first_occurrence(const Character& chi) const;

    bool same_sequence(const FlagSpec& o) const {
        return pre_ == o.pre_ && per_ == o.per_;
    }

    std::string str() const;

private:
    std::vector<Character> pre_;
    std::vector<Character> per_;
    long horizon_ = 0;
};

inline const Character& flag_character(const FlagSpec& f, long i) { return f.at(i); }

// Verifies that every character of `charset` occurs in the flag window.
// Returns the missing ones; `require_` throws CharacterNotInWindow.
std::vector<Character> check_window_completeness(const FlagSpec& flag,
                                                 const std::vector<Character>& charset);
void require_window_completeness(const FlagSpec& flag, const std::vector<Character>& charset);

// Homomorphism G* -> H*, given by images of the generators of G*.
class SubgroupSpec {
public:
    SubgroupSpec() = default;
    // finite_images[j] = image of the j-th finite generator; torus_images[k]
    // = image of the k-th torus generator. Orders must be compatible.
    SubgroupSpec(GroupSpec source, GroupSpec target, std::vector<Character> finite_images,
                 std::vector<Character> torus_images);

    const GroupSpec& source() const { return source_; }
    const GroupSpec& target() const { return target_; }

    Character restrict_char(const Character& chi) const;
    FlagSpec restrict_flag(const FlagSpec& f) const;

private:
    GroupSpec source_, target_;
    std::vector<Character> fin_img_, tor_img_;
};

inline Character restrict(const Character& chi, const SubgroupSpec& sub) {
    return sub.restrict_char(chi);
}

} // namespace efgl

#endif
