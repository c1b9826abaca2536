#pragma once

// Normal-form arithmetic in the solvable Baumslag-Solitar group
//
//     B(k) = < a, b | a b a^-1 = b^k >  ~=  Z[1/k] x| Z
//
// An element is stored as b^x a^t with x in Z[1/|k|] written x_num / |k|^x_pow.
// Conjugation by a multiplies the b-part by the signed parameter k.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace bsk {

using Integer = mpz_class;
using Rational = mpq_class;

class GroupParam {
public:
    constexpr explicit GroupParam(std::int64_t k) : k_(k) {}

    constexpr std::int64_t value() const { return k_; }
    constexpr std::uint64_t magnitude() const {
        return k_ < 0 ? static_cast<std::uint64_t>(-(k_ + 1)) + 1 : static_cast<std::uint64_t>(k_);
    }
    /// B(0) = Z: b is killed by the relation.
    constexpr bool collapses_b() const { return k_ == 0; }
    /// |k| = 1: Z[1/k] = Z, no denominators.
    constexpr bool unimodular() const { return k_ == 1 || k_ == -1; }
    constexpr bool odd() const { return (k_ % 2) != 0; }

    friend constexpr bool operator==(GroupParam, GroupParam) = default;

private:
    std::int64_t k_;
};

/// b^x a^t with x = num / |k|^pow. Always in reduced form for the parameter it was built with.
class BSElement {
public:
    BSElement() = default;

    /// Reduces (num, pow) to canonical form for k.
    static BSElement make(const Integer& num, std::uint64_t pow, const Integer& t, GroupParam k);

    static BSElement identity() { return {}; }
    static BSElement gen_a(GroupParam k) { return make(0, 0, 1, k); }
    static BSElement gen_b(GroupParam k) { return make(1, 0, 0, k); }
    /// c_i = a^-i b a^i, the i-th generator of the normal subgroup Z[1/k].
    static BSElement conjugated_b(std::uint64_t i, GroupParam k);

    const Integer& num() const { return num_; }
    std::uint64_t pow() const { return pow_; }
    const Integer& t() const { return t_; }

    bool is_identity() const { return num_ == 0 && t_ == 0; }
    /// The b-part as an exact rational.
    Rational x(GroupParam k) const;

    friend bool operator==(const BSElement& g, const BSElement& h) {
        return g.pow_ == h.pow_ && g.num_ == h.num_ && g.t_ == h.t_;
    }
    /// Canonical term order: (t, x_pow, x_num).
    friend std::strong_ordering operator<=>(const BSElement& g, const BSElement& h);

private:
    Integer num_ = 0;
    std::uint64_t pow_ = 0;
    Integer t_ = 0;
};

BSElement multiply(const BSElement& g, const BSElement& h, GroupParam k);
BSElement invert(const BSElement& g, GroupParam k);
/// g^n for any integer n.
BSElement power(const BSElement& g, std::int64_t n, GroupParam k);

/// Human syntax, e.g. "A^2*b^3*a^5" (identity prints as "1"). Parseable back by parse_ring.
std::string to_string(const BSElement& g, GroupParam k);

enum class Generator : std::uint8_t { a, b };

enum class Letter : std::int8_t { a = 1, A = -1, b = 2, B = -2 };

constexpr Letter inverse(Letter l) { return static_cast<Letter>(-static_cast<std::int8_t>(l)); }
constexpr Generator generator_of(Letter l) {
    return (l == Letter::a || l == Letter::A) ? Generator::a : Generator::b;
}
constexpr bool is_positive(Letter l) { return static_cast<std::int8_t>(l) > 0; }
char to_char(Letter l);

/// Freely reduced word over {a, a^-1, b, b^-1}; text form uses A = a^-1, B = b^-1.
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(Letter l) : letters_{l} {}
    /// Reduces freely while building.
    explicit FreeWord(const std::vector<Letter>& letters);

    /// Accepts letters a, A, b, B; whitespace is ignored. Throws SchemaError otherwise.
    static FreeWord parse(std::string_view text);
    static FreeWord generator(Generator g) { return FreeWord(g == Generator::a ? Letter::a : Letter::b); }
    /// The Baumslag-Solitar relator a b a^-1 b^-k.
    static FreeWord relator(GroupParam k);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    FreeWord inverse() const;
    FreeWord power(std::int64_t n) const;
    /// Prefix of the first n letters (already reduced).
    FreeWord prefix(std::size_t n) const;

    friend FreeWord operator*(const FreeWord& u, const FreeWord& v);
    friend bool operator==(const FreeWord&, const FreeWord&) = default;
    /// Shortlex.
    friend std::strong_ordering operator<=>(const FreeWord& u, const FreeWord& v);

    std::string str() const;

private:
    void push(Letter l);
    std::vector<Letter> letters_;
};

/// Image of a free word in B(k).
BSElement eval_word(const FreeWord& w, GroupParam k);

} // namespace bsk
