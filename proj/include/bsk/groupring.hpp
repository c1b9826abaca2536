#pragma once

// The integral group ring Z[B(k)] with the orientation involution g -> g^-1,
// and the free-group ring Z[F(a,b)] in which Fox derivatives are taken.

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "bsk/bsgroup.hpp"

namespace bsk {

class GroupRingElt {
public:
    using Terms = std::map<BSElement, Integer>;

    explicit GroupRingElt(GroupParam k) : k_(k) {}
    /// c * e
    GroupRingElt(GroupParam k, const Integer& c);
    static GroupRingElt basis(GroupParam k, const BSElement& g, const Integer& c = 1);

    GroupParam param() const { return k_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    /// Coefficient of g (0 when absent).
    Integer coefficient(const BSElement& g) const;

    void add_term(const BSElement& g, const Integer& c);

    GroupRingElt& operator+=(const GroupRingElt& q);
    GroupRingElt& operator-=(const GroupRingElt& q);
    GroupRingElt& operator*=(const Integer& c);

    friend GroupRingElt operator+(GroupRingElt p, const GroupRingElt& q) { return p += q; }
    friend GroupRingElt operator-(GroupRingElt p, const GroupRingElt& q) { return p -= q; }
    friend GroupRingElt operator-(GroupRingElt p) { return p *= -1; }
    friend GroupRingElt operator*(const GroupRingElt& p, const GroupRingElt& q);
    friend GroupRingElt operator*(const Integer& c, GroupRingElt p) { return p *= c; }

    friend bool operator==(const GroupRingElt& p, const GroupRingElt& q) {
        return p.k_ == q.k_ && p.terms_ == q.terms_;
    }

private:
    GroupParam k_;
    Terms terms_;
};

/// sum n_g g  ->  sum n_g g^-1
GroupRingElt involute(const GroupRingElt& p);
/// Sum of coefficients.
Integer augment(const GroupRingElt& p);
Integer identity_coefficient(const GroupRingElt& p);
/// Coefficients reduced to {0, 1}: the Z/2[B(k)] image.
GroupRingElt reduce_mod2(const GroupRingElt& p);

/// +-g
struct TrivialUnit {
    int sign;
    BSElement element;
};
std::optional<TrivialUnit> as_trivial_unit(const GroupRingElt& p);
GroupRingElt inverse_of(const TrivialUnit& u, GroupParam k);

class FreeRingElt {
public:
    using Terms = std::map<FreeWord, Integer>;

    FreeRingElt() = default;
    FreeRingElt(const Integer& c);  // NOLINT: integers embed as constants
    static FreeRingElt word(const FreeWord& w, const Integer& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const FreeWord& w, const Integer& c);

    FreeRingElt& operator+=(const FreeRingElt& q);
    FreeRingElt& operator-=(const FreeRingElt& q);
    FreeRingElt& operator*=(const Integer& c);

    friend FreeRingElt operator+(FreeRingElt p, const FreeRingElt& q) { return p += q; }
    friend FreeRingElt operator-(FreeRingElt p, const FreeRingElt& q) { return p -= q; }
    friend FreeRingElt operator-(FreeRingElt p) { return p *= -1; }
    friend FreeRingElt operator*(const FreeRingElt& p, const FreeRingElt& q);
    friend bool operator==(const FreeRingElt&, const FreeRingElt&) = default;

private:
    Terms terms_;
};

/// (x^n - 1)/(x - 1) in Z[F]: 1 + x + ... + x^(n-1) for n > 0, 0 for n = 0,
/// -(x^-1 + ... + x^n) for n < 0.
FreeRingElt geometric_series(Generator x, std::int64_t n);

/// Z[F(a,b)] -> Z[B(k)], word by word through eval_word.
GroupRingElt project(const FreeRingElt& p, GroupParam k);

/// Human syntax such as "1 - a + 2*b*A"; factors are integers, words over {a,A,b,B}
/// with an optional exponent on the last letter ("b^3", "a^(-2)"), and parenthesised
/// subexpressions.
GroupRingElt parse_ring(std::string_view text, GroupParam k);
FreeRingElt parse_free_ring(std::string_view text);

std::string to_string(const GroupRingElt& p);
std::string to_string(const FreeRingElt& p);

} // namespace bsk
