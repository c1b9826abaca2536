#include "bsk/bsgroup.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "bsk/errors.hpp"

namespace bsk {

namespace {

Integer magnitude_power(GroupParam k, std::uint64_t e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), k.magnitude(), e);
    return r;
}

std::int64_t to_exponent(const Integer& t) {
    if (!t.fits_slong_p())
        throw std::overflow_error("a-exponent does not fit in 64 bits");
    return t.get_si();
}

// sign(k)^e
int sign_power(GroupParam k, std::uint64_t e) {
    return (k.value() < 0 && (e % 2) == 1) ? -1 : 1;
}

struct Fraction {
    Integer num;
    std::uint64_t pow;
};

// k^e * num / |k|^pow for |k| >= 2, not reduced.
Fraction twist(const Integer& num, std::uint64_t pow, std::int64_t e, GroupParam k) {
    if (e >= 0) {
        auto ue = static_cast<std::uint64_t>(e);
        Integer n = num * sign_power(k, ue);
        if (ue <= pow)
            return {n, pow - ue};
        return {n * magnitude_power(k, ue - pow), 0};
    }
    auto ue = static_cast<std::uint64_t>(-(e + 1)) + 1;
    return {num * sign_power(k, ue), pow + ue};
}

Fraction add(const Fraction& p, const Fraction& q, GroupParam k) {
    std::uint64_t pow = std::max(p.pow, q.pow);
    Integer n = p.num * magnitude_power(k, pow - p.pow) + q.num * magnitude_power(k, pow - q.pow);
    return {n, pow};
}

} // namespace

BSElement BSElement::make(const Integer& num, std::uint64_t pow, const Integer& t, GroupParam k) {
    BSElement g;
    g.t_ = t;
    if (k.collapses_b() || num == 0)
        return g;
    g.num_ = num;
    if (k.unimodular())
        return g;
    g.pow_ = pow;
    Integer q, r;
    Integer m = k.magnitude();
    while (g.pow_ > 0) {
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), g.num_.get_mpz_t(), m.get_mpz_t());
        if (r != 0)
            break;
        g.num_ = q;
        --g.pow_;
    }
    return g;
}

BSElement BSElement::conjugated_b(std::uint64_t i, GroupParam k) {
    if (k.collapses_b())
        return identity();
    if (k.unimodular())
        return make(sign_power(k, i), 0, 0, k);
    return make(sign_power(k, i), i, 0, k);
}

Rational BSElement::x(GroupParam k) const {
    Rational r(num_, pow_ == 0 ? Integer(1) : magnitude_power(k, pow_));
    r.canonicalize();
    return r;
}

std::strong_ordering operator<=>(const BSElement& g, const BSElement& h) {
    if (auto c = cmp(g.t_, h.t_); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (g.pow_ != h.pow_)
        return g.pow_ <=> h.pow_;
    int c = cmp(g.num_, h.num_);
    if (c == 0)
        return std::strong_ordering::equal;
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

BSElement multiply(const BSElement& g, const BSElement& h, GroupParam k) {
    Integer t = g.t() + h.t();
    if (k.collapses_b())
        return BSElement::make(0, 0, t, k);
    if (h.num() == 0)
        return BSElement::make(g.num(), g.pow(), t, k);
    if (k.unimodular()) {
        int s = (k.value() < 0 && mpz_odd_p(g.t().get_mpz_t())) ? -1 : 1;
        return BSElement::make(g.num() + s * h.num(), 0, t, k);
    }
    std::int64_t e = to_exponent(g.t());
    Fraction moved = twist(h.num(), h.pow(), e, k);
    Fraction sum = add({g.num(), g.pow()}, moved, k);
    return BSElement::make(sum.num, sum.pow, t, k);
}

BSElement invert(const BSElement& g, GroupParam k) {
    Integer t = -g.t();
    if (k.collapses_b() || g.num() == 0)
        return BSElement::make(0, 0, t, k);
    if (k.unimodular()) {
        int s = (k.value() < 0 && mpz_odd_p(t.get_mpz_t())) ? -1 : 1;
        return BSElement::make(-s * g.num(), 0, t, k);
    }
    std::int64_t e = to_exponent(t);
    Fraction moved = twist(g.num(), g.pow(), e, k);
    return BSElement::make(-moved.num, moved.pow, t, k);
}

BSElement power(const BSElement& g, std::int64_t n, GroupParam k) {
    BSElement base = n < 0 ? invert(g, k) : g;
    std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    BSElement result;
    while (e > 0) {
        if (e & 1)
            result = multiply(result, base, k);
        base = multiply(base, base, k);
        e >>= 1;
    }
    return result;
}

std::string to_string(const BSElement& g, GroupParam k) {
    if (g.is_identity())
        return "1";
    // b^(num/|k|^p) = a^-p b^(num*sign^p) a^p
    std::vector<std::string> factors;
    auto emit = [&](char letter, const Integer& e) {
        if (e == 0)
            return;
        std::string f(1, letter);
        if (e != 1)
            f += "^" + (e < 0 ? "(" + e.get_str() + ")" : e.get_str());
        factors.push_back(std::move(f));
    };
    Integer p = static_cast<unsigned long>(g.pow());
    Integer bexp = g.num() * sign_power(k, g.pow());
    if (p != 0)
        emit('A', p);
    emit('b', bexp);
    emit('a', p + g.t());
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i)
            out += '*';
        out += factors[i];
    }
    return out;
}

char to_char(Letter l) {
    switch (l) {
    case Letter::a: return 'a';
    case Letter::A: return 'A';
    case Letter::b: return 'b';
    case Letter::B: return 'B';
    }
    return '?';
}

FreeWord::FreeWord(const std::vector<Letter>& letters) {
    letters_.reserve(letters.size());
    for (Letter l : letters)
        push(l);
}

void FreeWord::push(Letter l) {
    if (!letters_.empty() && letters_.back() == bsk::inverse(l))
        letters_.pop_back();
    else
        letters_.push_back(l);
}

FreeWord FreeWord::parse(std::string_view text) {
    FreeWord w;
    for (char c : text) {
        switch (c) {
        case 'a': w.push(Letter::a); break;
        case 'A': w.push(Letter::A); break;
        case 'b': w.push(Letter::b); break;
        case 'B': w.push(Letter::B); break;
        default:
            if (std::isspace(static_cast<unsigned char>(c)))
                break;
            throw SchemaError(std::string("invalid letter '") + c + "' in word (expected a, A, b, B)");
        }
    }
    return w;
}

FreeWord FreeWord::relator(GroupParam k) {
    FreeWord aba = FreeWord::parse("abA");
    return aba * FreeWord(Letter::b).power(-k.value());
}

FreeWord FreeWord::inverse() const {
    FreeWord w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back(bsk::inverse(*it));
    return w;
}

FreeWord FreeWord::power(std::int64_t n) const {
    FreeWord base = n < 0 ? inverse() : *this;
    std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    FreeWord result;
    for (std::uint64_t i = 0; i < e; ++i)
        result = result * base;
    return result;
}

FreeWord FreeWord::prefix(std::size_t n) const {
    FreeWord w;
    w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(std::min(n, letters_.size())));
    return w;
}

FreeWord operator*(const FreeWord& u, const FreeWord& v) {
    FreeWord w = u;
    w.letters_.reserve(u.length() + v.length());
    for (Letter l : v.letters_)
        w.push(l);
    return w;
}

std::strong_ordering operator<=>(const FreeWord& u, const FreeWord& v) {
    if (u.length() != v.length())
        return u.length() <=> v.length();
    for (std::size_t i = 0; i < u.length(); ++i) {
        auto x = static_cast<std::int8_t>(u.letters_[i]);
        auto y = static_cast<std::int8_t>(v.letters_[i]);
        if (x != y)
            return x <=> y;
    }
    return std::strong_ordering::equal;
}

std::string FreeWord::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (Letter l : letters_)
        s += to_char(l);
    return s;
}

BSElement eval_word(const FreeWord& w, GroupParam k) {
    const BSElement a = BSElement::gen_a(k);
    const BSElement b = BSElement::gen_b(k);
    const BSElement ai = invert(a, k);
    const BSElement bi = invert(b, k);
    BSElement g;
    for (Letter l : w.letters()) {
        switch (l) {
        case Letter::a: g = multiply(g, a, k); break;
        case Letter::A: g = multiply(g, ai, k); break;
        case Letter::b: g = multiply(g, b, k); break;
        case Letter::B: g = multiply(g, bi, k); break;
        }
    }
    return g;
}

} // namespace bsk
