#include "bsk/groupring.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "bsk/errors.hpp"

namespace bsk {

namespace {

template <class Map>
void accumulate(Map& terms, const typename Map::key_type& key, const Integer& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

void require_same(GroupParam p, GroupParam q) {
    if (p != q)
        throw ParameterError("group ring elements over B(" + std::to_string(p.value()) + ") and B(" +
                             std::to_string(q.value()) + ")");
}

} // namespace

GroupRingElt::GroupRingElt(GroupParam k, const Integer& c) : k_(k) {
    accumulate(terms_, BSElement::identity(), c);
}

GroupRingElt GroupRingElt::basis(GroupParam k, const BSElement& g, const Integer& c) {
    GroupRingElt p(k);
    accumulate(p.terms_, g, c);
    return p;
}

Integer GroupRingElt::coefficient(const BSElement& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Integer(0) : it->second;
}

void GroupRingElt::add_term(const BSElement& g, const Integer& c) { accumulate(terms_, g, c); }

GroupRingElt& GroupRingElt::operator+=(const GroupRingElt& q) {
    require_same(k_, q.k_);
    for (const auto& [g, c] : q.terms_)
        accumulate(terms_, g, c);
    return *this;
}

GroupRingElt& GroupRingElt::operator-=(const GroupRingElt& q) {
    require_same(k_, q.k_);
    for (const auto& [g, c] : q.terms_)
        accumulate(terms_, g, Integer(-c));
    return *this;
}

GroupRingElt& GroupRingElt::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [g, coeff] : terms_)
        coeff *= c;
    return *this;
}

GroupRingElt operator*(const GroupRingElt& p, const GroupRingElt& q) {
    require_same(p.k_, q.k_);
    GroupRingElt r(p.k_);
    for (const auto& [g, c] : p.terms_)
        for (const auto& [h, d] : q.terms_)
            accumulate(r.terms_, multiply(g, h, p.k_), Integer(c * d));
    return r;
}

GroupRingElt involute(const GroupRingElt& p) {
    GroupRingElt r(p.param());
    for (const auto& [g, c] : p.terms())
        r.add_term(invert(g, p.param()), c);
    return r;
}

Integer augment(const GroupRingElt& p) {
    Integer s = 0;
    for (const auto& [g, c] : p.terms())
        s += c;
    return s;
}

Integer identity_coefficient(const GroupRingElt& p) { return p.coefficient(BSElement::identity()); }

GroupRingElt reduce_mod2(const GroupRingElt& p) {
    GroupRingElt r(p.param());
    for (const auto& [g, c] : p.terms())
        if (mpz_odd_p(c.get_mpz_t()))
            r.add_term(g, 1);
    return r;
}

std::optional<TrivialUnit> as_trivial_unit(const GroupRingElt& p) {
    if (p.support_size() != 1)
        return std::nullopt;
    const auto& [g, c] = *p.terms().begin();
    if (c == 1)
        return TrivialUnit{1, g};
    if (c == -1)
        return TrivialUnit{-1, g};
    return std::nullopt;
}

GroupRingElt inverse_of(const TrivialUnit& u, GroupParam k) {
    return GroupRingElt::basis(k, invert(u.element, k), u.sign);
}

FreeRingElt::FreeRingElt(const Integer& c) { accumulate(terms_, FreeWord(), c); }

FreeRingElt FreeRingElt::word(const FreeWord& w, const Integer& c) {
    FreeRingElt p;
    accumulate(p.terms_, w, c);
    return p;
}

void FreeRingElt::add_term(const FreeWord& w, const Integer& c) { accumulate(terms_, w, c); }

FreeRingElt& FreeRingElt::operator+=(const FreeRingElt& q) {
    for (const auto& [w, c] : q.terms_)
        accumulate(terms_, w, c);
    return *this;
}

FreeRingElt& FreeRingElt::operator-=(const FreeRingElt& q) {
    for (const auto& [w, c] : q.terms_)
        accumulate(terms_, w, Integer(-c));
    return *this;
}

FreeRingElt& FreeRingElt::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_)
        coeff *= c;
    return *this;
}

FreeRingElt operator*(const FreeRingElt& p, const FreeRingElt& q) {
    FreeRingElt r;
    for (const auto& [u, c] : p.terms_)
        for (const auto& [v, d] : q.terms_)
            accumulate(r.terms_, u * v, Integer(c * d));
    return r;
}

FreeRingElt geometric_series(Generator x, std::int64_t n) {
    const FreeWord gen = FreeWord::generator(x);
    FreeRingElt r;
    if (n > 0) {
        for (std::int64_t i = 0; i < n; ++i)
            r.add_term(gen.power(i), 1);
    } else {
        for (std::int64_t i = -1; i >= n; --i)
            r.add_term(gen.power(i), -1);
    }
    return r;
}

GroupRingElt project(const FreeRingElt& p, GroupParam k) {
    GroupRingElt r(k);
    for (const auto& [w, c] : p.terms())
        r.add_term(eval_word(w, k), c);
    return r;
}

// ---------------------------------------------------------------------------
// Human syntax

namespace {

using Monomial = std::vector<std::pair<Letter, Integer>>;

struct GroupRingBuilder {
    GroupParam k;
    GroupRingElt constant(const Integer& c) const { return GroupRingElt(k, c); }
    GroupRingElt monomial(const Monomial& m) const {
        BSElement g;
        for (const auto& [l, e] : m) {
            Integer exp = is_positive(l) ? e : Integer(-e);
            BSElement piece = generator_of(l) == Generator::a ? BSElement::make(0, 0, exp, k)
                                                                : BSElement::make(exp, 0, 0, k);
            g = multiply(g, piece, k);
        }
        return GroupRingElt::basis(k, g);
    }
};

struct FreeRingBuilder {
    static constexpr long max_exponent = 1'000'000;
    FreeRingElt constant(const Integer& c) const { return FreeRingElt(c); }
    FreeRingElt monomial(const Monomial& m) const {
        FreeWord w;
        for (const auto& [l, e] : m) {
            if (abs(e) > max_exponent)
                throw SchemaError("exponent too large for a free word");
            w = w * FreeWord(l).power(e.get_si());
        }
        return FreeRingElt::word(w);
    }
};

template <class Builder>
class Parser {
public:
    using Ring = decltype(std::declval<Builder>().constant(Integer(0)));

    Parser(std::string_view text, Builder builder) : text_(text), builder_(std::move(builder)) {}

    Ring parse() {
        Ring r = expression();
        skip();
        if (pos_ != text_.size())
            fail("unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw SchemaError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    Ring expression() {
        bool negative = false;
        if (peek('+') || peek('-'))
            negative = text_[pos_++] == '-';
        Ring r = term();
        if (negative)
            r = -r;
        while (peek('+') || peek('-')) {
            bool minus = text_[pos_++] == '-';
            Ring t = term();
            if (minus)
                r -= t;
            else
                r += t;
        }
        return r;
    }

    Ring term() {
        Ring r = factor();
        while (peek('*')) {
            ++pos_;
            r = r * factor();
        }
        return r;
    }

    Integer signed_integer() {
        skip();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
            ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == digits)
            fail("expected integer");
        std::string s(text_.substr(start, pos_ - start));
        if (s[0] == '+')
            s.erase(0, 1);
        return Integer(s);
    }

    Integer exponent() {
        if (peek('(')) {
            ++pos_;
            Integer e = signed_integer();
            if (!peek(')'))
                fail("expected ')'");
            ++pos_;
            return e;
        }
        return signed_integer();
    }

    Ring factor() {
        skip();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Ring r = expression();
            if (!peek(')'))
                fail("expected ')'");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return builder_.constant(signed_integer());
        Monomial m;
        while (pos_ < text_.size()) {
            c = text_[pos_];
            Letter l;
            if (c == 'a') l = Letter::a;
            else if (c == 'A') l = Letter::A;
            else if (c == 'b') l = Letter::b;
            else if (c == 'B') l = Letter::B;
            else break;
            ++pos_;
            Integer e = 1;
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                e = exponent();
            }
            m.emplace_back(l, e);
        }
        if (m.empty())
            fail("expected integer, word or '('");
        return builder_.monomial(m);
    }

    std::string_view text_;
    Builder builder_;
    std::size_t pos_ = 0;
};

template <class Terms, class KeyPrinter>
std::string render(const Terms& terms, KeyPrinter key) {
    if (terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [g, c] : terms) {
        std::string word = key(g);
        Integer mag = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (word == "1")
            out += mag.get_str();
        else if (mag == 1)
            out += word;
        else
            out += mag.get_str() + "*" + word;
    }
    return out;
}

} // namespace

GroupRingElt parse_ring(std::string_view text, GroupParam k) {
    return Parser<GroupRingBuilder>(text, GroupRingBuilder{k}).parse();
}

FreeRingElt parse_free_ring(std::string_view text) { return Parser<FreeRingBuilder>(text, FreeRingBuilder{}).parse(); }

std::string to_string(const GroupRingElt& p) {
    return render(p.terms(), [&](const BSElement& g) { return to_string(g, p.param()); });
}

std::string to_string(const FreeRingElt& p) {
    return render(p.terms(), [](const FreeWord& w) { return w.empty() ? std::string("1") : w.str(); });
}

} // namespace bsk
