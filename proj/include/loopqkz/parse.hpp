#pragma once

#include "loopqkz/laurent.hpp"

#include <cctype>
#include <map>
#include <string>
#include <string_view>

namespace loopqkz {

/// Parses expressions such as "(z1*z2^-1 - q^-2)*(z2 - q^-1*z1^-1)".
/// Supports + - * ^ (integer exponents), parentheses, integer literals and
/// division by units (constants and monomials). Names resolve first through
/// `aliases`, then through the universe.
template <class C>
class LaurentParser {
public:
    using Poly = MultiLaurent<C>;

    LaurentParser(UniversePtr universe, std::map<std::string, Poly> aliases = {})
        : universe_(std::move(universe)), aliases_(std::move(aliases))
    {
    }

    Poly parse(std::string_view text)
    {
        text_ = text;
        pos_ = 0;
        Poly p = expr();
        skip();
        if (pos_ != text_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("parse error at " + std::to_string(pos_) + ": " + what);
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr()
    {
        Poly acc = term();
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly term()
    {
        Poly acc = unary();
        for (;;) {
            if (eat('*'))
                acc *= unary();
            else if (eat('/'))
                acc = acc.divide_exact(unary());
            else
                return acc;
        }
    }

    Poly unary()
    {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return powered();
    }

    int exponent()
    {
        bool neg = false;
        bool paren = eat('(');
        if (eat('-')) neg = true;
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
        if (paren && !eat(')')) fail("expected )");
        return neg ? -e : e;
    }

    Poly powered()
    {
        Poly base = atom();
        if (eat('^')) return power(base, exponent());
        return base;
    }

    Poly atom()
    {
        skip();
        if (eat('(')) {
            Poly p = expr();
            if (!eat(')')) fail("expected )");
            return p;
        }
        if (pos_ >= text_.size()) fail("unexpected end");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            BigRational v(std::string(text_.substr(start, pos_ - start)), 10);
            return Poly::constant(universe_, C(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (auto it = aliases_.find(name); it != aliases_.end()) return it->second;
            if (!universe_->find(name)) fail("unknown name " + name);
            return Poly::variable(universe_, name);
        }
        fail(std::string("unexpected character ") + c);
    }

    UniversePtr universe_;
    std::map<std::string, Poly> aliases_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

template <class C>
MultiLaurent<C> parse_laurent(std::string_view text, const UniversePtr& universe,
                              const std::map<std::string, MultiLaurent<C>>& aliases = {})
{
    return LaurentParser<C>(universe, aliases).parse(text);
}

}  // namespace loopqkz
