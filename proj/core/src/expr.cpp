#include "blockreg/expr.hpp"

#include <cctype>

namespace blockreg {

namespace {

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end()
    {
        skip_space();
        return pos_ >= text_.size();
    }

    int column() const { return static_cast<int>(pos_) + 1; }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    void expect(char c, const std::string& what)
    {
        if (!accept(c))
            fail("expected '" + std::string(1, c) + "' " + what);
    }

    // A word of letters: O, Om, LT.
    std::string word()
    {
        skip_space();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    long long integer(bool allow_sign)
    {
        skip_space();
        size_t start = pos_;
        if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
            ++pos_;
        size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected an integer");
        }
        if (pos_ - start > 12) {
            pos_ = start;
            fail("integer literal too large");
        }
        return std::stoll(text_.substr(start, pos_ - start));
    }

    [[noreturn]] void fail(const std::string& message)
    {
        skip_space();
        std::string near;
        size_t i = pos_;
        while (i < text_.size() && near.size() < 8 && !std::isspace(static_cast<unsigned char>(text_[i])))
            near += text_[i++];
        throw ParseError(message, column(), near);
    }

private:
    const std::string& text_;
    size_t pos_ = 0;
};

} // namespace

Space parse_space(const std::string& text)
{
    Lexer lex(text);
    std::vector<int> dims;
    for (;;) {
        if (!lex.accept('P'))
            lex.fail("expected 'P<dim>'");
        long long n = lex.integer(false);
        if (n < 1)
            lex.fail("factor dimension must be at least 1");
        if (n > 64)
            lex.fail("factor dimension too large");
        dims.push_back(static_cast<int>(n));
        if (lex.at_end())
            break;
        if (!lex.accept('x'))
            lex.fail("expected 'x' between factors");
    }
    return Space(dims);
}

namespace {

// Appends the factors of one atom; several for the O(a1,...,ar) shorthand.
void parse_atom(Lexer& lex, const Space& space, std::vector<FactorSheaf>& factors)
{
    int col = lex.column();
    std::string head = lex.word();
    auto dim_at = [&](size_t index) {
        if (index >= space.dims().size())
            lex.fail("too many factors for " + space.name());
        return space.dims()[index];
    };

    if (head == "O") {
        lex.expect('(', "after 'O'");
        for (;;) {
            long long k = lex.integer(true);
            factors.emplace_back(dim_at(factors.size()), 0, static_cast<int>(k));
            if (lex.accept(')'))
                break;
            lex.expect(',', "or ')' in 'O(...)'");
        }
        return;
    }
    if (head == "Om" || head == "LT") {
        lex.expect('(', "after '" + head + "'");
        long long p = lex.integer(true);
        lex.expect(',', "between the two arguments of '" + head + "'");
        long long k = lex.integer(true);
        lex.expect(')', "closing '" + head + "(...)'");
        int n = dim_at(factors.size());
        if (p < 0 || p > n)
            throw ParseError("power " + std::to_string(p) + " out of range [0, "
                             + std::to_string(n) + "] on P" + std::to_string(n),
                             col, head);
        if (head == "Om")
            factors.emplace_back(n, static_cast<int>(p), static_cast<int>(k));
        else
            factors.push_back(wedge_tangent(n, static_cast<int>(p), static_cast<int>(k)));
        return;
    }
    lex.fail(head.empty() ? "expected a sheaf atom (O, Om, or LT)"
                          : "unknown atom '" + head + "'");
}

BoxProduct parse_prod(Lexer& lex, const Space& space)
{
    int col = lex.column();
    std::vector<FactorSheaf> factors;
    parse_atom(lex, space, factors);
    while (lex.accept('#'))
        parse_atom(lex, space, factors);
    if (static_cast<int>(factors.size()) != space.factors())
        throw ParseError("product has " + std::to_string(factors.size()) + " factor(s), "
                         + space.name() + " needs " + std::to_string(space.factors()),
                         col, "");
    return BoxProduct(std::move(factors));
}

} // namespace

SplitSheaf parse_sheaf(const std::string& text, const Space& space)
{
    Lexer lex(text);
    SplitSheaf sheaf;

    if (lex.peek() == '0') {
        lex.accept('0');
        if (!lex.at_end())
            lex.fail("'0' must stand alone");
        return sheaf;
    }

    for (;;) {
        Int mult = 1;
        if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
            int col = lex.column();
            mult = lex.integer(false);
            if (mult == 0)
                throw ParseError("multiplicity must be positive", col, "0");
            lex.expect('*', "after a multiplicity");
        }
        sheaf.add(mult, parse_prod(lex, space));
        if (lex.at_end())
            break;
        lex.expect('+', "between summands");
    }
    return sheaf;
}

MultiDegree parse_multidegree(const std::string& text, const Space& space)
{
    Lexer lex(text);
    bool parens = lex.accept('(');
    MultiDegree d;
    for (;;) {
        d.a.push_back(static_cast<int>(lex.integer(true)));
        if (!lex.accept(','))
            break;
    }
    if (parens)
        lex.expect(')', "closing the degree vector");
    if (!lex.at_end())
        lex.fail("unexpected trailing text");
    if (d.size() != space.factors())
        throw ParseError("degree vector has " + std::to_string(d.size()) + " entries, "
                         + space.name() + " needs " + std::to_string(space.factors()),
                         1, text);
    return d;
}

} // namespace blockreg
