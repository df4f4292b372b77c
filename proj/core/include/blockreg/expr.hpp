#pragma once

#include <string>

#include "blockreg/sheaf.hpp"

namespace blockreg {

// A syntax error with 1-based position information into the offending text.
class ParseError : public Error {
public:
    ParseError(std::string message, int column, std::string near)
        : Error("parse error at column " + std::to_string(column) + ": " + message
                + (near.empty() ? "" : " (near '" + near + "')")),
          column_(column), near_(std::move(near))
    {
    }

    int column() const { return column_; }
    const std::string& near() const { return near_; }

private:
    int column_;
    std::string near_;
};

// "P2xP1" -> Space({2, 1})
Space parse_space(const std::string& text);

// EXPR  := '0' | TERM ('+' TERM)*
// TERM  := [UINT '*'] PROD
// PROD  := ATOM ('#' ATOM)*          (factors must add up to the space arity)
// ATOM  := 'O' '(' INT {',' INT} ')' | 'Om' '(' INT ',' INT ')'
//        | 'LT' '(' INT ',' INT ')'
// O with several arguments is the line-bundle shorthand; Om(p,k) is a twisted
// differential power and LT(p,k) a twisted tangent wedge, normalized at parse.
SplitSheaf parse_sheaf(const std::string& text, const Space& space);

// "(a1,...,ar)" or "a1,...,ar"
MultiDegree parse_multidegree(const std::string& text, const Space& space);

} // namespace blockreg
