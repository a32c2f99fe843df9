#pragma once

#include "agc/formula.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace agc
{

enum class token_kind
{
    identifier,
    number,
    lparen,
    rparen,
    lbrace,
    rbrace,
    comma,
    colon,
    equals,
    bang,
    amp,
    bar,
    arrow,
    end
};

struct token
{
    token_kind kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

[[nodiscard]] std::string describe( token_kind kind );

// Splits text into tokens; `#` starts a comment running to the end of the
// line. The result always ends with an `end` token.
[[nodiscard]] std::vector< token > tokenize( std::string_view text );

class token_stream
{
    std::vector< token > _tokens;
    std::size_t _pos = 0;

public:
    explicit token_stream( std::vector< token > tokens );

    [[nodiscard]] const token& peek( std::size_t ahead = 0 ) const;
    const token& next();
    bool accept( token_kind kind );
    const token& expect( token_kind kind, const std::string& what );
    [[noreturn]] void fail( const std::string& message ) const;
    [[nodiscard]] bool at_end() const { return peek().kind == token_kind::end; }
};

// Parses one formula from the stream, stopping at the first token that
// cannot continue it.
[[nodiscard]] formula parse_formula( token_stream& tokens, const theory& th, const var_set& vars );

} // namespace agc
