#include "agc/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace agc
{

std::string describe( token_kind kind )
{
    switch ( kind )
    {
    case token_kind::identifier: return "identifier";
    case token_kind::number: return "number";
    case token_kind::lparen: return "'('";
    case token_kind::rparen: return "')'";
    case token_kind::lbrace: return "'{'";
    case token_kind::rbrace: return "'}'";
    case token_kind::comma: return "','";
    case token_kind::colon: return "':'";
    case token_kind::equals: return "'='";
    case token_kind::bang: return "'!'";
    case token_kind::amp: return "'&'";
    case token_kind::bar: return "'|'";
    case token_kind::arrow: return "'->'";
    case token_kind::end: return "end of input";
    }
    return "token";
}

std::vector< token > tokenize( std::string_view text )
{
    std::vector< token > out;
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t i = 0;

    auto advance = [ & ]( std::size_t n ) {
        for ( std::size_t k = 0; k < n; ++k, ++i )
        {
            if ( text[ i ] == '\n' )
            {
                ++line;
                column = 1;
            }
            else
                ++column;
        }
    };
    auto is_ident_char = []( char c ) {
        return std::isalnum( static_cast< unsigned char >( c ) ) || c == '_' || c == '\'' || c == '.';
    };

    while ( i < text.size() )
    {
        const char c = text[ i ];
        if ( std::isspace( static_cast< unsigned char >( c ) ) )
        {
            advance( 1 );
            continue;
        }
        if ( c == '#' )
        {
            while ( i < text.size() && text[ i ] != '\n' )
                advance( 1 );
            continue;
        }

        const std::size_t start_line = line;
        const std::size_t start_column = column;
        auto single = [ & ]( token_kind kind ) {
            out.push_back( { kind, std::string( 1, c ), start_line, start_column } );
            advance( 1 );
        };

        if ( std::isalpha( static_cast< unsigned char >( c ) ) || c == '_' )
        {
            std::size_t j = i;
            while ( j < text.size() && is_ident_char( text[ j ] ) )
                ++j;
            out.push_back( { token_kind::identifier, std::string( text.substr( i, j - i ) ), start_line, start_column } );
            advance( j - i );
        }
        else if ( std::isdigit( static_cast< unsigned char >( c ) ) )
        {
            std::size_t j = i;
            while ( j < text.size() && is_ident_char( text[ j ] ) )
                ++j;
            out.push_back( { token_kind::number, std::string( text.substr( i, j - i ) ), start_line, start_column } );
            advance( j - i );
        }
        else if ( c == '-' && i + 1 < text.size() && text[ i + 1 ] == '>' )
        {
            out.push_back( { token_kind::arrow, "->", start_line, start_column } );
            advance( 2 );
        }
        else
        {
            switch ( c )
            {
            case '(': single( token_kind::lparen ); break;
            case ')': single( token_kind::rparen ); break;
            case '{': single( token_kind::lbrace ); break;
            case '}': single( token_kind::rbrace ); break;
            case ',': single( token_kind::comma ); break;
            case ':': single( token_kind::colon ); break;
            case '=': single( token_kind::equals ); break;
            case '!': single( token_kind::bang ); break;
            case '&': single( token_kind::amp ); break;
            case '|': single( token_kind::bar ); break;
            default:
                throw parse_error( std::string( "unexpected character '" ) + c + "'", start_line, start_column );
            }
        }
    }
    out.push_back( { token_kind::end, "", line, column } );
    return out;
}

token_stream::token_stream( std::vector< token > tokens ) : _tokens{ std::move( tokens ) }
{
    if ( _tokens.empty() || _tokens.back().kind != token_kind::end )
        _tokens.push_back( { token_kind::end, "", 1, 1 } );
}

const token& token_stream::peek( std::size_t ahead ) const
{
    return _tokens[ std::min( _pos + ahead, _tokens.size() - 1 ) ];
}

const token& token_stream::next()
{
    const token& t = _tokens[ _pos ];
    if ( _pos + 1 < _tokens.size() )
        ++_pos;
    return t;
}

bool token_stream::accept( token_kind kind )
{
    if ( peek().kind != kind )
        return false;
    next();
    return true;
}

const token& token_stream::expect( token_kind kind, const std::string& what )
{
    if ( peek().kind != kind )
    {
        const auto& t = peek();
        fail( "expected " + what + ", found " + ( t.kind == token_kind::end ? describe( t.kind ) : "'" + t.text + "'" ) );
    }
    return next();
}

void token_stream::fail( const std::string& message ) const
{
    throw parse_error( message, peek().line, peek().column );
}

namespace
{

class formula_parser
{
    token_stream& _tokens;
    const theory& _theory;
    const var_set& _vars;

    static std::string where( const token& t )
    {
        return "formula at " + std::to_string( t.line ) + ":" + std::to_string( t.column );
    }

    formula primary()
    {
        const token& t = _tokens.peek();
        if ( t.kind == token_kind::lparen )
        {
            _tokens.next();
            auto inner = implication();
            _tokens.expect( token_kind::rparen, "')'" );
            return inner;
        }
        if ( t.kind != token_kind::identifier )
            _tokens.fail( "expected a formula, found "
                          + ( t.kind == token_kind::end ? describe( t.kind ) : "'" + t.text + "'" ) );

        const token var = _tokens.next();
        if ( var.text == "true" )
            return formula::truth( _theory, _vars );
        if ( var.text == "false" )
            return formula::falsity( _theory, _vars );
        if ( !_vars.contains( var.text ) )
            throw unknown_variable( var.text, where( var ) + " over " + _vars.to_string() );

        if ( _tokens.accept( token_kind::equals ) )
        {
            const token& lit = _tokens.peek();
            if ( lit.kind != token_kind::identifier && lit.kind != token_kind::number )
                _tokens.fail( "expected a value literal after '='" );
            const token value = _tokens.next();
            auto index = _theory.value_index( value.text );
            if ( !index )
                throw unknown_literal( value.text, where( value ) );
            return formula::atom( _theory, _vars, var.text, static_cast< std::uint32_t >( *index ) );
        }
        if ( _theory.size() != 2 )
            throw parse_error( "bare variable '" + var.text + "' needs a two-valued domain; write '" + var.text
                                       + " = <value>'",
                               var.line, var.column );
        return formula::atom( _theory, _vars, var.text, 1 );
    }

    formula unary()
    {
        if ( _tokens.accept( token_kind::bang ) )
            return f_not( unary() );
        return primary();
    }

    formula conjunction()
    {
        auto left = unary();
        while ( _tokens.accept( token_kind::amp ) )
            left = f_and( left, unary() );
        return left;
    }

    formula disjunction()
    {
        auto left = conjunction();
        while ( _tokens.accept( token_kind::bar ) )
            left = f_or( left, conjunction() );
        return left;
    }

public:
    formula_parser( token_stream& tokens, const theory& th, const var_set& vars )
            : _tokens{ tokens }, _theory{ th }, _vars{ vars }
    {
    }

    formula implication()
    {
        auto left = disjunction();
        if ( _tokens.accept( token_kind::arrow ) )
            return f_implies( left, implication() );
        return left;
    }
};

} // namespace

formula parse_formula( token_stream& tokens, const theory& th, const var_set& vars )
{
    return formula_parser( tokens, th, vars ).implication();
}

formula parse_formula( std::string_view text, const theory& th, const var_set& vars )
{
    token_stream tokens( tokenize( text ) );
    auto f = parse_formula( tokens, th, vars );
    if ( !tokens.at_end() )
        tokens.fail( "unexpected '" + tokens.peek().text + "' after formula" );
    return f;
}

} // namespace agc
