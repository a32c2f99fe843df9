#include "agc/spec_file.hpp"

#include "agc/syntax.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <utility>

namespace agc
{

namespace
{

template < typename Decl >
const Decl& find_named( const std::vector< Decl >& decls, const std::string& name, const char* kind )
{
    for ( const auto& d : decls )
        if ( d.name == name )
            return d;
    throw semantic_error( std::string( "no " ) + kind + " named '" + name + "'" );
}

std::string where( const token& t )
{
    return std::to_string( t.line ) + ":" + std::to_string( t.column );
}

class spec_parser
{
    token_stream _tokens;
    std::optional< theory > _theory;
    std::map< std::string, std::string > _declared; // name -> "kind at line:col"
    spec_file _out{ theory::boolean(), {}, {}, {} };

    void declare( const token& name, const std::string& kind )
    {
        auto [ it, fresh ] = _declared.emplace( name.text, kind + " at " + where( name ) );
        if ( !fresh )
            throw semantic_error( where( name ) + ": duplicate name '" + name.text + "' (already declared as "
                                  + it->second + ")" );
    }

    const theory& require_theory( const token& at )
    {
        if ( !_theory )
            throw semantic_error( where( at ) + ": the theory block must come before '" + at.text + "'" );
        return *_theory;
    }

    std::string literal()
    {
        const token& t = _tokens.peek();
        if ( t.kind != token_kind::identifier && t.kind != token_kind::number )
            _tokens.fail( "expected a value literal" );
        return _tokens.next().text;
    }

    void theory_block( const token& keyword )
    {
        if ( _theory )
            throw semantic_error( where( keyword ) + ": a spec has exactly one theory block" );
        std::string name = "theory";
        if ( _tokens.peek().kind == token_kind::identifier )
            name = _tokens.next().text;
        _tokens.expect( token_kind::lbrace, "'{'" );
        const token& field = _tokens.expect( token_kind::identifier, "'values'" );
        if ( field.text != "values" )
            throw parse_error( "expected 'values', found '" + field.text + "'", field.line, field.column );
        _tokens.expect( token_kind::colon, "':'" );
        std::vector< std::string > values{ literal() };
        while ( _tokens.accept( token_kind::comma ) )
            values.push_back( literal() );
        _tokens.expect( token_kind::rbrace, "'}'" );
        try
        {
            _theory = theory( std::move( values ), std::move( name ) );
        }
        catch ( const invalid_argument& e )
        {
            throw semantic_error( where( keyword ) + ": " + e.what() );
        }
    }

    var_set over_clause( const std::string& owner )
    {
        const token& kw = _tokens.expect( token_kind::identifier, "'over'" );
        if ( kw.text != "over" )
            throw parse_error( "expected 'over', found '" + kw.text + "'", kw.line, kw.column );
        std::vector< std::string > vars;
        if ( _tokens.peek().kind != token_kind::lbrace )
        {
            vars.push_back( _tokens.expect( token_kind::identifier, "a variable" ).text );
            while ( _tokens.accept( token_kind::comma ) )
                vars.push_back( _tokens.expect( token_kind::identifier, "a variable" ).text );
        }
        try
        {
            return var_set( std::move( vars ) );
        }
        catch ( const invalid_argument& e )
        {
            throw semantic_error( owner + ": " + e.what() );
        }
    }

    formula formula_in( const std::string& owner, const var_set& vars )
    {
        try
        {
            return parse_formula( _tokens, *_theory, vars );
        }
        catch ( const unknown_variable& e )
        {
            throw unknown_variable( e.name(), owner + ", " + e.context() );
        }
        catch ( const unknown_literal& e )
        {
            throw unknown_literal( e.literal(), owner + ", " + e.context() );
        }
    }

    void field( const char* expected )
    {
        const token& t = _tokens.expect( token_kind::identifier, std::string( "'" ) + expected + "'" );
        if ( t.text != expected )
            throw parse_error( std::string( "expected '" ) + expected + "', found '" + t.text + "'", t.line, t.column );
        _tokens.expect( token_kind::colon, "':'" );
    }

    void contract_block( const token& keyword )
    {
        require_theory( keyword );
        const token name = _tokens.expect( token_kind::identifier, "a contract name" );
        declare( name, "contract" );
        const std::string owner = "contract '" + name.text + "'";
        const auto vars = over_clause( owner );
        _tokens.expect( token_kind::lbrace, "'{'" );
        field( "assume" );
        auto assume = formula_in( owner, vars );
        field( "guarantee" );
        auto guarantee = formula_in( owner, vars );
        _tokens.expect( token_kind::rbrace, "'}'" );
        contract_f cf( std::move( assume ), std::move( guarantee ) );
        auto value = c2c( cf );
        _out.contracts.push_back( { name.text, std::move( cf ), std::move( value ), name.line } );
    }

    void assertion_block( const token& keyword, std::vector< spec_assertion >& into )
    {
        require_theory( keyword );
        const token name = _tokens.expect( token_kind::identifier, "a name" );
        declare( name, keyword.text );
        const std::string owner = keyword.text + " '" + name.text + "'";
        const auto vars = over_clause( owner );
        _tokens.expect( token_kind::lbrace, "'{'" );
        auto body = formula_in( owner, vars );
        _tokens.expect( token_kind::rbrace, "'}'" );
        auto value = formula_to_assert( body );
        into.push_back( { name.text, std::move( body ), std::move( value ), name.line } );
    }

public:
    explicit spec_parser( std::string_view text ) : _tokens{ tokenize( text ) } {}

    spec_file run()
    {
        while ( !_tokens.at_end() )
        {
            const token keyword = _tokens.expect( token_kind::identifier, "a declaration" );
            if ( keyword.text == "theory" )
                theory_block( keyword );
            else if ( keyword.text == "contract" )
                contract_block( keyword );
            else if ( keyword.text == "component" )
                assertion_block( keyword, _out.components );
            else if ( keyword.text == "environment" )
                assertion_block( keyword, _out.environments );
            else
                throw parse_error( "expected 'theory', 'contract', 'component' or 'environment', found '" + keyword.text
                                           + "'",
                                   keyword.line, keyword.column );
        }
        if ( !_theory )
            throw semantic_error( "spec has no theory block" );
        _out.domain = *_theory;
        return std::move( _out );
    }
};

} // namespace

const spec_contract& spec_file::contract_named( const std::string& name ) const
{
    return find_named( contracts, name, "contract" );
}

const spec_assertion& spec_file::component_named( const std::string& name ) const
{
    return find_named( components, name, "component" );
}

const spec_assertion& spec_file::environment_named( const std::string& name ) const
{
    return find_named( environments, name, "environment" );
}

spec_file parse_spec( std::string_view text )
{
    return spec_parser( text ).run();
}

spec_file load_spec( const std::string& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw io_error( "cannot open '" + path + "'" );
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if ( in.bad() )
        throw io_error( "cannot read '" + path + "'" );
    return parse_spec( buffer.str() );
}

} // namespace agc
