#include "agc/query.hpp"

#include "agc/alphabet.hpp"

#include <sstream>

namespace agc
{

int query_result::exit_code() const
{
    return verdict && !*verdict ? 1 : 0;
}

namespace
{

std::string join( const std::vector< std::string >& words, const std::string& sep )
{
    std::string out;
    for ( std::size_t i = 0; i < words.size(); ++i )
        out += ( i ? sep : "" ) + words[ i ];
    return out;
}

class command_reader
{
    const std::vector< std::string >& _words;
    std::size_t _pos = 0;

public:
    explicit command_reader( const std::vector< std::string >& words ) : _words{ words } {}

    std::string word( const char* what )
    {
        if ( _pos >= _words.size() || _words[ _pos ].rfind( "--", 0 ) == 0 )
            throw invalid_argument( std::string( "missing " ) + what );
        return _words[ _pos++ ];
    }

    // Everything after flag, read as one comma-separated list.
    std::optional< var_set > var_list( const char* flag )
    {
        if ( _pos >= _words.size() )
            return std::nullopt;
        if ( _words[ _pos ] != flag )
            throw invalid_argument( "unexpected '" + _words[ _pos ] + "'" );
        ++_pos;
        std::vector< std::string > vars;
        for ( ; _pos < _words.size(); ++_pos )
        {
            std::string item;
            for ( char ch : _words[ _pos ] + "," )
            {
                if ( ch == ',' )
                {
                    if ( !item.empty() )
                        vars.push_back( item );
                    item.clear();
                }
                else if ( ch != ' ' )
                    item += ch;
            }
        }
        return var_set( std::move( vars ) );
    }

    void finish()
    {
        if ( _pos < _words.size() )
            throw invalid_argument( "unexpected '" + _words[ _pos ] + "'" );
    }
};

query_result constructed( std::string query, contract c )
{
    query_result r;
    r.query = std::move( query );
    if ( !is_implementable( c ) )
        r.diagnostics.push_back( "unimplementable: the saturated guarantee is empty" );
    r.result = std::move( c );
    return r;
}

query_result decided( std::string query, bool verdict )
{
    query_result r;
    r.query = std::move( query );
    r.verdict = verdict;
    return r;
}

query_result run_check( const spec_file& spec, command_reader& in, std::string query )
{
    const auto what = in.word( "check kind" );
    if ( what == "refine" || what == "equiv" )
    {
        const auto& c1 = spec.contract_named( in.word( "first contract" ) ).value;
        const auto& c2 = spec.contract_named( in.word( "second contract" ) ).value;
        in.finish();
        return decided( std::move( query ), what == "refine" ? refines( c1, c2 ) : equiv( c1, c2 ) );
    }
    if ( what == "implements" )
    {
        const auto& sigma = spec.component_named( in.word( "component" ) ).value;
        const auto& c = spec.contract_named( in.word( "contract" ) ).value;
        in.finish();
        return decided( std::move( query ), implements( sigma, c ) );
    }
    if ( what == "provides" )
    {
        const auto& e = spec.environment_named( in.word( "environment" ) ).value;
        const auto& c = spec.contract_named( in.word( "contract" ) ).value;
        in.finish();
        return decided( std::move( query ), provides( e, c ) );
    }
    if ( what == "implementable" )
    {
        const auto& c = spec.contract_named( in.word( "contract" ) ).value;
        in.finish();
        return decided( std::move( query ), is_implementable( c ) );
    }
    throw invalid_argument( "unknown check '" + what + "' (expected refine, equiv, implements, provides or implementable)" );
}

nlohmann::json assertion_json( const assertion& a )
{
    return { { "formula", to_string( assertion_to_formula( a ) ) }, { "states", a.indices() } };
}

} // namespace

query_result run_command( const spec_file& spec, const std::vector< std::string >& words )
{
    command_reader in( words );
    const std::string query = join( words, " " );
    const auto verb = in.word( "command" );

    if ( verb == "check" )
        return run_check( spec, in, query );
    if ( verb == "saturate" )
    {
        const auto& c = spec.contract_named( in.word( "contract" ) ).value;
        in.finish();
        return constructed( query, saturate( c ) );
    }
    if ( verb == "compose" || verb == "conjoin" )
    {
        const auto& c1 = spec.contract_named( in.word( "first contract" ) ).value;
        const auto& c2 = spec.contract_named( in.word( "second contract" ) ).value;
        if ( verb == "conjoin" )
        {
            in.finish();
            return constructed( query, conjoin( c1, c2 ) );
        }
        auto over = in.var_list( "--over" );
        in.finish();
        if ( !over && c1.vars() == c2.vars() )
            return constructed( query, compose( c1, c2 ) );
        return constructed( query, extended_compose( c1, c2, over ) );
    }
    if ( verb == "eliminate" )
    {
        const auto& c = spec.contract_named( in.word( "contract" ) ).value;
        auto vars = in.var_list( "--var" );
        in.finish();
        if ( !vars )
            throw invalid_argument( "eliminate needs --var" );
        return constructed( query, eliminate_variables( c, *vars ) );
    }
    if ( verb == "extend" )
    {
        const auto& c = spec.contract_named( in.word( "contract" ) ).value;
        auto target = in.var_list( "--to" );
        in.finish();
        if ( !target )
            throw invalid_argument( "extend needs --to" );
        return constructed( query, extend_contract( c, inclusion( c.vars(), *target ) ) );
    }
    throw invalid_argument( "unknown command '" + verb + "'" );
}

std::string render_contract( const contract& c, const std::string& name )
{
    std::ostringstream out;
    out << "# assume states: " << c.assume().to_string() << "\n";
    out << "# guarantee states: " << c.guarantee().to_string() << "\n";
    out << "contract " << name << " over " << join( c.vars().vars(), ", " ) << ( c.vars().empty() ? "{\n" : " {\n" );
    out << "  assume: " << to_string( assertion_to_formula( c.assume() ) ) << "\n";
    out << "  guarantee: " << to_string( assertion_to_formula( c.guarantee() ) ) << "\n";
    out << "}\n";
    return out.str();
}

std::string render_text( const query_result& r )
{
    std::ostringstream out;
    out << "# " << r.query << "\n";
    if ( r.verdict )
        out << ( *r.verdict ? "true" : "false" ) << "\n";
    if ( r.result )
        out << render_contract( *r.result );
    return out.str();
}

nlohmann::json render_json( const query_result& r )
{
    nlohmann::json j = { { "query", r.query }, { "diagnostics", r.diagnostics } };
    if ( r.verdict )
        j[ "verdict" ] = *r.verdict;
    if ( r.result )
        j[ "result" ] = { { "vars", r.result->vars().vars() },
                          { "assume", assertion_json( r.result->assume() ) },
                          { "guarantee", assertion_json( r.result->guarantee() ) } };
    return j;
}

} // namespace agc
