// agc: run contract queries against a spec file, or the conformance oracle.
//
//   agc query <spec> <command...> [--json]
//   agc oracle [--seed N] [--trials N] [--exhaustive-cap N] [--randomized-cap N]
//              [--theorem NAME]... [--mutant NAME] [--json]
//
// Exit status: 0 true / success, 1 false / an asserted theorem failed,
// 2 usage or input error.

#include "agc/oracle.hpp"
#include "agc/query.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace
{

constexpr int exit_error = 2;

int run_query( const std::string& path, const std::vector< std::string >& words, bool as_json )
{
    const auto spec = agc::load_spec( path );
    const auto result = agc::run_command( spec, words );
    if ( as_json )
        std::cout << agc::render_json( result ).dump( 2 ) << "\n";
    else
    {
        std::cout << agc::render_text( result );
        for ( const auto& d : result.diagnostics )
            std::cerr << "warning: " << d << "\n";
    }
    return result.exit_code();
}

int run_oracle( const agc::oracle::oracle_config& config, const std::vector< std::string >& theorems,
                const std::string& mutant, bool as_json )
{
    namespace o = agc::oracle;
    o::validate( config );
    auto ops = o::operator_set::standard();
    if ( !mutant.empty() )
    {
        auto m = o::mutation_from_name( mutant );
        if ( !m )
            throw agc::invalid_argument( "unknown mutant '" + mutant + "'" );
        ops = o::mutated( *m );
    }

    std::vector< o::check_report > reports;
    if ( theorems.empty() )
        reports = o::run_all( config, ops );
    else
        for ( const auto& name : theorems )
        {
            if ( !o::is_known_theorem( name ) )
                throw agc::invalid_argument( "unknown theorem '" + name + "'" );
            for ( auto& r : o::check_theorem( name, config, ops ) )
                reports.push_back( std::move( r ) );
        }

    if ( as_json )
        std::cout << o::to_json( reports ).dump( 2 ) << "\n";
    else
        std::cout << o::format_table( reports );
    return o::all_asserted_pass( reports ) ? 0 : 1;
}

} // namespace

int main( int argc, char** argv )
{
    CLI::App app{ "Assume/guarantee contract algebra over finite theories" };
    app.require_subcommand( 1 );

    std::string spec_path;
    std::vector< std::string > words;
    bool query_json = false;
    auto* query = app.add_subcommand( "query", "Run one command against a spec file" );
    query->add_option( "spec", spec_path, "Spec file" )->required();
    query->add_flag( "--json", query_json, "Emit JSON" );
    // Command words carry their own flags (--over, --var, --to).
    query->allow_extras();

    agc::oracle::oracle_config config;
    std::vector< std::string > theorems;
    std::string mutant;
    bool oracle_json = false;
    auto* oracle = app.add_subcommand( "oracle", "Check every theorem against the operators" );
    oracle->add_option( "--seed", config.seed, "Random seed" );
    oracle->add_option( "--trials", config.trials, "Randomized trials per theorem" )->check( CLI::PositiveNumber );
    oracle->add_option( "--exhaustive-cap", config.exhaustive_cap, "Largest state space swept exhaustively" )
            ->check( CLI::PositiveNumber );
    oracle->add_option( "--randomized-cap", config.randomized_cap, "Largest state space sampled" )
            ->check( CLI::PositiveNumber );
    oracle->add_option( "--theorem", theorems, "Only these theorems" );
    oracle->add_option( "--mutant", mutant, "Substitute a corrupted operator" );
    oracle->add_flag( "--json", oracle_json, "Emit JSON" );

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::ParseError& e )
    {
        const int code = app.exit( e );
        return code == 0 ? 0 : exit_error;
    }

    try
    {
        if ( *query )
        {
            words = query->remaining();
            return run_query( spec_path, words, query_json );
        }
        return run_oracle( config, theorems, mutant, oracle_json );
    }
    catch ( const std::exception& e )
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
}
