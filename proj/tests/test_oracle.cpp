#include "agc/oracle.hpp"

#include <doctest.h>

#include <set>

using namespace agc;
namespace o = agc::oracle;

namespace
{

const theory B = theory::boolean();
const var_set X{ "x" };
const var_set XY{ "x", "y" };

o::oracle_config quick( std::size_t trials = 200 )
{
    o::oracle_config c;
    c.trials = trials;
    return c;
}

} // namespace

TEST_CASE( "enumerate_assertions" )
{
    CHECK( o::enumerate_assertions( B, var_set() ).size() == 2 );
    const auto two = o::enumerate_assertions( B, X );
    REQUIRE( two.size() == 4 );
    CHECK( two[ 0 ].indices().empty() );
    CHECK( two[ 1 ].indices() == std::vector< std::size_t >{ 0 } );
    CHECK( two[ 2 ].indices() == std::vector< std::size_t >{ 1 } );
    CHECK( two[ 3 ].indices() == std::vector< std::size_t >{ 0, 1 } );
    const auto sixteen = o::enumerate_assertions( B, XY );
    REQUIRE( sixteen.size() == 16 );
    std::set< std::vector< std::size_t > > distinct;
    for ( std::size_t i = 0; i < sixteen.size(); ++i )
    {
        distinct.insert( sixteen[ i ].indices() );
        CHECK( o::assertion_position( sixteen[ i ] ) == i );
    }
    CHECK( distinct.size() == 16 );
    CHECK_THROWS_AS( (void)o::enumerate_assertions( B, XY, 8 ), cap_exceeded );
}

TEST_CASE( "enumerate_contracts" )
{
    CHECK( o::enumerate_contracts( B, var_set() ).size() == 4 );
    const auto cs = o::enumerate_contracts( B, X );
    REQUIRE( cs.size() == 16 );
    for ( std::size_t i = 0; i < cs.size(); ++i )
        CHECK( o::contract_position( cs[ i ] ) == i );
    // closed under saturation
    for ( const auto& c : cs )
    {
        const auto s = saturate( c );
        const auto& found = cs[ o::contract_position( s ) ];
        CHECK( found.assume() == s.assume() );
        CHECK( found.guarantee() == s.guarantee() );
    }
    CHECK_THROWS_AS( (void)o::enumerate_contracts( B, XY, 255 ), cap_exceeded );
    CHECK( o::enumerate_contracts( B, XY, 256 ).size() == 256 );
}

TEST_CASE( "sampler is deterministic" )
{
    o::sampler a( 99, 3, 7 );
    o::sampler b( 99, 3, 7 );
    o::sampler c( 99, 3, 8 );
    bool differs = false;
    for ( int i = 0; i < 100; ++i )
    {
        const auto x = a.draw( 1000 );
        CHECK( x == b.draw( 1000 ) );
        differs |= x != c.draw( 1000 );
    }
    CHECK( differs );
}

TEST_CASE( "random assertions are uniform" )
{
    o::sampler rng( 12345 );
    std::size_t hits = 0;
    const std::size_t n = 10000;
    for ( std::size_t i = 0; i < n; ++i )
        hits += rng.random_assertion( B, XY ).contains( 2 );
    const double freq = static_cast< double >( hits ) / n;
    CHECK( freq > 0.45 );
    CHECK( freq < 0.55 );
}

TEST_CASE( "random draws respect their constraints" )
{
    o::sampler rng( 1 );
    for ( int i = 0; i < 500; ++i )
    {
        const auto th = rng.random_theory( 64 );
        CHECK( th.size() >= 1 );
        CHECK( th.size() <= 3 );
        const auto vars = rng.random_var_set( th, 64 );
        CHECK( vars.size() <= 3 );
        CHECK( state_count( th, vars ) <= 64 );
        const auto inc = rng.random_inclusion( th, 64 );
        CHECK( inc.small().is_subset_of( inc.large() ) );
        const auto a = rng.random_assertion( th, vars );
        CHECK( assertion_subset( rng.random_subset_of( a ), a ) );
        CHECK( assertion_subset( a, rng.random_superset_of( a ) ) );
        CHECK( rng.random_formula( th, vars, 3 ).depth() <= 3 );
        CHECK( rng.random_var_set( th, 64, 2 ).size() >= 2 );
    }
}

TEST_CASE( "theorem registry" )
{
    const std::vector< std::string > required = {
        "saturate_sound",       "refines_correct",       "glb_correct",
        "compose_correct",      "compose_lowest",        "extended_compose_correct_union",
        "extended_compose_correct_intersection",         "adjunction_exists",
        "adjunction_forall",    "refinesF_correct",      "composeF_correct",
        "glbF_correct",         "refinement_order_laws", "composition_commutes",
        "saturation_idempotent" };
    for ( const auto& name : required )
        CHECK( o::is_known_theorem( name ) );
    CHECK_FALSE( o::is_known_theorem( "no_such_theorem" ) );
    CHECK_THROWS_AS( (void)o::check_theorem( "no_such_theorem", quick() ), invalid_argument );
    CHECK_FALSE( o::is_asserted( "extended_compose_correct_union" ) );
    CHECK( o::is_asserted( "extended_compose_correct_intersection" ) );
}

TEST_CASE( "instance counts at one variable" )
{
    const auto sat = o::check_exhaustive( "saturate_sound", B, X );
    CHECK( sat.verdict_ == o::verdict::pass );
    CHECK( sat.instances == 32 );
    const auto ref = o::check_exhaustive( "refines_correct", B, X );
    CHECK( ref.verdict_ == o::verdict::pass );
    CHECK( ref.instances == 256 );
}

TEST_CASE( "config validation" )
{
    o::oracle_config bad;
    bad.trials = 0;
    CHECK_THROWS_AS( o::validate( bad ), invalid_argument );
    bad = {};
    bad.exhaustive_cap = 0;
    CHECK_THROWS_AS( o::validate( bad ), invalid_argument );
}

TEST_CASE( "instances serialise and come back" )
{
    o::instance inst;
    inst.domain = theory( { "a", "b" }, "ab" );
    const auto& th = *inst.domain;
    inst.contracts.emplace( "c", contract( assertion::from_indices( th, XY, { 1, 2 } ), assertion::full( th, XY ) ) );
    inst.assertions.emplace( "sigma", assertion::from_indices( th, X, { 0 } ) );
    inst.states.emplace( "s", state( th, XY, { 1, 1 } ) );
    inst.formula_contracts.emplace( "cf", contract_f( parse_formula( "x = b", th, XY ), parse_formula( "true", th, XY ) ) );
    inst.var_sets.emplace( "target", XY );
    inst.labels.emplace( "note", "hello" );

    const auto j = o::to_json( inst );
    const auto back = o::instance_from_json( j );
    CHECK( back.th() == th );
    CHECK( back.th().name() == "ab" );
    CHECK( back.c( "c" ).assume() == inst.c( "c" ).assume() );
    CHECK( back.a( "sigma" ) == inst.a( "sigma" ) );
    CHECK( back.s( "s" ) == inst.s( "s" ) );
    CHECK( back.cf( "cf" ).assume() == inst.cf( "cf" ).assume() );
    CHECK( back.vs( "target" ) == XY );
    CHECK( back.label( "note" ) == "hello" );
    CHECK( o::to_json( back ) == j );
    CHECK_THROWS_AS( (void)back.c( "missing" ), invalid_argument );
}

TEST_CASE( "every asserted theorem passes with a short randomized tier" )
{
    const auto reports = o::run_all( quick() );
    CHECK( reports.size() == 2 * o::theorem_names().size() );
    for ( const auto& r : reports )
    {
        INFO( r.theorem << " " << o::to_string( r.tier_ ) );
        if ( r.asserted )
        {
            CHECK( r.verdict_ == o::verdict::pass );
            CHECK_FALSE( r.counterexample );
        }
        CHECK( r.instances > 0 );
    }
    CHECK( o::all_asserted_pass( reports ) );
}

TEST_CASE( "the union form of extended composition fails and replays" )
{
    const auto r = o::check_exhaustive( "extended_compose_correct_union", quick() );
    REQUIRE( r.verdict_ == o::verdict::fail );
    REQUIRE( r.counterexample );
    CHECK_FALSE( o::replay( "extended_compose_correct_union", *r.counterexample ) );

    // c1 = (true, x) over {x}, c2 = (true, y) over {y}: sigma1 = {x=1} and
    // sigma2 = {y=1} implement them, but the union of their extensions
    // contains (x=1, y=0), which violates the guarantee x & y.
    o::instance inst;
    inst.domain = B;
    const var_set Y{ "y" };
    inst.contracts.emplace( "c1", contract( assertion::full( B, X ), assertion::from_indices( B, X, { 1 } ) ) );
    inst.contracts.emplace( "c2", contract( assertion::full( B, Y ), assertion::from_indices( B, Y, { 1 } ) ) );
    inst.assertions.emplace( "sigma1", assertion::from_indices( B, X, { 1 } ) );
    inst.assertions.emplace( "sigma2", assertion::from_indices( B, Y, { 1 } ) );
    inst.var_sets.emplace( "target", XY );
    CHECK_FALSE( o::replay( "extended_compose_correct_union", o::to_json( inst ) ) );
    CHECK( o::replay( "extended_compose_correct_intersection", o::to_json( inst ) ) );
}

TEST_CASE( "mutants are caught with replayable counterexamples" )
{
    struct expectation
    {
        o::mutation m;
        std::string theorem;
    };
    const std::vector< expectation > cases = {
        { o::mutation::glb_intersects_assumptions, "glb_correct" },
        { o::mutation::compose_drops_negated_guarantee, "compose_lowest" },
        { o::mutation::refines_compares_assumption_to_guarantee, "refines_correct" },
        { o::mutation::compose_unites_guarantees, "compose_lowest" },
    };
    for ( const auto& [ m, theorem ] : cases )
    {
        INFO( theorem );
        const auto ops = o::mutated( m );
        for ( const auto& r : o::check_theorem( theorem, quick(), ops ) )
        {
            CHECK( r.verdict_ == o::verdict::fail );
            REQUIRE( r.counterexample );
            CHECK_FALSE( o::replay( theorem, *r.counterexample, ops ) );
            CHECK( o::replay( theorem, *r.counterexample ) );
        }
    }
}

TEST_CASE( "mutation names" )
{
    for ( const auto& name : o::mutation_names() )
        CHECK( o::mutation_from_name( name ) );
    CHECK_FALSE( o::mutation_from_name( "nope" ) );
    CHECK( o::mutation_names().size() == 4 );
}

TEST_CASE( "equal configurations give identical reports" )
{
    auto config = quick( 100 );
    config.seed = 42;
    config.exhaustive_cap = 2;
    const auto a = o::to_json( o::run_all( config ) ).dump();
    const auto b = o::to_json( o::run_all( config ) ).dump();
    CHECK( a == b );
    config.seed = 43;
    // The exhaustive rows do not depend on the seed; counts of randomized
    // rows do not either, so compare counterexamples of the informational
    // theorem instead.
    const auto c = o::check_randomized( "extended_compose_correct_union", config );
    config.seed = 42;
    const auto d = o::check_randomized( "extended_compose_correct_union", config );
    CHECK( o::to_json( c ) != o::to_json( d ) );
}

TEST_CASE( "report formatting" )
{
    const auto reports = o::check_theorem( "saturate_sound", quick( 10 ) );
    const auto j = o::to_json( reports );
    REQUIRE( j.size() == 2 );
    CHECK( j[ 0 ][ "theorem" ] == "saturate_sound" );
    CHECK( j[ 0 ][ "tier" ] == "exhaustive" );
    CHECK( j[ 1 ][ "tier" ] == "randomized" );
    CHECK( j[ 1 ][ "instances" ] == 10 );
    CHECK( j[ 0 ][ "verdict" ] == "pass" );
    CHECK_FALSE( j[ 0 ].contains( "counterexample" ) );
    const auto table = o::format_table( reports );
    CHECK( table.find( "saturate_sound" ) != std::string::npos );
    CHECK( table.find( "randomized" ) != std::string::npos );
}
