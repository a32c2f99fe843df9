#include "agc/theory.hpp"

#include "reference.hpp"

#include <doctest.h>

#include <random>

using namespace agc;

namespace
{

const theory B = theory::boolean();

var_set vs( std::initializer_list< std::string > names )
{
    return var_set( names );
}

assertion random_assertion( std::mt19937& rng, const theory& th, const var_set& vars )
{
    boost::dynamic_bitset<> bits( state_count( th, vars ) );
    for ( std::size_t i = 0; i < bits.size(); ++i )
        bits[ i ] = rng() & 1;
    return assertion( th, vars, bits );
}

} // namespace

TEST_CASE( "theory rejects empty and duplicate domains" )
{
    CHECK_THROWS_AS( theory( {} ), invalid_argument );
    CHECK_THROWS_AS( theory( { "a", "b", "a" } ), invalid_argument );
    const theory t( { "lo", "mid", "hi" }, "level" );
    CHECK( t.size() == 3 );
    CHECK( t.name() == "level" );
    CHECK( t.value_index( "mid" ) == 1 );
    CHECK_FALSE( t.value_index( "top" ) );
    CHECK( t.literal( 2 ) == "hi" );
    CHECK( t.any_value() == "lo" );
    CHECK_THROWS_AS( (void)t.literal( 3 ), invalid_argument );
}

TEST_CASE( "theory equality ignores name" )
{
    CHECK( theory( { "0", "1" }, "a" ) == theory::boolean() );
    CHECK_FALSE( theory( { "1", "0" } ) == theory::boolean() );
    CHECK( theory::range( 2 ) == theory::boolean() );
}

TEST_CASE( "var_set is sorted and duplicate free" )
{
    const var_set v( std::vector< std::string >{ "y", "x", "z" } );
    CHECK( v.vars() == std::vector< std::string >{ "x", "y", "z" } );
    CHECK( v.to_string() == "{x, y, z}" );
    CHECK( v == vs( { "z", "y", "x" } ) );
    CHECK( v.position( "y" ) == 1 );
    CHECK_FALSE( v.position( "w" ) );
    CHECK_THROWS_AS( vs( { "x", "x" } ), invalid_argument );
    CHECK_THROWS_AS( vs( { "" } ), invalid_argument );
    CHECK( vs( { "x" } ).is_subset_of( v ) );
    CHECK_FALSE( v.is_subset_of( vs( { "x" } ) ) );
    CHECK( vs( { "x" } ).unite( vs( { "z" } ) ) == vs( { "x", "z" } ) );
    CHECK( v.without( vs( { "y" } ) ) == vs( { "x", "z" } ) );
    CHECK( var_set().to_string() == "{}" );
}

TEST_CASE( "enumerate_states over the empty set yields one empty state" )
{
    const auto states = enumerate_states( B, var_set() );
    REQUIRE( states.size() == 1 );
    CHECK( states[ 0 ].values().empty() );
    CHECK( states[ 0 ].to_string() == "{}" );
}

TEST_CASE( "enumerate_states matches an independent cartesian product" )
{
    for ( std::size_t radix : { 1, 2, 3 } )
        for ( std::size_t k = 0; k <= 3; ++k )
        {
            const theory th = theory::range( radix );
            std::vector< std::string > names = { "a", "b", "c" };
            names.resize( k );
            const var_set vars( names );
            const auto expected = ref::states( radix, k );
            const auto got = enumerate_states( th, vars );
            REQUIRE( got.size() == expected.size() );
            for ( std::size_t i = 0; i < got.size(); ++i )
            {
                CHECK( got[ i ].values() == expected[ i ] );
                CHECK( state_index( got[ i ] ) == i );
                CHECK( state_from_index( th, vars, i ) == got[ i ] );
            }
        }
}

TEST_CASE( "state index examples" )
{
    const auto xy = vs( { "x", "y" } );
    const state s( B, xy, { 1, 0 } );
    CHECK( state_index( s ) == 2 );
    CHECK( s.to_string() == "{x=1, y=0}" );
    CHECK( s.value_of( "x" ) == 1 );
    CHECK( s.literal_of( "y" ) == "0" );
    CHECK_THROWS_AS( (void)s.value_of( "z" ), unknown_variable );
    CHECK( state_from_index( B, xy, 0 ).values() == std::vector< std::uint32_t >{ 0, 0 } );
    CHECK_THROWS_AS( (void)state_from_index( B, xy, 4 ), index_out_of_range );
}

TEST_CASE( "state_count enforces the cap" )
{
    const theory small( { "0", "1", "2" }, "t", 10 );
    CHECK( state_count( small, vs( { "x", "y" } ) ) == 9 );
    try
    {
        (void)state_count( small, vs( { "x", "y", "z" } ) );
        FAIL( "expected cap_exceeded" );
    }
    catch ( const cap_exceeded& e )
    {
        CHECK( e.required() == 27 );
        CHECK( e.cap() == 10 );
    }
    CHECK_THROWS_AS( (void)enumerate_states( small, vs( { "x", "y", "z" } ) ), cap_exceeded );
    // 2^21 exceeds the default cap
    std::vector< std::string > many;
    for ( int i = 0; i < 21; ++i )
        many.push_back( "v" + std::to_string( i ) );
    CHECK_THROWS_AS( (void)state_count( B, var_set( many ) ), cap_exceeded );
}

TEST_CASE( "assertion basics" )
{
    const auto x = vs( { "x" } );
    CHECK( ( ~assertion::empty( B, x ) ) == assertion::full( B, x ) );
    const auto one = assertion::from_indices( B, x, { 1 } );
    CHECK( assertion_subset( one, assertion::full( B, x ) ) );
    CHECK( ( assertion::from_indices( B, x, { 0 } ) & one ).is_empty() );
    CHECK( one.to_string() == "{1}" );
    CHECK( one.contains( 1 ) );
    CHECK_FALSE( one.contains( 0 ) );
    CHECK_THROWS_AS( (void)assertion::from_indices( B, x, { 2 } ), index_out_of_range );
}

TEST_CASE( "mismatched operands are rejected" )
{
    const auto a = assertion::full( B, vs( { "x" } ) );
    const auto b = assertion::full( B, vs( { "y" } ) );
    CHECK_THROWS_AS( (void)( a | b ), varset_mismatch );
    CHECK_THROWS_AS( (void)assertion_subset( a, b ), varset_mismatch );
    CHECK_THROWS_AS( (void)( a == b ), varset_mismatch );
    const auto c = assertion::full( theory::range( 3 ), vs( { "x" } ) );
    CHECK_THROWS_AS( (void)( a & c ), error );
    try
    {
        (void)( a & b );
    }
    catch ( const varset_mismatch& e )
    {
        CHECK( e.left() == "{x}" );
        CHECK( e.right() == "{y}" );
    }
}

TEST_CASE( "set operations agree with the reference model" )
{
    std::mt19937 rng( 7 );
    for ( std::size_t radix : { 2, 3 } )
        for ( std::size_t k = 0; k <= 3; ++k )
        {
            const theory th = theory::range( radix );
            std::vector< std::string > names = { "a", "b", "c" };
            names.resize( k );
            const var_set vars( names );
            const auto universe = ref::full( radix, k );
            for ( int trial = 0; trial < 50; ++trial )
            {
                const auto a = random_assertion( rng, th, vars );
                const auto b = random_assertion( rng, th, vars );
                const auto ra = ref::of( a );
                const auto rb = ref::of( b );
                CHECK( ref::of( a | b ) == ref::unite( ra, rb ) );
                CHECK( ref::of( a & b ) == ref::meet( ra, rb ) );
                CHECK( ref::of( ~a ) == ref::minus( universe, ra ) );
                CHECK( assertion_subset( a, b ) == ref::within( ra, rb ) );
                CHECK( assertion_equal( a, b ) == ( ra == rb ) );
                CHECK( assertion_is_empty( a ) == ra.empty() );
                CHECK( a.count() == ra.size() );
            }
        }
}

TEST_CASE( "boolean algebra laws hold exhaustively at four states" )
{
    const auto xy = vs( { "x", "y" } );
    std::vector< assertion > all;
    for ( unsigned m = 0; m < 16; ++m )
        all.emplace_back( B, xy, boost::dynamic_bitset<>( 4, m ) );
    for ( const auto& a : all )
    {
        CHECK( ~~a == a );
        for ( const auto& b : all )
        {
            CHECK( ( a | b ) == ( b | a ) );
            CHECK( ( a & b ) == ( b & a ) );
            CHECK( ~( a | b ) == ( ~a & ~b ) );
            CHECK( ~( a & b ) == ( ~a | ~b ) );
            CHECK( assertion_subset( a, b ) == assertion_is_empty( a & ~b ) );
            for ( const auto& c : all )
            {
                CHECK( ( a & ( b | c ) ) == ( ( a & b ) | ( a & c ) ) );
                CHECK( ( ( a | b ) | c ) == ( a | ( b | c ) ) );
            }
        }
    }
}

TEST_CASE( "assertion_from_predicate" )
{
    const auto xy = vs( { "x", "y" } );
    CHECK( assertion_from_predicate( B, xy, []( const state& ) { return true; } ).is_full() );
    CHECK( assertion_from_predicate( B, xy, []( const state& ) { return false; } ).is_empty() );
    const auto x1 = assertion_from_predicate( B, xy, []( const state& s ) { return s.value_of( "x" ) == 1; } );
    CHECK( x1.indices() == std::vector< std::size_t >{ 2, 3 } );
}

TEST_CASE( "member requires a state over the same variables" )
{
    const auto a = assertion::full( B, vs( { "x" } ) );
    const state s( B, vs( { "y" } ), { 0 } );
    CHECK_THROWS_AS( (void)assertion_member( s, a ), varset_mismatch );
    CHECK_THROWS_AS( state( B, vs( { "x" } ), { 2 } ), invalid_argument );
    CHECK_THROWS_AS( state( B, vs( { "x" } ), { 0, 1 } ), invalid_argument );
}
