#include "agc/alphabet.hpp"

#include "reference.hpp"

#include <doctest.h>

#include <random>

using namespace agc;

namespace
{

const theory B = theory::boolean();
const var_set X{ "x" };
const var_set Y{ "y" };
const var_set XY{ "x", "y" };
const var_set XYZ{ "x", "y", "z" };

assertion at( const var_set& vars, std::vector< std::size_t > idx )
{
    return assertion::from_indices( B, vars, idx );
}

std::vector< assertion > all_assertions( const theory& th, const var_set& vars )
{
    const auto n = state_count( th, vars );
    std::vector< assertion > out;
    for ( std::size_t m = 0; m < ( std::size_t{ 1 } << n ); ++m )
        out.emplace_back( th, vars, boost::dynamic_bitset<>( n, m ) );
    return out;
}

// Reference projection: keep the coordinates of the small variables.
ref::tuple restrict( const ref::tuple& t, const var_set& small, const var_set& large )
{
    ref::tuple out;
    for ( const auto& v : small )
        out.push_back( t[ *large.position( v ) ] );
    return out;
}

ref::set ref_exists( const ref::set& a, const var_set& small, const var_set& large )
{
    ref::set out;
    for ( const auto& t : a )
        out.insert( restrict( t, small, large ) );
    return out;
}

ref::set ref_forall( const ref::set& a, const var_set& small, const var_set& large, std::size_t radix )
{
    ref::set out;
    for ( const auto& s : ref::states( radix, small.size() ) )
    {
        bool all = true;
        for ( const auto& t : ref::states( radix, large.size() ) )
            if ( restrict( t, small, large ) == s && !a.count( t ) )
                all = false;
        if ( all )
            out.insert( s );
    }
    return out;
}

ref::set ref_extend( const ref::set& a, const var_set& small, const var_set& large, std::size_t radix )
{
    ref::set out;
    for ( const auto& t : ref::states( radix, large.size() ) )
        if ( a.count( restrict( t, small, large ) ) )
            out.insert( t );
    return out;
}

std::vector< var_set > subsets_of( const var_set& vars )
{
    std::vector< var_set > out;
    for ( std::size_t m = 0; m < ( std::size_t{ 1 } << vars.size() ); ++m )
    {
        std::vector< std::string > pick;
        for ( std::size_t i = 0; i < vars.size(); ++i )
            if ( m >> i & 1 )
                pick.push_back( vars[ i ] );
        out.emplace_back( pick );
    }
    return out;
}

} // namespace

TEST_CASE( "inclusion is validated at construction" )
{
    CHECK_NOTHROW( inclusion( Y, XY ) );
    CHECK_NOTHROW( inclusion( var_set(), X ) );
    CHECK_THROWS_AS( inclusion( XY, Y ), error );
    CHECK( inclusion( Y, XY ).positions() == std::vector< std::size_t >{ 1 } );
}

TEST_CASE( "project_state restricts" )
{
    const state s( B, XY, { 1, 0 } );
    CHECK( project_state( s, inclusion( X, XY ) ) == state( B, X, { 1 } ) );
    CHECK( project_state( s, inclusion( XY, XY ) ) == s );
    CHECK_THROWS_AS( (void)project_state( s, inclusion( X, XYZ ) ), varset_mismatch );
    // projections compose
    for ( const auto& t : enumerate_states( B, XYZ ) )
        CHECK( project_state( project_state( t, inclusion( XY, XYZ ) ), inclusion( X, XY ) )
               == project_state( t, inclusion( X, XYZ ) ) );
}

TEST_CASE( "assertion projection examples" )
{
    const inclusion y_in_xy( Y, XY );
    CHECK( project_assertion_exists( assertion::empty( B, XY ), y_in_xy ).is_empty() );
    // (x=0, y=1) is index 1
    CHECK( project_assertion_exists( at( XY, { 1 } ), y_in_xy ) == at( Y, { 1 } ) );
    CHECK( project_assertion_exists( assertion::full( B, XY ), y_in_xy ).is_full() );
    CHECK( project_assertion_forall( assertion::full( B, XY ), y_in_xy ).is_full() );
    CHECK( project_assertion_forall( at( XY, { 2, 3 } ), y_in_xy ).is_empty() );
}

TEST_CASE( "extension examples" )
{
    const inclusion y_in_xy( Y, XY );
    CHECK( extend_state( state( B, Y, { 1 } ), y_in_xy ) == at( XY, { 1, 3 } ) );
    CHECK( extend_state( state( B, XY, { 0, 1 } ), inclusion( XY, XY ) ) == at( XY, { 1 } ) );
    CHECK( extend_assertion( at( Y, { 1 } ), y_in_xy ) == at( XY, { 1, 3 } ) );
    CHECK( extend_assertion( assertion::empty( B, Y ), y_in_xy ).is_empty() );
    CHECK( extend_assertion( assertion::full( B, Y ), y_in_xy ).is_full() );
    const theory T = theory::range( 3 );
    for ( const auto& s : enumerate_states( T, X ) )
        CHECK( extend_state( s, inclusion( X, XYZ ) ).count() == 9 );
}

TEST_CASE( "projections and extension agree with the reference model" )
{
    for ( std::size_t radix : { 2, 3 } )
    {
        const theory th = theory::range( radix );
        const var_set large = radix == 2 ? XYZ : XY;
        const auto assertions = all_assertions( th, large );
        std::mt19937 rng( 3 );
        for ( const auto& small : subsets_of( large ) )
        {
            const inclusion inc( small, large );
            for ( std::size_t i = 0; i < 64; ++i )
            {
                const auto& a = assertions[ rng() % assertions.size() ];
                const auto ra = ref::of( a );
                CHECK( ref::of( project_assertion_exists( a, inc ) ) == ref_exists( ra, small, large ) );
                CHECK( ref::of( project_assertion_forall( a, inc ) ) == ref_forall( ra, small, large, radix ) );
            }
            for ( const auto& a : all_assertions( th, small ) )
                CHECK( ref::of( extend_assertion( a, inc ) ) == ref_extend( ref::of( a ), small, large, radix ) );
        }
    }
}

TEST_CASE( "forall projection is contained in exists projection" )
{
    for ( const auto& a : all_assertions( B, XYZ ) )
        for ( const auto& small : subsets_of( XYZ ) )
        {
            const inclusion inc( small, XYZ );
            CHECK( assertion_subset( project_assertion_forall( a, inc ), project_assertion_exists( a, inc ) ) );
        }
}

TEST_CASE( "extension is a boolean homomorphism" )
{
    const inclusion inc( X, XYZ );
    for ( const auto& a : all_assertions( B, X ) )
    {
        CHECK( extend_assertion( ~a, inc ) == ~extend_assertion( a, inc ) );
        for ( const auto& b : all_assertions( B, X ) )
        {
            CHECK( extend_assertion( a | b, inc ) == ( extend_assertion( a, inc ) | extend_assertion( b, inc ) ) );
            CHECK( extend_assertion( a & b, inc ) == ( extend_assertion( a, inc ) & extend_assertion( b, inc ) ) );
        }
    }
}

TEST_CASE( "elimination worked example" )
{
    // A: x = 1, G: y = 1 over {x, y}. Saturated G = {x=0} | {y=1}.
    const contract c( at( XY, { 2, 3 } ), at( XY, { 1, 3 } ) );
    CHECK( saturate( c ).guarantee() == at( XY, { 0, 1, 3 } ) );
    const auto r = eliminate_variable( c, "x" );
    CHECK( r.vars() == Y );
    CHECK( r.assume().is_empty() );
    CHECK( r.guarantee().is_full() );
    CHECK_THROWS_AS( (void)eliminate_variable( c, "z" ), unknown_variable );
}

TEST_CASE( "eliminating the only variable" )
{
    for ( const auto& a : all_assertions( B, X ) )
        for ( const auto& g : all_assertions( B, X ) )
        {
            const contract c( a, g );
            const auto r = eliminate_variable( c, "x" );
            REQUIRE( r.vars().empty() );
            // forall over the fiber of the single empty state
            CHECK( r.assume().is_full() == a.is_full() );
            CHECK( r.guarantee().is_full() == !saturate( c ).guarantee().is_empty() );
        }
}

TEST_CASE( "project_contract and extend_contract examples" )
{
    const contract c( at( XY, { 2, 3 } ), at( XY, { 3 } ) );
    CHECK( equiv( project_contract( c, inclusion( XY, XY ) ), saturate( c ) ) );
    const auto p = project_contract( contract( assertion::full( B, XY ), at( XY, { 1 } ) ), inclusion( Y, XY ) );
    CHECK( p.assume().is_full() );
    CHECK( p.guarantee() == at( Y, { 1 } ) );
    const contract small( at( X, { 1 } ), at( X, { 1 } ) );
    const auto same = extend_contract( small, inclusion( X, X ) );
    CHECK( same.assume() == saturate( small ).assume() );
    CHECK( same.guarantee() == saturate( small ).guarantee() );
}

TEST_CASE( "invariant variables survive elimination and extension" )
{
    // A and G over {x, y} that do not depend on x.
    const inclusion inc( Y, XY );
    for ( const auto& a : all_assertions( B, Y ) )
        for ( const auto& g : all_assertions( B, Y ) )
        {
            const contract c( extend_assertion( a, inc ), extend_assertion( g, inc ) );
            CHECK( equiv( extend_contract( eliminate_variable( c, "x" ), inc ), saturate( c ) ) );
        }
}

TEST_CASE( "multi-variable elimination" )
{
    const contract c( at( XYZ, { 1, 3, 5, 7 } ), at( XYZ, { 0, 7 } ) );
    const auto both = eliminate_variables( c, var_set{ "x", "z" } );
    CHECK( both.vars() == Y );
    CHECK( equiv( both, eliminate_variable( eliminate_variable( c, "z" ), "x" ) ) );
    CHECK_THROWS_AS( (void)eliminate_variables( c, var_set{ "w" } ), unknown_variable );
}

TEST_CASE( "extended_compose" )
{
    const contract c1( assertion::full( B, X ), at( X, { 1 } ) );
    const contract c2( assertion::full( B, Y ), at( Y, { 1 } ) );
    const auto r = extended_compose( c1, c2 );
    CHECK( r.vars() == XY );
    CHECK( r.guarantee() == at( XY, { 3 } ) );
    CHECK( r.assume().is_full() );
    CHECK( equiv( r, extended_compose( c2, c1 ) ) );
    CHECK( extended_compose( c1, c2, XYZ ).vars() == XYZ );
    CHECK_THROWS_AS( (void)extended_compose( c1, c2, X ), invalid_argument );

    // Same alphabets: equals ordinary composition.
    const contract d( at( X, { 0 } ), at( X, { 1 } ) );
    CHECK( equiv( extended_compose( c1, d ), compose( c1, d ) ) );
}

TEST_CASE( "extended_compose is commutative up to equiv" )
{
    const auto xs = all_assertions( B, X );
    const auto ys = all_assertions( B, XY );
    std::mt19937 rng( 5 );
    for ( int i = 0; i < 500; ++i )
    {
        const contract c1( xs[ rng() % xs.size() ], xs[ rng() % xs.size() ] );
        const contract c2( ys[ rng() % ys.size() ], ys[ rng() % ys.size() ] );
        CHECK( equiv( extended_compose( c1, c2 ), extended_compose( c2, c1 ) ) );
        CHECK( equiv( extended_compose( c1, c2, XYZ ), extended_compose( c2, c1, XYZ ) ) );
    }
}
