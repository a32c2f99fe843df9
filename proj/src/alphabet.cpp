#include "agc/alphabet.hpp"

#include <utility>

namespace agc
{

inclusion::inclusion( var_set small, var_set large ) : _small{ std::move( small ) }, _large{ std::move( large ) }
{
    _positions.reserve( _small.size() );
    for ( const auto& v : _small )
    {
        auto pos = _large.position( v );
        if ( !pos )
            throw invalid_argument( "variable set " + _small.to_string() + " is not contained in "
                                    + _large.to_string() + " (missing '" + v + "')" );
        _positions.push_back( *pos );
    }
}

std::vector< std::size_t > projection_map( const theory& th, const inclusion& inc )
{
    const std::size_t radix = th.size();
    const std::size_t large_count = state_count( th, inc.large() );
    const std::size_t width = inc.large().size();

    // weight[j]: contribution of one unit of large digit j to the small
    // index, zero for variables that are projected away.
    std::vector< std::size_t > weight( width, 0 );
    std::size_t w = 1;
    for ( std::size_t k = inc.small().size(); k-- > 0; )
    {
        weight[ inc.positions()[ k ] ] = w;
        w *= radix;
    }

    std::vector< std::size_t > map( large_count );
    std::vector< std::size_t > digits( width, 0 );
    std::size_t small_index = 0;
    for ( std::size_t i = 0; i < large_count; ++i )
    {
        map[ i ] = small_index;
        // Increment the mixed-radix counter, least significant digit last.
        for ( std::size_t j = width; j-- > 0; )
        {
            if ( ++digits[ j ] < radix )
            {
                small_index += weight[ j ];
                break;
            }
            digits[ j ] = 0;
            small_index -= weight[ j ] * ( radix - 1 );
        }
    }
    return map;
}

namespace
{

void require_vars( const var_set& actual, const var_set& expected )
{
    if ( !( actual == expected ) )
        throw varset_mismatch( actual.to_string(), expected.to_string() );
}

} // namespace

state project_state( const state& s, const inclusion& inc )
{
    require_vars( s.vars(), inc.large() );
    std::vector< std::uint32_t > values;
    values.reserve( inc.small().size() );
    for ( auto pos : inc.positions() )
        values.push_back( s.values()[ pos ] );
    return state( s.domain(), inc.small(), std::move( values ) );
}

assertion project_assertion_exists( const assertion& a, const inclusion& inc )
{
    require_vars( a.vars(), inc.large() );
    const auto map = projection_map( a.domain(), inc );
    boost::dynamic_bitset<> bits( state_count( a.domain(), inc.small() ) );
    for ( std::size_t i = 0; i < map.size(); ++i )
        if ( a.bits().test( i ) )
            bits.set( map[ i ] );
    return assertion( a.domain(), inc.small(), std::move( bits ) );
}

assertion project_assertion_forall( const assertion& a, const inclusion& inc )
{
    require_vars( a.vars(), inc.large() );
    const auto map = projection_map( a.domain(), inc );
    boost::dynamic_bitset<> bits( state_count( a.domain(), inc.small() ) );
    bits.set();
    for ( std::size_t i = 0; i < map.size(); ++i )
        if ( !a.bits().test( i ) )
            bits.reset( map[ i ] );
    return assertion( a.domain(), inc.small(), std::move( bits ) );
}

assertion extend_state( const state& s, const inclusion& inc )
{
    require_vars( s.vars(), inc.small() );
    const auto map = projection_map( s.domain(), inc );
    const std::size_t target = state_index( s );
    boost::dynamic_bitset<> bits( map.size() );
    for ( std::size_t i = 0; i < map.size(); ++i )
        if ( map[ i ] == target )
            bits.set( i );
    return assertion( s.domain(), inc.large(), std::move( bits ) );
}

assertion extend_assertion( const assertion& a, const inclusion& inc )
{
    require_vars( a.vars(), inc.small() );
    const auto map = projection_map( a.domain(), inc );
    boost::dynamic_bitset<> bits( map.size() );
    for ( std::size_t i = 0; i < map.size(); ++i )
        if ( a.bits().test( map[ i ] ) )
            bits.set( i );
    return assertion( a.domain(), inc.large(), std::move( bits ) );
}

contract project_contract( const contract& c, const inclusion& inc )
{
    const auto sat = saturate( c );
    return contract( project_assertion_forall( sat.assume(), inc ), project_assertion_exists( sat.guarantee(), inc ) );
}

contract extend_contract( const contract& c, const inclusion& inc )
{
    const auto sat = saturate( c );
    return contract( extend_assertion( sat.assume(), inc ), extend_assertion( sat.guarantee(), inc ) );
}

contract eliminate_variable( const contract& c, const std::string& var )
{
    return eliminate_variables( c, var_set{ var } );
}

contract eliminate_variables( const contract& c, const var_set& vars )
{
    for ( const auto& v : vars )
        if ( !c.vars().contains( v ) )
            throw unknown_variable( v, "contract over " + c.vars().to_string() );
    return project_contract( c, inclusion( c.vars().without( vars ), c.vars() ) );
}

contract extended_compose( const contract& c1, const contract& c2, const std::optional< var_set >& target )
{
    const var_set over = target ? *target : c1.vars().unite( c2.vars() );
    if ( !c1.vars().is_subset_of( over ) || !c2.vars().is_subset_of( over ) )
        throw invalid_argument( "composition target " + over.to_string() + " does not contain "
                                + c1.vars().unite( c2.vars() ).to_string() );
    return compose( extend_contract( c1, inclusion( c1.vars(), over ) ),
                    extend_contract( c2, inclusion( c2.vars(), over ) ) );
}

} // namespace agc
