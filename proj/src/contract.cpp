#include "agc/contract.hpp"

#include <utility>

namespace agc
{

contract::contract( assertion assume, assertion guarantee )
        : _assume{ std::move( assume ) }, _guarantee{ std::move( guarantee ) }
{
    agc::require_compatible( _assume, _guarantee );
}

void require_compatible( const contract& a, const contract& b )
{
    require_compatible( a.assume(), b.assume() );
}

contract saturate( const contract& c )
{
    return contract( c.assume(), ~c.assume() | c.guarantee() );
}

bool satisfies( const state& s, const contract& c )
{
    return assertion_member( s, ~c.assume() | c.guarantee() );
}

bool implements( const assertion& component, const contract& c )
{
    return assertion_subset( component, ~c.assume() | c.guarantee() );
}

bool provides( const assertion& environment, const contract& c )
{
    return assertion_subset( environment, c.assume() );
}

bool refines( const contract& c1, const contract& c2 )
{
    require_compatible( c1, c2 );
    const auto s1 = saturate( c1 );
    const auto s2 = saturate( c2 );
    return assertion_subset( s2.assume(), s1.assume() ) && assertion_subset( s1.guarantee(), s2.guarantee() );
}

bool equiv( const contract& c1, const contract& c2 )
{
    return refines( c1, c2 ) && refines( c2, c1 );
}

contract conjoin( const contract& c1, const contract& c2 )
{
    require_compatible( c1, c2 );
    const auto s1 = saturate( c1 );
    const auto s2 = saturate( c2 );
    return contract( s1.assume() | s2.assume(), s1.guarantee() & s2.guarantee() );
}

contract compose( const contract& c1, const contract& c2 )
{
    require_compatible( c1, c2 );
    const auto s1 = saturate( c1 );
    const auto s2 = saturate( c2 );
    auto guarantee = s1.guarantee() & s2.guarantee();
    auto assume = ( s1.assume() & s2.assume() ) | ~guarantee;
    return contract( std::move( assume ), std::move( guarantee ) );
}

bool is_implementable( const contract& c )
{
    return !max_implementation( c ).is_empty();
}

assertion max_implementation( const contract& c )
{
    return ~c.assume() | c.guarantee();
}

assertion max_environment( const contract& c )
{
    return c.assume();
}

} // namespace agc
