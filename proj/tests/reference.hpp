#pragma once

// Reference model for the tests. States are value tuples produced by a
// recursive cartesian product, assertions are std::set of such tuples, and
// the contract relations are written straight from their definitions. None
// of it goes through the library's index arithmetic or bit vectors.

#include "agc/theory.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace ref
{

using tuple = std::vector< std::uint32_t >;
using set = std::set< tuple >;

inline void product( std::size_t radix, std::size_t k, tuple& prefix, std::vector< tuple >& out )
{
    if ( prefix.size() == k )
    {
        out.push_back( prefix );
        return;
    }
    for ( std::uint32_t v = 0; v < radix; ++v )
    {
        prefix.push_back( v );
        product( radix, k, prefix, out );
        prefix.pop_back();
    }
}

// Lexicographic order on tuples, first coordinate slowest.
inline std::vector< tuple > states( std::size_t radix, std::size_t k )
{
    std::vector< tuple > out;
    tuple prefix;
    product( radix, k, prefix, out );
    return out;
}

inline set full( std::size_t radix, std::size_t k )
{
    auto all = states( radix, k );
    return set( all.begin(), all.end() );
}

inline set unite( const set& a, const set& b )
{
    set out = a;
    out.insert( b.begin(), b.end() );
    return out;
}

inline set meet( const set& a, const set& b )
{
    set out;
    for ( const auto& t : a )
        if ( b.count( t ) )
            out.insert( t );
    return out;
}

inline set minus( const set& a, const set& b )
{
    set out;
    for ( const auto& t : a )
        if ( !b.count( t ) )
            out.insert( t );
    return out;
}

inline bool within( const set& a, const set& b )
{
    for ( const auto& t : a )
        if ( !b.count( t ) )
            return false;
    return true;
}

// Every subset of universe, in no particular order.
inline std::vector< set > subsets( const set& universe )
{
    std::vector< tuple > items( universe.begin(), universe.end() );
    std::vector< set > out;
    for ( std::size_t mask = 0; mask < ( std::size_t{ 1 } << items.size() ); ++mask )
    {
        set s;
        for ( std::size_t i = 0; i < items.size(); ++i )
            if ( mask >> i & 1 )
                s.insert( items[ i ] );
        out.push_back( s );
    }
    return out;
}

struct contract
{
    set assume;
    set guarantee;
};

// satisfies: outside the assumption, or inside the guarantee.
inline bool satisfies( const tuple& s, const contract& c )
{
    return !c.assume.count( s ) || c.guarantee.count( s );
}

inline bool implements( const set& sigma, const contract& c )
{
    for ( const auto& s : sigma )
        if ( !satisfies( s, c ) )
            return false;
    return true;
}

inline bool provides( const set& e, const contract& c )
{
    return within( e, c.assume );
}

// Refinement read semantically: every implementation carries over, and
// every environment carries back.
inline bool refines( const contract& c1, const contract& c2, const set& universe )
{
    for ( const auto& sigma : subsets( universe ) )
    {
        if ( implements( sigma, c1 ) && !implements( sigma, c2 ) )
            return false;
        if ( provides( sigma, c2 ) && !provides( sigma, c1 ) )
            return false;
    }
    return true;
}

// Conversions from library values, reading membership state by state.
inline tuple of( const agc::state& s )
{
    return s.values();
}

inline set of( const agc::assertion& a )
{
    set out;
    for ( const auto& s : agc::enumerate_states( a.domain(), a.vars() ) )
        if ( agc::assertion_member( s, a ) )
            out.insert( s.values() );
    return out;
}

} // namespace ref
