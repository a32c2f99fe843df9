#include "agc/theory.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace agc
{

theory::theory( std::vector< std::string > values, std::string name, std::size_t max_states )
{
    if ( values.empty() )
        throw invalid_argument( "theory '" + name + "' needs at least one value" );
    std::set< std::string > seen;
    for ( const auto& v : values )
        if ( !seen.insert( v ).second )
            throw invalid_argument( "duplicate value '" + v + "' in theory '" + name + "'" );
    if ( max_states == 0 )
        throw invalid_argument( "state cap must be positive" );
    _data = std::make_shared< const data >( data{ std::move( values ), std::move( name ), max_states } );
}

theory theory::boolean( std::size_t max_states )
{
    return theory( { "0", "1" }, "bool", max_states );
}

theory theory::range( std::size_t n, std::size_t max_states )
{
    std::vector< std::string > values;
    for ( std::size_t i = 0; i < n; ++i )
        values.push_back( std::to_string( i ) );
    return theory( std::move( values ), "range" + std::to_string( n ), max_states );
}

std::optional< std::size_t > theory::value_index( std::string_view literal ) const
{
    const auto& vs = values();
    auto it = std::find( vs.begin(), vs.end(), literal );
    if ( it == vs.end() )
        return std::nullopt;
    return static_cast< std::size_t >( it - vs.begin() );
}

const std::string& theory::literal( std::size_t value ) const
{
    if ( value >= size() )
        throw invalid_argument( "value position " + std::to_string( value ) + " outside domain" );
    return values()[ value ];
}

bool theory::operator==( const theory& other ) const
{
    return _data == other._data || _data->values == other._data->values;
}

namespace
{

const std::shared_ptr< const std::vector< std::string > >& empty_vars()
{
    static const auto empty = std::make_shared< const std::vector< std::string > >();
    return empty;
}

} // namespace

var_set::var_set() : _vars{ empty_vars() } {}

var_set::var_set( std::vector< std::string > vars )
{
    std::sort( vars.begin(), vars.end() );
    auto dup = std::adjacent_find( vars.begin(), vars.end() );
    if ( dup != vars.end() )
        throw invalid_argument( "duplicate variable '" + *dup + "'" );
    for ( const auto& v : vars )
        if ( v.empty() )
            throw invalid_argument( "empty variable identifier" );
    _vars = std::make_shared< const std::vector< std::string > >( std::move( vars ) );
}

var_set::var_set( std::initializer_list< std::string > vars ) : var_set( std::vector< std::string >( vars ) ) {}

bool var_set::contains( std::string_view id ) const
{
    return position( id ).has_value();
}

std::optional< std::size_t > var_set::position( std::string_view id ) const
{
    auto it = std::lower_bound( _vars->begin(), _vars->end(), id );
    if ( it == _vars->end() || *it != id )
        return std::nullopt;
    return static_cast< std::size_t >( it - _vars->begin() );
}

bool var_set::is_subset_of( const var_set& other ) const
{
    return std::includes( other.begin(), other.end(), begin(), end() );
}

var_set var_set::unite( const var_set& other ) const
{
    std::vector< std::string > out;
    std::set_union( begin(), end(), other.begin(), other.end(), std::back_inserter( out ) );
    return var_set( std::move( out ) );
}

var_set var_set::without( const var_set& other ) const
{
    std::vector< std::string > out;
    std::set_difference( begin(), end(), other.begin(), other.end(), std::back_inserter( out ) );
    return var_set( std::move( out ) );
}

std::string var_set::to_string() const
{
    std::string out = "{";
    for ( std::size_t i = 0; i < size(); ++i )
    {
        if ( i > 0 )
            out += ", ";
        out += ( *_vars )[ i ];
    }
    return out + "}";
}

bool var_set::operator==( const var_set& other ) const
{
    return _vars == other._vars || *_vars == *other._vars;
}

std::size_t state_count( const theory& th, const var_set& vars )
{
    constexpr std::size_t saturated = ~std::size_t{ 0 };
    std::size_t count = 1;
    for ( std::size_t i = 0; i < vars.size(); ++i )
        count = count > saturated / th.size() ? saturated : count * th.size();
    if ( count > th.max_states() )
        throw cap_exceeded( count, th.max_states() );
    return count;
}

state::state( theory th, var_set vars, std::vector< std::uint32_t > values )
        : _theory{ std::move( th ) }, _vars{ std::move( vars ) }, _values{ std::move( values ) }
{
    if ( _values.size() != _vars.size() )
        throw invalid_argument( "state over " + _vars.to_string() + " needs " + std::to_string( _vars.size() )
                                + " values, got " + std::to_string( _values.size() ) );
    for ( auto v : _values )
        if ( v >= _theory.size() )
            throw invalid_argument( "state value position " + std::to_string( v ) + " outside domain" );
}

std::uint32_t state::value_of( std::string_view id ) const
{
    auto pos = _vars.position( id );
    if ( !pos )
        throw unknown_variable( std::string( id ), "state over " + _vars.to_string() );
    return _values[ *pos ];
}

const std::string& state::literal_of( std::string_view id ) const
{
    return _theory.literal( value_of( id ) );
}

std::string state::to_string() const
{
    std::string out = "{";
    for ( std::size_t i = 0; i < _vars.size(); ++i )
    {
        if ( i > 0 )
            out += ", ";
        out += _vars[ i ] + "=" + _theory.literal( _values[ i ] );
    }
    return out + "}";
}

bool state::operator==( const state& other ) const
{
    return _vars == other._vars && _theory == other._theory && _values == other._values;
}

std::vector< state > enumerate_states( const theory& th, const var_set& vars )
{
    const std::size_t count = state_count( th, vars );
    std::vector< state > out;
    out.reserve( count );
    for ( std::size_t i = 0; i < count; ++i )
        out.push_back( state_from_index( th, vars, i ) );
    return out;
}

std::size_t state_index( const state& s )
{
    const std::size_t radix = s.domain().size();
    std::size_t index = 0;
    for ( auto v : s.values() )
        index = index * radix + v;
    return index;
}

state state_from_index( const theory& th, const var_set& vars, std::size_t index )
{
    const std::size_t count = state_count( th, vars );
    if ( index >= count )
        throw index_out_of_range( index, count );
    const std::size_t radix = th.size();
    std::vector< std::uint32_t > values( vars.size() );
    for ( std::size_t i = vars.size(); i-- > 0; )
    {
        values[ i ] = static_cast< std::uint32_t >( index % radix );
        index /= radix;
    }
    return state( th, vars, std::move( values ) );
}

assertion::assertion( theory th, var_set vars, boost::dynamic_bitset<> bits )
        : _theory{ std::move( th ) }, _vars{ std::move( vars ) }, _bits{ std::move( bits ) }
{
    const std::size_t count = state_count( _theory, _vars );
    if ( _bits.size() != count )
        throw invalid_argument( "assertion over " + _vars.to_string() + " needs " + std::to_string( count )
                                + " bits, got " + std::to_string( _bits.size() ) );
}

assertion assertion::empty( const theory& th, const var_set& vars )
{
    return assertion( th, vars, boost::dynamic_bitset<>( state_count( th, vars ) ) );
}

assertion assertion::full( const theory& th, const var_set& vars )
{
    boost::dynamic_bitset<> bits( state_count( th, vars ) );
    bits.set();
    return assertion( th, vars, std::move( bits ) );
}

assertion assertion::from_indices( const theory& th, const var_set& vars, const std::vector< std::size_t >& indices )
{
    boost::dynamic_bitset<> bits( state_count( th, vars ) );
    for ( auto i : indices )
    {
        if ( i >= bits.size() )
            throw index_out_of_range( i, bits.size() );
        bits.set( i );
    }
    return assertion( th, vars, std::move( bits ) );
}

bool assertion::contains( std::size_t state_index ) const
{
    if ( state_index >= _bits.size() )
        throw index_out_of_range( state_index, _bits.size() );
    return _bits.test( state_index );
}

std::vector< std::size_t > assertion::indices() const
{
    std::vector< std::size_t > out;
    out.reserve( _bits.count() );
    for ( auto i = _bits.find_first(); i != boost::dynamic_bitset<>::npos; i = _bits.find_next( i ) )
        out.push_back( i );
    return out;
}

std::string assertion::to_string() const
{
    std::ostringstream out;
    out << "{";
    bool first = true;
    for ( auto i : indices() )
    {
        out << ( first ? "" : ", " ) << i;
        first = false;
    }
    out << "}";
    return out.str();
}

void require_compatible( const assertion& a, const assertion& b )
{
    if ( !( a.vars() == b.vars() ) )
        throw varset_mismatch( a.vars().to_string(), b.vars().to_string() );
    if ( !( a.domain() == b.domain() ) )
        throw theory_mismatch( "assertions belong to different theories ('" + a.domain().name() + "' vs '"
                               + b.domain().name() + "')" );
}

assertion assertion_union( const assertion& a, const assertion& b )
{
    require_compatible( a, b );
    return assertion( a.domain(), a.vars(), a.bits() | b.bits() );
}

assertion assertion_intersect( const assertion& a, const assertion& b )
{
    require_compatible( a, b );
    return assertion( a.domain(), a.vars(), a.bits() & b.bits() );
}

assertion assertion_complement( const assertion& a )
{
    return assertion( a.domain(), a.vars(), ~a.bits() );
}

bool assertion_subset( const assertion& a, const assertion& b )
{
    require_compatible( a, b );
    return a.bits().is_subset_of( b.bits() );
}

bool assertion_member( const state& s, const assertion& a )
{
    if ( !( s.vars() == a.vars() ) )
        throw varset_mismatch( s.vars().to_string(), a.vars().to_string() );
    if ( !( s.domain() == a.domain() ) )
        throw theory_mismatch( "state and assertion belong to different theories" );
    return a.bits().test( state_index( s ) );
}

bool assertion_is_empty( const assertion& a )
{
    return a.is_empty();
}

bool assertion_equal( const assertion& a, const assertion& b )
{
    require_compatible( a, b );
    return a.bits() == b.bits();
}

assertion assertion_from_predicate( const theory& th, const var_set& vars,
                                    const std::function< bool( const state& ) >& predicate )
{
    const std::size_t count = state_count( th, vars );
    boost::dynamic_bitset<> bits( count );
    for ( std::size_t i = 0; i < count; ++i )
        if ( predicate( state_from_index( th, vars, i ) ) )
            bits.set( i );
    return assertion( th, vars, std::move( bits ) );
}

} // namespace agc
