#include "agc/formula.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace agc
{

namespace
{

using node_ptr = std::shared_ptr< const formula_node >;

void require_same_scope( const theory& th1, const var_set& v1, const theory& th2, const var_set& v2 )
{
    if ( !( v1 == v2 ) )
        throw varset_mismatch( v1.to_string(), v2.to_string() );
    if ( !( th1 == th2 ) )
        throw theory_mismatch( "formulas belong to different theories ('" + th1.name() + "' vs '" + th2.name() + "')" );
}

bool eval( const formula_node& n, const std::vector< std::uint32_t >& values )
{
    switch ( n.kind )
    {
    case formula_kind::truth: return true;
    case formula_kind::atom: return values[ n.var_pos ] == n.value;
    case formula_kind::negation: return !eval( *n.left, values );
    case formula_kind::conjunction: return eval( *n.left, values ) && eval( *n.right, values );
    }
    return false;
}

bool same_tree( const formula_node& a, const formula_node& b )
{
    if ( &a == &b )
        return true;
    if ( a.kind != b.kind )
        return false;
    switch ( a.kind )
    {
    case formula_kind::truth: return true;
    case formula_kind::atom: return a.var == b.var && a.value == b.value;
    case formula_kind::negation: return same_tree( *a.left, *b.left );
    case formula_kind::conjunction: return same_tree( *a.left, *b.left ) && same_tree( *a.right, *b.right );
    }
    return false;
}

// The shapes the builders produce for derived connectives.
bool is_falsity( const formula_node& n )
{
    return n.kind == formula_kind::negation && n.left->kind == formula_kind::truth;
}

bool is_disjunction( const formula_node& n )
{
    return n.kind == formula_kind::negation && n.left->kind == formula_kind::conjunction
           && n.left->left->kind == formula_kind::negation && n.left->right->kind == formula_kind::negation;
}

enum precedence
{
    prec_or = 1,
    prec_and = 2,
    prec_unary = 3
};

std::string print( const formula_node& n, const theory& th, int context )
{
    auto wrap = [ context ]( std::string s, int own ) { return own < context ? "(" + s + ")" : s; };
    switch ( n.kind )
    {
    case formula_kind::truth: return "true";
    case formula_kind::atom: return n.var + " = " + th.literal( n.value );
    case formula_kind::negation:
        if ( is_falsity( n ) )
            return "false";
        if ( is_disjunction( n ) )
            return wrap( print( *n.left->left->left, th, prec_or ) + " | " + print( *n.left->right->left, th, prec_and ),
                         prec_or );
        return "!" + print( *n.left, th, prec_unary );
    case formula_kind::conjunction:
        return wrap( print( *n.left, th, prec_and ) + " & " + print( *n.right, th, prec_unary ), prec_and );
    }
    return "";
}

std::size_t depth_of( const formula_node& n )
{
    switch ( n.kind )
    {
    case formula_kind::truth:
    case formula_kind::atom: return 1;
    case formula_kind::negation: return 1 + depth_of( *n.left );
    case formula_kind::conjunction: return 1 + std::max( depth_of( *n.left ), depth_of( *n.right ) );
    }
    return 0;
}

std::size_t count_nodes( const formula_node& n )
{
    switch ( n.kind )
    {
    case formula_kind::truth:
    case formula_kind::atom: return 1;
    case formula_kind::negation: return 1 + count_nodes( *n.left );
    case formula_kind::conjunction: return 1 + count_nodes( *n.left ) + count_nodes( *n.right );
    }
    return 0;
}

} // namespace

formula::formula( theory th, var_set vars, std::shared_ptr< const formula_node > root )
        : _theory{ std::move( th ) }, _vars{ std::move( vars ) }, _root{ std::move( root ) }
{
}

formula formula::truth( const theory& th, const var_set& vars )
{
    static const node_ptr tt = std::make_shared< const formula_node >( formula_node{ formula_kind::truth, {}, 0, 0, {}, {} } );
    return formula( th, vars, tt );
}

formula formula::falsity( const theory& th, const var_set& vars )
{
    return f_not( truth( th, vars ) );
}

formula formula::atom( const theory& th, const var_set& vars, const std::string& var, std::uint32_t value )
{
    auto pos = vars.position( var );
    if ( !pos )
        throw unknown_variable( var, "formula over " + vars.to_string() );
    if ( value >= th.size() )
        throw unknown_literal( std::to_string( value ), "theory '" + th.name() + "'" );
    return formula( th, vars,
                    std::make_shared< const formula_node >( formula_node{ formula_kind::atom, var, *pos, value, {}, {} } ) );
}

formula formula::atom( const theory& th, const var_set& vars, const std::string& var, std::string_view literal )
{
    auto index = th.value_index( literal );
    if ( !index )
        throw unknown_literal( std::string( literal ), "theory '" + th.name() + "'" );
    return atom( th, vars, var, static_cast< std::uint32_t >( *index ) );
}

formula formula::left() const
{
    if ( !_root->left )
        throw invalid_argument( "formula node has no children" );
    return formula( _theory, _vars, _root->left );
}

formula formula::right() const
{
    if ( !_root->right )
        throw invalid_argument( "formula node has no right child" );
    return formula( _theory, _vars, _root->right );
}

std::size_t formula::depth() const
{
    return depth_of( *_root );
}

std::size_t formula::node_count() const
{
    return count_nodes( *_root );
}

bool formula::operator==( const formula& other ) const
{
    return _vars == other._vars && _theory == other._theory && same_tree( *_root, *other._root );
}

formula f_not( const formula& f )
{
    return formula( f._theory, f._vars,
                    std::make_shared< const formula_node >( formula_node{ formula_kind::negation, {}, 0, 0, f._root, {} } ) );
}

formula f_and( const formula& a, const formula& b )
{
    require_same_scope( a._theory, a._vars, b._theory, b._vars );
    return formula( a._theory, a._vars,
                    std::make_shared< const formula_node >(
                            formula_node{ formula_kind::conjunction, {}, 0, 0, a._root, b._root } ) );
}

formula f_or( const formula& a, const formula& b )
{
    return f_not( f_and( f_not( a ), f_not( b ) ) );
}

formula f_implies( const formula& a, const formula& b )
{
    return f_or( f_not( a ), b );
}

std::string to_string( const formula& f )
{
    return print( f.root(), f.domain(), 0 );
}

bool sat( const state& s, const formula& f )
{
    require_same_scope( s.domain(), s.vars(), f.domain(), f.vars() );
    return eval( f.root(), s.values() );
}

assertion formula_to_assert( const formula& f )
{
    // Pointwise sat over the canonical enumeration, walking the value
    // digits directly instead of materialising each state.
    const std::size_t count = state_count( f.domain(), f.vars() );
    const std::uint32_t radix = static_cast< std::uint32_t >( f.domain().size() );
    std::vector< std::uint32_t > digits( f.vars().size(), 0 );
    boost::dynamic_bitset<> bits( count );
    for ( std::size_t i = 0; i < count; ++i )
    {
        if ( eval( f.root(), digits ) )
            bits.set( i );
        for ( std::size_t j = digits.size(); j-- > 0; )
        {
            if ( ++digits[ j ] < radix )
                break;
            digits[ j ] = 0;
        }
    }
    return assertion( f.domain(), f.vars(), std::move( bits ) );
}

formula assertion_to_formula( const assertion& a )
{
    const auto& th = a.domain();
    const auto& vars = a.vars();
    if ( a.is_empty() )
        return formula::falsity( th, vars );
    if ( a.is_full() )
        return formula::truth( th, vars );

    std::optional< formula > out;
    for ( auto index : a.indices() )
    {
        const auto s = state_from_index( th, vars, index );
        std::optional< formula > term;
        for ( std::size_t k = 0; k < vars.size(); ++k )
        {
            auto lit = formula::atom( th, vars, vars[ k ], s.values()[ k ] );
            term = term ? f_and( *term, lit ) : lit;
        }
        // vars is nonempty here: over the empty set every assertion is
        // either empty or full.
        out = out ? f_or( *out, *term ) : *term;
    }
    return *out;
}

contract_f::contract_f( formula assume, formula guarantee )
        : _assume{ std::move( assume ) }, _guarantee{ std::move( guarantee ) }
{
    require_same_scope( _assume.domain(), _assume.vars(), _guarantee.domain(), _guarantee.vars() );
}

contract make_contract_f( const formula& assume, const formula& guarantee )
{
    return contract( formula_to_assert( assume ), formula_to_assert( guarantee ) );
}

contract c2c( const contract_f& cf )
{
    return make_contract_f( cf.assume(), cf.guarantee() );
}

contract_f contract_to_formulas( const contract& c )
{
    return contract_f( assertion_to_formula( c.assume() ), assertion_to_formula( c.guarantee() ) );
}

formula saturated_guarantee_f( const contract_f& cf )
{
    return f_or( f_not( cf.assume() ), cf.guarantee() );
}

bool is_valid( const formula& f )
{
    return formula_to_assert( f ).is_full();
}

namespace
{

void require_same_scope( const contract_f& a, const contract_f& b )
{
    require_same_scope( a.domain(), a.vars(), b.domain(), b.vars() );
}

} // namespace

bool refines_f( const contract_f& cf1, const contract_f& cf2 )
{
    require_same_scope( cf1, cf2 );
    return is_valid( f_implies( cf2.assume(), cf1.assume() ) )
           && is_valid( f_implies( saturated_guarantee_f( cf1 ), saturated_guarantee_f( cf2 ) ) );
}

contract_f compose_f( const contract_f& cf1, const contract_f& cf2 )
{
    require_same_scope( cf1, cf2 );
    auto guarantee = f_and( saturated_guarantee_f( cf1 ), saturated_guarantee_f( cf2 ) );
    auto assume = f_or( f_and( cf1.assume(), cf2.assume() ), f_not( guarantee ) );
    return contract_f( std::move( assume ), std::move( guarantee ) );
}

contract_f glb_f( const contract_f& cf1, const contract_f& cf2 )
{
    require_same_scope( cf1, cf2 );
    return contract_f( f_or( cf1.assume(), cf2.assume() ),
                       f_and( saturated_guarantee_f( cf1 ), saturated_guarantee_f( cf2 ) ) );
}

} // namespace agc
