#include "agc/oracle.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <utility>

namespace agc::oracle
{

using nlohmann::json;

std::string to_string( tier t )
{
    return t == tier::exhaustive ? "exhaustive" : "randomized";
}

std::string to_string( verdict v )
{
    return v == verdict::pass ? "pass" : "fail";
}

void validate( const oracle_config& config )
{
    if ( config.trials == 0 )
        throw invalid_argument( "trial count must be positive" );
    if ( config.exhaustive_cap == 0 || config.randomized_cap == 0 )
        throw invalid_argument( "state-space caps must be positive" );
}

// ---------------------------------------------------------------------------
// Operators under test

operator_set operator_set::standard()
{
    return { &agc::refines, &agc::conjoin, &agc::compose };
}

bool operator_set::equiv( const contract& a, const contract& b ) const
{
    return refines( a, b ) && refines( b, a );
}

contract operator_set::extended_compose( const contract& c1, const contract& c2, const var_set& target ) const
{
    return compose( extend_contract( c1, inclusion( c1.vars(), target ) ),
                    extend_contract( c2, inclusion( c2.vars(), target ) ) );
}

operator_set mutated( mutation m )
{
    auto ops = operator_set::standard();
    switch ( m )
    {
    case mutation::glb_intersects_assumptions:
        ops.conjoin = []( const contract& c1, const contract& c2 ) {
            require_compatible( c1, c2 );
            const auto s1 = saturate( c1 );
            const auto s2 = saturate( c2 );
            return contract( s1.assume() & s2.assume(), s1.guarantee() & s2.guarantee() );
        };
        break;
    case mutation::compose_drops_negated_guarantee:
        ops.compose = []( const contract& c1, const contract& c2 ) {
            require_compatible( c1, c2 );
            const auto s1 = saturate( c1 );
            const auto s2 = saturate( c2 );
            return contract( s1.assume() & s2.assume(), s1.guarantee() & s2.guarantee() );
        };
        break;
    case mutation::refines_compares_assumption_to_guarantee:
        ops.refines = []( const contract& c1, const contract& c2 ) {
            require_compatible( c1, c2 );
            const auto s1 = saturate( c1 );
            const auto s2 = saturate( c2 );
            return assertion_subset( s2.assume(), s1.guarantee() ) && assertion_subset( s1.guarantee(), s2.guarantee() );
        };
        break;
    case mutation::compose_unites_guarantees:
        ops.compose = []( const contract& c1, const contract& c2 ) {
            require_compatible( c1, c2 );
            const auto s1 = saturate( c1 );
            const auto s2 = saturate( c2 );
            auto g = s1.guarantee() | s2.guarantee();
            auto a = ( s1.assume() & s2.assume() ) | ~g;
            return contract( std::move( a ), std::move( g ) );
        };
        break;
    }
    return ops;
}

namespace
{

const std::vector< std::pair< std::string, mutation > >& mutation_table()
{
    static const std::vector< std::pair< std::string, mutation > > table = {
        { "glb-intersects-assumptions", mutation::glb_intersects_assumptions },
        { "compose-drops-negated-guarantee", mutation::compose_drops_negated_guarantee },
        { "refines-assumption-in-guarantee", mutation::refines_compares_assumption_to_guarantee },
        { "compose-unites-guarantees", mutation::compose_unites_guarantees },
    };
    return table;
}

} // namespace

std::optional< mutation > mutation_from_name( const std::string& name )
{
    for ( const auto& [ n, m ] : mutation_table() )
        if ( n == name )
            return m;
    return std::nullopt;
}

std::vector< std::string > mutation_names()
{
    std::vector< std::string > out;
    for ( const auto& entry : mutation_table() )
        out.push_back( entry.first );
    return out;
}

// ---------------------------------------------------------------------------
// Instances

namespace
{

template < typename Map >
const typename Map::mapped_type& lookup( const Map& m, const std::string& name, const char* what )
{
    auto it = m.find( name );
    if ( it == m.end() )
        throw invalid_argument( std::string( "counterexample has no " ) + what + " named '" + name + "'" );
    return it->second;
}

json vars_json( const var_set& vars )
{
    return json( vars.vars() );
}

var_set vars_from( const json& j )
{
    return var_set( j.get< std::vector< std::string > >() );
}

} // namespace

const theory& instance::th() const
{
    if ( !domain )
        throw invalid_argument( "counterexample has no theory" );
    return *domain;
}

const contract& instance::c( const std::string& name ) const { return lookup( contracts, name, "contract" ); }
const assertion& instance::a( const std::string& name ) const { return lookup( assertions, name, "assertion" ); }
const state& instance::s( const std::string& name ) const { return lookup( states, name, "state" ); }
const contract_f& instance::cf( const std::string& name ) const
{
    return lookup( formula_contracts, name, "formula contract" );
}
const var_set& instance::vs( const std::string& name ) const { return lookup( var_sets, name, "variable set" ); }
const std::string& instance::label( const std::string& name ) const { return lookup( labels, name, "label" ); }

json to_json( const instance& inst )
{
    json j = json::object();
    j[ "theory" ] = { { "name", inst.th().name() }, { "values", inst.th().values() } };
    for ( const auto& [ name, c ] : inst.contracts )
        j[ "contracts" ][ name ] = { { "vars", vars_json( c.vars() ) },
                                     { "assume", c.assume().indices() },
                                     { "guarantee", c.guarantee().indices() } };
    for ( const auto& [ name, a ] : inst.assertions )
        j[ "assertions" ][ name ] = { { "vars", vars_json( a.vars() ) }, { "states", a.indices() } };
    for ( const auto& [ name, s ] : inst.states )
        j[ "states" ][ name ] = { { "vars", vars_json( s.vars() ) }, { "index", state_index( s ) } };
    for ( const auto& [ name, cf ] : inst.formula_contracts )
        j[ "formula_contracts" ][ name ] = { { "vars", vars_json( cf.vars() ) },
                                             { "assume", to_string( cf.assume() ) },
                                             { "guarantee", to_string( cf.guarantee() ) } };
    for ( const auto& [ name, vs ] : inst.var_sets )
        j[ "var_sets" ][ name ] = vars_json( vs );
    for ( const auto& [ name, text ] : inst.labels )
        j[ "labels" ][ name ] = text;
    return j;
}

instance instance_from_json( const json& j )
{
    instance inst;
    const auto& th_json = j.at( "theory" );
    inst.domain = theory( th_json.at( "values" ).get< std::vector< std::string > >(),
                          th_json.value( "name", std::string( "theory" ) ) );
    const theory& th = *inst.domain;
    auto indices = []( const json& v ) { return v.get< std::vector< std::size_t > >(); };
    if ( j.contains( "contracts" ) )
        for ( const auto& [ name, v ] : j[ "contracts" ].items() )
        {
            auto vars = vars_from( v.at( "vars" ) );
            inst.contracts.emplace( name, contract( assertion::from_indices( th, vars, indices( v.at( "assume" ) ) ),
                                                    assertion::from_indices( th, vars, indices( v.at( "guarantee" ) ) ) ) );
        }
    if ( j.contains( "assertions" ) )
        for ( const auto& [ name, v ] : j[ "assertions" ].items() )
            inst.assertions.emplace( name, assertion::from_indices( th, vars_from( v.at( "vars" ) ),
                                                                    indices( v.at( "states" ) ) ) );
    if ( j.contains( "states" ) )
        for ( const auto& [ name, v ] : j[ "states" ].items() )
            inst.states.emplace( name, state_from_index( th, vars_from( v.at( "vars" ) ),
                                                         v.at( "index" ).get< std::size_t >() ) );
    if ( j.contains( "formula_contracts" ) )
        for ( const auto& [ name, v ] : j[ "formula_contracts" ].items() )
        {
            auto vars = vars_from( v.at( "vars" ) );
            inst.formula_contracts.emplace(
                    name, contract_f( parse_formula( v.at( "assume" ).get< std::string >(), th, vars ),
                                      parse_formula( v.at( "guarantee" ).get< std::string >(), th, vars ) ) );
        }
    if ( j.contains( "var_sets" ) )
        for ( const auto& [ name, v ] : j[ "var_sets" ].items() )
            inst.var_sets.emplace( name, vars_from( v ) );
    if ( j.contains( "labels" ) )
        for ( const auto& [ name, v ] : j[ "labels" ].items() )
            inst.labels.emplace( name, v.get< std::string >() );
    return inst;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector< assertion > enumerate_assertions( const theory& th, const var_set& vars, std::size_t max_assertions )
{
    const std::size_t states = state_count( th, vars );
    if ( states >= 64 || ( std::size_t{ 1 } << states ) > max_assertions )
        throw cap_exceeded( states >= 64 ? ~std::size_t{ 0 } : std::size_t{ 1 } << states, max_assertions,
                            "assertions" );
    const std::size_t count = std::size_t{ 1 } << states;
    std::vector< assertion > out;
    out.reserve( count );
    for ( std::size_t i = 0; i < count; ++i )
        out.emplace_back( th, vars, boost::dynamic_bitset<>( states, i ) );
    return out;
}

std::vector< contract > enumerate_contracts( const theory& th, const var_set& vars, std::size_t max_contracts )
{
    const std::size_t states = state_count( th, vars );
    if ( 2 * states >= 64 || ( std::size_t{ 1 } << ( 2 * states ) ) > max_contracts )
        throw cap_exceeded( 2 * states >= 64 ? ~std::size_t{ 0 } : std::size_t{ 1 } << ( 2 * states ), max_contracts,
                            "contracts" );
    const auto assertions = enumerate_assertions( th, vars );
    std::vector< contract > out;
    out.reserve( assertions.size() * assertions.size() );
    for ( const auto& a : assertions )
        for ( const auto& g : assertions )
            out.emplace_back( a, g );
    return out;
}

std::size_t assertion_position( const assertion& a )
{
    if ( a.state_space_size() >= 64 )
        throw cap_exceeded( a.state_space_size(), 63 );
    std::size_t pos = 0;
    for ( auto i : a.indices() )
        pos |= std::size_t{ 1 } << i;
    return pos;
}

std::size_t contract_position( const contract& c )
{
    const std::size_t width = std::size_t{ 1 } << c.assume().state_space_size();
    return assertion_position( c.assume() ) * width + assertion_position( c.guarantee() );
}

std::vector< formula > enumerate_formulas( const theory& th, const var_set& vars, std::size_t max_depth )
{
    // by_depth[k]: formulas of depth exactly k + 1
    std::vector< std::vector< formula > > by_depth;
    if ( max_depth == 0 )
        return {};
    std::vector< formula > leaves{ formula::truth( th, vars ) };
    for ( const auto& v : vars )
        for ( std::uint32_t k = 0; k < th.size(); ++k )
            leaves.push_back( formula::atom( th, vars, v, k ) );
    by_depth.push_back( std::move( leaves ) );

    for ( std::size_t d = 1; d < max_depth; ++d )
    {
        std::vector< formula > below;
        for ( const auto& level : by_depth )
            below.insert( below.end(), level.begin(), level.end() );
        const auto& previous = by_depth.back();
        std::vector< formula > level;
        for ( const auto& f : previous )
            level.push_back( f_not( f ) );
        // A conjunction has depth d + 1 when at least one side has depth d.
        for ( const auto& l : below )
            for ( const auto& r : below )
                if ( l.depth() == d || r.depth() == d )
                    level.push_back( f_and( l, r ) );
        by_depth.push_back( std::move( level ) );
    }

    std::vector< formula > out;
    for ( const auto& level : by_depth )
        out.insert( out.end(), level.begin(), level.end() );
    return out;
}

// ---------------------------------------------------------------------------
// Sampling

namespace
{

const std::vector< std::string >& variable_pool()
{
    static const std::vector< std::string > pool = { "w", "x", "y", "z" };
    return pool;
}

std::size_t power( std::size_t base, std::size_t exp )
{
    std::size_t out = 1;
    for ( std::size_t i = 0; i < exp; ++i )
        out *= base;
    return out;
}

} // namespace

sampler::sampler( std::uint64_t seed )
{
    std::seed_seq seq{ static_cast< std::uint32_t >( seed ), static_cast< std::uint32_t >( seed >> 32 ) };
    _rng.seed( seq );
}

sampler::sampler( std::uint64_t seed, std::uint64_t stream, std::uint64_t trial )
{
    std::seed_seq seq{ static_cast< std::uint32_t >( seed ),  static_cast< std::uint32_t >( seed >> 32 ),
                       static_cast< std::uint32_t >( stream ), static_cast< std::uint32_t >( stream >> 32 ),
                       static_cast< std::uint32_t >( trial ),  static_cast< std::uint32_t >( trial >> 32 ) };
    _rng.seed( seq );
}

std::uint64_t sampler::draw( std::uint64_t bound )
{
    // Rejection sampling keeps the draw exactly uniform.
    const std::uint64_t limit = ~std::uint64_t{ 0 } - ( ~std::uint64_t{ 0 } % bound );
    std::uint64_t r;
    do
        r = _rng();
    while ( r >= limit );
    return r % bound;
}

bool sampler::coin()
{
    return ( _rng() >> 63 ) != 0;
}

theory sampler::random_theory( std::size_t cap, std::size_t min_vars )
{
    for ( ;; )
    {
        const std::size_t radix = 1 + draw( 3 );
        if ( power( radix, min_vars ) <= cap )
            return theory::range( radix );
    }
}

var_set sampler::random_var_set( const theory& th, std::size_t cap, std::size_t min_vars )
{
    std::size_t count;
    do
        count = min_vars + draw( 4 - min_vars );
    while ( power( th.size(), count ) > cap );
    std::vector< std::string > pool = variable_pool();
    std::vector< std::string > chosen;
    for ( std::size_t i = 0; i < count; ++i )
    {
        const auto pick = draw( pool.size() );
        chosen.push_back( pool[ pick ] );
        pool.erase( pool.begin() + static_cast< std::ptrdiff_t >( pick ) );
    }
    return var_set( std::move( chosen ) );
}

var_set sampler::random_subset( const var_set& vars )
{
    std::vector< std::string > chosen;
    for ( const auto& v : vars )
        if ( coin() )
            chosen.push_back( v );
    return var_set( std::move( chosen ) );
}

assertion sampler::random_assertion( const theory& th, const var_set& vars )
{
    boost::dynamic_bitset<> bits( state_count( th, vars ) );
    for ( std::size_t i = 0; i < bits.size(); ++i )
        bits[ i ] = coin();
    return assertion( th, vars, std::move( bits ) );
}

assertion sampler::random_subset_of( const assertion& a )
{
    return a & random_assertion( a.domain(), a.vars() );
}

assertion sampler::random_superset_of( const assertion& a )
{
    return a | random_assertion( a.domain(), a.vars() );
}

state sampler::random_state( const theory& th, const var_set& vars )
{
    return state_from_index( th, vars, draw( state_count( th, vars ) ) );
}

contract sampler::random_contract( const theory& th, const var_set& vars )
{
    auto a = random_assertion( th, vars );
    auto g = random_assertion( th, vars );
    return contract( std::move( a ), std::move( g ) );
}

inclusion sampler::random_inclusion( const theory& th, std::size_t cap )
{
    auto large = random_var_set( th, cap );
    return inclusion( random_subset( large ), large );
}

formula sampler::random_formula( const theory& th, const var_set& vars, std::size_t max_depth )
{
    if ( max_depth <= 1 || draw( 3 ) == 0 )
    {
        const std::size_t atoms = vars.size() * th.size();
        const auto pick = draw( atoms + 1 );
        if ( pick == atoms )
            return formula::truth( th, vars );
        return formula::atom( th, vars, vars[ pick / th.size() ], static_cast< std::uint32_t >( pick % th.size() ) );
    }
    if ( coin() )
        return f_not( random_formula( th, vars, max_depth - 1 ) );
    auto left = random_formula( th, vars, max_depth - 1 );
    return f_and( left, random_formula( th, vars, max_depth - 1 ) );
}

// ---------------------------------------------------------------------------
// Theorem predicates. Each takes concrete values and answers whether the
// theorem holds on them; sweeps and replay both go through these.

namespace
{

// Inner quantifiers over components and environments are enumerated when
// the state space has at most this many states. Above it they are decided
// through the maximal implementation and environment, which is exact
// because implements and provides are closed under subsets
// (witness_maximality checks that).
constexpr std::size_t inner_enumeration_states = 4;

bool same_sets( const contract& a, const contract& b )
{
    return a.assume() == b.assume() && a.guarantee() == b.guarantee();
}

bool saturate_sound( const state& s, const contract& c )
{
    return satisfies( s, c ) == satisfies( s, saturate( c ) );
}

bool saturation_idempotent( const contract& c )
{
    const auto once = saturate( c );
    return same_sets( saturate( once ), once );
}

bool witness_maximality( const contract& c, const assertion& sigma, const assertion& e )
{
    return implements( sigma, c ) == assertion_subset( sigma, max_implementation( c ) )
           && provides( e, c ) == assertion_subset( e, max_environment( c ) );
}

std::string refinement_law_failure( const contract& c1, const contract& c2, const contract& c3, const operator_set& ops )
{
    if ( !ops.refines( c1, c1 ) )
        return "reflexivity";
    if ( ops.refines( c1, c2 ) && ops.refines( c2, c1 ) && !same_sets( saturate( c1 ), saturate( c2 ) ) )
        return "antisymmetry";
    if ( ops.refines( c1, c2 ) && ops.refines( c2, c3 ) && !ops.refines( c1, c3 ) )
        return "transitivity";
    return "";
}

bool small_for_inner( const contract& c )
{
    return c.assume().state_space_size() <= inner_enumeration_states;
}

// forall sigma: sigma |- c1 -> sigma |- c2
bool implementations_carry( const contract& c1, const contract& c2 )
{
    if ( !small_for_inner( c1 ) )
        return implements( max_implementation( c1 ), c2 );
    for ( const auto& sigma : enumerate_assertions( c1.domain(), c1.vars() ) )
        if ( implements( sigma, c1 ) && !implements( sigma, c2 ) )
            return false;
    return true;
}

// forall e: provides e c2 -> provides e c1
bool environments_carry( const contract& c2, const contract& c1 )
{
    if ( !small_for_inner( c2 ) )
        return provides( max_environment( c2 ), c1 );
    for ( const auto& e : enumerate_assertions( c2.domain(), c2.vars() ) )
        if ( provides( e, c2 ) && !provides( e, c1 ) )
            return false;
    return true;
}

bool refines_correct( const contract& c1, const contract& c2, const operator_set& ops )
{
    return ops.refines( c1, c2 ) == ( implementations_carry( c1, c2 ) && environments_carry( c2, c1 ) );
}

std::string glb_failure( const contract& c1, const contract& c2, const contract& c, const operator_set& ops )
{
    const auto g = ops.conjoin( c1, c2 );
    if ( !ops.refines( g, c1 ) || !ops.refines( g, c2 ) )
        return "lower bound";
    if ( ops.refines( c, c1 ) && ops.refines( c, c2 ) && !ops.refines( c, g ) )
        return "greatest";
    return "";
}

// The conclusion shared by compose_correct and the hypothesis of
// compose_lowest, for one choice of components and environment.
bool composition_conclusion( const contract& c1, const contract& c2, const contract& c, const assertion& sigma1,
                             const assertion& sigma2, const assertion& e )
{
    return implements( sigma1 & sigma2, c ) && provides( e & sigma2, c1 ) && provides( e & sigma1, c2 );
}

bool compose_correct( const contract& c1, const contract& c2, const assertion& sigma1, const assertion& sigma2,
                      const assertion& e, const operator_set& ops )
{
    const auto comp = ops.compose( c1, c2 );
    if ( !implements( sigma1, c1 ) || !implements( sigma2, c2 ) || !provides( e, comp ) )
        return true;
    return composition_conclusion( c1, c2, comp, sigma1, sigma2, e );
}

// forall sigma1 sigma2 e: sigma1 |- c1 -> sigma2 |- c2 -> provides e c -> conclusion
bool lowest_hypothesis( const contract& c1, const contract& c2, const contract& c )
{
    if ( !small_for_inner( c ) )
        return composition_conclusion( c1, c2, c, max_implementation( c1 ), max_implementation( c2 ),
                                       max_environment( c ) );
    const auto all = enumerate_assertions( c.domain(), c.vars() );
    for ( const auto& s1 : all )
    {
        if ( !implements( s1, c1 ) )
            continue;
        for ( const auto& s2 : all )
        {
            if ( !implements( s2, c2 ) )
                continue;
            for ( const auto& e : all )
                if ( provides( e, c ) && !composition_conclusion( c1, c2, c, s1, s2, e ) )
                    return false;
        }
    }
    return true;
}

bool compose_lowest( const contract& c1, const contract& c2, const contract& c, const operator_set& ops )
{
    return !lowest_hypothesis( c1, c2, c ) || ops.refines( ops.compose( c1, c2 ), c );
}

bool composition_commutes( const contract& c1, const contract& c2, const operator_set& ops )
{
    return ops.equiv( ops.compose( c1, c2 ), ops.compose( c2, c1 ) );
}

bool compose_saturated( const contract& c1, const contract& c2, const operator_set& ops )
{
    const auto comp = ops.compose( c1, c2 );
    return same_sets( saturate( comp ), comp );
}

bool adjunction_exists( const inclusion& inc, const assertion& a1, const assertion& a2 )
{
    return assertion_subset( project_assertion_exists( a2, inc ), a1 ) == assertion_subset( a2, extend_assertion( a1, inc ) );
}

bool adjunction_forall( const inclusion& inc, const assertion& a1, const assertion& a2 )
{
    return assertion_subset( extend_assertion( a1, inc ), a2 ) == assertion_subset( a1, project_assertion_forall( a2, inc ) );
}

bool projection_identity_small( const inclusion& inc, const assertion& a1 )
{
    return project_assertion_exists( extend_assertion( a1, inc ), inc ) == a1;
}

bool projection_identity_large( const inclusion& inc, const assertion& a2 )
{
    return assertion_subset( extend_assertion( project_assertion_forall( a2, inc ), inc ), a2 )
           && assertion_subset( a2, extend_assertion( project_assertion_exists( a2, inc ), inc ) );
}

bool extension_monotone( const inclusion& inc, const assertion& a, const assertion& b )
{
    return !assertion_subset( a, b ) || assertion_subset( extend_assertion( a, inc ), extend_assertion( b, inc ) );
}

bool projection_monotone( const inclusion& inc, const assertion& a, const assertion& b )
{
    if ( !assertion_subset( a, b ) )
        return true;
    return assertion_subset( project_assertion_exists( a, inc ), project_assertion_exists( b, inc ) )
           && assertion_subset( project_assertion_forall( a, inc ), project_assertion_forall( b, inc ) );
}

bool extension_roundtrip( const inclusion& inc, const contract& c, const operator_set& ops )
{
    return ops.equiv( project_contract( extend_contract( c, inc ), inc ), saturate( c ) );
}

bool extension_preserves_refinement( const inclusion& inc, const contract& c1, const contract& c2,
                                     const operator_set& ops )
{
    return !ops.refines( c1, c2 ) || ops.refines( extend_contract( c1, inc ), extend_contract( c2, inc ) );
}

bool elimination_commutes( const contract& c, const std::string& v, const std::string& w, const operator_set& ops )
{
    const auto vw = eliminate_variable( eliminate_variable( c, v ), w );
    const auto wv = eliminate_variable( eliminate_variable( c, w ), v );
    const auto both = eliminate_variables( c, var_set{ v, w } );
    return ops.equiv( vw, wv ) && ops.equiv( vw, both );
}

bool extended_compose_correct( const contract& c1, const contract& c2, const var_set& target, const assertion& sigma1,
                               const assertion& sigma2, bool unite, const operator_set& ops )
{
    if ( !implements( sigma1, c1 ) || !implements( sigma2, c2 ) )
        return true;
    const auto e1 = extend_assertion( sigma1, inclusion( c1.vars(), target ) );
    const auto e2 = extend_assertion( sigma2, inclusion( c2.vars(), target ) );
    return implements( unite ? e1 | e2 : e1 & e2, ops.extended_compose( c1, c2, target ) );
}

bool refines_f_correct( const contract_f& cf1, const contract_f& cf2, const contract& k1, const contract& k2,
                        const operator_set& ops )
{
    return ops.refines( k1, k2 ) == refines_f( cf1, cf2 );
}

bool compose_f_correct( const contract_f& cf1, const contract_f& cf2, const contract& k1, const contract& k2,
                        const operator_set& ops )
{
    return ops.equiv( c2c( compose_f( cf1, cf2 ) ), ops.compose( k1, k2 ) );
}

bool glb_f_correct( const contract_f& cf1, const contract_f& cf2, const contract& k1, const contract& k2,
                    const operator_set& ops )
{
    return ops.equiv( c2c( glb_f( cf1, cf2 ) ), ops.conjoin( k1, k2 ) );
}

// ---------------------------------------------------------------------------
// Tables for the sweeps that quantify over components. Every entry is
// computed with the public operators; the sweeps only index into them.

struct scale_tables
{
    theory th;
    var_set vars;
    std::vector< assertion > assertions;
    std::vector< contract > contracts;
    std::vector< boost::dynamic_bitset<> > implementing;  // per contract, over assertions
    std::vector< boost::dynamic_bitset<> > providing;     // per contract, over assertions
    std::vector< std::size_t > meet;                      // assertion positions, row major
    std::vector< std::size_t > join;

    scale_tables( theory t, var_set v ) : th{ std::move( t ) }, vars{ std::move( v ) }
    {
        assertions = enumerate_assertions( th, vars );
    }

    [[nodiscard]] std::size_t width() const { return assertions.size(); }

    void with_contracts()
    {
        contracts = enumerate_contracts( th, vars );
    }

    void with_relations()
    {
        if ( contracts.empty() )
            with_contracts();
        implementing.assign( contracts.size(), boost::dynamic_bitset<>( width() ) );
        providing.assign( contracts.size(), boost::dynamic_bitset<>( width() ) );
        for ( std::size_t c = 0; c < contracts.size(); ++c )
            for ( std::size_t a = 0; a < width(); ++a )
            {
                implementing[ c ][ a ] = implements( assertions[ a ], contracts[ c ] );
                providing[ c ][ a ] = provides( assertions[ a ], contracts[ c ] );
            }
    }

    void with_lattice()
    {
        meet.resize( width() * width() );
        join.resize( width() * width() );
        for ( std::size_t i = 0; i < width(); ++i )
            for ( std::size_t j = 0; j < width(); ++j )
            {
                meet[ i * width() + j ] = assertion_position( assertions[ i ] & assertions[ j ] );
                join[ i * width() + j ] = assertion_position( assertions[ i ] | assertions[ j ] );
            }
    }

    [[nodiscard]] std::size_t meet_of( std::size_t i, std::size_t j ) const { return meet[ i * width() + j ]; }
    [[nodiscard]] std::size_t join_of( std::size_t i, std::size_t j ) const { return join[ i * width() + j ]; }
};

std::vector< std::size_t > members( const boost::dynamic_bitset<>& bits )
{
    std::vector< std::size_t > out;
    for ( auto i = bits.find_first(); i != boost::dynamic_bitset<>::npos; i = bits.find_next( i ) )
        out.push_back( i );
    return out;
}

// refines matrix: below[x] holds every c with c refining x.
std::vector< boost::dynamic_bitset<> > refinement_columns( const std::vector< contract >& contracts,
                                                           const operator_set& ops )
{
    std::vector< boost::dynamic_bitset<> > below( contracts.size(), boost::dynamic_bitset<>( contracts.size() ) );
    for ( std::size_t i = 0; i < contracts.size(); ++i )
        for ( std::size_t j = 0; j < contracts.size(); ++j )
            below[ j ][ i ] = ops.refines( contracts[ i ], contracts[ j ] );
    return below;
}

std::vector< var_set > subsets_of( const var_set& vars )
{
    std::vector< var_set > out;
    const std::size_t n = vars.size();
    for ( std::size_t mask = 0; mask < ( std::size_t{ 1 } << n ); ++mask )
    {
        std::vector< std::string > chosen;
        for ( std::size_t i = 0; i < n; ++i )
            if ( mask & ( std::size_t{ 1 } << i ) )
                chosen.push_back( vars[ i ] );
        out.emplace_back( std::move( chosen ) );
    }
    return out;
}

// ---------------------------------------------------------------------------
// Theorem registry

enum class scope
{
    single,     // one theory and variable set
    inclusion_, // a large set and every subset of it
};

struct sweep_result
{
    std::size_t instances = 0;
    std::optional< instance > counterexample;
};

using sweep_fn = std::function< sweep_result( const theory&, const var_set&, const operator_set& ) >;
using holds_fn = std::function< bool( const instance&, const operator_set& ) >;
using sample_fn = std::function< instance( sampler&, const oracle_config&, const operator_set& ) >;

struct theorem_def
{
    std::string name;
    bool asserted = true;
    scope kind = scope::single;
    std::size_t exhaustive_limit = 0; // extra cap on states for the exhaustive tier, 0 for none
    std::size_t min_vars = 0;         // exhaustive scales need at least this many variables
    holds_fn holds;
    sweep_fn sweep;
    sample_fn sample;
};

instance base( const theory& th )
{
    instance inst;
    inst.domain = th;
    return inst;
}

instance contracts_instance( const theory& th, std::initializer_list< std::pair< const char*, contract > > cs )
{
    auto inst = base( th );
    for ( const auto& [ name, c ] : cs )
        inst.contracts.emplace( name, c );
    return inst;
}

instance inclusion_instance( const theory& th, const inclusion& inc )
{
    auto inst = base( th );
    inst.var_sets.emplace( "small", inc.small() );
    inst.var_sets.emplace( "large", inc.large() );
    return inst;
}

inclusion inclusion_of( const instance& inst )
{
    return inclusion( inst.vs( "small" ), inst.vs( "large" ) );
}

// A sweep over every contract pair that calls pred directly.
template < typename Pred >
sweep_result sweep_pairs( const theory& th, const var_set& vars, Pred pred )
{
    sweep_result out;
    const auto contracts = enumerate_contracts( th, vars );
    for ( const auto& c1 : contracts )
        for ( const auto& c2 : contracts )
        {
            ++out.instances;
            if ( !pred( c1, c2 ) )
            {
                out.counterexample = contracts_instance( th, { { "c1", c1 }, { "c2", c2 } } );
                return out;
            }
        }
    return out;
}

theory sample_theory( sampler& rng, const oracle_config& config, std::size_t min_vars = 0 )
{
    return rng.random_theory( config.randomized_cap, min_vars );
}

std::vector< theorem_def > build_registry()
{
    std::vector< theorem_def > defs;

    defs.push_back( {
            "saturate_sound", true, scope::single, 0, 0,
            []( const instance& i, const operator_set& ) { return saturate_sound( i.s( "s" ), i.c( "c" ) ); },
            []( const theory& th, const var_set& vars, const operator_set& ) {
                sweep_result out;
                const auto states = enumerate_states( th, vars );
                for ( const auto& c : enumerate_contracts( th, vars ) )
                    for ( const auto& s : states )
                    {
                        ++out.instances;
                        if ( !saturate_sound( s, c ) )
                        {
                            auto inst = contracts_instance( th, { { "c", c } } );
                            inst.states.emplace( "s", s );
                            out.counterexample = std::move( inst );
                            return out;
                        }
                    }
                return out;
            },
            []( sampler& rng, const oracle_config& cfg, const operator_set& ) {
                auto th = sample_theory( rng, cfg );
                auto vars = rng.random_var_set( th, cfg.randomized_cap );
                auto inst = contracts_instance( th, { { "c", rng.random_contract( th, vars ) } } );
                inst.states.emplace( "s", rng.random_state( th, vars ) );
                return inst;
            } } );

    defs.push_back( {
            "saturation_idempotent", true, scope::single, 0, 0,
            []( const instance& i, const operator_set& ) { return saturation_idempotent( i.c( "c" ) ); },
            []( const theory& th, const var_set& vars, const operator_set& ) {
                sweep_result out;
                for ( const auto& c : enumerate_contracts( th, vars ) )
                {
                    ++out.instances;
                    if ( !saturation_idempotent( c ) )
                    {
                        out.counterexample = contracts_instance( th, { { "c", c } } );
                        return out;
                    }
                }
                return out;
            },
            []( sampler& rng, const oracle_config& cfg, const operator_set& ) {
                auto th = sample_theory( rng, cfg );
                auto vars = rng.random_var_set( th, cfg.randomized_cap );
                return contracts_instance( th, { { "c", rng.random_contract( th, vars ) } } );
            } } );

    defs.push_back( {
            "witness_maximality", true, scope::single, 0, 0,
            []( const instance& i, const operator_set& ) {
                return witness_maximality( i.c( "c" ), i.a( "sigma" ), i.a( "e" ) );
            },
            []( const theory& th, const var_set& vars, const operator_set& ) {
                sweep_result out;
                const auto all = enumerate_assertions( th, vars );
                for ( const auto& c : enumerate_contracts( th, vars ) )
                    for ( const auto& a : all )
                    {
                        ++out.instances;
                        if ( !witness_maximality( c, a, a ) )
                        {
                            auto inst = contracts_instance( th, { { "c", c } } );
                            inst.assertions.emplace( "sigma", a );
                            inst.assertions.emplace( "e", a );
                            out.counterexample = std::move( inst );
                            return out;
                        }
                    }
                return out;
            },
            []( sampler& rng, const oracle_config& cfg, const operator_set& ) {
                auto th = sample_theory( rng, cfg );
                auto vars = rng.random_var_set( th, cfg.randomized_cap );
                auto c = rng.random_contract( th, vars );
                auto inst = contracts_instance( th, { { "c", c } } );
                // Half the draws land inside the maximal witnesses so both
                // answers of each relation are exercised.
                inst.assertions.emplace( "sigma", rng.coin() ? rng.random_subset_of( max_implementation( c ) )
                                                             : rng.random_assertion( th, vars ) );
                inst.assertions.emplace( "e", rng.coin() ? rng.random_subset_of( max_environment( c ) )
                                                         : rng.random_assertion( th, vars ) );
                return inst;
            } } );

    defs.push_back( {
            "refinement_order_laws", true, scope::single, 0, 0,
            []( const instance& i, const operator_set& ops ) {
                return refinement_law_failure( i.c( "c1" ), i.c( "c2" ), i.c( "c3" ), ops ).empty();
            },
            []( const theory& th, const var_set& vars, const operator_set& ops ) {
                sweep_result out;
                scale_tables t( th, vars );
                t.with_contracts();
                const auto& cs = t.contracts;
                const std::size_t n = cs.size();
                auto fail = [ & ]( std::size_t a, std::size_t b, std::size_t c, const char* law ) {
                    auto inst = contracts_instance( th, { { "c1", cs[ a ] }, { "c2", cs[ b ] }, { "c3", cs[ c ] } } );
                    inst.labels.emplace( "law", law );
                    out.counterexample = std::move( inst );
                    return out;
                };
                for ( std::size_t i = 0; i < n; ++i )
                {
                    ++out.instances;
                    if ( !ops.refines( cs[ i ], cs[ i ] ) )
                        return fail( i, i, i, "reflexivity" );
                }
                const auto below = refinement_columns( cs, ops );
                auto refines_at = [ & ]( std::size_t a, std::size_t b ) { return below[ b ][ a ]; };
                for ( std::size_t i = 0; i < n; ++i )
                    for ( std::size_t j = 0; j < n; ++j )
                    {
                        ++out.instances;
                        if ( refines_at( i, j ) && refines_at( j, i ) && !same_sets( saturate( cs[ i ] ), saturate( cs[ j ] ) ) )
                            return fail( i, j, i, "antisymmetry" );
                    }
                for ( std::size_t i = 0; i < n; ++i )
                    for ( std::size_t j = 0; j < n; ++j )
                    {
                        if ( !refines_at( i, j ) )
                        {
                            out.instances += n;
                            continue;
                        }
                        for ( std::size_t k = 0; k < n; ++k )
                        {
                            ++out.instances;
                            if ( refines_at( j, k ) && !refines_at( i, k ) )
                                return fail( i, j, k, "transitivity" );
                        }
                    }
                return out;
            },
            []( sampler& rng, const oracle_config& cfg, const operator_set& ) {
                auto th = sample_theory( rng, cfg );
                auto vars = rng.random_var_set( th, cfg.randomized_cap );
                auto c1 = rng.random_contract( th, vars );
                // Chains of weakenings make the premises of antisymmetry and
                // transitivity hold often enough to matter.
                auto weaken = [ & ]( const contract& c ) {
                    const auto s = saturate( c );
                    return contract( rng.random_subset_of( s.assume() ), rng.random_superset_of( s.guarantee() ) );
                };
                contract c2 = rng.coin() ? weaken( c1 ) : rng.random_contract( th, vars );
                if ( rng.draw( 4 ) == 0 )
                    c2 = contract( c1.assume(), c1.guarantee() | ( ~c1.assume() & rng.random_assertion( th, vars ) ) );
                contract c3 = rng.coin() ? weaken( c2 ) : rng.random_contract( th, vars );
                return contracts_instance( th, { { "c1", c1 }, { "c2", c2 }, { "c3", c3 } } );
            } } );

    defs.push_back( {
            "refines_correct", true, scope::single, 0, 0,
            []( const instance& i, const operator_set& ops ) { return refines_correct( i.c( "c1" ), i.c( "c2" ), ops ); },
            []( const theory& th, const var_set& vars, const operator_set& ops ) {
                sweep_result out;
                scale_tables t( th, vars );
                t.with_relations();
                const auto& cs = t.contracts;
                for ( std::size_t i = 0; i < cs.size(); ++i )
                    for ( std::size_t j = 0; j < cs.size(); ++j )
                    {
                        ++out.instances;
                        const bool semantic = t.implementing[ i ].is_subset_of( t.implementing[ j ] )
                                              && t.providing[ j ].is_subset_of( t.providing[ i ] );
                        if ( ops.refines( cs[ i ], cs[ j ] ) != semantic )
                        {
                            out.counterexample = contracts_instance( th, { { "c1", cs[ i ] }, { "c2", cs[ j ] } } );
                            return out;
                        }
                    }
                return out;
            },
            []( sampler& rng, const oracle_config& cfg, const operator_set& ) {
                auto th = sample_theory( rng, cfg );
                auto vars = rng.random_var_set( th, cfg.randomized_cap );
                auto c1 = rng.random_contract( th, vars );
                auto c2 = rng.coin() ? rng.random_contract( th, vars )
                                     : contract( rng.random_subset_of( c1.assume() ),
                                                 rng.random_superset_of( max_implementation( c1 ) ) );
                return contracts_instance( th, { { "c1", c1 }, { "c2", c2 } } );
            } } );

    defs.push_back( {
            "glb_correct", true, scope::single, 0, 0,
            []( const instance& i, const operator_set& ops ) {
                return glb_failure( i.c( "c1" ), i.c( "c2" ), i.c( "c" ), ops ).empty();
            },
            []( const theory& th, const var_set& vars, const operator_set& ops ) {
                sweep_result out;
                scale_tables t( th, vars );
                t.with_contracts();
                const auto& cs = t.contracts;
                const auto below = refinement_columns( cs, ops );
                for ( std::size_t i = 0; i < cs.size(); ++i )
                    for ( std::size_t j = 0; j < cs.size(); ++j )
                    {
                        const auto g = contract_position( ops.conjoin( cs[ i ], cs[ j ] ) );
                        ++out.instances;
                        auto fail = [ & ]( std::size_t k, const char* clause ) {
                            auto inst = contracts_instance( th, { { "c1", cs[ i ] }, { "c2", cs[ j ] }, { "c", cs[ k ] } } );
                            inst.labels.emplace( "clause", clause );
                            out.counterexample = std::move( inst );
                            return out;
                        };
                        if ( !below[ i ][ g ] || !below[ j ][ g ] )
                            return fail( g, "lower bound" );
                        const auto common = below[ i ] & below[ j ];
                        out.instances += cs.size();
                        if ( !common.is_subset_of( below[ g ] ) )
                        {
                            const auto witness = ( common - below[ g ] ).find_first();
                            return fail( witness, "greatest" );
                        }
                    }
                return out;
            },
            []( sampler& rng, const oracle_config& cfg, const operator_set& ) {
                auto th = sample_theory( rng, cfg );
                auto vars = rng.random_var_set( th, cfg.randomized_cap );
                auto c1 = rng.random_contract( th, vars );
                auto c2 = rng.random_contract( th, vars );
                contract c = rng.random_contract( th, vars );
                if ( rng.coin() )
                {
                    // A common lower bound: assumes at least both, guarantees
                    // at most both.
                    const auto s1 = saturate( c1 );
                    const auto s2 = saturate( c2 );
                    c = contract( rng.random_superset_of( s1.assume() | s2.assume() ),
                                  rng.random_subset_of( s1.guarantee() & s2.guarantee() ) );
                }
                return contracts_instance( th, { { "c1", c1 }, { "c2", c2 }, { "c", c } } );
            } } );

    defs.push_back( {
            "compose_correct", true, scope::single, 0, 0,
            []( const instance& i, const operator_set& ops ) {
                return compose_correct( i.c( "c1" ), i.c( "c2" ), i.a( "sigma1" ), i.a( "sigma2" ), i.a( "e" ), ops );
            },
            []( const theory& th, const var_set& vars, const operator_set& ops ) {
                sweep_result out;
                scale_tables t( th, vars );
                t.with_relations();
                t.with_lattice();
                const auto& cs = t.contracts;
                std::vector< std::vector< std::size_t > > impls;
                for ( const auto& row : t.implementing )
                    impls.push_back( members( row ) );
                for ( std::size_t i = 0; i < cs.size(); ++i )
                    for ( std::size_t j = 0; j < cs.size(); ++j )
                    {
                        const auto comp = contract_position( ops.compose( cs[ i ], cs[ j ] ) );
                        const auto envs = members( t.providing[ comp ] );
                        for ( auto s1 : impls[ i ] )
                            for ( auto s2 : impls[ j ] )
                                for ( auto e : envs )
                                {
                                    ++out.instances;
                                    if ( t.implementing[ comp ][ t.meet_of( s1, s2 ) ]
                                         && t.providing[ i ][ t.meet_of( e, s2 ) ] && t.providing[ j ][ t.meet_of( e, s1 ) ] )
                                        continue;
                                    auto inst = contracts_instance( th, { { "c1", cs[ i ] }, { "c2", cs[ j ] } } );
                                    inst.assertions.emplace( "sigma1", t.assertions[ s1 ] );
                                    inst.assertions.emplace( "sigma2", t.assertions[ s2 ] );
                                    inst.assertions.emplace( "e", t.assertions[ e ] );
                                    out.counterexample = std::move( inst );
                                    return out;
                                }
                    }
                return out;
            },
            []( sampler& rng, const oracle_config& cfg, const operator_set& ops ) {
                auto th = sample_theory( rng, cfg );
                auto vars = rng.random_var_set( th, cfg.randomized_cap );
                auto c1 = rng.random_contract( th, vars );
                auto c2 = rng.random_contract( th, vars );
                auto inst = contracts_instance( th, { { "c1", c1 }, { "c2", c2 } } );
                // Drawn inside the maximal witnesses so the hypotheses hold.
                inst.assertions.emplace( "sigma1", rng.random_subset_of( max_implementation( c1 ) ) );
                inst.assertions.emplace( "sigma2", rng.random_subset_of( max_implementation( c2 ) ) );
                inst.assertions.emplace( "e", rng.random_subset_of( max_environment( ops.compose( c1, c2 ) ) ) );
                return inst;
            } } );

    defs.push_back( {
            "compose_lowest", true, scope::single, 2, 0,
            []( const instance& i, const operator_set& ops ) {
                return compose_lowest( i.c( "c1" ), i.c( "c2" ), i.c( "c" ), ops );
            },
            []( const theory& th, const var_set& vars, const operator_set& ops ) {
                sweep_result out;
                const auto cs = enumerate_contracts( th, vars );
                for ( const auto& c1 : cs )
                    for ( const auto& c2 : cs )
                        for ( const auto& c : cs )
                        {
                            ++out.instances;
                            if ( !compose_lowest( c1, c2, c, ops ) )
                            {
                                out.counterexample = contracts_instance( th, { { "c1", c1 }, { "c2", c2 }, { "c", c } } );
                                return out;
                            }
                        }
                return out;
            },
            []( sampler& rng, const oracle_config& cfg, const operator_set& ) {
                auto th = sample_theory( rng, cfg );
                auto vars = rng.random_var_set( th, cfg.randomized_cap );
                auto c1 = rng.random_contract( th, vars );
                auto c2 = rng.random_contract( th, vars );
                contract c = rng.random_contract( th, vars );
                if ( rng.draw( 4 ) != 0 )
                {
                    // Weakenings of the reference composition satisfy the
                    // hypothesis, which uniform draws rarely do.
                    const auto ref = agc::compose( c1, c2 );
                    c = contract( rng.random_subset_of( ref.assume() ), rng.random_superset_of( ref.guarantee() ) );
                }
                return contracts_instance( th, { { "c1", c1 }, { "c2", c2 }, { "c", c } } );
            } } );

    defs.push_back( {
            "composition_commutes", true, scope::single, 0, 0,
            []( const instance& i, const operator_set& ops ) { return composition_commutes( i.c( "c1" ), i.c( "c2" ), ops ); },
            []( const theory& th, const var_set& vars, const operator_set& ops ) {
                return sweep_pairs( th, vars, [ & ]( const contract& a, const contract& b ) {
                    return composition_commutes( a, b, ops );
                } );
            },
            []( sampler& rng, const oracle_config& cfg, const operator_set& ) {
                auto th = sample_theory( rng, cfg );
                auto vars = rng.random_var_set( th, cfg.randomized_cap );
                return contracts_instance( th, { { "c1", rng.random_contract( th, vars ) },
                                                 { "c2", rng.random_contract( th, vars ) } } );
            } } );

    defs.push_back( {
            "compose_saturated", true, scope::single, 0, 0,
            []( const instance& i, const operator_set& ops ) { return compose_saturated( i.c( "c1" ), i.c( "c2" ), ops ); },
            []( const theory& th, const var_set& vars, const operator_set& ops ) {
                return sweep_pairs( th, vars, [ & ]( const contract& a, const contract& b ) {
                    return compose_saturated( a, b, ops );
                } );
            },
            []( sampler& rng, const oracle_config& cfg, const operator_set& ) {
                auto th = sample_theory( rng, cfg );
                auto vars = rng.random_var_set( th, cfg.randomized_cap );
                return contracts_instance( th, { { "c1", rng.random_contract( th, vars ) },
                                                 { "c2", rng.random_contract( th, vars ) } } );
            } } );

    // Alphabet theorems.

    auto assertion_pair_theorem = []( std::string name, bool ( *pred )( const inclusion&, const assertion&, const assertion& ),
                                      bool small_first, bool small_second ) {
        theorem_def def;
        def.name = std::move( name );
        def.kind = scope::inclusion_;
        def.holds = [ pred ]( const instance& i, const operator_set& ) {
            return pred( inclusion_of( i ), i.a( "a1" ), i.a( "a2" ) );
        };
        def.sweep = [ pred, small_first, small_second ]( const theory& th, const var_set& large, const operator_set& ) {
            sweep_result out;
            const auto large_all = enumerate_assertions( th, large );
            for ( const auto& small : subsets_of( large ) )
            {
                const inclusion inc( small, large );
                const auto small_all = enumerate_assertions( th, small );
                const auto& first = small_first ? small_all : large_all;
                const auto& second = small_second ? small_all : large_all;
                for ( const auto& a1 : first )
                    for ( const auto& a2 : second )
                    {
                        ++out.instances;
                        if ( !pred( inc, a1, a2 ) )
                        {
                            auto inst = inclusion_instance( th, inc );
                            inst.assertions.emplace( "a1", a1 );
                            inst.assertions.emplace( "a2", a2 );
                            out.counterexample = std::move( inst );
                            return out;
                        }
                    }
            }
            return out;
        };
        def.sample = [ small_first, small_second ]( sampler& rng, const oracle_config& cfg, const operator_set& ) {
            auto th = sample_theory( rng, cfg );
            auto inc = rng.random_inclusion( th, cfg.randomized_cap );
            auto inst = inclusion_instance( th, inc );
            auto a1 = rng.random_assertion( th, small_first ? inc.small() : inc.large() );
            auto a2 = rng.random_assertion( th, small_second ? inc.small() : inc.large() );
            if ( small_first == small_second && rng.coin() )
                a2 = a1 | a2; // make the ordering premise hold
            inst.assertions.emplace( "a1", a1 );
            inst.assertions.emplace( "a2", a2 );
            return inst;
        };
        return def;
    };

    defs.push_back( assertion_pair_theorem( "adjunction_exists", &adjunction_exists, true, false ) );
    defs.push_back( assertion_pair_theorem( "adjunction_forall", &adjunction_forall, true, false ) );
    defs.push_back( assertion_pair_theorem(
            "projection_identities",
            []( const inclusion& inc, const assertion& a1, const assertion& a2 ) {
                return projection_identity_small( inc, a1 ) && projection_identity_large( inc, a2 );
            },
            true, false ) );
    defs.push_back( assertion_pair_theorem( "extension_monotone", &extension_monotone, true, true ) );
    defs.push_back( assertion_pair_theorem( "projection_monotone", &projection_monotone, false, false ) );

    {
        theorem_def def;
        def.name = "extension_roundtrip";
        def.kind = scope::inclusion_;
        def.holds = []( const instance& i, const operator_set& ops ) {
            const auto inc = inclusion_of( i );
            return extension_roundtrip( inc, i.c( "c1" ), ops )
                   && extension_preserves_refinement( inc, i.c( "c1" ), i.c( "c2" ), ops );
        };
        def.sweep = []( const theory& th, const var_set& large, const operator_set& ops ) {
            sweep_result out;
            for ( const auto& small : subsets_of( large ) )
            {
                const inclusion inc( small, large );
                const auto cs = enumerate_contracts( th, small );
                auto fail = [ & ]( const contract& a, const contract& b ) {
                    auto inst = inclusion_instance( th, inc );
                    inst.contracts.emplace( "c1", a );
                    inst.contracts.emplace( "c2", b );
                    out.counterexample = std::move( inst );
                    return out;
                };
                for ( const auto& c : cs )
                {
                    ++out.instances;
                    if ( !extension_roundtrip( inc, c, ops ) )
                        return fail( c, c );
                }
                for ( const auto& c1 : cs )
                    for ( const auto& c2 : cs )
                    {
                        ++out.instances;
                        if ( !extension_preserves_refinement( inc, c1, c2, ops ) )
                            return fail( c1, c2 );
                    }
            }
            return out;
        };
        def.sample = []( sampler& rng, const oracle_config& cfg, const operator_set& ) {
            auto th = sample_theory( rng, cfg );
            auto inc = rng.random_inclusion( th, cfg.randomized_cap );
            auto inst = inclusion_instance( th, inc );
            auto c1 = rng.random_contract( th, inc.small() );
            auto c2 = rng.coin() ? rng.random_contract( th, inc.small() )
                                 : contract( rng.random_subset_of( c1.assume() ),
                                             rng.random_superset_of( max_implementation( c1 ) ) );
            inst.contracts.emplace( "c1", c1 );
            inst.contracts.emplace( "c2", c2 );
            return inst;
        };
        defs.push_back( std::move( def ) );
    }

    {
        theorem_def def;
        def.name = "elimination_commutes";
        def.min_vars = 2;
        def.holds = []( const instance& i, const operator_set& ops ) {
            return elimination_commutes( i.c( "c" ), i.label( "v" ), i.label( "w" ), ops );
        };
        def.sweep = []( const theory& th, const var_set& vars, const operator_set& ops ) {
            sweep_result out;
            for ( const auto& c : enumerate_contracts( th, vars ) )
                for ( const auto& v : vars )
                    for ( const auto& w : vars )
                    {
                        if ( v == w )
                            continue;
                        ++out.instances;
                        if ( !elimination_commutes( c, v, w, ops ) )
                        {
                            auto inst = contracts_instance( th, { { "c", c } } );
                            inst.labels.emplace( "v", v );
                            inst.labels.emplace( "w", w );
                            out.counterexample = std::move( inst );
                            return out;
                        }
                    }
            return out;
        };
        def.sample = []( sampler& rng, const oracle_config& cfg, const operator_set& ) {
            auto th = sample_theory( rng, cfg, 2 );
            auto vars = rng.random_var_set( th, cfg.randomized_cap, 2 );
            auto inst = contracts_instance( th, { { "c", rng.random_contract( th, vars ) } } );
            const auto v = rng.draw( vars.size() );
            auto w = rng.draw( vars.size() - 1 );
            if ( w >= v )
                ++w;
            inst.labels.emplace( "v", vars[ v ] );
            inst.labels.emplace( "w", vars[ w ] );
            return inst;
        };
        defs.push_back( std::move( def ) );
    }

    for ( bool unite : { false, true } )
    {
        theorem_def def;
        def.name = unite ? "extended_compose_correct_union" : "extended_compose_correct_intersection";
        def.asserted = !unite;
        def.kind = scope::inclusion_;
        def.holds = [ unite ]( const instance& i, const operator_set& ops ) {
            return extended_compose_correct( i.c( "c1" ), i.c( "c2" ), i.vs( "target" ), i.a( "sigma1" ),
                                             i.a( "sigma2" ), unite, ops );
        };
        def.sweep = [ unite ]( const theory& th, const var_set& target, const operator_set& ops ) {
            sweep_result out;
            scale_tables big( th, target );
            big.with_relations();
            big.with_lattice();

            struct side
            {
                var_set vars;
                std::vector< contract > contracts;
                std::vector< std::vector< std::size_t > > implementations;
                std::vector< std::size_t > extension; // small assertion position -> large position
                std::vector< assertion > assertions;
            };
            std::vector< side > sides;
            for ( const auto& small : subsets_of( target ) )
            {
                scale_tables t( th, small );
                t.with_relations();
                side s{ small, t.contracts, {}, {}, t.assertions };
                for ( const auto& row : t.implementing )
                    s.implementations.push_back( members( row ) );
                const inclusion inc( small, target );
                for ( const auto& a : t.assertions )
                    s.extension.push_back( assertion_position( extend_assertion( a, inc ) ) );
                sides.push_back( std::move( s ) );
            }

            for ( const auto& d1 : sides )
                for ( const auto& d2 : sides )
                    for ( std::size_t i = 0; i < d1.contracts.size(); ++i )
                        for ( std::size_t j = 0; j < d2.contracts.size(); ++j )
                        {
                            const auto ec
                                    = contract_position( ops.extended_compose( d1.contracts[ i ], d2.contracts[ j ], target ) );
                            for ( auto s1 : d1.implementations[ i ] )
                                for ( auto s2 : d2.implementations[ j ] )
                                {
                                    ++out.instances;
                                    const auto x1 = d1.extension[ s1 ];
                                    const auto x2 = d2.extension[ s2 ];
                                    const auto combined = unite ? big.join_of( x1, x2 ) : big.meet_of( x1, x2 );
                                    if ( big.implementing[ ec ][ combined ] )
                                        continue;
                                    auto inst = contracts_instance( th, { { "c1", d1.contracts[ i ] },
                                                                          { "c2", d2.contracts[ j ] } } );
                                    inst.var_sets.emplace( "target", target );
                                    inst.assertions.emplace( "sigma1", d1.assertions[ s1 ] );
                                    inst.assertions.emplace( "sigma2", d2.assertions[ s2 ] );
                                    out.counterexample = std::move( inst );
                                    return out;
                                }
                        }
            return out;
        };
        def.sample = []( sampler& rng, const oracle_config& cfg, const operator_set& ) {
            auto th = sample_theory( rng, cfg );
            auto target = rng.random_var_set( th, cfg.randomized_cap );
            auto d1 = rng.random_subset( target );
            auto d2 = rng.random_subset( target );
            auto c1 = rng.random_contract( th, d1 );
            auto c2 = rng.random_contract( th, d2 );
            auto inst = contracts_instance( th, { { "c1", c1 }, { "c2", c2 } } );
            inst.var_sets.emplace( "target", target );
            inst.assertions.emplace( "sigma1", rng.random_subset_of( max_implementation( c1 ) ) );
            inst.assertions.emplace( "sigma2", rng.random_subset_of( max_implementation( c2 ) ) );
            return inst;
        };
        defs.push_back( std::move( def ) );
    }

    // Formula-level theorems: every pair of formula contracts whose four
    // formulas have depth at most two.

    using formula_pred = bool ( * )( const contract_f&, const contract_f&, const contract&, const contract&,
                                     const operator_set& );
    auto formula_theorem = []( std::string name, formula_pred pred ) {
        theorem_def def;
        def.name = std::move( name );
        def.holds = [ pred ]( const instance& i, const operator_set& ops ) {
            const auto& cf1 = i.cf( "cf1" );
            const auto& cf2 = i.cf( "cf2" );
            return pred( cf1, cf2, c2c( cf1 ), c2c( cf2 ), ops );
        };
        def.sweep = [ pred ]( const theory& th, const var_set& vars, const operator_set& ops ) {
            sweep_result out;
            const auto fs = enumerate_formulas( th, vars, 2 );
            std::vector< contract_f > cfs;
            std::vector< contract > meanings;
            for ( const auto& a : fs )
                for ( const auto& g : fs )
                {
                    cfs.emplace_back( a, g );
                    meanings.push_back( c2c( cfs.back() ) );
                }
            for ( std::size_t i = 0; i < cfs.size(); ++i )
                for ( std::size_t j = 0; j < cfs.size(); ++j )
                {
                    ++out.instances;
                    if ( !pred( cfs[ i ], cfs[ j ], meanings[ i ], meanings[ j ], ops ) )
                    {
                        auto inst = base( th );
                        inst.formula_contracts.emplace( "cf1", cfs[ i ] );
                        inst.formula_contracts.emplace( "cf2", cfs[ j ] );
                        out.counterexample = std::move( inst );
                        return out;
                    }
                }
            return out;
        };
        def.sample = []( sampler& rng, const oracle_config& cfg, const operator_set& ) {
            auto th = sample_theory( rng, cfg );
            auto vars = rng.random_var_set( th, cfg.randomized_cap );
            auto inst = base( th );
            auto f = [ & ] { return rng.random_formula( th, vars, 3 ); };
            auto a1 = f();
            auto g1 = f();
            auto a2 = f();
            auto g2 = f();
            inst.formula_contracts.emplace( "cf1", contract_f( a1, g1 ) );
            inst.formula_contracts.emplace( "cf2", contract_f( a2, g2 ) );
            return inst;
        };
        return def;
    };

    defs.push_back( formula_theorem( "refinesF_correct", &refines_f_correct ) );
    defs.push_back( formula_theorem( "composeF_correct", &compose_f_correct ) );
    defs.push_back( formula_theorem( "glbF_correct", &glb_f_correct ) );

    return defs;
}

const std::vector< theorem_def >& registry()
{
    static const std::vector< theorem_def > defs = build_registry();
    return defs;
}

const theorem_def& find_theorem( const std::string& name )
{
    for ( const auto& def : registry() )
        if ( def.name == name )
            return def;
    throw invalid_argument( "unknown theorem '" + name + "'" );
}

std::size_t theorem_stream( const std::string& name )
{
    const auto& defs = registry();
    for ( std::size_t i = 0; i < defs.size(); ++i )
        if ( defs[ i ].name == name )
            return i;
    return defs.size();
}

// Boolean and ternary domains over growing prefixes of {x, y, z}, keeping
// those whose state space fits under the cap.
std::vector< std::pair< theory, var_set > > standard_scales( std::size_t cap, std::size_t min_vars )
{
    const std::vector< std::string > names = { "x", "y", "z" };
    std::vector< std::pair< theory, var_set > > out;
    for ( std::size_t radix : { 2, 3 } )
        for ( std::size_t k = std::max< std::size_t >( min_vars, radix == 2 ? 0 : 1 ); k <= names.size(); ++k )
        {
            if ( power( radix, k ) > cap )
                break;
            const theory th = radix == 2 ? theory::boolean() : theory::range( radix );
            out.emplace_back( th, var_set( std::vector< std::string >( names.begin(), names.begin() + k ) ) );
        }
    return out;
}

check_report new_report( const theorem_def& def, tier t )
{
    check_report r;
    r.theorem = def.name;
    r.tier_ = t;
    r.asserted = def.asserted;
    return r;
}

void record_failure( check_report& report, instance inst )
{
    report.verdict_ = verdict::fail;
    report.counterexample = to_json( inst );
}

} // namespace

const std::vector< std::string >& theorem_names()
{
    static const std::vector< std::string > names = [] {
        std::vector< std::string > out;
        for ( const auto& def : registry() )
            out.push_back( def.name );
        return out;
    }();
    return names;
}

bool is_known_theorem( const std::string& name )
{
    return theorem_stream( name ) < registry().size();
}

bool is_asserted( const std::string& name )
{
    return find_theorem( name ).asserted;
}

check_report check_exhaustive( const std::string& name, const theory& th, const var_set& vars, const operator_set& ops )
{
    const auto& def = find_theorem( name );
    auto report = new_report( def, tier::exhaustive );
    if ( vars.size() < def.min_vars )
        return report;
    auto result = def.sweep( th, vars, ops );
    report.instances = result.instances;
    if ( result.counterexample )
        record_failure( report, std::move( *result.counterexample ) );
    return report;
}

check_report check_exhaustive( const std::string& name, const oracle_config& config, const operator_set& ops )
{
    validate( config );
    const auto& def = find_theorem( name );
    auto report = new_report( def, tier::exhaustive );
    const std::size_t cap = def.exhaustive_limit ? std::min( config.exhaustive_cap, def.exhaustive_limit )
                                                 : config.exhaustive_cap;
    for ( const auto& [ th, vars ] : standard_scales( cap, def.min_vars ) )
    {
        auto result = def.sweep( th, vars, ops );
        report.instances += result.instances;
        if ( result.counterexample )
        {
            record_failure( report, std::move( *result.counterexample ) );
            break;
        }
    }
    return report;
}

check_report check_randomized( const std::string& name, const oracle_config& config, const operator_set& ops )
{
    validate( config );
    const auto& def = find_theorem( name );
    auto report = new_report( def, tier::randomized );
    const auto stream = theorem_stream( name );
    for ( std::size_t trial = 0; trial < config.trials; ++trial )
    {
        sampler rng( config.seed, stream, trial );
        auto inst = def.sample( rng, config, ops );
        ++report.instances;
        if ( !def.holds( inst, ops ) )
        {
            inst.labels.emplace( "trial", std::to_string( trial ) );
            record_failure( report, std::move( inst ) );
            break;
        }
    }
    return report;
}

std::vector< check_report > check_theorem( const std::string& name, const oracle_config& config, const operator_set& ops )
{
    return { check_exhaustive( name, config, ops ), check_randomized( name, config, ops ) };
}

std::vector< check_report > run_all( const oracle_config& config, const operator_set& ops )
{
    std::vector< check_report > out;
    for ( const auto& name : theorem_names() )
        for ( auto& r : check_theorem( name, config, ops ) )
            out.push_back( std::move( r ) );
    return out;
}

bool replay( const std::string& name, const json& counterexample, const operator_set& ops )
{
    return find_theorem( name ).holds( instance_from_json( counterexample ), ops );
}

bool all_asserted_pass( const std::vector< check_report >& reports )
{
    return std::all_of( reports.begin(), reports.end(),
                        []( const check_report& r ) { return !r.asserted || r.verdict_ == verdict::pass; } );
}

json to_json( const check_report& report )
{
    json j = { { "theorem", report.theorem },
               { "tier", to_string( report.tier_ ) },
               { "instances", report.instances },
               { "verdict", to_string( report.verdict_ ) },
               { "asserted", report.asserted } };
    if ( report.counterexample )
        j[ "counterexample" ] = *report.counterexample;
    return j;
}

json to_json( const std::vector< check_report >& reports )
{
    json out = json::array();
    for ( const auto& r : reports )
        out.push_back( to_json( r ) );
    return out;
}

std::string format_table( const std::vector< check_report >& reports )
{
    std::size_t width = 7;
    for ( const auto& r : reports )
        width = std::max( width, r.theorem.size() );
    std::ostringstream out;
    out << std::left << std::setw( static_cast< int >( width ) ) << "theorem" << "  " << std::setw( 10 ) << "tier"
        << "  " << std::right << std::setw( 12 ) << "instances" << "  verdict\n";
    for ( const auto& r : reports )
    {
        out << std::left << std::setw( static_cast< int >( width ) ) << r.theorem << "  " << std::setw( 10 )
            << to_string( r.tier_ ) << "  " << std::right << std::setw( 12 ) << r.instances << "  "
            << to_string( r.verdict_ ) << ( r.asserted ? "" : " (informational)" ) << "\n";
        if ( r.counterexample )
            out << "    counterexample: " << r.counterexample->dump() << "\n";
    }
    return out.str();
}

} // namespace agc::oracle
