#pragma once

#include "agc/alphabet.hpp"
#include "agc/formula.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace agc::oracle
{

enum class tier
{
    exhaustive,
    randomized
};

enum class verdict
{
    pass,
    fail
};

[[nodiscard]] std::string to_string( tier t );
[[nodiscard]] std::string to_string( verdict v );

struct oracle_config
{
    std::uint64_t seed = 20240101;
    std::size_t trials = 10000;
    std::size_t exhaustive_cap = 4;   // largest state space swept exhaustively
    std::size_t randomized_cap = 64;  // largest state space sampled by the randomized tier
};

void validate( const oracle_config& config );

// The operators under test. The oracle calls refinement, conjunction and
// composition through this table so that deliberately broken variants can
// be substituted; everything else goes through the library directly.
struct operator_set
{
    std::function< bool( const contract&, const contract& ) > refines;
    std::function< contract( const contract&, const contract& ) > conjoin;
    std::function< contract( const contract&, const contract& ) > compose;

    [[nodiscard]] static operator_set standard();

    [[nodiscard]] bool equiv( const contract& a, const contract& b ) const;
    [[nodiscard]] contract extended_compose( const contract& c1, const contract& c2, const var_set& target ) const;
};

enum class mutation
{
    glb_intersects_assumptions,       // conjoin uses A1' & A2'
    compose_drops_negated_guarantee,  // compose uses A' = A1' & A2'
    refines_compares_assumption_to_guarantee, // refines checks A2' <= G1'
    compose_unites_guarantees         // compose uses G' = G1' | G2'
};

[[nodiscard]] operator_set mutated( mutation m );
[[nodiscard]] std::optional< mutation > mutation_from_name( const std::string& name );
[[nodiscard]] std::vector< std::string > mutation_names();

// Concrete values a theorem was evaluated on. Serialises to JSON and back
// so that a reported counterexample can be replayed.
struct instance
{
    std::optional< theory > domain;
    std::map< std::string, contract > contracts;
    std::map< std::string, assertion > assertions;
    std::map< std::string, state > states;
    std::map< std::string, contract_f > formula_contracts;
    std::map< std::string, var_set > var_sets;
    std::map< std::string, std::string > labels;

    [[nodiscard]] const theory& th() const;
    [[nodiscard]] const contract& c( const std::string& name ) const;
    [[nodiscard]] const assertion& a( const std::string& name ) const;
    [[nodiscard]] const state& s( const std::string& name ) const;
    [[nodiscard]] const contract_f& cf( const std::string& name ) const;
    [[nodiscard]] const var_set& vs( const std::string& name ) const;
    [[nodiscard]] const std::string& label( const std::string& name ) const;
};

[[nodiscard]] nlohmann::json to_json( const instance& inst );
[[nodiscard]] instance instance_from_json( const nlohmann::json& j );

struct check_report
{
    std::string theorem;
    tier tier_ = tier::exhaustive;
    std::size_t instances = 0;
    verdict verdict_ = verdict::pass;
    bool asserted = true;
    std::optional< nlohmann::json > counterexample;
};

// Every assertion over (th, vars) in bit-vector numeric order: bit i of the
// position is membership of state i.
[[nodiscard]] std::vector< assertion > enumerate_assertions( const theory& th, const var_set& vars,
                                                             std::size_t max_assertions = std::size_t{ 1 } << 16 );
// Cartesian square of enumerate_assertions, assumption major.
[[nodiscard]] std::vector< contract > enumerate_contracts( const theory& th, const var_set& vars,
                                                           std::size_t max_contracts = std::size_t{ 1 } << 16 );

// Position of a over its state space in enumerate_assertions order.
[[nodiscard]] std::size_t assertion_position( const assertion& a );
[[nodiscard]] std::size_t contract_position( const contract& c );

// Seeded generator of random theories, variable sets and values. All draws
// are uniform over their finite space.
class sampler
{
    std::mt19937_64 _rng;

public:
    explicit sampler( std::uint64_t seed );
    // Stream for one trial of one theorem.
    sampler( std::uint64_t seed, std::uint64_t stream, std::uint64_t trial );

    std::uint64_t draw( std::uint64_t bound );
    bool coin();

    // |B| in [1, 3] and |vars| in [min_vars, 3], subject to |B|^|vars| <= cap.
    theory random_theory( std::size_t cap, std::size_t min_vars = 0 );
    var_set random_var_set( const theory& th, std::size_t cap, std::size_t min_vars = 0 );
    var_set random_subset( const var_set& vars );

    assertion random_assertion( const theory& th, const var_set& vars );
    assertion random_subset_of( const assertion& a );
    assertion random_superset_of( const assertion& a );
    state random_state( const theory& th, const var_set& vars );
    contract random_contract( const theory& th, const var_set& vars );
    inclusion random_inclusion( const theory& th, std::size_t cap );
    formula random_formula( const theory& th, const var_set& vars, std::size_t max_depth );
};

// All formulas of depth at most max_depth (leaves have depth 1) built
// from true, every atom, negation and conjunction.
[[nodiscard]] std::vector< formula > enumerate_formulas( const theory& th, const var_set& vars, std::size_t max_depth );

[[nodiscard]] const std::vector< std::string >& theorem_names();
[[nodiscard]] bool is_known_theorem( const std::string& name );
// False for theorems whose outcome is reported but not required.
[[nodiscard]] bool is_asserted( const std::string& name );

// Exhaustive sweep at a single scale. For alphabet theorems vars is the
// large set and every subset of it is used as the small side.
[[nodiscard]] check_report check_exhaustive( const std::string& name, const theory& th, const var_set& vars,
                                             const operator_set& ops = operator_set::standard() );
// Exhaustive sweep over every standard scale within config.exhaustive_cap.
[[nodiscard]] check_report check_exhaustive( const std::string& name, const oracle_config& config,
                                             const operator_set& ops = operator_set::standard() );
[[nodiscard]] check_report check_randomized( const std::string& name, const oracle_config& config,
                                             const operator_set& ops = operator_set::standard() );
// Both tiers.
[[nodiscard]] std::vector< check_report > check_theorem( const std::string& name, const oracle_config& config,
                                                         const operator_set& ops = operator_set::standard() );
[[nodiscard]] std::vector< check_report > run_all( const oracle_config& config,
                                                   const operator_set& ops = operator_set::standard() );

// Re-evaluates a theorem on one serialised instance; true when it holds.
[[nodiscard]] bool replay( const std::string& name, const nlohmann::json& counterexample,
                           const operator_set& ops = operator_set::standard() );

[[nodiscard]] bool all_asserted_pass( const std::vector< check_report >& reports );
[[nodiscard]] nlohmann::json to_json( const check_report& report );
[[nodiscard]] nlohmann::json to_json( const std::vector< check_report >& reports );
[[nodiscard]] std::string format_table( const std::vector< check_report >& reports );

} // namespace agc::oracle
