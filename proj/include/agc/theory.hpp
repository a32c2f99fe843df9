#pragma once

#include "agc/error.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace agc
{

inline constexpr std::size_t default_state_cap = std::size_t{ 1 } << 20;

// A finite value domain. Values are kept in declaration order; that order
// drives the canonical enumeration of states. Copies share the same
// immutable storage.
class theory
{
    struct data
    {
        std::vector< std::string > values;
        std::string name;
        std::size_t max_states;
    };

    std::shared_ptr< const data > _data;

public:
    explicit theory( std::vector< std::string > values, std::string name = "theory",
                     std::size_t max_states = default_state_cap );

    // The two-valued domain {0, 1}.
    [[nodiscard]] static theory boolean( std::size_t max_states = default_state_cap );
    // The domain {0, 1, ..., n - 1}.
    [[nodiscard]] static theory range( std::size_t n, std::size_t max_states = default_state_cap );

    [[nodiscard]] const std::vector< std::string >& values() const { return _data->values; }
    [[nodiscard]] std::size_t size() const { return _data->values.size(); }
    [[nodiscard]] const std::string& name() const { return _data->name; }
    [[nodiscard]] std::size_t max_states() const { return _data->max_states; }
    [[nodiscard]] const std::string& any_value() const { return _data->values.front(); }

    [[nodiscard]] std::optional< std::size_t > value_index( std::string_view literal ) const;
    [[nodiscard]] const std::string& literal( std::size_t value ) const;

    // Same domain in the same order. The name and the cap do not take part.
    [[nodiscard]] bool operator==( const theory& other ) const;
};

// An ordered set of variable identifiers. Construction sorts the input and
// rejects duplicates, so equal sets always have equal sequences.
class var_set
{
    std::shared_ptr< const std::vector< std::string > > _vars;

public:
    var_set();
    explicit var_set( std::vector< std::string > vars );
    var_set( std::initializer_list< std::string > vars );

    [[nodiscard]] const std::vector< std::string >& vars() const { return *_vars; }
    [[nodiscard]] std::size_t size() const { return _vars->size(); }
    [[nodiscard]] bool empty() const { return _vars->empty(); }
    [[nodiscard]] auto begin() const { return _vars->begin(); }
    [[nodiscard]] auto end() const { return _vars->end(); }
    [[nodiscard]] const std::string& operator[]( std::size_t i ) const { return ( *_vars )[ i ]; }

    [[nodiscard]] bool contains( std::string_view id ) const;
    [[nodiscard]] std::optional< std::size_t > position( std::string_view id ) const;
    [[nodiscard]] bool is_subset_of( const var_set& other ) const;

    [[nodiscard]] var_set unite( const var_set& other ) const;
    [[nodiscard]] var_set without( const var_set& other ) const;

    // "{x, y}"
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] bool operator==( const var_set& other ) const;
};

// |values|^|vars|, or cap_exceeded when that exceeds the theory's cap.
[[nodiscard]] std::size_t state_count( const theory& th, const var_set& vars );

// A total valuation of a variable set. Values are stored as positions in
// the theory's value list.
class state
{
    theory _theory;
    var_set _vars;
    std::vector< std::uint32_t > _values;

public:
    state( theory th, var_set vars, std::vector< std::uint32_t > values );

    [[nodiscard]] const theory& domain() const { return _theory; }
    [[nodiscard]] const var_set& vars() const { return _vars; }
    [[nodiscard]] const std::vector< std::uint32_t >& values() const { return _values; }

    [[nodiscard]] std::uint32_t value_of( std::string_view id ) const;
    [[nodiscard]] const std::string& literal_of( std::string_view id ) const;

    // "{x=1, y=0}"
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] bool operator==( const state& other ) const;
};

// All states over vars in mixed-radix order: the first variable of the
// sorted set is the most significant digit.
[[nodiscard]] std::vector< state > enumerate_states( const theory& th, const var_set& vars );

[[nodiscard]] std::size_t state_index( const state& s );
[[nodiscard]] state state_from_index( const theory& th, const var_set& vars, std::size_t index );

// A set of states over one variable set, stored as a bit vector indexed by
// state index.
class assertion
{
    theory _theory;
    var_set _vars;
    boost::dynamic_bitset<> _bits;

public:
    assertion( theory th, var_set vars, boost::dynamic_bitset<> bits );

    [[nodiscard]] static assertion empty( const theory& th, const var_set& vars );
    [[nodiscard]] static assertion full( const theory& th, const var_set& vars );
    [[nodiscard]] static assertion from_indices( const theory& th, const var_set& vars,
                                                 const std::vector< std::size_t >& indices );

    [[nodiscard]] const theory& domain() const { return _theory; }
    [[nodiscard]] const var_set& vars() const { return _vars; }
    [[nodiscard]] const boost::dynamic_bitset<>& bits() const { return _bits; }

    [[nodiscard]] std::size_t state_space_size() const { return _bits.size(); }
    [[nodiscard]] std::size_t count() const { return _bits.count(); }
    [[nodiscard]] bool is_empty() const { return _bits.none(); }
    [[nodiscard]] bool is_full() const { return _bits.all(); }
    [[nodiscard]] bool contains( std::size_t state_index ) const;
    [[nodiscard]] std::vector< std::size_t > indices() const;

    [[nodiscard]] std::string to_string() const;
};

// Both operands must share theory and variable set; varset_mismatch or
// theory_mismatch otherwise.
void require_compatible( const assertion& a, const assertion& b );

[[nodiscard]] assertion assertion_union( const assertion& a, const assertion& b );
[[nodiscard]] assertion assertion_intersect( const assertion& a, const assertion& b );
[[nodiscard]] assertion assertion_complement( const assertion& a );
[[nodiscard]] bool assertion_subset( const assertion& a, const assertion& b );
[[nodiscard]] bool assertion_member( const state& s, const assertion& a );
[[nodiscard]] bool assertion_is_empty( const assertion& a );
[[nodiscard]] bool assertion_equal( const assertion& a, const assertion& b );

[[nodiscard]] inline assertion operator|( const assertion& a, const assertion& b ) { return assertion_union( a, b ); }
[[nodiscard]] inline assertion operator&( const assertion& a, const assertion& b ) { return assertion_intersect( a, b ); }
[[nodiscard]] inline assertion operator~( const assertion& a ) { return assertion_complement( a ); }
[[nodiscard]] inline bool operator==( const assertion& a, const assertion& b ) { return assertion_equal( a, b ); }

[[nodiscard]] assertion assertion_from_predicate( const theory& th, const var_set& vars,
                                                  const std::function< bool( const state& ) >& predicate );

} // namespace agc
