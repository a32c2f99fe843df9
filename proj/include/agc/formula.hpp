#pragma once

#include "agc/contract.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace agc
{

enum class formula_kind
{
    truth,       // TT
    atom,        // v = k
    negation,
    conjunction
};

struct formula_node
{
    formula_kind kind;
    std::string var;            // atom only
    std::size_t var_pos = 0;    // atom only: position of var in the formula's variable set
    std::uint32_t value = 0;    // atom only: position of the literal in the theory
    std::shared_ptr< const formula_node > left;
    std::shared_ptr< const formula_node > right;
};

// A propositional formula over a fixed theory and variable set. The tree
// only ever holds the four core node kinds; false, or and implies are
// expanded by the builders below. Subtrees are shared, never mutated.
class formula
{
    theory _theory;
    var_set _vars;
    std::shared_ptr< const formula_node > _root;

    formula( theory th, var_set vars, std::shared_ptr< const formula_node > root );

public:
    [[nodiscard]] static formula truth( const theory& th, const var_set& vars );
    [[nodiscard]] static formula falsity( const theory& th, const var_set& vars );
    [[nodiscard]] static formula atom( const theory& th, const var_set& vars, const std::string& var,
                                       std::uint32_t value );
    [[nodiscard]] static formula atom( const theory& th, const var_set& vars, const std::string& var,
                                       std::string_view literal );

    [[nodiscard]] const theory& domain() const { return _theory; }
    [[nodiscard]] const var_set& vars() const { return _vars; }
    [[nodiscard]] const formula_node& root() const { return *_root; }
    [[nodiscard]] formula_kind kind() const { return _root->kind; }

    // Children of a negation (left only) or conjunction.
    [[nodiscard]] formula left() const;
    [[nodiscard]] formula right() const;

    // Leaves have depth 1.
    [[nodiscard]] std::size_t depth() const;
    [[nodiscard]] std::size_t node_count() const;

    [[nodiscard]] bool operator==( const formula& other ) const;

    friend formula f_not( const formula& f );
    friend formula f_and( const formula& a, const formula& b );
};

[[nodiscard]] formula f_not( const formula& f );
[[nodiscard]] formula f_and( const formula& a, const formula& b );
// !(!a & !b)
[[nodiscard]] formula f_or( const formula& a, const formula& b );
// !a | b
[[nodiscard]] formula f_implies( const formula& a, const formula& b );

// Grammar, loosest binding first:
//   implies := or [ "->" implies ]
//   or      := and { "|" and }
//   and     := unary { "&" unary }
//   unary   := "!" unary | primary
//   primary := "true" | "false" | "(" implies ")" | ident [ "=" literal ]
// A bare identifier is only accepted over a two-valued domain and means
// "ident = <second value>".
[[nodiscard]] formula parse_formula( std::string_view text, const theory& th, const var_set& vars );

// Prints the canonical concrete syntax; parse_formula reads it back to the
// same tree.
[[nodiscard]] std::string to_string( const formula& f );

[[nodiscard]] bool sat( const state& s, const formula& f );
[[nodiscard]] assertion formula_to_assert( const formula& f );

// One conjunction of atoms per member state, in state-index order; the
// empty assertion gives false and the full one gives true.
[[nodiscard]] formula assertion_to_formula( const assertion& a );

// A contract whose assumption and guarantee are formulas.
class contract_f
{
    formula _assume;
    formula _guarantee;

public:
    contract_f( formula assume, formula guarantee );

    [[nodiscard]] const formula& assume() const { return _assume; }
    [[nodiscard]] const formula& guarantee() const { return _guarantee; }
    [[nodiscard]] const var_set& vars() const { return _assume.vars(); }
    [[nodiscard]] const theory& domain() const { return _assume.domain(); }
};

[[nodiscard]] contract make_contract_f( const formula& assume, const formula& guarantee );
[[nodiscard]] contract c2c( const contract_f& cf );
[[nodiscard]] contract_f contract_to_formulas( const contract& c );

// !A | G
[[nodiscard]] formula saturated_guarantee_f( const contract_f& cf );
[[nodiscard]] bool is_valid( const formula& f );
[[nodiscard]] bool refines_f( const contract_f& cf1, const contract_f& cf2 );
[[nodiscard]] contract_f compose_f( const contract_f& cf1, const contract_f& cf2 );
[[nodiscard]] contract_f glb_f( const contract_f& cf1, const contract_f& cf2 );

} // namespace agc
