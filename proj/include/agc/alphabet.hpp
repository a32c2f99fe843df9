#pragma once

#include "agc/contract.hpp"

#include <optional>
#include <string>
#include <vector>

namespace agc
{

// A checked witness that one variable set is contained in another.
class inclusion
{
    var_set _small;
    var_set _large;
    std::vector< std::size_t > _positions; // position in large of each small variable

public:
    inclusion( var_set small, var_set large );

    [[nodiscard]] const var_set& small() const { return _small; }
    [[nodiscard]] const var_set& large() const { return _large; }
    [[nodiscard]] const std::vector< std::size_t >& positions() const { return _positions; }
};

// For every state index over the large set, the index of its projection
// over the small set.
[[nodiscard]] std::vector< std::size_t > projection_map( const theory& th, const inclusion& inc );

[[nodiscard]] state project_state( const state& s, const inclusion& inc );
// Existential projection: states of small that have some extension in a.
[[nodiscard]] assertion project_assertion_exists( const assertion& a, const inclusion& inc );
// Universal projection: states of small all of whose extensions are in a.
[[nodiscard]] assertion project_assertion_forall( const assertion& a, const inclusion& inc );

[[nodiscard]] assertion extend_state( const state& s, const inclusion& inc );
[[nodiscard]] assertion extend_assertion( const assertion& a, const inclusion& inc );

// (forall-projection of A, exists-projection of the saturated G).
[[nodiscard]] contract project_contract( const contract& c, const inclusion& inc );
[[nodiscard]] contract extend_contract( const contract& c, const inclusion& inc );

[[nodiscard]] contract eliminate_variable( const contract& c, const std::string& var );
// Eliminates every listed variable at once.
[[nodiscard]] contract eliminate_variables( const contract& c, const var_set& vars );

// Extends both operands to target (the union of their variable sets when
// omitted) and composes them there.
[[nodiscard]] contract extended_compose( const contract& c1, const contract& c2,
                                         const std::optional< var_set >& target = std::nullopt );

} // namespace agc
