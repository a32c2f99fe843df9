#pragma once

#include "agc/theory.hpp"

namespace agc
{

// An assume/guarantee pair over one variable set. Contracts are stored as
// given; every operator below saturates its operands itself.
class contract
{
    assertion _assume;
    assertion _guarantee;

public:
    contract( assertion assume, assertion guarantee );

    [[nodiscard]] const assertion& assume() const { return _assume; }
    [[nodiscard]] const assertion& guarantee() const { return _guarantee; }
    [[nodiscard]] const var_set& vars() const { return _assume.vars(); }
    [[nodiscard]] const theory& domain() const { return _assume.domain(); }
};

void require_compatible( const contract& a, const contract& b );

// (A, ~A | G)
[[nodiscard]] contract saturate( const contract& c );

[[nodiscard]] bool satisfies( const state& s, const contract& c );
[[nodiscard]] bool implements( const assertion& component, const contract& c );
[[nodiscard]] bool provides( const assertion& environment, const contract& c );

// c1 refines c2 when, after saturation, c1 assumes no less and guarantees
// no more than c2.
[[nodiscard]] bool refines( const contract& c1, const contract& c2 );
[[nodiscard]] bool equiv( const contract& c1, const contract& c2 );

// Greatest lower bound under refinement.
[[nodiscard]] contract conjoin( const contract& c1, const contract& c2 );
// Least contract (under refinement) specifying the intersection of an
// implementation of c1 with an implementation of c2. The result is
// saturated.
[[nodiscard]] contract compose( const contract& c1, const contract& c2 );

[[nodiscard]] bool is_implementable( const contract& c );
[[nodiscard]] assertion max_implementation( const contract& c );
[[nodiscard]] assertion max_environment( const contract& c );

} // namespace agc
