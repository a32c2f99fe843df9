#pragma once

#include "agc/formula.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace agc
{

struct spec_contract
{
    std::string name;
    contract_f formulas;
    contract value;
    std::size_t line = 0;
};

// A named component or environment: one formula over a variable set.
struct spec_assertion
{
    std::string name;
    formula body;
    assertion value;
    std::size_t line = 0;
};

struct spec_file
{
    theory domain;
    std::vector< spec_contract > contracts;
    std::vector< spec_assertion > components;
    std::vector< spec_assertion > environments;

    // semantic_error when no declaration of that kind has the name.
    [[nodiscard]] const spec_contract& contract_named( const std::string& name ) const;
    [[nodiscard]] const spec_assertion& component_named( const std::string& name ) const;
    [[nodiscard]] const spec_assertion& environment_named( const std::string& name ) const;
};

// Grammar, with `#` line comments and free whitespace:
//
//   theory [Name] { values: lit (, lit)* }
//   contract N over v (, v)* { assume: F  guarantee: F }
//   component N over v (, v)* { F }
//   environment N over v (, v)* { F }
//
// The theory block comes once and first. Names are unique across all
// declarations.
[[nodiscard]] spec_file parse_spec( std::string_view text );
[[nodiscard]] spec_file load_spec( const std::string& path );

} // namespace agc
