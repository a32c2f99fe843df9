#pragma once

#include "agc/spec_file.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace agc
{

struct query_result
{
    std::string query; // the command words joined by spaces
    std::optional< bool > verdict;
    std::optional< contract > result;
    std::vector< std::string > diagnostics;

    // 0 for true or a constructed contract, 1 for false.
    [[nodiscard]] int exit_code() const;
};

// Commands:
//   saturate C
//   check refine C1 C2 | check equiv C1 C2 | check implements SIGMA C
//   check provides E C | check implementable C
//   compose C1 C2 [--over v,...]
//   conjoin C1 C2
//   eliminate C --var v[,v...]
//   extend C --to v,...
// A variable list may also be split across words ("--to x, y").
// Errors surface as agc::error subclasses.
[[nodiscard]] query_result run_command( const spec_file& spec, const std::vector< std::string >& words );

// The contract as a spec fragment that parses back to an equivalent
// contract, preceded by its state-index sets as comments.
[[nodiscard]] std::string render_contract( const contract& c, const std::string& name = "result" );
[[nodiscard]] std::string render_text( const query_result& r );
[[nodiscard]] nlohmann::json render_json( const query_result& r );

} // namespace agc
