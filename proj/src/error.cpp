#include "agc/error.hpp"

#include <utility>

namespace agc
{

cap_exceeded::cap_exceeded( std::size_t required, std::size_t cap, const std::string& what_counted )
        : error( "enumeration cap exceeded: " + std::to_string( required ) + " " + what_counted
                 + " required, cap is " + std::to_string( cap ) ),
          _required{ required }, _cap{ cap }
{
}

varset_mismatch::varset_mismatch( std::string left, std::string right )
        : error( "variable set mismatch: " + left + " vs " + right ),
          _left{ std::move( left ) }, _right{ std::move( right ) }
{
}

index_out_of_range::index_out_of_range( std::size_t index, std::size_t count )
        : error( "state index " + std::to_string( index ) + " out of range (state space has "
                 + std::to_string( count ) + " states)" )
{
}

unknown_variable::unknown_variable( std::string name, const std::string& context )
        : error( "unknown variable '" + name + "'" + ( context.empty() ? "" : " in " + context ) ),
          _name{ std::move( name ) }, _context{ context }
{
}

unknown_literal::unknown_literal( std::string literal, const std::string& context )
        : error( "unknown value literal '" + literal + "'" + ( context.empty() ? "" : " in " + context ) ),
          _literal{ std::move( literal ) }, _context{ context }
{
}

parse_error::parse_error( const std::string& message, std::size_t line, std::size_t column )
        : error( std::to_string( line ) + ":" + std::to_string( column ) + ": " + message ),
          _line{ line }, _column{ column }
{
}

} // namespace agc
