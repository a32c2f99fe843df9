#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace agc
{

// Base of every error raised by the library. Callers that only need a
// message can catch this; the subclasses carry the structured payload.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class cap_exceeded : public error
{
    std::size_t _required;
    std::size_t _cap;

public:
    cap_exceeded( std::size_t required, std::size_t cap, const std::string& what_counted = "states" );

    [[nodiscard]] std::size_t required() const { return _required; }
    [[nodiscard]] std::size_t cap() const { return _cap; }
};

class varset_mismatch : public error
{
    std::string _left;
    std::string _right;

public:
    varset_mismatch( std::string left, std::string right );

    [[nodiscard]] const std::string& left() const { return _left; }
    [[nodiscard]] const std::string& right() const { return _right; }
};

class theory_mismatch : public error
{
public:
    using error::error;
};

class index_out_of_range : public error
{
public:
    index_out_of_range( std::size_t index, std::size_t count );
};

class unknown_variable : public error
{
    std::string _name;
    std::string _context;

public:
    explicit unknown_variable( std::string name, const std::string& context = "" );

    [[nodiscard]] const std::string& name() const { return _name; }
    [[nodiscard]] const std::string& context() const { return _context; }
};

class unknown_literal : public error
{
    std::string _literal;
    std::string _context;

public:
    explicit unknown_literal( std::string literal, const std::string& context = "" );

    [[nodiscard]] const std::string& literal() const { return _literal; }
    [[nodiscard]] const std::string& context() const { return _context; }
};

class invalid_argument : public error
{
public:
    using error::error;
};

// Raised by the formula and spec-file parsers. Positions are 1-based.
class parse_error : public error
{
    std::size_t _line;
    std::size_t _column;

public:
    parse_error( const std::string& message, std::size_t line, std::size_t column );

    [[nodiscard]] std::size_t line() const { return _line; }
    [[nodiscard]] std::size_t column() const { return _column; }
};

// Well-formed input that violates a semantic rule: a duplicate name, a
// missing theory block, a reference to an undeclared name.
class semantic_error : public error
{
public:
    using error::error;
};

class io_error : public error
{
public:
    using error::error;
};

} // namespace agc
