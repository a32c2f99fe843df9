#pragma once

// Runs the agc binary through the shell and captures stdout, stderr and
// the exit status.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

namespace test_cli
{

struct run_result
{
    int status = -1;
    std::string out;
    std::string err;

    // Golden-file layout: stdout, then stderr after a marker line.
    [[nodiscard]] std::string combined() const
    {
        return err.empty() ? out : out + "--- stderr\n" + err;
    }
};

inline run_result run_agc( const std::string& args, const std::string& cwd = "." )
{
    const std::string err_path = "/tmp/agc_test_stderr_" + std::to_string( ::getpid() );
    const std::string cmd = "cd '" + cwd + "' && '" + AGC_BINARY + "' " + args + " 2>'" + err_path + "'";
    run_result r;
    FILE* pipe = ::popen( cmd.c_str(), "r" );
    if ( !pipe )
        return r;
    std::array< char, 4096 > buf{};
    std::size_t n;
    while ( ( n = std::fread( buf.data(), 1, buf.size(), pipe ) ) > 0 )
        r.out.append( buf.data(), n );
    const int status = ::pclose( pipe );
    r.status = WIFEXITED( status ) ? WEXITSTATUS( status ) : -1;
    std::ifstream err( err_path );
    std::ostringstream e;
    e << err.rdbuf();
    r.err = e.str();
    std::remove( err_path.c_str() );
    return r;
}

} // namespace test_cli
