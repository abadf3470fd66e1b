#include <gtest/gtest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace
{

struct Result
{
    int status;
    std::string out;
};

Result run( const std::string& args )
{
    const std::string cmd = std::string( HOPECHECK_CLI ) + " " + args + " 2>&1";
    FILE* pipe = popen( cmd.c_str(), "r" );
    if ( !pipe )
        return { -1, "" };
    std::string out;
    std::array< char, 4096 > buf{};
    while ( std::fgets( buf.data(), buf.size(), pipe ) )
        out += buf.data();
    const int rc = pclose( pipe );
    return { WIFEXITED( rc ) ? WEXITSTATUS( rc ) : -1, out };
}

std::string data( const std::string& name ) { return std::string( HOPECHECK_DATA ) + "/" + name; }

bool has( const std::string& haystack, const std::string& needle )
{
    return haystack.find( needle ) != std::string::npos;
}

} // namespace

TEST( Cli, ValidityAndCounterexample )
{
    auto r = run( "validity 'byz(1) & EH[1,2] p -> p' --agents 1,2 --max-worlds 3" );
    EXPECT_EQ( r.status, 0 );
    EXPECT_EQ( r.out, "valid-up-to 3\n" );

    r = run( "validity 'H[1] p -> p' --agents 1 --max-worlds 2" );
    EXPECT_EQ( r.status, 1 );
    EXPECT_TRUE( has( r.out, "counterexample" ) ) << r.out;
    EXPECT_TRUE( has( r.out, "\"Hdom\"" ) ) << r.out;
}

TEST( Cli, JsonVerdict )
{
    auto r = run( "validity 'K[1] p -> p' --agents 1 --max-worlds 2 --json" );
    EXPECT_EQ( r.status, 0 );
    EXPECT_EQ( nlohmann::json::parse( r.out ), ( nlohmann::json{ { "verdict", "valid-up-to" }, { "bound", 2 } } ) );

    r = run( "validity 'H[1] p -> p' --agents 1 --max-worlds 2 --json" );
    EXPECT_EQ( r.status, 1 );
    const auto doc = nlohmann::json::parse( r.out );
    EXPECT_EQ( doc.at( "verdict" ), "counterexample" );
    EXPECT_TRUE( doc.contains( "model" ) );
}

TEST( Cli, Sat )
{
    EXPECT_EQ( run( "sat 'H[1] bot & p' --agents 1 --max-worlds 1" ).status, 0 );
    auto r = run( "sat 'K[1] p & !p' --agents 1 --max-worlds 2" );
    EXPECT_EQ( r.status, 1 );
    EXPECT_EQ( r.out, "unsatisfiable-up-to 2\n" );
}

TEST( Cli, CheckModel )
{
    auto r = run( "check " + data( "two_agents.json" ) + " 'K[2] p' --world w0" );
    EXPECT_EQ( r.status, 0 );
    EXPECT_EQ( r.out, "w0: true\n" );
    r = run( "check " + data( "two_agents.json" ) + " 'K[1] p'" );
    EXPECT_EQ( r.status, 1 );
    EXPECT_EQ( r.out, "w0: false\nw1: false\n" );
    r = run( "check " + data( "two_agents.json" ) + " 'H[1] p' --json" );
    EXPECT_EQ( r.status, 0 );
    EXPECT_EQ( nlohmann::json::parse( r.out ).at( "valid" ), true );
}

TEST( Cli, Validate )
{
    auto r = run( "validate " + data( "two_agents.json" ) );
    EXPECT_EQ( r.status, 0 );
    r = run( "validate " + data( "mixed_violation.json" ) );
    EXPECT_EQ( r.status, 1 );
    EXPECT_TRUE( has( r.out, "mixed-condition-violated" ) ) << r.out;
    r = run( "validate " + data( "mixed_violation.json" ) + " --json" );
    EXPECT_EQ( nlohmann::json::parse( r.out ).at( "violations" ).size(), 1u );
}

TEST( Cli, Puzzle )
{
    auto r = run( "puzzle " + data( "puzzle28.json" ) );
    EXPECT_EQ( r.status, 0 );
    EXPECT_EQ( r.out, "a=knight b=knave (unique)\n" );
}

TEST( Cli, CompileRunsAndDemo )
{
    auto r = run( "compile-runs " + data( "brain_in_vat.json" ) );
    EXPECT_EQ( r.status, 0 );
    const auto model = nlohmann::json::parse( r.out );
    EXPECT_EQ( model.at( "worlds" ), ( nlohmann::json{ "r@0", "rv@0" } ) );

    r = run( "demo brain-in-vat" );
    EXPECT_EQ( r.status, 0 );
    EXPECT_FALSE( has( r.out, "FAIL" ) ) << r.out;
}

TEST( Cli, Axioms )
{
    auto r = run( "axioms --agents a --atoms p --max-worlds 2" );
    EXPECT_EQ( r.status, 0 );
    EXPECT_TRUE( has( r.out, "PASS kh" ) ) << r.out;
    EXPECT_EQ( run( "axioms " + data( "two_agents.json" ) ).status, 0 );
}

TEST( Cli, Errors )
{
    auto r = run( "validity 'p & ' --agents 1" );
    EXPECT_EQ( r.status, 2 );
    EXPECT_TRUE( has( r.out, "4" ) ) << r.out;
    EXPECT_EQ( run( "validity 'K[3] p' --agents 1,2" ).status, 2 );
    EXPECT_EQ( run( "validity p" ).status, 2 );
    EXPECT_EQ( run( "check /nonexistent.json p" ).status, 2 );
    EXPECT_EQ( run( "frobnicate" ).status, 2 );
    EXPECT_EQ( run( "validate " + data( "puzzle28.json" ) ).status, 2 );
}

TEST( Cli, ModelCeiling )
{
    // 5^2 * 2^6 * 2^3 = 12800 three-world models
    auto r = run( "validity 'K[1] p -> K[2] p' --agents 1,2 --max-worlds 3 --max-models 1000" );
    EXPECT_EQ( r.status, 2 );
    EXPECT_TRUE( has( r.out, "1000" ) ) << r.out;
    r = run( "validity 'K[1] p -> K[2] p' --agents 1,2 --max-worlds 3 --max-models 12800" );
    EXPECT_EQ( r.status, 1 );
    EXPECT_EQ( std::system( ( "HOPECHECK_MAX_MODELS=10 " + std::string( HOPECHECK_CLI )
                              + " validity 'K[1] p' --agents 1 --max-worlds 2 >/dev/null 2>&1" )
                                .c_str() )
                   >> 8,
               2 );
}
