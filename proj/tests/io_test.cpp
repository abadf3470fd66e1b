#include <hopecheck/io.hpp>

#include <gtest/gtest.h>

#include <fstream>

using namespace hopecheck;

namespace
{

json load( const std::string& name )
{
    std::ifstream in( std::string( HOPECHECK_DATA ) + "/" + name );
    return json::parse( in );
}

} // namespace

TEST( ModelJson, CanonicalRoundTrip )
{
    const auto m = model_from_json( load( "two_agents.json" ) );
    EXPECT_EQ( m.world_count(), 2u );
    EXPECT_EQ( m.hope_domain( Agent{ "1" } ), std::vector< World >{ "w0" } );
    EXPECT_EQ( model_from_json( to_json( m ) ), m );
    EXPECT_EQ( model_from_json( to_json( expand( m ) ) ), m );
}

TEST( ModelJson, EnumeratedModelsRoundTrip )
{
    ModelEnumerator( { Agent{ "a" }, Agent{ "b" } }, { "p" }, 2 ).for_each( []( const KripkeModel& m ) {
        ASSERT_EQ( model_from_json( to_json( m ) ), m );
        ASSERT_EQ( model_from_json( to_json( expand( m ) ) ), m );
    } );
}

TEST( ModelJson, RawFormIsValidatedAsWritten )
{
    const auto raw = raw_model_from_json( load( "mixed_violation.json" ) );
    const auto vs = validate( raw );
    ASSERT_EQ( vs.size(), 1u );
    EXPECT_EQ( vs[ 0 ].kind, ViolationKind::MixedCondition );
    EXPECT_THROW( (void)model_from_json( load( "mixed_violation.json" ) ), ModelError );
}

TEST( ModelJson, HopeDomainSpanningBlocksIsLegal )
{
    // H only relates domain worlds within one K block
    const json doc = { { "worlds", { "s", "t" } },
                       { "agents", { "a" } },
                       { "K", { { "a", { { "s" }, { "t" } } } } },
                       { "Hdom", { { "a", { "s", "t" } } } } };
    EXPECT_TRUE( validate( raw_model_from_json( doc ) ).empty() );
    const json missing = { { "worlds", { "s" } }, { "agents", { "a" } } };
    EXPECT_THROW( (void)raw_model_from_json( missing ), DocumentError );
}

TEST( VerdictJson, Schema )
{
    const Universe u{ Agent{ "1" } };
    auto ok = to_json( bounded_validity( parse( "K[1] p -> p", u ), u, 2 ) );
    EXPECT_EQ( ok, ( json{ { "verdict", "valid-up-to" }, { "bound", 2 } } ) );
    auto cx = to_json( bounded_validity( parse( "H[1] p -> p", u ), u, 2 ) );
    EXPECT_EQ( cx.at( "verdict" ), "counterexample" );
    const auto model = model_from_json( cx.at( "model" ) );
    EXPECT_FALSE( eval( model, cx.at( "world" ).get< World >(), parse( "H[1] p -> p", u ) ) );
}

TEST( RunsJson, RoundTripAndCompile )
{
    const auto sys = run_system_from_json( load( "brain_in_vat.json" ) );
    EXPECT_EQ( run_system_from_json( to_json( sys ) ).runs.size(), 2u );
    const auto m = compile( sys );
    EXPECT_EQ( m, compile( brain_in_vat_example().system ) );
    json bad = load( "brain_in_vat.json" );
    bad[ "timeBound" ] = 0;
    EXPECT_THROW( (void)run_system_from_json( bad ), DocumentError );
}

TEST( PuzzleJson, Puzzle28 )
{
    const auto p = puzzle_from_json( load( "puzzle28.json" ) );
    ASSERT_EQ( p.agents.size(), 2u );
    const auto solutions = solve_puzzle( p.agents, p.utterances );
    ASSERT_EQ( solutions.size(), 1u );
    EXPECT_EQ( describe( solutions[ 0 ], p.agents ), "a=knight b=knave" );

    json other = load( "puzzle28.json" );
    other[ "types" ] = { "knight", "spy" };
    EXPECT_THROW( (void)puzzle_from_json( other ), DocumentError );
    other = load( "puzzle28.json" );
    other[ "utterances" ][ 0 ][ "speaker" ] = "c";
    EXPECT_THROW( (void)puzzle_from_json( other ), DocumentError );
}
