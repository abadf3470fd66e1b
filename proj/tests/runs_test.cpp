#include "oracle.hpp"

#include <hopecheck/checker.hpp>
#include <hopecheck/runs.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace hopecheck;

namespace
{

const Agent a{ "a" };
const Agent b{ "b" };

} // namespace

TEST( Compile, SingleRun )
{
    RunSystem sys{ { a }, 1, { hopecheck::Run{ "r", { { a, { "x" } } }, { { a, true } }, {} } } };
    const auto m = compile( sys );
    EXPECT_EQ( m.worlds(), std::vector< World >{ "r@0" } );
    EXPECT_EQ( m.partition( a ), ( Partition{ { "r@0" } } ) );
    EXPECT_EQ( m.hope_domain( a ), std::vector< World >{ "r@0" } );

    sys.runs[ 0 ].correct[ a ] = false;
    EXPECT_TRUE( compile( sys ).hope_domain( a ).empty() );
}

TEST( Compile, LocalStatesDecideIndistinguishability )
{
    RunSystem sys{ { a, b },
                   1,
                   { hopecheck::Run{ "r", { { a, { "x" } }, { b, { "u" } } }, { { a, true }, { b, true } }, {} },
                     hopecheck::Run{ "r2", { { a, { "x" } }, { b, { "v" } } }, { { a, false }, { b, true } }, {} } } };
    const auto m = compile( sys );
    EXPECT_TRUE( m.k_related( a, "r@0", "r2@0" ) );
    EXPECT_FALSE( m.k_related( b, "r@0", "r2@0" ) );

    EXPECT_TRUE( eval( m, "r@0", Formula::correct( a ) ) );
    EXPECT_FALSE( eval( m, "r2@0", Formula::correct( a ) ) );
}

TEST( Compile, RejectsIllFormedSystems )
{
    EXPECT_THROW( (void)compile( RunSystem{ { a }, 1, {} } ), ModelError );
    EXPECT_THROW( (void)compile( RunSystem{ { a }, 2, { hopecheck::Run{ "r", { { a, { "x" } } }, { { a, true } }, {} } } } ),
                  ModelError );
    EXPECT_THROW( (void)compile( RunSystem{ { a }, 1, { hopecheck::Run{ "r", { { a, { "x" } } }, {}, {} } } } ), ModelError );
    EXPECT_THROW( (void)compile( RunSystem{ { a }, 1, { hopecheck::Run{ "r", {}, { { a, true } }, {} } } } ), ModelError );
    EXPECT_THROW( (void)compile( RunSystem{ { a },
                                            1,
                                            { hopecheck::Run{ "r", { { a, { "x" } } }, { { a, true } }, {} },
                                              hopecheck::Run{ "r", { { a, { "x" } } }, { { a, true } }, {} } } } ),
                  ModelError );
    EXPECT_THROW(
        (void)compile( RunSystem{ { a }, 1, { hopecheck::Run{ "r", { { a, { "x" } } }, { { a, true } }, { { "e", {} } } } } } ),
        ModelError );
}

TEST( BrainInVat, Claims )
{
    const auto example = brain_in_vat_example();
    const auto m = compile( example.system );
    for ( const auto& claim : example.claims )
        EXPECT_EQ( eval( m, claim.world, claim.formula ), claim.expected ) << claim.description;
}

TEST( Compile, RandomSystemsMatchRunsSemantics )
{
    std::mt19937_64 rng( 5 );
    const Universe agents{ a, b };
    const auto e = Formula::atom( "e" );
    for ( int i = 0; i < 200; ++i ) {
        const auto sys = oracle::random_run_system( rng, agents, 3, 2 );
        const auto m = compile( sys );
        ASSERT_TRUE( validate( expand( m ) ).empty() );

        for ( const auto& run : sys.runs )
            for ( std::size_t t = 0; t < sys.time_bound; ++t ) {
                const World here = global_state( run.id, t );
                for ( const auto& agent : agents ) {
                    ASSERT_EQ( eval( m, here, Formula::correct( agent ) ), run.correct.at( agent ) );

                    // K[i] e at (r,t) iff e holds at every (r',t') with the same local state
                    bool known = true;
                    for ( const auto& other : sys.runs )
                        for ( std::size_t u = 0; u < sys.time_bound; ++u )
                            if ( other.local_states.at( agent )[ u ] == run.local_states.at( agent )[ t ]
                                 && !other.atoms.at( "e" )[ u ] )
                                known = false;
                    ASSERT_EQ( eval( m, here, Formula::knows( agent, e ) ), known );
                }
            }
    }
}
