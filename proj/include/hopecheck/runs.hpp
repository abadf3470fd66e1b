#pragma once

// Runs-and-systems descriptions compiled into knowledge-and-hope models.
// Global states (r, t) become worlds named "r@t"; two global states are
// K_i-indistinguishable iff agent i has the same local state in both; hope
// domains are the global states of runs in which the agent is correct.

#include "formula.hpp"
#include "kripke.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace hopecheck
{

struct Run
{
    std::string id;
    std::map< Agent, std::vector< std::string > > local_states;  // one token per time
    std::map< Agent, bool > correct;
    std::map< std::string, std::vector< bool > > atoms;  // truth per time
};

struct RunSystem
{
    Universe agents;
    std::size_t time_bound = 1;
    std::vector< Run > runs;
};

inline World global_state( const std::string& run, std::size_t time )
{
    return run + "@" + std::to_string( time );
}

// Throws ModelError describing the first defect.
inline void check_well_formed( const RunSystem& sys )
{
    if ( sys.runs.empty() )
        throw ModelError( "run system has no runs" );
    if ( sys.time_bound == 0 )
        throw ModelError( "time bound must be positive" );
    std::set< std::string > ids;
    for ( const auto& run : sys.runs ) {
        if ( run.id.empty() || !ids.insert( run.id ).second )
            throw ModelError( "run ids must be non-empty and distinct" );
        for ( const auto& agent : sys.agents ) {
            auto ls = run.local_states.find( agent );
            if ( ls == run.local_states.end() || ls->second.size() != sys.time_bound )
                throw ModelError( "run '" + run.id + "' lacks local states of agent '" + agent.id + "' for times 0.."
                                  + std::to_string( sys.time_bound - 1 ) );
            if ( !run.correct.contains( agent ) )
                throw ModelError( "run '" + run.id + "' lacks a correctness flag for agent '" + agent.id + "'" );
        }
        for ( const auto& [ agent, _ ] : run.local_states )
            if ( !sys.agents.contains( agent ) )
                throw ModelError( "run '" + run.id + "' mentions undeclared agent '" + agent.id + "'" );
        for ( const auto& [ agent, _ ] : run.correct )
            if ( !sys.agents.contains( agent ) )
                throw ModelError( "run '" + run.id + "' mentions undeclared agent '" + agent.id + "'" );
        for ( const auto& [ atom, truth ] : run.atoms )
            if ( truth.size() != sys.time_bound )
                throw ModelError( "run '" + run.id + "' gives atom '" + atom + "' the wrong number of values" );
    }
}

inline KripkeModel compile( const RunSystem& sys )
{
    check_well_formed( sys );

    std::vector< World > worlds;
    for ( const auto& run : sys.runs )
        for ( std::size_t t = 0; t < sys.time_bound; ++t )
            worlds.push_back( global_state( run.id, t ) );

    std::map< Agent, Partition > partition;
    std::map< Agent, std::vector< World > > correct;
    for ( const auto& agent : sys.agents ) {
        std::map< std::string, std::vector< World > > by_state;
        auto& correct_here = correct[ agent ];
        for ( const auto& run : sys.runs ) {
            const auto& states = run.local_states.at( agent );
            for ( std::size_t t = 0; t < sys.time_bound; ++t ) {
                by_state[ states[ t ] ].push_back( global_state( run.id, t ) );
                if ( run.correct.at( agent ) )
                    correct_here.push_back( global_state( run.id, t ) );
            }
        }
        auto& blocks = partition[ agent ];
        for ( auto& [ _, block ] : by_state )
            blocks.push_back( std::move( block ) );
    }

    std::map< std::string, std::vector< World > > valuation;
    for ( const auto& run : sys.runs )
        for ( const auto& [ atom, truth ] : run.atoms ) {
            auto& ws = valuation[ atom ];
            for ( std::size_t t = 0; t < sys.time_bound; ++t )
                if ( truth[ t ] )
                    ws.push_back( global_state( run.id, t ) );
        }

    auto domains = hope_from_correctness( partition, correct );
    return KripkeModel( std::move( worlds ), partition, domains, valuation );
}

struct Claim
{
    World world;
    Formula formula;
    bool expected;
    std::string description;
};

struct BrainInVat
{
    RunSystem system;
    std::vector< Claim > claims;
};

// Two runs that agent a cannot tell apart at time 0: in "r" a is correct and
// the event e happened; in "rv" a is faulty and its record of e is fake.
// Agent b is correct in both and sees the difference.
inline BrainInVat brain_in_vat_example()
{
    const Agent a{ "a" };
    const Agent b{ "b" };
    RunSystem sys;
    sys.agents = { a, b };
    sys.time_bound = 1;
    sys.runs.push_back( Run{ "r", { { a, { "saw_e" } }, { b, { "b0" } } }, { { a, true }, { b, true } }, { { "e", { true } } } } );
    sys.runs.push_back(
        Run{ "rv", { { a, { "saw_e" } }, { b, { "b1" } } }, { { a, false }, { b, true } }, { { "e", { false } } } } );

    const World r0 = global_state( "r", 0 );
    const World rv0 = global_state( "rv", 0 );
    const auto e = Formula::atom( "e" );
    std::vector< Claim > claims{
        { r0, Formula::knows( a, e ), false, "a cannot know that e happened" },
        { r0, Formula::believes( a, e ), true, "a believes that e happened" },
        { r0, e, true, "e happened" },
        { rv0, Formula::correct( a ), false, "a is faulty in the vat run" },
        { rv0, e, false, "e did not happen in the vat run" },
        { rv0, Formula::believes( a, e ), true, "the vat run looks the same to a" },
    };
    return { std::move( sys ), std::move( claims ) };
}

} // namespace hopecheck
