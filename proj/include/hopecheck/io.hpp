#pragma once

// JSON documents for models, run systems, puzzles and results.
//
// Model, canonical form:
//   {"worlds":[...], "agents":[...], "K":{agent:[[block],...]},
//    "Hdom":{agent:[worlds]}, "valuation":{atom:[worlds]}}
// Model, raw form: "Krel"/"Hrel" map agents to lists of [s,t] pairs instead.
// Run system:
//   {"agents":[...], "timeBound":T, "runs":[{"id":"r", "local":{agent:[tokens]},
//    "correct":{agent:bool}, "atoms":{atom:[bools]}}]}
// Puzzle:
//   {"agents":[...], "types":["knight","knave"],
//    "utterances":[{"speaker":"a", "formula":"type(a,knave) | type(b,knave)"}]}

#include "checker.hpp"
#include "creed.hpp"
#include "kripke.hpp"
#include "runs.hpp"
#include "syntax.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hopecheck
{

using nlohmann::json;

class DocumentError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

namespace detail
{

inline const json& field( const json& doc, const char* key )
{
    if ( !doc.is_object() || !doc.contains( key ) )
        throw DocumentError( std::string( "missing field \"" ) + key + "\"" );
    return doc.at( key );
}

inline Universe agents_field( const json& doc )
{
    Universe u;
    for ( const auto& a : field( doc, "agents" ) )
        u.insert( Agent{ a.get< std::string >() } );
    return u;
}

} // namespace detail

// Either form; K blocks and hope domains are expanded into relations so that
// validate() sees exactly what the document says.
inline RawModel raw_model_from_json( const json& doc )
{
    RawModel raw;
    raw.worlds = detail::field( doc, "worlds" ).get< std::vector< World > >();
    raw.agents = detail::agents_field( doc );

    const bool relational = doc.contains( "Krel" );
    if ( relational ) {
        for ( const auto& [ agent, pairs ] : doc.at( "Krel" ).items() )
            for ( const auto& p : pairs )
                raw.k_relation[ Agent{ agent } ].emplace( p.at( 0 ).get< World >(), p.at( 1 ).get< World >() );
        if ( doc.contains( "Hrel" ) )
            for ( const auto& [ agent, pairs ] : doc.at( "Hrel" ).items() )
                for ( const auto& p : pairs )
                    raw.h_relation[ Agent{ agent } ].emplace( p.at( 0 ).get< World >(), p.at( 1 ).get< World >() );
    } else {
        for ( const auto& [ agent, blocks ] : detail::field( doc, "K" ).items() ) {
            auto& k = raw.k_relation[ Agent{ agent } ];
            for ( const auto& block : blocks )
                for ( const auto& s : block )
                    for ( const auto& t : block )
                        k.emplace( s.get< World >(), t.get< World >() );
        }
        if ( doc.contains( "Hdom" ) )
            for ( const auto& [ agent, domain ] : doc.at( "Hdom" ).items() ) {
                const auto dom = domain.get< std::set< World > >();
                const auto& k = raw.k_relation[ Agent{ agent } ];
                auto& h = raw.h_relation[ Agent{ agent } ];
                for ( const auto& [ s, t ] : k )
                    if ( dom.contains( s ) && dom.contains( t ) )
                        h.emplace( s, t );
                for ( const auto& s : dom )
                    if ( !k.contains( { s, s } ) )
                        h.emplace( s, s );
            }
    }
    if ( doc.contains( "valuation" ) )
        for ( const auto& [ atom, ws ] : doc.at( "valuation" ).items() )
            raw.valuation[ atom ] = ws.get< std::set< World > >();
    return raw;
}

inline KripkeModel model_from_json( const json& doc )
{
    return canonicalize( raw_model_from_json( doc ) );
}

inline json to_json( const KripkeModel& m )
{
    json doc;
    doc[ "worlds" ] = m.worlds();
    json agents = json::array();
    json k = json::object();
    json hdom = json::object();
    for ( const auto& a : m.agents() ) {
        agents.push_back( a.id );
        k[ a.id ] = m.partition( a );
        hdom[ a.id ] = m.hope_domain( a );
    }
    doc[ "agents" ] = agents;
    doc[ "K" ] = k;
    doc[ "Hdom" ] = hdom;
    json val = json::object();
    for ( const auto& atom : m.atoms() )
        val[ atom ] = m.valuation( atom );
    doc[ "valuation" ] = val;
    return doc;
}

inline json to_json( const RawModel& raw )
{
    json doc;
    doc[ "worlds" ] = raw.worlds;
    json agents = json::array();
    for ( const auto& a : raw.agents )
        agents.push_back( a.id );
    doc[ "agents" ] = agents;
    auto rel = []( const std::map< Agent, Relation >& r ) {
        json out = json::object();
        for ( const auto& [ a, pairs ] : r ) {
            json list = json::array();
            for ( const auto& [ s, t ] : pairs )
                list.push_back( { s, t } );
            out[ a.id ] = list;
        }
        return out;
    };
    doc[ "Krel" ] = rel( raw.k_relation );
    doc[ "Hrel" ] = rel( raw.h_relation );
    json val = json::object();
    for ( const auto& [ atom, ws ] : raw.valuation )
        val[ atom ] = ws;
    doc[ "valuation" ] = val;
    return doc;
}

inline json to_json( const std::vector< FrameViolation >& violations )
{
    json out = json::array();
    for ( const auto& v : violations )
        out.push_back( { { "kind", to_string( v.kind ) }, { "agent", v.agent.id }, { "witness", v.witness } } );
    return out;
}

inline json to_json( const Verdict& v )
{
    if ( const auto* ok = std::get_if< NoCounterexampleUpTo >( &v ) )
        return { { "verdict", "valid-up-to" }, { "bound", ok->bound } };
    const auto& cx = std::get< Counterexample >( v );
    return { { "verdict", "counterexample" }, { "model", to_json( cx.model ) }, { "world", cx.world } };
}

inline json to_json( const AxiomReport& r )
{
    json schemas = json::array();
    for ( const auto& s : r.schemas ) {
        json entry{ { "schema", s.name },
                    { "family", s.family == SchemaFamily::KH ? "KH" : "derived" },
                    { "checks", s.checks },
                    { "failures", s.failures },
                    { "pass", s.passed() } };
        if ( s.first_failure )
            entry[ "counterexample" ] = { { "formula", print( s.first_failure->instance ) },
                                          { "model", to_json( s.first_failure->model ) },
                                          { "world", s.first_failure->world } };
        schemas.push_back( std::move( entry ) );
    }
    return { { "models", r.models }, { "pass", r.passed() }, { "schemas", schemas } };
}

inline RunSystem run_system_from_json( const json& doc )
{
    RunSystem sys;
    sys.agents = detail::agents_field( doc );
    const auto t = detail::field( doc, "timeBound" ).get< long long >();
    if ( t <= 0 )
        throw DocumentError( "timeBound must be positive" );
    sys.time_bound = static_cast< std::size_t >( t );
    for ( const auto& r : detail::field( doc, "runs" ) ) {
        Run run;
        run.id = detail::field( r, "id" ).get< std::string >();
        for ( const auto& [ agent, tokens ] : detail::field( r, "local" ).items() ) {
            auto& states = run.local_states[ Agent{ agent } ];
            for ( const auto& tok : tokens )
                states.push_back( tok.is_string() ? tok.get< std::string >() : tok.dump() );
        }
        for ( const auto& [ agent, flag ] : detail::field( r, "correct" ).items() )
            run.correct[ Agent{ agent } ] = flag.get< bool >();
        if ( r.contains( "atoms" ) )
            for ( const auto& [ atom, values ] : r.at( "atoms" ).items() )
                run.atoms[ atom ] = values.get< std::vector< bool > >();
        sys.runs.push_back( std::move( run ) );
    }
    return sys;
}

inline json to_json( const RunSystem& sys )
{
    json agents = json::array();
    for ( const auto& a : sys.agents )
        agents.push_back( a.id );
    json runs = json::array();
    for ( const auto& run : sys.runs ) {
        json local = json::object();
        for ( const auto& [ a, tokens ] : run.local_states )
            local[ a.id ] = tokens;
        json correct = json::object();
        for ( const auto& [ a, flag ] : run.correct )
            correct[ a.id ] = flag;
        json atoms = json::object();
        for ( const auto& [ atom, values ] : run.atoms )
            atoms[ atom ] = values;
        runs.push_back( { { "id", run.id }, { "local", local }, { "correct", correct }, { "atoms", atoms } } );
    }
    return { { "agents", agents }, { "timeBound", sys.time_bound }, { "runs", runs } };
}

struct Puzzle
{
    std::vector< Agent > agents;
    std::vector< std::string > types;
    std::vector< Utterance > utterances;
};

inline Puzzle puzzle_from_json( const json& doc )
{
    Puzzle p;
    Universe universe;
    for ( const auto& a : detail::field( doc, "agents" ) ) {
        Agent agent{ a.get< std::string >() };
        if ( !universe.insert( agent ).second )
            throw DocumentError( "duplicate puzzle agent '" + agent.id + "'" );
        p.agents.push_back( std::move( agent ) );
    }
    p.types = doc.contains( "types" ) ? doc.at( "types" ).get< std::vector< std::string > >()
                                      : std::vector< std::string >{ "knight", "knave" };
    if ( p.types != std::vector< std::string >{ "knight", "knave" }
         && p.types != std::vector< std::string >{ "knave", "knight" } )
        throw DocumentError( "puzzles support exactly the types knight and knave" );
    if ( doc.contains( "utterances" ) )
        for ( const auto& u : doc.at( "utterances" ) ) {
            Agent speaker{ detail::field( u, "speaker" ).get< std::string >() };
            if ( !universe.contains( speaker ) )
                throw DocumentError( "speaker '" + speaker.id + "' is not a puzzle agent" );
            p.utterances.push_back(
                { std::move( speaker ), parse( detail::field( u, "formula" ).get< std::string >(), universe ) } );
        }
    return p;
}

inline std::string describe( const TypeAssignment& sigma, const std::vector< Agent >& order )
{
    std::string out;
    for ( const auto& a : order ) {
        if ( !out.empty() )
            out += ' ';
        out += a.id + "=" + sigma.at( a );
    }
    return out;
}

} // namespace hopecheck
