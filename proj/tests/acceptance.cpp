// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracle.hpp"

#include <hopecheck/hopecheck.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace hopecheck;

namespace
{

struct Outcome
{
    bool pass = true;
    std::string detail;
};

// Every enumerated model with 1-2 agents, 1-2 atoms and 1-3 worlds.
template < typename Visit >
void sweep( Visit&& visit )
{
    const std::vector< Universe > universes{ { Agent{ "1" } }, { Agent{ "1" }, Agent{ "2" } } };
    const std::vector< std::set< std::string > > atom_sets{ { "p" }, { "p", "q" } };
    for ( const auto& agents : universes )
        for ( const auto& atoms : atom_sets )
            visit( agents, atoms );
}

Outcome run_schemas( SchemaFamily family )
{
    std::vector< AxiomSchema > chosen;
    for ( const auto& s : axiom_schemas() )
        if ( s.family == family )
            chosen.push_back( s );

    Outcome out;
    std::size_t models = 0, checks = 0;
    sweep( [&]( const Universe& agents, const std::set< std::string >& atoms ) {
        const AxiomSuite suite( agents, default_samples( agents, atoms ), chosen );
        auto report = suite.empty_report();
        for ( std::size_t w = 1; w <= 3; ++w )
            ModelEnumerator( agents, atoms, w ).for_each( [&]( const KripkeModel& m ) { suite.check( m, report ); } );
        models += report.models;
        for ( const auto& s : report.schemas ) {
            checks += s.checks;
            if ( !s.passed() ) {
                out.pass = false;
                out.detail += " " + s.name + " fails: " + print( s.first_failure->instance ) + ";";
            }
        }
    } );
    std::ostringstream os;
    os << chosen.size() << " schemas, " << models << " models, " << checks << " instance checks";
    out.detail = os.str() + ( out.pass ? "" : ";" + out.detail );
    return out;
}

Outcome criterion1()
{
    const Agent a{ "a" };
    Outcome out;
    std::size_t accepted = 0, total = 0;
    for ( std::size_t n = 1; n <= 3; ++n ) {
        std::vector< World > ws;
        for ( std::size_t i = 0; i < n; ++i )
            ws.push_back( "w" + std::to_string( i ) );
        auto relation = [&]( unsigned mask ) {
            Relation r;
            for ( std::size_t i = 0; i < n; ++i )
                for ( std::size_t j = 0; j < n; ++j )
                    if ( ( mask >> ( i * n + j ) ) & 1 )
                        r.emplace( ws[ i ], ws[ j ] );
            return r;
        };
        const unsigned count = 1u << ( n * n );
        for ( unsigned km = 0; km < count; ++km )
            for ( unsigned hm = 0; hm < count; ++hm ) {
                ++total;
                RawModel raw;
                raw.worlds = ws;
                raw.agents = { a };
                raw.k_relation[ a ] = relation( km );
                raw.h_relation[ a ] = relation( hm );
                const bool ok = validate( raw ).empty();
                if ( ok != oracle::is_legal_frame( raw ) ) {
                    out.pass = false;
                    out.detail = "validate disagrees with the direct check";
                    return out;
                }
                if ( !ok )
                    continue;
                ++accepted;
                const RawModel back = expand( canonicalize( raw ) );
                if ( back.k_relation.at( a ) != raw.k_relation.at( a )
                     || back.h_relation.at( a ) != raw.h_relation.at( a ) ) {
                    out.pass = false;
                    out.detail = "canonicalize/expand is not the identity";
                    return out;
                }
            }
    }
    out.detail = std::to_string( total ) + " raw models, " + std::to_string( accepted ) + " accepted";
    return out;
}

Outcome criterion2() { return run_schemas( SchemaFamily::KH ); }

Outcome criterion3()
{
    Outcome out = run_schemas( SchemaFamily::Derived );

    // creed with correct/faulty types yields exactly hope
    const auto ts = TypeSystem::byzantine();
    std::size_t checked = 0;
    sweep( [&]( const Universe& agents, const std::set< std::string >& atoms ) {
        std::vector< Formula > equivalences;
        for ( const auto& i : agents )
            for ( const auto& p : default_samples( agents, atoms ) ) {
                const auto content = informational_content( ts, "correct", { i, p }, { "correct", "faulty" } );
                equivalences.push_back( desugar( Formula::iff( content, Formula::hopes( i, p ) ), agents ) );
            }
        const CompiledFormulas batch( equivalences );
        for ( std::size_t w = 1; w <= 3; ++w )
            ModelEnumerator( agents, atoms, w ).for_each( [&]( const KripkeModel& m ) {
                for ( const auto& e : batch.evaluate( m ) ) {
                    ++checked;
                    if ( !e.all() ) {
                        out.pass = false;
                        return false;
                    }
                }
                return true;
            } );
    } );
    out.detail += "; creed/hope equivalence " + std::to_string( checked ) + " checks"
                  + ( out.pass ? "" : " (failed)" );
    return out;
}

Outcome criterion4()
{
    Outcome out;
    auto valid = [&]( const Universe& u, const std::string& text, std::size_t bound ) {
        return bounded_validity( parse( text, u ), u, bound );
    };
    const Universe two{ Agent{ "1" }, Agent{ "2" } };
    const Universe three{ Agent{ "1" }, Agent{ "2" }, Agent{ "3" } };

    std::vector< std::pair< Universe, std::string > > positive{
        { two, "byz(1) & EH[1,2] p -> p" },
        { three, "byz(1) & EH[1,2] p -> p" },
        { three, "byz(1) & EH[1,3] p -> p" },
        { three, "byz(1) & EH[2,3] p -> p" },
    };
    for ( const auto& [ u, text ] : positive )
        if ( !std::holds_alternative< NoCounterexampleUpTo >( valid( u, text, 3 ) ) ) {
            out.pass = false;
            out.detail += "countermodel for " + text + "; ";
        }

    const auto negative = valid( two, "byz(1) & EH[1] p -> p", 3 );
    const auto* cx = std::get_if< Counterexample >( &negative );
    if ( !cx || cx->model.world_count() != 1 ) {
        out.pass = false;
        out.detail += "no 1-world countermodel for |G| = f";
    }
    if ( out.pass )
        out.detail = "|G| = f+1 valid up to 3 worlds (n = 2, 3); |G| = f refuted with 1 world";
    return out;
}

Outcome criterion5()
{
    Outcome out;
    const Agent a{ "a" }, b{ "b" };
    const Universe ab{ a, b };
    const std::vector< Utterance > utterances{ { a, parse( "type(a,knave) | type(b,knave)", ab ) } };
    const auto solutions = solve_puzzle( { a, b }, utterances );
    if ( solutions.size() != 1 || solutions[ 0 ].at( a ) != "knight" || solutions[ 0 ].at( b ) != "knave" ) {
        out.pass = false;
        out.detail = std::to_string( solutions.size() ) + " solutions";
        return out;
    }
    const auto claim = puzzle_entailment( TypeSystem::knights_and_knaves(), { a, b }, utterances, solutions[ 0 ] );
    if ( !std::holds_alternative< NoCounterexampleUpTo >( bounded_validity( claim, ab, 3 ) ) ) {
        out.pass = false;
        out.detail = "entailment has a countermodel";
        return out;
    }
    out.detail = describe( solutions[ 0 ], { a, b } ) + " (unique); entailment valid up to 3 worlds";
    return out;
}

Outcome criterion6()
{
    Outcome out;
    const auto example = brain_in_vat_example();
    const auto m = compile( example.system );
    for ( const auto& claim : example.claims )
        if ( eval( m, claim.world, claim.formula ) != claim.expected ) {
            out.pass = false;
            out.detail += claim.description + "; ";
        }
    std::mt19937_64 rng( 2024 );
    const Universe agents{ Agent{ "a" }, Agent{ "b" } };
    for ( int i = 0; i < 200; ++i ) {
        const auto sys = oracle::random_run_system( rng, agents, 3, 2 );
        const auto raw = expand( compile( sys ) );
        if ( !validate( raw ).empty() || !oracle::is_legal_frame( raw ) ) {
            out.pass = false;
            out.detail += "random system " + std::to_string( i ) + " compiles to an illegal model; ";
            break;
        }
    }
    if ( out.pass )
        out.detail = std::to_string( example.claims.size() ) + " brain-in-vat claims, 200 random systems legal";
    return out;
}

std::size_t disjuncts( const Formula& f )
{
    return f.op() == Op::Or ? disjuncts( f.lhs() ) + disjuncts( f.rhs() ) : 1;
}

Outcome criterion7()
{
    Outcome out;
    std::mt19937_64 rng( 7 );
    const Universe agents{ Agent{ "1" }, Agent{ "2" }, Agent{ "3" } };
    oracle::FormulaGenerator gen( rng, agents, { "p", "q", "r" } );
    std::set< Op > ops;
    for ( int i = 0; i < 500; ++i ) {
        const auto f = gen( 4 );
        std::function< void( const Formula& ) > collect = [&]( const Formula& g ) {
            ops.insert( g.op() );
            if ( g.is_unary() )
                collect( g.operand() );
            else if ( g.is_binary() ) {
                collect( g.lhs() );
                collect( g.rhs() );
            }
        };
        collect( f );
        const auto text = print( f );
        if ( !( parse( text, agents ) == f ) ) {
            out.pass = false;
            out.detail = "round trip fails for " + text;
            return out;
        }
    }
    if ( ops.size() != 15 ) {
        out.pass = false;
        out.detail = "generator covered " + std::to_string( ops.size() ) + " of 15 constructors";
        return out;
    }
    for ( unsigned n = 1; n <= 5; ++n ) {
        Universe u;
        for ( unsigned i = 1; i <= n; ++i )
            u.insert( Agent{ std::to_string( i ) } );
        for ( unsigned f = 0; f <= n; ++f )
            if ( disjuncts( expand_byz( f, u ) ) != oracle::binomial( n, n - f ) ) {
                out.pass = false;
                out.detail = "byz(" + std::to_string( f ) + ") over " + std::to_string( n ) + " agents";
                return out;
            }
    }
    out.detail = "500 formulas over all 15 constructors; byz counts for n <= 5";
    return out;
}

Outcome criterion8()
{
    Outcome out;
    for ( unsigned w = 1; w <= 3; ++w )
        for ( unsigned a = 1; a <= 2; ++a )
            for ( unsigned k = 0; k <= 1; ++k ) {
                Universe agents;
                for ( unsigned i = 1; i <= a; ++i )
                    agents.insert( Agent{ std::to_string( i ) } );
                std::set< std::string > atoms;
                if ( k == 1 )
                    atoms.insert( "p" );
                const ModelEnumerator e( agents, atoms, w );
                std::size_t visited = 0;
                e.for_each( [&]( const KripkeModel& ) { ++visited; } );
                const auto expected = oracle::closed_form_count( w, a, k );
                if ( e.size() != expected || visited != expected ) {
                    out.pass = false;
                    out.detail += "(w,a,k)=(" + std::to_string( w ) + "," + std::to_string( a ) + ","
                                  + std::to_string( k ) + ") ";
                }
            }
    if ( out.pass )
        out.detail = "12 configurations match";
    return out;
}

} // namespace

int main()
{
    const std::vector< std::pair< std::string, std::function< Outcome() > > > criteria{
        { "frame soundness and completeness", criterion1 },
        { "KH axioms on the model sweep", criterion2 },
        { "derived hope and belief theorems", criterion3 },
        { "byzantine learning from mutual hope", criterion4 },
        { "knights and knaves puzzle 28", criterion5 },
        { "runs compilation", criterion6 },
        { "parser round trip and byz expansion", criterion7 },
        { "enumeration counts", criterion8 },
    };
    bool all = true;
    for ( std::size_t i = 0; i < criteria.size(); ++i ) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[ i ].second();
        } catch ( const std::exception& e ) {
            out = { false, std::string( "exception: " ) + e.what() };
        }
        const double secs = std::chrono::duration< double >( std::chrono::steady_clock::now() - start ).count();
        all = all && out.pass;
        std::cout << ( out.pass ? "PASS" : "FAIL" ) << " criterion " << i + 1 << ": " << criteria[ i ].first << " ("
                  << out.detail << ") [" << std::fixed << std::setprecision( 2 ) << secs << "s]\n"
                  << std::flush;
    }
    return all ? 0 : 1;
}
