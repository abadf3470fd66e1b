// hopecheck: command-line front end for the knowledge-and-hope checker.
//
// Exit status: 0 for the expected outcome (holds, valid up to the bound,
// satisfiable, no violations, unique puzzle solution), 1 for the logical
// negative, 2 for usage, I/O and parse errors.

#include <hopecheck/hopecheck.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace hopecheck;

namespace
{

constexpr int exit_expected = 0;
constexpr int exit_negative = 1;
constexpr int exit_error = 2;

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

json load_json( const std::string& path )
{
    std::ifstream in( path );
    if ( !in )
        throw UsageError( "cannot open '" + path + "'" );
    try {
        return json::parse( in );
    } catch ( const json::parse_error& e ) {
        throw UsageError( path + ": " + e.what() );
    }
}

std::uint64_t model_ceiling( std::uint64_t flag )
{
    if ( flag != 0 )
        return flag;
    if ( const char* env = std::getenv( "HOPECHECK_MAX_MODELS" ) ) {
        try {
            return std::stoull( env );
        } catch ( const std::exception& ) {
            throw UsageError( "HOPECHECK_MAX_MODELS must be a positive integer" );
        }
    }
    return default_model_ceiling;
}

Universe universe_of( const std::vector< std::string >& ids )
{
    Universe u;
    for ( const auto& id : ids ) {
        if ( id.empty() )
            throw UsageError( "empty agent id" );
        for ( char c : id )
            if ( !std::isalnum( static_cast< unsigned char >( c ) ) && c != '_' )
                throw UsageError( "invalid agent id '" + id + "'" );
        u.insert( Agent{ id } );
    }
    return u;
}

std::string truth( bool b ) { return b ? "true" : "false"; }

struct Options
{
    bool json = false;
    std::string model_path;
    std::string formula;
    std::string world;
    std::vector< std::string > agents;
    std::vector< std::string > atoms;
    std::size_t max_worlds = 3;
    std::uint64_t max_models = 0;
    std::string runs_path;
    std::string out_path;
    std::string puzzle_path;
    std::string demo;
};

int run_check( const Options& o )
{
    const auto model = model_from_json( load_json( o.model_path ) );
    const auto f = parse( o.formula, model.agents() );
    const auto holds = truth_set( model, f );

    if ( !o.world.empty() ) {
        auto idx = model.index_of( o.world );
        if ( !idx )
            throw UsageError( "unknown world '" + o.world + "'" );
        const bool value = holds.test( *idx );
        if ( o.json )
            std::cout << json{ { "world", o.world }, { "value", value } }.dump( 2 ) << "\n";
        else
            std::cout << o.world << ": " << truth( value ) << "\n";
        return value ? exit_expected : exit_negative;
    }

    json per_world = json::object();
    for ( std::size_t i = 0; i < model.world_count(); ++i ) {
        per_world[ model.worlds()[ i ] ] = holds.test( i );
        if ( !o.json )
            std::cout << model.worlds()[ i ] << ": " << truth( holds.test( i ) ) << "\n";
    }
    if ( o.json )
        std::cout << json{ { "worlds", per_world }, { "valid", holds.all() } }.dump( 2 ) << "\n";
    return holds.all() ? exit_expected : exit_negative;
}

int run_validate( const Options& o )
{
    const auto raw = raw_model_from_json( load_json( o.model_path ) );
    const auto violations = validate( raw );
    if ( o.json ) {
        std::cout << json{ { "violations", to_json( violations ) } }.dump( 2 ) << "\n";
    } else if ( violations.empty() ) {
        std::cout << "ok: no frame violations\n";
    } else {
        for ( const auto& v : violations )
            std::cout << describe( v ) << "\n";
    }
    return violations.empty() ? exit_expected : exit_negative;
}

int run_validity( const Options& o, bool satisfiability )
{
    const auto universe = universe_of( o.agents );
    const auto f = parse( o.formula, universe );
    const auto ceiling = model_ceiling( o.max_models );

    if ( !satisfiability ) {
        const auto verdict = bounded_validity( f, universe, o.max_worlds, ceiling );
        if ( o.json ) {
            std::cout << to_json( verdict ).dump( 2 ) << "\n";
        } else if ( const auto* ok = std::get_if< NoCounterexampleUpTo >( &verdict ) ) {
            std::cout << "valid-up-to " << ok->bound << "\n";
        } else {
            const auto& cx = std::get< Counterexample >( verdict );
            std::cout << "counterexample (" << cx.model.world_count() << " world"
                      << ( cx.model.world_count() == 1 ? "" : "s" ) << ") at " << cx.world << "\n"
                      << to_json( cx.model ).dump( 2 ) << "\n";
        }
        return std::holds_alternative< NoCounterexampleUpTo >( verdict ) ? exit_expected : exit_negative;
    }

    const auto witness = bounded_satisfiability( f, universe, o.max_worlds, ceiling );
    if ( o.json ) {
        if ( witness )
            std::cout << json{ { "verdict", "satisfiable" }, { "model", to_json( witness->model ) },
                               { "world", witness->world } }
                             .dump( 2 )
                      << "\n";
        else
            std::cout << json{ { "verdict", "unsatisfiable-up-to" }, { "bound", o.max_worlds } }.dump( 2 ) << "\n";
    } else if ( witness ) {
        std::cout << "satisfiable (" << witness->model.world_count() << " world"
                  << ( witness->model.world_count() == 1 ? "" : "s" ) << ") at " << witness->world << "\n"
                  << to_json( witness->model ).dump( 2 ) << "\n";
    } else {
        std::cout << "unsatisfiable-up-to " << o.max_worlds << "\n";
    }
    return witness ? exit_expected : exit_negative;
}

int run_axioms( const Options& o )
{
    AxiomReport report;
    if ( !o.model_path.empty() ) {
        const auto model = model_from_json( load_json( o.model_path ) );
        report = axiom_suite( model, default_samples( model.agents(), model.atoms() ) );
    } else {
        const auto agents = universe_of( o.agents.empty() ? std::vector< std::string >{ "a" } : o.agents );
        const std::set< std::string > atoms = o.atoms.empty() ? std::set< std::string >{ "p" }
                                                              : std::set< std::string >( o.atoms.begin(), o.atoms.end() );
        const auto ceiling = model_ceiling( o.max_models );
        std::vector< ModelEnumerator > sweeps;
        for ( std::size_t w = 1; w <= o.max_worlds; ++w )
            sweeps.emplace_back( agents, atoms, w, ceiling );
        const AxiomSuite suite( agents, default_samples( agents, atoms ) );
        report = suite.empty_report();
        for ( const auto& sweep : sweeps )
            sweep.for_each( [&]( const KripkeModel& m ) { suite.check( m, report ); } );
    }

    if ( o.json ) {
        std::cout << to_json( report ).dump( 2 ) << "\n";
    } else {
        for ( const auto& s : report.schemas ) {
            std::cout << ( s.passed() ? "PASS " : "FAIL " ) << s.name << " (" << s.checks << " checks";
            if ( !s.passed() )
                std::cout << ", " << s.failures << " failures; first: " << print( s.first_failure->instance )
                          << " at " << s.first_failure->world;
            std::cout << ")\n";
        }
        std::cout << ( report.passed() ? "all schemas hold" : "some schemas fail" ) << " on " << report.models
                  << " model" << ( report.models == 1 ? "" : "s" ) << "\n";
    }
    return report.passed() ? exit_expected : exit_negative;
}

int run_compile( const Options& o )
{
    const auto model = compile( run_system_from_json( load_json( o.runs_path ) ) );
    const auto doc = to_json( model ).dump( 2 ) + "\n";
    if ( o.out_path.empty() || o.out_path == "-" ) {
        std::cout << doc;
        return exit_expected;
    }
    std::ofstream out( o.out_path );
    if ( !out || !( out << doc ) )
        throw UsageError( "cannot write '" + o.out_path + "'" );
    if ( o.json )
        std::cout << json{ { "output", o.out_path }, { "worlds", model.world_count() } }.dump( 2 ) << "\n";
    else
        std::cout << "wrote " << model.world_count() << " worlds to " << o.out_path << "\n";
    return exit_expected;
}

int run_puzzle( const Options& o )
{
    const auto puzzle = puzzle_from_json( load_json( o.puzzle_path ) );
    const auto solutions = solve_puzzle( puzzle.agents, puzzle.utterances );
    if ( o.json ) {
        json list = json::array();
        for ( const auto& sigma : solutions ) {
            json entry = json::object();
            for ( const auto& [ agent, type ] : sigma )
                entry[ agent.id ] = type;
            list.push_back( entry );
        }
        std::cout << json{ { "solutions", list }, { "unique", solutions.size() == 1 } }.dump( 2 ) << "\n";
    } else if ( solutions.empty() ) {
        std::cout << "no solution\n";
    } else if ( solutions.size() == 1 ) {
        std::cout << describe( solutions[ 0 ], puzzle.agents ) << " (unique)\n";
    } else {
        for ( const auto& sigma : solutions )
            std::cout << describe( sigma, puzzle.agents ) << "\n";
        std::cout << "(" << solutions.size() << " solutions)\n";
    }
    return solutions.size() == 1 ? exit_expected : exit_negative;
}

int run_demo( const Options& o )
{
    if ( o.demo != "brain-in-vat" )
        throw UsageError( "unknown demo '" + o.demo + "' (available: brain-in-vat)" );
    const auto example = brain_in_vat_example();
    const auto model = compile( example.system );
    bool all = true;
    json claims = json::array();
    for ( const auto& claim : example.claims ) {
        const bool value = eval( model, claim.world, claim.formula );
        const bool pass = value == claim.expected;
        all = all && pass;
        if ( o.json )
            claims.push_back( { { "world", claim.world },
                                { "formula", print( claim.formula ) },
                                { "expected", claim.expected },
                                { "value", value },
                                { "pass", pass } } );
        else
            std::cout << ( pass ? "PASS " : "FAIL " ) << claim.world << "  " << print( claim.formula ) << " = "
                      << truth( value ) << "  (" << claim.description << ")\n";
    }
    if ( o.json )
        std::cout << json{ { "system", to_json( example.system ) }, { "claims", claims }, { "pass", all } }.dump( 2 )
                  << "\n";
    return all ? exit_expected : exit_negative;
}

} // namespace

int main( int argc, char** argv )
{
    CLI::App app{ "Model checker for the logic of knowledge and hope" };
    app.require_subcommand( 1 );
    Options o;

    auto add_json = [&]( CLI::App* cmd ) { cmd->add_flag( "--json", o.json, "Machine-readable output" ); };
    auto add_ceiling = [&]( CLI::App* cmd ) {
        cmd->add_option( "--max-models", o.max_models,
                         "Refuse enumerations larger than this (default 10^7 or $HOPECHECK_MAX_MODELS)" );
    };

    auto* check = app.add_subcommand( "check", "Evaluate a formula in a model" );
    check->add_option( "model", o.model_path, "Model JSON" )->required();
    check->add_option( "formula", o.formula, "Formula" )->required();
    check->add_option( "--world", o.world, "Only this world" );
    add_json( check );

    auto* val = app.add_subcommand( "validate", "Check a model against the frame conditions" );
    val->add_option( "model", o.model_path, "Model JSON (canonical or raw form)" )->required();
    add_json( val );

    auto* validity = app.add_subcommand( "validity", "Search for a countermodel up to a world bound" );
    auto* sat = app.add_subcommand( "sat", "Search for a satisfying model up to a world bound" );
    for ( auto* cmd : { validity, sat } ) {
        cmd->add_option( "formula", o.formula, "Formula" )->required();
        cmd->add_option( "--agents", o.agents, "Agent universe, comma separated" )->required()->delimiter( ',' );
        cmd->add_option( "--max-worlds", o.max_worlds, "Largest model size to scan" )
            ->check( CLI::PositiveNumber );
        add_ceiling( cmd );
        add_json( cmd );
    }

    auto* axioms = app.add_subcommand( "axioms", "Check the axiom schemas on a model or on all small models" );
    axioms->add_option( "model", o.model_path, "Model JSON; omit to sweep enumerated models" );
    axioms->add_option( "--agents", o.agents, "Agents for the sweep (default a)" )->delimiter( ',' );
    axioms->add_option( "--atoms", o.atoms, "Atoms for the sweep (default p)" )->delimiter( ',' );
    axioms->add_option( "--max-worlds", o.max_worlds, "Largest model size for the sweep" )
        ->check( CLI::PositiveNumber );
    add_ceiling( axioms );
    add_json( axioms );

    auto* comp = app.add_subcommand( "compile-runs", "Compile a run system into a model" );
    comp->add_option( "runs", o.runs_path, "Run system JSON" )->required();
    comp->add_option( "-o,--output", o.out_path, "Output model JSON (default stdout)" );
    add_json( comp );

    auto* puzzle = app.add_subcommand( "puzzle", "Solve a knights-and-knaves puzzle" );
    puzzle->add_option( "puzzle", o.puzzle_path, "Puzzle JSON" )->required();
    add_json( puzzle );

    auto* demo = app.add_subcommand( "demo", "Run a built-in demonstration" );
    demo->add_option( "name", o.demo, "Demo name (brain-in-vat)" )->required();
    add_json( demo );

    try {
        app.parse( argc, argv );
    } catch ( const CLI::CallForHelp& e ) {
        return app.exit( e );
    } catch ( const CLI::ParseError& e ) {
        app.exit( e );
        return exit_error;
    }

    try {
        if ( *check )
            return run_check( o );
        if ( *val )
            return run_validate( o );
        if ( *validity )
            return run_validity( o, false );
        if ( *sat )
            return run_validity( o, true );
        if ( *axioms )
            return run_axioms( o );
        if ( *comp )
            return run_compile( o );
        if ( *puzzle )
            return run_puzzle( o );
        if ( *demo )
            return run_demo( o );
    } catch ( const ParseError& e ) {
        std::cerr << "parse error: " << e.what() << "\n";
    } catch ( const json::exception& e ) {
        std::cerr << "malformed document: " << e.what() << "\n";
    } catch ( const std::exception& e ) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return exit_error;
}
