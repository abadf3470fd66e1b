#pragma once

// Truth of formulas in knowledge-and-hope models.
//
// Evaluation computes the full truth set of a core formula bottom-up:
//   K[i] f  holds at s iff the K_i-block of s lies inside [[f]];
//   H[i] f  holds at s iff s is outside D_i, or the block of s restricted to
//           D_i lies inside [[f]].
// Surface formulas are desugared first; byz(f) counts over the model's agents.

#include "formula.hpp"
#include "kripke.hpp"
#include "syntax.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace hopecheck
{

class EvalError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Truth set of a core formula.
inline WorldSet extension( const KripkeModel& m, const Formula& core )
{
    switch ( core.op() ) {
    case Op::Bot:
        return WorldSet( m.world_count() );
    case Op::Atom:
        return m.truth_set( core.name() );
    case Op::Not:
        return ~extension( m, core.operand() );
    case Op::And:
        return extension( m, core.lhs() ) & extension( m, core.rhs() );
    case Op::K:
    case Op::H: {
        if ( !m.has_agent( core.agent() ) )
            throw EvalError( "unknown agent '" + core.agent().id + "'" );
        const auto& frame = m.frame( core.agent() );
        const WorldSet body = extension( m, core.operand() );
        const bool hope = core.op() == Op::H;
        WorldSet out = hope ? ~frame.hope_domain : WorldSet( m.world_count() );
        for ( const auto& block : frame.blocks ) {
            if ( hope ) {
                const WorldSet reach = block & frame.hope_domain;
                if ( reach.subset_of( body ) )
                    out |= reach;
            } else if ( block.subset_of( body ) ) {
                out |= block;
            }
        }
        return out;
    }
    default:
        throw EvalError( "formula is not in the core fragment: " + print( core ) );
    }
}

// A batch of core formulas sharing one node per distinct subformula, so a
// model sweep evaluates each common subformula once per model.
class CompiledFormulas
{
    struct Node
    {
        Op op;
        std::string name;
        Agent agent;
        std::size_t lhs = 0, rhs = 0;
    };

    std::vector< Node > _nodes;  // children precede parents
    std::vector< std::size_t > _roots;
    std::map< std::tuple< Op, std::string, std::string, std::size_t, std::size_t >, std::size_t > _index;

    std::size_t add( const Formula& f )
    {
        Node n{ f.op(), {}, {}, 0, 0 };
        switch ( f.op() ) {
        case Op::Bot:
            break;
        case Op::Atom:
            n.name = f.name();
            break;
        case Op::Not:
            n.lhs = add( f.operand() );
            break;
        case Op::And:
            n.lhs = add( f.lhs() );
            n.rhs = add( f.rhs() );
            break;
        case Op::K:
        case Op::H:
            n.agent = f.agent();
            n.lhs = add( f.operand() );
            break;
        default:
            throw EvalError( "formula is not in the core fragment: " + print( f ) );
        }
        auto [ it, fresh ] = _index.try_emplace( { n.op, n.name, n.agent.id, n.lhs, n.rhs }, _nodes.size() );
        if ( fresh )
            _nodes.push_back( std::move( n ) );
        return it->second;
    }

public:
    explicit CompiledFormulas( const std::vector< Formula >& cores )
    {
        for ( const auto& f : cores )
            _roots.push_back( add( f ) );
    }

    [[nodiscard]] std::size_t size() const { return _roots.size(); }
    [[nodiscard]] std::size_t node_count() const { return _nodes.size(); }

    // Truth sets of the formulas, in construction order.
    [[nodiscard]] std::vector< WorldSet > evaluate( const KripkeModel& m ) const
    {
        std::vector< WorldSet > value;
        value.reserve( _nodes.size() );
        for ( const auto& n : _nodes ) {
            switch ( n.op ) {
            case Op::Bot:
                value.emplace_back( m.world_count() );
                break;
            case Op::Atom:
                value.push_back( m.truth_set( n.name ) );
                break;
            case Op::Not:
                value.push_back( ~value[ n.lhs ] );
                break;
            case Op::And:
                value.push_back( value[ n.lhs ] & value[ n.rhs ] );
                break;
            default: {
                if ( !m.has_agent( n.agent ) )
                    throw EvalError( "unknown agent '" + n.agent.id + "'" );
                const auto& frame = m.frame( n.agent );
                const WorldSet& body = value[ n.lhs ];
                const bool hope = n.op == Op::H;
                WorldSet out = hope ? ~frame.hope_domain : WorldSet( m.world_count() );
                for ( const auto& block : frame.blocks ) {
                    if ( hope ) {
                        const WorldSet reach = block & frame.hope_domain;
                        if ( reach.subset_of( body ) )
                            out |= reach;
                    } else if ( block.subset_of( body ) ) {
                        out |= block;
                    }
                }
                value.push_back( std::move( out ) );
            }
            }
        }
        std::vector< WorldSet > out;
        out.reserve( _roots.size() );
        for ( auto r : _roots )
            out.push_back( value[ r ] );
        return out;
    }
};

inline WorldSet truth_set( const KripkeModel& m, const Formula& f )
{
    return extension( m, desugar( f, m.agents() ) );
}

inline bool eval( const KripkeModel& m, const World& world, const Formula& f )
{
    auto idx = m.index_of( world );
    if ( !idx )
        throw EvalError( "unknown world '" + world + "'" );
    return truth_set( m, f ).test( *idx );
}

inline bool valid_in_model( const KripkeModel& m, const Formula& f )
{
    return truth_set( m, f ).all();
}

inline std::optional< World > sat_in_model( const KripkeModel& m, const Formula& f )
{
    const auto s = truth_set( m, f );
    if ( s.none() )
        return std::nullopt;
    return m.worlds()[ s.first() ];
}

// ---------------------------------------------------------------------------
// Bounded validity

struct PointedModel
{
    KripkeModel model;
    World world;
};

struct NoCounterexampleUpTo
{
    std::size_t bound;
};

using Counterexample = PointedModel;
using Verdict = std::variant< NoCounterexampleUpTo, Counterexample >;

namespace detail
{

// First pointed model (world count ascending, then enumeration order, then
// world order) where the core formula's truth set, after optional
// complementing, is non-empty.
inline std::optional< PointedModel > search( const Formula& f, const Universe& universe, std::size_t max_worlds,
                                             std::uint64_t ceiling, bool want_true )
{
    if ( max_worlds == 0 )
        throw ModelError( "max worlds must be positive" );
    const Formula core = hopecheck::desugar( f, universe );
    const auto info = analyze( core, universe );
    for ( const auto& a : info.agents )
        if ( !universe.contains( a ) )
            throw EvalError( "unknown agent '" + a.id + "'" );

    std::vector< ModelEnumerator > sweeps;
    for ( std::size_t w = 1; w <= max_worlds; ++w )
        sweeps.emplace_back( info.agents, info.atoms, w, ceiling );

    std::optional< PointedModel > found;
    for ( const auto& sweep : sweeps ) {
        sweep.for_each( [&]( const KripkeModel& m ) {
            WorldSet s = extension( m, core );
            if ( !want_true )
                s = ~s;
            if ( s.none() )
                return true;
            found = PointedModel{ m, m.worlds()[ s.first() ] };
            return false;
        } );
        if ( found )
            break;
    }
    return found;
}

} // namespace detail

// Scans all models with 1..max_worlds worlds over the agents and atoms of f.
// Byz(f) is expanded over `universe`.
inline Verdict bounded_validity( const Formula& f, const Universe& universe, std::size_t max_worlds,
                                 std::uint64_t ceiling = default_model_ceiling )
{
    if ( auto cx = detail::search( f, universe, max_worlds, ceiling, false ) )
        return std::move( *cx );
    return NoCounterexampleUpTo{ max_worlds };
}

inline std::optional< PointedModel > bounded_satisfiability( const Formula& f, const Universe& universe,
                                                             std::size_t max_worlds,
                                                             std::uint64_t ceiling = default_model_ceiling )
{
    return detail::search( f, universe, max_worlds, ceiling, true );
}

// ---------------------------------------------------------------------------
// Axiom schemas

enum class SchemaFamily
{
    KH,       // the axioms of the logic itself
    Derived,  // theorems about hope and belief
};

struct AxiomSchema
{
    std::string name;
    SchemaFamily family;
    int arity;  // number of formula metavariables: 0, 1 or 2
    std::function< Formula( const Agent&, const Formula&, const Formula& ) > instantiate;
};

inline const std::vector< AxiomSchema >& axiom_schemas()
{
    using F = Formula;
    static const std::vector< AxiomSchema > schemas = [] {
        auto bot = F::bot();
        auto neg = []( F f ) { return F::negate( std::move( f ) ); };
        auto imp = []( F a, F b ) { return F::implies( std::move( a ), std::move( b ) ); };
        auto K = []( const Agent& i, F f ) { return F::knows( i, std::move( f ) ); };
        auto H = []( const Agent& i, F f ) { return F::hopes( i, std::move( f ) ); };
        auto B = []( const Agent& i, F f ) { return F::believes( i, std::move( f ) ); };
        auto c = []( const Agent& i ) { return F::correct( i ); };
        auto hcorr = [=]( const Agent& i ) { return neg( H( i, bot ) ); };

        using S = SchemaFamily;
        return std::vector< AxiomSchema >{
            { "d^H", S::KH, 0, [=]( const Agent& i, const F&, const F& ) { return H( i, hcorr( i ) ); } },
            { "k^K", S::KH, 2,
              [=]( const Agent& i, const F& p, const F& q ) {
                  return imp( K( i, imp( p, q ) ), imp( K( i, p ), K( i, q ) ) );
              } },
            { "4^K", S::KH, 1, [=]( const Agent& i, const F& p, const F& ) { return imp( K( i, p ), K( i, K( i, p ) ) ); } },
            { "5^K", S::KH, 1,
              [=]( const Agent& i, const F& p, const F& ) { return imp( neg( K( i, p ) ), K( i, neg( K( i, p ) ) ) ); } },
            { "t^K", S::KH, 1, [=]( const Agent& i, const F& p, const F& ) { return imp( K( i, p ), p ); } },
            { "kh", S::KH, 1,
              [=]( const Agent& i, const F& p, const F& ) {
                  return F::iff( H( i, p ), imp( hcorr( i ), K( i, imp( hcorr( i ), p ) ) ) );
              } },

            { "k^H", S::Derived, 2,
              [=]( const Agent& i, const F& p, const F& q ) {
                  return imp( H( i, imp( p, q ) ), imp( H( i, p ), H( i, q ) ) );
              } },
            { "4^H", S::Derived, 1, [=]( const Agent& i, const F& p, const F& ) { return imp( H( i, p ), H( i, H( i, p ) ) ); } },
            { "b^H", S::Derived, 1,
              [=]( const Agent& i, const F& p, const F& ) { return imp( p, H( i, neg( H( i, neg( p ) ) ) ) ); } },
            { "5^H", S::Derived, 1,
              [=]( const Agent& i, const F& p, const F& ) { return imp( neg( H( i, p ) ), H( i, neg( H( i, p ) ) ) ); } },
            { "factive-for-correct^H", S::Derived, 1,
              [=]( const Agent& i, const F& p, const F& ) { return imp( c( i ), imp( H( i, p ), p ) ); } },
            { "hopes-correct^H", S::Derived, 0, [=]( const Agent& i, const F&, const F& ) { return H( i, c( i ) ); } },
            { "faulty-hopes-anything", S::Derived, 1,
              [=]( const Agent& i, const F& p, const F& ) { return imp( neg( c( i ) ), H( i, p ) ); } },
            { "k^B", S::Derived, 2,
              [=]( const Agent& i, const F& p, const F& q ) {
                  return imp( B( i, imp( p, q ) ), imp( B( i, p ), B( i, q ) ) );
              } },
            { "4^B", S::Derived, 1, [=]( const Agent& i, const F& p, const F& ) { return imp( B( i, p ), B( i, B( i, p ) ) ); } },
            { "5^B", S::Derived, 1,
              [=]( const Agent& i, const F& p, const F& ) { return imp( neg( B( i, p ) ), B( i, neg( B( i, p ) ) ) ); } },
            { "factive-for-correct^B", S::Derived, 1,
              [=]( const Agent& i, const F& p, const F& ) { return imp( c( i ), imp( B( i, p ), p ) ); } },
            { "believes-correct^B", S::Derived, 0, [=]( const Agent& i, const F&, const F& ) { return B( i, c( i ) ); } },
            { "belief-implies-hope", S::Derived, 1,
              [=]( const Agent& i, const F& p, const F& ) { return imp( B( i, p ), H( i, p ) ); } },
            { "message-content", S::Derived, 1,
              [=]( const Agent& i, const F& p, const F& ) {
                  return F::iff( F::conj( imp( c( i ), B( i, p ) ), imp( neg( c( i ) ), F::top() ) ), H( i, p ) );
              } },
        };
    }();
    return schemas;
}

// {p, !p, p & q, K[i] p, H[i] p}: p and q are the first two atoms (or the
// literal names p and q when fewer are declared), one K and H sample per agent.
inline std::vector< Formula > default_samples( const Universe& agents, const std::set< std::string >& atoms )
{
    auto it = atoms.begin();
    const std::string p = it != atoms.end() ? *it++ : "p";
    const std::string q = it != atoms.end() ? *it : ( p == "q" ? "p" : "q" );
    const auto P = Formula::atom( p );
    std::vector< Formula > out{ P, Formula::negate( P ), Formula::conj( P, Formula::atom( q ) ) };
    for ( const auto& a : agents ) {
        out.push_back( Formula::knows( a, P ) );
        out.push_back( Formula::hopes( a, P ) );
    }
    return out;
}

struct AxiomFailure
{
    Formula instance;
    KripkeModel model;
    World world;
};

struct SchemaResult
{
    std::string name;
    SchemaFamily family;
    std::uint64_t checks = 0;  // instance-model pairs evaluated
    std::uint64_t failures = 0;
    std::optional< AxiomFailure > first_failure;

    [[nodiscard]] bool passed() const { return failures == 0; }
};

struct AxiomReport
{
    std::vector< SchemaResult > schemas;
    std::uint64_t models = 0;

    [[nodiscard]] bool passed() const
    {
        for ( const auto& s : schemas )
            if ( !s.passed() )
                return false;
        return true;
    }

    [[nodiscard]] const SchemaResult& operator[]( const std::string& name ) const
    {
        for ( const auto& s : schemas )
            if ( s.name == name )
                return s;
        throw std::out_of_range( "no schema named " + name );
    }
};

// Schema instances are built and desugared once, so one suite can be run over
// many models sharing the same agents.
class AxiomSuite
{
    struct Instance
    {
        std::size_t schema;
        Formula surface;
        Formula core;
    };

    std::vector< AxiomSchema > _schemas;
    Universe _agents;
    std::vector< Instance > _instances;
    CompiledFormulas _compiled{ {} };

public:
    AxiomSuite( const Universe& agents, const std::vector< Formula >& samples,
                std::vector< AxiomSchema > schemas = axiom_schemas() )
        : _schemas{ std::move( schemas ) }, _agents{ agents }
    {
        if ( samples.empty() )
            throw FormulaError( "axiom suite needs at least one sample formula" );
        for ( std::size_t s = 0; s < _schemas.size(); ++s ) {
            const auto& schema = _schemas[ s ];
            for ( const auto& agent : agents ) {
                auto add = [&]( const Formula& p, const Formula& q ) {
                    Formula f = schema.instantiate( agent, p, q );
                    _instances.push_back( { s, f, desugar( f, agents ) } );
                };
                if ( schema.arity == 0 )
                    add( Formula::bot(), Formula::bot() );
                else if ( schema.arity == 1 )
                    for ( const auto& p : samples )
                        add( p, p );
                else
                    for ( const auto& p : samples )
                        for ( const auto& q : samples )
                            add( p, q );
            }
        }
        std::vector< Formula > cores;
        for ( const auto& inst : _instances )
            cores.push_back( inst.core );
        _compiled = CompiledFormulas( cores );
    }

    [[nodiscard]] AxiomReport empty_report() const
    {
        AxiomReport r;
        for ( const auto& s : _schemas )
            r.schemas.push_back( { s.name, s.family, 0, 0, std::nullopt } );
        return r;
    }

    [[nodiscard]] std::size_t instance_count() const { return _instances.size(); }

    // Adds the model's results to an existing report.
    void check( const KripkeModel& m, AxiomReport& report ) const
    {
        if ( m.agents() != _agents )
            throw EvalError( "model agents differ from the suite's agents" );
        ++report.models;
        const auto values = _compiled.evaluate( m );
        for ( std::size_t k = 0; k < _instances.size(); ++k ) {
            const auto& inst = _instances[ k ];
            auto& result = report.schemas[ inst.schema ];
            ++result.checks;
            const WorldSet& s = values[ k ];
            if ( s.all() )
                continue;
            ++result.failures;
            if ( !result.first_failure )
                result.first_failure = AxiomFailure{ inst.surface, m, m.worlds()[ ( ~s ).first() ] };
        }
    }

    [[nodiscard]] AxiomReport run( const KripkeModel& m ) const
    {
        AxiomReport r = empty_report();
        check( m, r );
        return r;
    }
};

inline AxiomReport axiom_suite( const KripkeModel& m, const std::vector< Formula >& samples )
{
    return AxiomSuite( m.agents(), samples ).run( m );
}

} // namespace hopecheck
