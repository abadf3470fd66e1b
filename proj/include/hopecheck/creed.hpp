#pragma once

// Typed communication.  A listener of type L who hears agent a say f, and
// thinks a may have type S, learns
//
//     creed(L, S, a, f)  =  is_S(a) -> K[a] pre_LS(f)
//
// where pre_LS is the precondition an S-type speaker must satisfy to say f,
// as far as L-type agents know.  The informational content of the utterance
// is the conjunction over all candidate types.  With types correct/faulty and
// preconditions (correct(a) -> f) / top this is exactly H[a] f.

#include "formula.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopecheck
{

class CreedError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Transformer
{
    std::string name;
    std::function< Formula( const Formula& content, const Agent& speaker ) > apply;
};

namespace transformers
{

inline Transformer identity()
{
    return { "identity", []( const Formula& f, const Agent& ) { return f; } };
}

inline Transformer negation()
{
    return { "negation", []( const Formula& f, const Agent& ) { return Formula::negate( f ); } };
}

// Speaking f requires believing it: K[a](correct(a) -> f) once wrapped.
inline Transformer belief_guard()
{
    return { "belief-guard",
             []( const Formula& f, const Agent& a ) { return Formula::implies( Formula::correct( a ), f ); } };
}

inline Transformer constant_top()
{
    return { "constant-top", []( const Formula&, const Agent& ) { return Formula::top(); } };
}

} // namespace transformers

class TypeSystem
{
    std::vector< std::string > _types;
    std::map< std::pair< std::string, std::string >, Transformer > _transformers;
    std::map< std::string, std::function< Formula( const Agent& ) > > _membership;

    void require( const std::string& type ) const
    {
        if ( !has_type( type ) )
            throw CreedError( "unknown agent type '" + type + "'" );
    }

public:
    explicit TypeSystem( std::vector< std::string > types ) : _types{ std::move( types ) }
    {
        if ( _types.empty() )
            throw CreedError( "a type system needs at least one type" );
        for ( std::size_t i = 0; i < _types.size(); ++i )
            for ( std::size_t j = i + 1; j < _types.size(); ++j )
                if ( _types[ i ] == _types[ j ] )
                    throw CreedError( "duplicate agent type '" + _types[ i ] + "'" );
    }

    // Knights say only what they know to be true, knaves only what they know
    // to be false; every listener type knows this.
    static TypeSystem knights_and_knaves()
    {
        TypeSystem ts( { "knight", "knave" } );
        for ( const auto& l : ts.types() ) {
            ts.set_transformer( l, "knight", transformers::identity() );
            ts.set_transformer( l, "knave", transformers::negation() );
        }
        return ts;
    }

    // Correct agents say what they believe; faulty ones say anything.  Type
    // membership is the correctness atom rather than a type atom.
    static TypeSystem byzantine()
    {
        TypeSystem ts( { "correct", "faulty" } );
        for ( const auto& l : ts.types() ) {
            ts.set_transformer( l, "correct", transformers::belief_guard() );
            ts.set_transformer( l, "faulty", transformers::constant_top() );
        }
        ts.set_membership( "correct", []( const Agent& a ) { return Formula::correct( a ); } );
        ts.set_membership( "faulty", []( const Agent& a ) { return Formula::negate( Formula::correct( a ) ); } );
        return ts;
    }

    [[nodiscard]] const std::vector< std::string >& types() const { return _types; }

    [[nodiscard]] bool has_type( const std::string& type ) const
    {
        for ( const auto& t : _types )
            if ( t == type )
                return true;
        return false;
    }

    void set_transformer( const std::string& listener, const std::string& speaker, Transformer t )
    {
        require( listener );
        require( speaker );
        _transformers.insert_or_assign( { listener, speaker }, std::move( t ) );
    }

    void set_membership( const std::string& type, std::function< Formula( const Agent& ) > is_type )
    {
        require( type );
        _membership.insert_or_assign( type, std::move( is_type ) );
    }

    [[nodiscard]] bool is_total() const { return _transformers.size() == _types.size() * _types.size(); }

    [[nodiscard]] const Transformer& transformer( const std::string& listener, const std::string& speaker ) const
    {
        require( listener );
        require( speaker );
        auto it = _transformers.find( { listener, speaker } );
        if ( it == _transformers.end() )
            throw CreedError( "no precondition registered for listener type '" + listener + "' and speaker type '"
                              + speaker + "'" );
        return it->second;
    }

    // The formula stating that `a` has type `type`; type(a, type) unless overridden.
    [[nodiscard]] Formula membership( const Agent& a, const std::string& type ) const
    {
        require( type );
        if ( auto it = _membership.find( type ); it != _membership.end() )
            return it->second( a );
        return Formula::type( a, type );
    }

    // Every agent has exactly one type.  With two types this is
    // is_T1(a) <-> !is_T2(a); otherwise pairwise exclusion plus a disjunction.
    [[nodiscard]] std::vector< Formula > constraints( const std::vector< Agent >& agents ) const
    {
        std::vector< Formula > out;
        for ( const auto& a : agents ) {
            if ( _types.size() == 2 ) {
                out.push_back( Formula::iff( membership( a, _types[ 0 ] ),
                                             Formula::negate( membership( a, _types[ 1 ] ) ) ) );
                continue;
            }
            for ( std::size_t i = 0; i < _types.size(); ++i )
                for ( std::size_t j = i + 1; j < _types.size(); ++j )
                    out.push_back( Formula::negate(
                        Formula::conj( membership( a, _types[ i ] ), membership( a, _types[ j ] ) ) ) );
            Formula some = membership( a, _types[ 0 ] );
            for ( std::size_t i = 1; i < _types.size(); ++i )
                some = Formula::disj( some, membership( a, _types[ i ] ) );
            out.push_back( some );
        }
        return out;
    }
};

inline Formula creed_formula( const TypeSystem& ts, const std::string& listener_type, const Agent& speaker,
                              const std::string& speaker_type, const Formula& content )
{
    const auto& pre = ts.transformer( listener_type, speaker_type );
    return Formula::implies( ts.membership( speaker, speaker_type ),
                             Formula::knows( speaker, pre.apply( content, speaker ) ) );
}

struct Utterance
{
    Agent speaker;
    Formula content;
};

inline Formula informational_content( const TypeSystem& ts, const std::string& listener_type, const Utterance& u,
                                      const std::vector< std::string >& candidate_types )
{
    if ( candidate_types.empty() )
        throw CreedError( "informational content needs at least one candidate speaker type" );
    Formula acc = creed_formula( ts, listener_type, u.speaker, candidate_types.front(), u.content );
    for ( std::size_t i = 1; i < candidate_types.size(); ++i )
        acc = Formula::conj( acc, creed_formula( ts, listener_type, u.speaker, candidate_types[ i ], u.content ) );
    return acc;
}

// ---------------------------------------------------------------------------
// Knights and knaves

using TypeAssignment = std::map< Agent, std::string >;

namespace detail
{

inline bool holds_under( const Formula& f, const TypeAssignment& sigma )
{
    switch ( f.op() ) {
    case Op::Bot: return false;
    case Op::Top: return true;
    case Op::Type: {
        auto it = sigma.find( f.agent() );
        if ( it == sigma.end() )
            throw CreedError( "utterance mentions agent '" + f.agent().id + "' outside the puzzle" );
        if ( f.name() != "knight" && f.name() != "knave" )
            throw CreedError( "unknown type '" + f.name() + "' in utterance" );
        return it->second == f.name();
    }
    case Op::Not: return !holds_under( f.operand(), sigma );
    case Op::And: return holds_under( f.lhs(), sigma ) && holds_under( f.rhs(), sigma );
    case Op::Or: return holds_under( f.lhs(), sigma ) || holds_under( f.rhs(), sigma );
    case Op::Implies: return !holds_under( f.lhs(), sigma ) || holds_under( f.rhs(), sigma );
    case Op::Iff: return holds_under( f.lhs(), sigma ) == holds_under( f.rhs(), sigma );
    default:
        throw CreedError( "puzzle utterances may only combine type atoms with boolean connectives" );
    }
}

} // namespace detail

// All knight/knave assignments under which knights' utterances are true and
// knaves' false.  Assignments are listed as binary counters with the first
// agent most significant and knight before knave.
inline std::vector< TypeAssignment > solve_puzzle( const std::vector< Agent >& agents,
                                                   const std::vector< Utterance >& utterances )
{
    if ( agents.size() >= 63 )
        throw CreedError( "too many agents for exhaustive search" );
    for ( const auto& u : utterances ) {
        bool known = false;
        for ( const auto& a : agents )
            known = known || a == u.speaker;
        if ( !known )
            throw CreedError( "speaker '" + u.speaker.id + "' is not a puzzle agent" );
    }

    std::vector< TypeAssignment > out;
    const std::uint64_t total = std::uint64_t{ 1 } << agents.size();
    for ( std::uint64_t mask = 0; mask < total; ++mask ) {
        TypeAssignment sigma;
        for ( std::size_t i = 0; i < agents.size(); ++i ) {
            const bool knave = ( mask >> ( agents.size() - 1 - i ) ) & 1;
            sigma[ agents[ i ] ] = knave ? "knave" : "knight";
        }
        bool consistent = true;
        for ( const auto& u : utterances ) {
            const bool truthful = sigma.at( u.speaker ) == "knight";
            if ( detail::holds_under( u.content, sigma ) != truthful ) {
                consistent = false;
                break;
            }
        }
        if ( consistent )
            out.push_back( std::move( sigma ) );
    }
    return out;
}

// (content of every utterance & exactly-one-type constraints) -> the type
// atoms of sigma.  Valid formulas of this shape are what the puzzle's modal
// derivation establishes.
inline Formula puzzle_entailment( const TypeSystem& ts, const std::vector< Agent >& agents,
                                  const std::vector< Utterance >& utterances, const TypeAssignment& sigma )
{
    const auto& listener = ts.types().front();
    std::vector< Formula > premises;
    for ( const auto& u : utterances )
        premises.push_back( informational_content( ts, listener, u, ts.types() ) );
    for ( auto& c : ts.constraints( agents ) )
        premises.push_back( std::move( c ) );

    auto fold = []( const std::vector< Formula >& fs ) {
        if ( fs.empty() )
            return Formula::top();
        Formula acc = fs.front();
        for ( std::size_t i = 1; i < fs.size(); ++i )
            acc = Formula::conj( acc, fs[ i ] );
        return acc;
    };
    std::vector< Formula > conclusion;
    for ( const auto& a : agents )
        conclusion.push_back( ts.membership( a, sigma.at( a ) ) );
    return Formula::implies( fold( premises ), fold( conclusion ) );
}

} // namespace hopecheck
