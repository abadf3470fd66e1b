#pragma once

// Kripke models for knowledge and hope.
//
// A frame assigns every agent an equivalence relation K_i and a partial
// equivalence relation H_i with H_i ⊆ K_i such that any two H-defined worlds
// that are K_i-related are also H_i-related.  Those conditions hold exactly
// when H_i = K_i ∩ (D_i × D_i) for some domain D_i, so KripkeModel stores a
// K-partition and a hope domain per agent and cannot represent an illegal
// frame.  RawModel carries arbitrary relations; validate() reports how they
// fail the frame conditions and canonicalize() turns legal ones into models.

#include "formula.hpp"
#include "world_set.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace hopecheck
{

using World = std::string;
using Partition = std::vector< std::vector< World > >;

class ModelError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class EnumerationLimitError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct AgentFrame
{
    std::vector< WorldSet > blocks;       // ordered by smallest member
    std::vector< std::size_t > block_of;  // world index -> block index
    WorldSet hope_domain;
};

class ModelEnumerator;

class KripkeModel
{
    std::vector< World > _worlds;  // sorted
    std::map< Agent, AgentFrame > _frames;
    std::map< std::string, WorldSet > _valuation;

    friend class ModelEnumerator;
    KripkeModel() = default;

    [[nodiscard]] std::size_t require_index( const World& w ) const
    {
        auto idx = index_of( w );
        if ( !idx )
            throw ModelError( "unknown world '" + w + "'" );
        return *idx;
    }

    [[nodiscard]] WorldSet to_set( const std::vector< World >& ws, const std::string& what ) const
    {
        WorldSet s( _worlds.size() );
        for ( const auto& w : ws ) {
            auto idx = index_of( w );
            if ( !idx )
                throw ModelError( what + " mentions unknown world '" + w + "'" );
            s.set( *idx );
        }
        return s;
    }

    static void order_blocks( AgentFrame& frame )
    {
        std::sort( frame.blocks.begin(), frame.blocks.end(),
                   []( const WorldSet& a, const WorldSet& b ) { return a.first() < b.first(); } );
        for ( std::size_t b = 0; b < frame.blocks.size(); ++b )
            for ( std::size_t w = 0; w < frame.block_of.size(); ++w )
                if ( frame.blocks[ b ].test( w ) )
                    frame.block_of[ w ] = b;
    }

public:
    // Agents without an entry in hope_domain get an empty domain.  Throws
    // ModelError unless every partition is a partition of the world set.
    KripkeModel( std::vector< World > worlds,
                 const std::map< Agent, Partition >& partition,
                 const std::map< Agent, std::vector< World > >& hope_domain,
                 const std::map< std::string, std::vector< World > >& valuation )
        : _worlds{ std::move( worlds ) }
    {
        if ( _worlds.empty() )
            throw ModelError( "a model needs at least one world" );
        std::sort( _worlds.begin(), _worlds.end() );
        if ( std::adjacent_find( _worlds.begin(), _worlds.end() ) != _worlds.end() )
            throw ModelError( "duplicate world id" );

        const std::size_t n = _worlds.size();
        for ( const auto& [ agent, blocks ] : partition ) {
            AgentFrame frame{ {}, std::vector< std::size_t >( n ), WorldSet( n ) };
            WorldSet covered( n );
            for ( const auto& block : blocks ) {
                if ( block.empty() )
                    throw ModelError( "empty K block for agent '" + agent.id + "'" );
                WorldSet b = to_set( block, "K block of agent '" + agent.id + "'" );
                if ( b.count() != block.size() || !( b & covered ).none() )
                    throw ModelError( "K blocks of agent '" + agent.id + "' overlap" );
                covered |= b;
                frame.blocks.push_back( std::move( b ) );
            }
            if ( !covered.all() )
                throw ModelError( "K blocks of agent '" + agent.id + "' do not cover all worlds" );
            order_blocks( frame );
            _frames.emplace( agent, std::move( frame ) );
        }
        for ( const auto& [ agent, domain ] : hope_domain ) {
            auto it = _frames.find( agent );
            if ( it == _frames.end() )
                throw ModelError( "hope domain for undeclared agent '" + agent.id + "'" );
            it->second.hope_domain = to_set( domain, "hope domain of agent '" + agent.id + "'" );
        }
        for ( const auto& [ atom, ws ] : valuation )
            _valuation.emplace( atom, to_set( ws, "valuation of '" + atom + "'" ) );
    }

    [[nodiscard]] const std::vector< World >& worlds() const { return _worlds; }
    [[nodiscard]] std::size_t world_count() const { return _worlds.size(); }

    [[nodiscard]] std::optional< std::size_t > index_of( const World& w ) const
    {
        auto it = std::lower_bound( _worlds.begin(), _worlds.end(), w );
        if ( it == _worlds.end() || *it != w )
            return std::nullopt;
        return static_cast< std::size_t >( it - _worlds.begin() );
    }

    [[nodiscard]] Universe agents() const
    {
        Universe u;
        for ( const auto& [ a, _ ] : _frames )
            u.insert( a );
        return u;
    }

    [[nodiscard]] bool has_agent( const Agent& a ) const { return _frames.contains( a ); }

    [[nodiscard]] const AgentFrame& frame( const Agent& a ) const
    {
        auto it = _frames.find( a );
        if ( it == _frames.end() )
            throw ModelError( "unknown agent '" + a.id + "'" );
        return it->second;
    }

    [[nodiscard]] std::set< std::string > atoms() const
    {
        std::set< std::string > out;
        for ( const auto& [ atom, _ ] : _valuation )
            out.insert( atom );
        return out;
    }

    // Worlds where the atom holds; empty for undeclared atoms.
    [[nodiscard]] WorldSet truth_set( const std::string& atom ) const
    {
        auto it = _valuation.find( atom );
        return it == _valuation.end() ? WorldSet( _worlds.size() ) : it->second;
    }

    [[nodiscard]] std::vector< World > names( const WorldSet& s ) const
    {
        std::vector< World > out;
        for ( std::size_t i = 0; i < _worlds.size(); ++i )
            if ( s.test( i ) )
                out.push_back( _worlds[ i ] );
        return out;
    }

    [[nodiscard]] Partition partition( const Agent& a ) const
    {
        Partition out;
        for ( const auto& b : frame( a ).blocks )
            out.push_back( names( b ) );
        return out;
    }

    [[nodiscard]] std::vector< World > hope_domain( const Agent& a ) const
    {
        return names( frame( a ).hope_domain );
    }

    [[nodiscard]] std::vector< World > valuation( const std::string& atom ) const
    {
        return names( truth_set( atom ) );
    }

    [[nodiscard]] bool k_related( const Agent& a, const World& s, const World& t ) const
    {
        const auto& f = frame( a );
        return f.block_of[ require_index( s ) ] == f.block_of[ require_index( t ) ];
    }

    [[nodiscard]] bool h_related( const Agent& a, const World& s, const World& t ) const
    {
        const auto& f = frame( a );
        const auto i = require_index( s );
        const auto j = require_index( t );
        return f.hope_domain.test( i ) && f.hope_domain.test( j ) && f.block_of[ i ] == f.block_of[ j ];
    }

    friend bool operator==( const KripkeModel& a, const KripkeModel& b )
    {
        if ( a._worlds != b._worlds || a._valuation != b._valuation || a._frames.size() != b._frames.size() )
            return false;
        for ( const auto& [ agent, fa ] : a._frames ) {
            auto it = b._frames.find( agent );
            if ( it == b._frames.end() || fa.blocks != it->second.blocks
                 || !( fa.hope_domain == it->second.hope_domain ) )
                return false;
        }
        return true;
    }
};

// ---------------------------------------------------------------------------
// Raw relational input

using WorldPair = std::pair< World, World >;
using Relation = std::set< WorldPair >;

struct RawModel
{
    std::vector< World > worlds;
    Universe agents;
    std::map< Agent, Relation > k_relation;
    std::map< Agent, Relation > h_relation;
    std::map< std::string, std::set< World > > valuation;
};

enum class ViolationKind
{
    KNotReflexive,
    KNotSymmetric,
    KNotTransitive,
    HNotSymmetric,
    HNotTransitive,
    HNotSubsetOfK,
    MixedCondition,
};

inline const char* to_string( ViolationKind k )
{
    switch ( k ) {
    case ViolationKind::KNotReflexive: return "K-not-reflexive";
    case ViolationKind::KNotSymmetric: return "K-not-symmetric";
    case ViolationKind::KNotTransitive: return "K-not-transitive";
    case ViolationKind::HNotSymmetric: return "H-not-symmetric";
    case ViolationKind::HNotTransitive: return "H-not-transitive";
    case ViolationKind::HNotSubsetOfK: return "H-not-subset-of-K";
    case ViolationKind::MixedCondition: return "mixed-condition-violated";
    }
    return "?";
}

struct FrameViolation
{
    ViolationKind kind;
    Agent agent;
    std::vector< World > witness;

    bool operator==( const FrameViolation& ) const = default;
};

namespace detail
{

using Matrix = std::vector< std::vector< bool > >;

inline Matrix to_matrix( const Relation& rel, const std::map< World, std::size_t >& index )
{
    Matrix m( index.size(), std::vector< bool >( index.size(), false ) );
    for ( const auto& [ s, t ] : rel )
        m[ index.at( s ) ][ index.at( t ) ] = true;
    return m;
}

} // namespace detail

// Throws ModelError if the raw model mentions undeclared worlds or agents.
inline void check_well_formed( const RawModel& raw )
{
    if ( raw.worlds.empty() )
        throw ModelError( "a model needs at least one world" );
    std::set< World > declared( raw.worlds.begin(), raw.worlds.end() );
    if ( declared.size() != raw.worlds.size() )
        throw ModelError( "duplicate world id" );
    auto check_rel = [&]( const std::map< Agent, Relation >& rels, const char* name ) {
        for ( const auto& [ agent, rel ] : rels ) {
            if ( !raw.agents.contains( agent ) )
                throw ModelError( std::string( name ) + " relation for undeclared agent '" + agent.id + "'" );
            for ( const auto& [ s, t ] : rel )
                if ( !declared.contains( s ) || !declared.contains( t ) )
                    throw ModelError( std::string( name ) + " relation of agent '" + agent.id
                                      + "' mentions an unknown world" );
        }
    };
    check_rel( raw.k_relation, "K" );
    check_rel( raw.h_relation, "H" );
    for ( const auto& [ atom, ws ] : raw.valuation )
        for ( const auto& w : ws )
            if ( !declared.contains( w ) )
                throw ModelError( "valuation of '" + atom + "' mentions unknown world '" + w + "'" );
}

// One violation (with the first witness in world order) per failed condition
// family and agent.  An empty result means the relations form a legal frame.
inline std::vector< FrameViolation > validate( const RawModel& raw )
{
    check_well_formed( raw );

    std::vector< World > ws = raw.worlds;
    std::sort( ws.begin(), ws.end() );
    std::map< World, std::size_t > index;
    for ( std::size_t i = 0; i < ws.size(); ++i )
        index.emplace( ws[ i ], i );
    const std::size_t n = ws.size();

    std::vector< FrameViolation > out;
    for ( const auto& agent : raw.agents ) {
        static const Relation empty;
        auto k_it = raw.k_relation.find( agent );
        auto h_it = raw.h_relation.find( agent );
        const auto k = detail::to_matrix( k_it == raw.k_relation.end() ? empty : k_it->second, index );
        const auto h = detail::to_matrix( h_it == raw.h_relation.end() ? empty : h_it->second, index );

        auto report = [&]( ViolationKind kind, std::vector< std::size_t > witness ) {
            std::vector< World > names;
            for ( auto i : witness )
                names.push_back( ws[ i ] );
            out.push_back( { kind, agent, std::move( names ) } );
        };

        auto find_reflexive = [&]() -> std::optional< std::size_t > {
            for ( std::size_t s = 0; s < n; ++s )
                if ( !k[ s ][ s ] )
                    return s;
            return std::nullopt;
        };
        auto find_symmetric = [&]( const detail::Matrix& r ) -> std::optional< std::pair< std::size_t, std::size_t > > {
            for ( std::size_t s = 0; s < n; ++s )
                for ( std::size_t t = 0; t < n; ++t )
                    if ( r[ s ][ t ] && !r[ t ][ s ] )
                        return std::pair{ s, t };
            return std::nullopt;
        };
        auto find_transitive = [&]( const detail::Matrix& r ) -> std::optional< std::vector< std::size_t > > {
            for ( std::size_t s = 0; s < n; ++s )
                for ( std::size_t t = 0; t < n; ++t )
                    if ( r[ s ][ t ] )
                        for ( std::size_t u = 0; u < n; ++u )
                            if ( r[ t ][ u ] && !r[ s ][ u ] )
                                return std::vector{ s, t, u };
            return std::nullopt;
        };

        if ( auto s = find_reflexive() )
            report( ViolationKind::KNotReflexive, { *s } );
        if ( auto p = find_symmetric( k ) )
            report( ViolationKind::KNotSymmetric, { p->first, p->second } );
        if ( auto w = find_transitive( k ) )
            report( ViolationKind::KNotTransitive, *w );
        if ( auto p = find_symmetric( h ) )
            report( ViolationKind::HNotSymmetric, { p->first, p->second } );
        if ( auto w = find_transitive( h ) )
            report( ViolationKind::HNotTransitive, *w );

        [&] {
            for ( std::size_t s = 0; s < n; ++s )
                for ( std::size_t t = 0; t < n; ++t )
                    if ( h[ s ][ t ] && !k[ s ][ t ] )
                        return report( ViolationKind::HNotSubsetOfK, { s, t } );
        }();

        std::vector< bool > h_defined( n, false );
        for ( std::size_t s = 0; s < n; ++s )
            for ( std::size_t t = 0; t < n; ++t )
                if ( h[ s ][ t ] )
                    h_defined[ s ] = true;
        [&] {
            for ( std::size_t s = 0; s < n; ++s )
                for ( std::size_t t = 0; t < n; ++t )
                    if ( k[ s ][ t ] && h_defined[ s ] && h_defined[ t ] && !h[ s ][ t ] )
                        return report( ViolationKind::MixedCondition, { s, t } );
        }();
    }
    return out;
}

inline std::string describe( const FrameViolation& v )
{
    std::string out = std::string( to_string( v.kind ) ) + " for agent " + v.agent.id + " witness (";
    for ( std::size_t i = 0; i < v.witness.size(); ++i )
        out += ( i ? "," : "" ) + v.witness[ i ];
    return out + ")";
}

// Throws ModelError listing the violations if raw is not a legal frame.
inline KripkeModel canonicalize( const RawModel& raw )
{
    auto violations = validate( raw );
    if ( !violations.empty() ) {
        std::string msg = "model violates the frame conditions:";
        for ( const auto& v : violations )
            msg += "\n  " + describe( v );
        throw ModelError( msg );
    }

    std::vector< World > ws = raw.worlds;
    std::sort( ws.begin(), ws.end() );

    std::map< Agent, Partition > partition;
    std::map< Agent, std::vector< World > > domain;
    for ( const auto& agent : raw.agents ) {
        static const Relation empty;
        auto k_it = raw.k_relation.find( agent );
        auto h_it = raw.h_relation.find( agent );
        const Relation& k = k_it == raw.k_relation.end() ? empty : k_it->second;
        const Relation& h = h_it == raw.h_relation.end() ? empty : h_it->second;

        std::set< World > placed;
        Partition blocks;
        for ( const auto& s : ws ) {
            if ( placed.contains( s ) )
                continue;
            std::vector< World > block;
            for ( const auto& t : ws )
                if ( k.contains( { s, t } ) ) {
                    block.push_back( t );
                    placed.insert( t );
                }
            blocks.push_back( std::move( block ) );
        }
        partition.emplace( agent, std::move( blocks ) );

        std::vector< World > dom;
        for ( const auto& s : ws )
            if ( h.contains( { s, s } ) )
                dom.push_back( s );
        domain.emplace( agent, std::move( dom ) );
    }

    std::map< std::string, std::vector< World > > valuation;
    for ( const auto& [ atom, set ] : raw.valuation )
        valuation.emplace( atom, std::vector< World >( set.begin(), set.end() ) );
    return KripkeModel( ws, partition, domain, valuation );
}

// The relations a model denotes: K_i from the partition and
// H_i = K_i ∩ (D_i × D_i).
inline RawModel expand( const KripkeModel& m )
{
    RawModel raw;
    raw.worlds = m.worlds();
    raw.agents = m.agents();
    for ( const auto& agent : raw.agents ) {
        const auto& frame = m.frame( agent );
        Relation& k = raw.k_relation[ agent ];
        Relation& h = raw.h_relation[ agent ];
        for ( std::size_t s = 0; s < m.world_count(); ++s )
            for ( std::size_t t = 0; t < m.world_count(); ++t )
                if ( frame.block_of[ s ] == frame.block_of[ t ] ) {
                    k.emplace( m.worlds()[ s ], m.worlds()[ t ] );
                    if ( frame.hope_domain.test( s ) && frame.hope_domain.test( t ) )
                        h.emplace( m.worlds()[ s ], m.worlds()[ t ] );
                }
    }
    for ( const auto& atom : m.atoms() ) {
        auto ws = m.valuation( atom );
        raw.valuation.emplace( atom, std::set< World >( ws.begin(), ws.end() ) );
    }
    return raw;
}

// Hope domains under which correct(i) = !H[i] bot holds exactly on
// correct_worlds[i].  Throws ModelError if a correct world is not covered by
// the agent's partition.
inline std::map< Agent, std::vector< World > >
hope_from_correctness( const std::map< Agent, Partition >& partition,
                       const std::map< Agent, std::vector< World > >& correct_worlds )
{
    std::map< Agent, std::vector< World > > out;
    for ( const auto& [ agent, blocks ] : partition ) {
        std::set< World > all;
        for ( const auto& b : blocks )
            all.insert( b.begin(), b.end() );
        std::vector< World > dom;
        if ( auto it = correct_worlds.find( agent ); it != correct_worlds.end() ) {
            for ( const auto& w : it->second ) {
                if ( !all.contains( w ) )
                    throw ModelError( "correct world '" + w + "' of agent '" + agent.id + "' is not a world" );
                dom.push_back( w );
            }
        }
        std::sort( dom.begin(), dom.end() );
        dom.erase( std::unique( dom.begin(), dom.end() ), dom.end() );
        out.emplace( agent, std::move( dom ) );
    }
    for ( const auto& [ agent, _ ] : correct_worlds )
        if ( !partition.contains( agent ) )
            throw ModelError( "correctness declared for unknown agent '" + agent.id + "'" );
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr std::uint64_t default_model_ceiling = 10'000'000;

namespace detail
{

// a * b, or nullopt on overflow.
inline std::optional< std::uint64_t > checked_mul( std::uint64_t a, std::uint64_t b )
{
    std::uint64_t r = 0;
    if ( __builtin_mul_overflow( a, b, &r ) )
        return std::nullopt;
    return r;
}

inline std::optional< std::uint64_t > checked_pow( std::uint64_t base, std::uint64_t exp )
{
    std::uint64_t r = 1;
    for ( std::uint64_t i = 0; i < exp; ++i ) {
        auto next = checked_mul( r, base );
        if ( !next )
            return std::nullopt;
        r = *next;
    }
    return r;
}

// Bell number via the Bell triangle; nullopt on overflow.
inline std::optional< std::uint64_t > bell( std::size_t n )
{
    std::vector< std::uint64_t > row{ 1 };
    for ( std::size_t i = 0; i < n; ++i ) {
        std::vector< std::uint64_t > next{ row.back() };
        for ( auto v : row ) {
            std::uint64_t s = 0;
            if ( __builtin_add_overflow( next.back(), v, &s ) )
                return std::nullopt;
            next.push_back( s );
        }
        row = std::move( next );
    }
    return row.front();
}

// All set partitions of {0..n-1} as restricted growth strings.
inline std::vector< std::vector< std::size_t > > restricted_growth_strings( std::size_t n )
{
    std::vector< std::vector< std::size_t > > out;
    std::vector< std::size_t > a( n, 0 );
    auto rec = [&]( auto& self, std::size_t i, std::size_t max_label ) -> void {
        if ( i == n ) {
            out.push_back( a );
            return;
        }
        for ( std::size_t v = 0; v <= max_label + 1; ++v ) {
            a[ i ] = v;
            self( self, i + 1, std::max( max_label, v ) );
        }
    };
    if ( n == 0 ) {
        out.push_back( a );
        return out;
    }
    a[ 0 ] = 0;
    rec( rec, 1, 0 );
    return out;
}

} // namespace detail

// Every model over a fixed world set w0..w{n-1}: all K-partitions and hope
// domains per agent and all valuations of the given atoms.  Models are
// addressed by index so consumers can split the range; the order is fixed:
// valuations vary fastest, then hope domains, then partitions.
class ModelEnumerator
{
    std::vector< Agent > _agents;
    std::vector< std::string > _atoms;
    std::vector< World > _worlds;
    std::vector< std::vector< std::size_t > > _partitions;
    std::uint64_t _size = 0;

public:
    ModelEnumerator( const Universe& agents, const std::set< std::string >& atoms, std::size_t world_count,
                     std::uint64_t ceiling = default_model_ceiling )
        : _agents( agents.begin(), agents.end() ), _atoms( atoms.begin(), atoms.end() )
    {
        if ( world_count == 0 )
            throw ModelError( "world count must be positive" );

        auto too_many = [&] {
            return EnumerationLimitError( "enumerating " + std::to_string( world_count ) + "-world models over "
                                          + std::to_string( _agents.size() ) + " agents and "
                                          + std::to_string( _atoms.size() ) + " atoms exceeds the ceiling of "
                                          + std::to_string( ceiling ) + " models" );
        };
        const auto a = static_cast< std::uint64_t >( _agents.size() );
        const auto k = static_cast< std::uint64_t >( _atoms.size() );
        std::optional< std::uint64_t > total = 1;
        auto times = [&]( std::optional< std::uint64_t > f ) {
            if ( total && f )
                total = detail::checked_mul( *total, *f );
            else
                total = std::nullopt;
        };
        auto bell = detail::bell( world_count );
        times( bell ? detail::checked_pow( *bell, a ) : std::nullopt );
        times( world_count < 64 ? detail::checked_pow( std::uint64_t{ 1 } << world_count, a + k )
                                : ( a + k == 0 ? std::optional< std::uint64_t >{ 1 } : std::nullopt ) );
        if ( !total || *total > ceiling )
            throw too_many();
        _size = *total;

        for ( std::size_t i = 0; i < world_count; ++i )
            _worlds.push_back( "w" + std::to_string( i ) );
        std::sort( _worlds.begin(), _worlds.end() );
        _partitions = detail::restricted_growth_strings( world_count );
    }

    [[nodiscard]] std::uint64_t size() const { return _size; }

    [[nodiscard]] KripkeModel at( std::uint64_t index ) const
    {
        if ( index >= _size )
            throw std::out_of_range( "model index out of range" );
        const std::size_t n = _worlds.size();
        const std::uint64_t subsets = n < 64 ? std::uint64_t{ 1 } << n : 0;

        auto mask_to_set = [&]( std::uint64_t mask ) {
            WorldSet s( n );
            for ( std::size_t w = 0; w < n; ++w )
                if ( ( mask >> w ) & 1 )
                    s.set( w );
            return s;
        };

        KripkeModel m;
        m._worlds = _worlds;
        std::uint64_t rest = index;
        for ( auto it = _atoms.rbegin(); it != _atoms.rend(); ++it ) {
            m._valuation.emplace( *it, mask_to_set( rest % subsets ) );
            rest /= subsets;
        }
        std::vector< WorldSet > domains( _agents.size() );
        for ( std::size_t i = _agents.size(); i-- > 0; ) {
            domains[ i ] = mask_to_set( rest % subsets );
            rest /= subsets;
        }
        std::vector< std::size_t > partition_of( _agents.size() );
        for ( std::size_t i = _agents.size(); i-- > 0; ) {
            partition_of[ i ] = static_cast< std::size_t >( rest % _partitions.size() );
            rest /= _partitions.size();
        }

        for ( std::size_t i = 0; i < _agents.size(); ++i ) {
            const auto& labels = _partitions[ partition_of[ i ] ];
            AgentFrame frame;
            frame.block_of = labels;
            const std::size_t blocks = n == 0 ? 0 : *std::max_element( labels.begin(), labels.end() ) + 1;
            frame.blocks.assign( blocks, WorldSet( n ) );
            for ( std::size_t w = 0; w < n; ++w )
                frame.blocks[ labels[ w ] ].set( w );
            frame.hope_domain = std::move( domains[ i ] );
            m._frames.emplace( _agents[ i ], std::move( frame ) );
        }
        return m;
    }

    // Calls visit(model) in index order; stops early if visit returns false.
    template < typename Visitor >
    bool for_each( Visitor&& visit ) const
    {
        for ( std::uint64_t i = 0; i < _size; ++i ) {
            if constexpr ( std::is_same_v< decltype( visit( std::declval< const KripkeModel& >() ) ), bool > ) {
                if ( !visit( at( i ) ) )
                    return false;
            } else {
                visit( at( i ) );
            }
        }
        return true;
    }
};

} // namespace hopecheck
