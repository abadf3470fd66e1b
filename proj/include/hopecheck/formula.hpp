#pragma once

// Formulas of the multi-agent language of knowledge and hope.
//
// The surface language has atoms, bot/top, the boolean connectives, the
// modalities K[i] (knowledge), H[i] (hope), B[i] (belief as defeasible
// knowledge), EH[G] (mutual hope), correctness atoms correct(i), type atoms
// type(i, name) and the byzantine bound byz(f).  desugar() maps every formula
// into the core fragment {bot, atom, !, &, K, H}, which is what the checker
// evaluates.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopecheck
{

class FormulaError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Agent
{
    std::string id;

    auto operator<=>( const Agent& ) const = default;
};

using AgentGroup = std::set< Agent >;
using Universe = std::set< Agent >;

inline Universe make_universe( std::initializer_list< const char* > ids )
{
    Universe u;
    for ( auto* id : ids )
        u.insert( Agent{ id } );
    return u;
}

enum class Op
{
    Bot,
    Top,
    Atom,
    Correct,
    Type,
    Not,
    And,
    Or,
    Implies,
    Iff,
    K,
    H,
    B,
    MutualHope,
    Byz,
};

// Immutable formula tree with shared subterms.  Equality is structural.
class Formula
{
    struct Node;
    std::shared_ptr< const Node > _node;

    explicit Formula( std::shared_ptr< const Node > n ) : _node{ std::move( n ) } {}

public:
    static Formula bot();
    static Formula top();
    static Formula atom( std::string name );
    static Formula correct( Agent a );
    static Formula type( Agent a, std::string type_name );
    static Formula negate( Formula f );
    static Formula conj( Formula l, Formula r );
    static Formula disj( Formula l, Formula r );
    static Formula implies( Formula l, Formula r );
    static Formula iff( Formula l, Formula r );
    static Formula knows( Agent a, Formula f );
    static Formula hopes( Agent a, Formula f );
    static Formula believes( Agent a, Formula f );
    static Formula mutual_hope( AgentGroup g, Formula f );
    static Formula byz( unsigned bound );

    [[nodiscard]] Op op() const;

    // Atom name; for type atoms the type name.
    [[nodiscard]] const std::string& name() const;
    // Agent of Correct, Type, K, H, B.
    [[nodiscard]] const Agent& agent() const;
    [[nodiscard]] const AgentGroup& group() const;
    [[nodiscard]] unsigned bound() const;

    // Sole operand of unary operators, left operand of binary ones.
    [[nodiscard]] const Formula& lhs() const;
    [[nodiscard]] const Formula& rhs() const;
    [[nodiscard]] const Formula& operand() const { return lhs(); }

    [[nodiscard]] bool is_unary() const;
    [[nodiscard]] bool is_binary() const;

    // True iff only Bot, Atom, Not, And, K and H occur.
    [[nodiscard]] bool is_core() const;

    friend bool operator==( const Formula& a, const Formula& b );
};

struct Formula::Node
{
    Op op;
    std::string name;
    Agent agent;
    AgentGroup group;
    unsigned bound = 0;
    std::vector< Formula > children;
};

inline Formula Formula::bot()
{
    static const Formula f{ std::make_shared< const Node >( Node{ Op::Bot, {}, {}, {}, 0, {} } ) };
    return f;
}

inline Formula Formula::top()
{
    static const Formula f{ std::make_shared< const Node >( Node{ Op::Top, {}, {}, {}, 0, {} } ) };
    return f;
}

inline Formula Formula::atom( std::string name )
{
    return Formula{ std::make_shared< const Node >( Node{ Op::Atom, std::move( name ), {}, {}, 0, {} } ) };
}

inline Formula Formula::correct( Agent a )
{
    return Formula{ std::make_shared< const Node >( Node{ Op::Correct, {}, std::move( a ), {}, 0, {} } ) };
}

inline Formula Formula::type( Agent a, std::string type_name )
{
    return Formula{ std::make_shared< const Node >(
        Node{ Op::Type, std::move( type_name ), std::move( a ), {}, 0, {} } ) };
}

inline Formula Formula::negate( Formula f )
{
    return Formula{ std::make_shared< const Node >( Node{ Op::Not, {}, {}, {}, 0, { std::move( f ) } } ) };
}

inline Formula Formula::conj( Formula l, Formula r )
{
    return Formula{ std::make_shared< const Node >(
        Node{ Op::And, {}, {}, {}, 0, { std::move( l ), std::move( r ) } } ) };
}

inline Formula Formula::disj( Formula l, Formula r )
{
    return Formula{ std::make_shared< const Node >(
        Node{ Op::Or, {}, {}, {}, 0, { std::move( l ), std::move( r ) } } ) };
}

inline Formula Formula::implies( Formula l, Formula r )
{
    return Formula{ std::make_shared< const Node >(
        Node{ Op::Implies, {}, {}, {}, 0, { std::move( l ), std::move( r ) } } ) };
}

inline Formula Formula::iff( Formula l, Formula r )
{
    return Formula{ std::make_shared< const Node >(
        Node{ Op::Iff, {}, {}, {}, 0, { std::move( l ), std::move( r ) } } ) };
}

inline Formula Formula::knows( Agent a, Formula f )
{
    return Formula{ std::make_shared< const Node >(
        Node{ Op::K, {}, std::move( a ), {}, 0, { std::move( f ) } } ) };
}

inline Formula Formula::hopes( Agent a, Formula f )
{
    return Formula{ std::make_shared< const Node >(
        Node{ Op::H, {}, std::move( a ), {}, 0, { std::move( f ) } } ) };
}

inline Formula Formula::believes( Agent a, Formula f )
{
    return Formula{ std::make_shared< const Node >(
        Node{ Op::B, {}, std::move( a ), {}, 0, { std::move( f ) } } ) };
}

inline Formula Formula::mutual_hope( AgentGroup g, Formula f )
{
    if ( g.empty() )
        throw FormulaError( "mutual hope over an empty group" );
    return Formula{ std::make_shared< const Node >(
        Node{ Op::MutualHope, {}, {}, std::move( g ), 0, { std::move( f ) } } ) };
}

inline Formula Formula::byz( unsigned bound )
{
    return Formula{ std::make_shared< const Node >( Node{ Op::Byz, {}, {}, {}, bound, {} } ) };
}

inline Op Formula::op() const { return _node->op; }
inline const std::string& Formula::name() const { return _node->name; }
inline const Agent& Formula::agent() const { return _node->agent; }
inline const AgentGroup& Formula::group() const { return _node->group; }
inline unsigned Formula::bound() const { return _node->bound; }

inline const Formula& Formula::lhs() const
{
    if ( _node->children.empty() )
        throw FormulaError( "formula has no operands" );
    return _node->children[ 0 ];
}

inline const Formula& Formula::rhs() const
{
    if ( _node->children.size() < 2 )
        throw FormulaError( "formula is not binary" );
    return _node->children[ 1 ];
}

inline bool Formula::is_unary() const { return _node->children.size() == 1; }
inline bool Formula::is_binary() const { return _node->children.size() == 2; }

inline bool Formula::is_core() const
{
    switch ( op() ) {
    case Op::Bot:
    case Op::Atom:
        return true;
    case Op::Not:
    case Op::K:
    case Op::H:
        return operand().is_core();
    case Op::And:
        return lhs().is_core() && rhs().is_core();
    default:
        return false;
    }
}

inline bool operator==( const Formula& a, const Formula& b )
{
    if ( a._node == b._node )
        return true;
    const auto& x = *a._node;
    const auto& y = *b._node;
    return x.op == y.op && x.name == y.name && x.agent == y.agent && x.group == y.group
           && x.bound == y.bound && x.children == y.children;
}

// Reserved atom standing for type(agent, name) in the core language.  The
// '$' separator cannot occur in parsed identifiers.
inline std::string type_atom_name( const Agent& a, const std::string& type_name )
{
    return "type$" + a.id + "$" + type_name;
}

// The groups G ⊆ universe with |G| = n - f, in lexicographic order.
inline std::vector< AgentGroup > byz_groups( unsigned bound, const Universe& universe )
{
    const std::vector< Agent > agents( universe.begin(), universe.end() );
    const std::size_t n = agents.size();
    if ( bound > n )
        throw FormulaError( "byz(" + std::to_string( bound ) + ") exceeds the " + std::to_string( n )
                            + " agents of the universe" );
    const std::size_t k = n - bound;

    std::vector< AgentGroup > out;
    std::vector< std::size_t > idx( k );
    for ( std::size_t i = 0; i < k; ++i )
        idx[ i ] = i;
    while ( true ) {
        AgentGroup g;
        for ( auto i : idx )
            g.insert( agents[ i ] );
        out.push_back( std::move( g ) );

        std::size_t i = k;
        while ( i > 0 && idx[ i - 1 ] == n - k + i - 1 )
            --i;
        if ( i == 0 )
            break;
        ++idx[ i - 1 ];
        for ( std::size_t j = i; j < k; ++j )
            idx[ j ] = idx[ j - 1 ] + 1;
    }
    return out;
}

// Byz_f written out with surface connectives: a disjunction over the groups
// of byz_groups() of the conjunction of their members' correctness.
inline Formula expand_byz( unsigned bound, const Universe& universe )
{
    auto groups = byz_groups( bound, universe );
    auto correct_all = []( const AgentGroup& g ) {
        if ( g.empty() )
            return Formula::top();
        auto it = g.begin();
        Formula acc = Formula::negate( Formula::hopes( *it, Formula::bot() ) );
        for ( ++it; it != g.end(); ++it )
            acc = Formula::conj( acc, Formula::negate( Formula::hopes( *it, Formula::bot() ) ) );
        return acc;
    };
    Formula acc = correct_all( groups.front() );
    for ( std::size_t i = 1; i < groups.size(); ++i )
        acc = Formula::disj( acc, correct_all( groups[ i ] ) );
    return acc;
}

namespace detail
{

inline Formula core_not( Formula f ) { return Formula::negate( std::move( f ) ); }

inline Formula core_implies( Formula a, Formula b )
{
    return core_not( Formula::conj( std::move( a ), core_not( std::move( b ) ) ) );
}

inline Formula core_correct( const Agent& a )
{
    return core_not( Formula::hopes( a, Formula::bot() ) );
}

inline Formula desugar( const Formula& f, const Universe& universe )
{
    switch ( f.op() ) {
    case Op::Bot:
    case Op::Atom:
        return f;
    case Op::Top:
        return core_not( Formula::bot() );
    case Op::Correct:
        return core_correct( f.agent() );
    case Op::Type:
        return Formula::atom( type_atom_name( f.agent(), f.name() ) );
    case Op::Not:
        return core_not( desugar( f.operand(), universe ) );
    case Op::And:
        return Formula::conj( desugar( f.lhs(), universe ), desugar( f.rhs(), universe ) );
    case Op::Or:
        return core_not( Formula::conj( core_not( desugar( f.lhs(), universe ) ),
                                        core_not( desugar( f.rhs(), universe ) ) ) );
    case Op::Implies:
        return core_implies( desugar( f.lhs(), universe ), desugar( f.rhs(), universe ) );
    case Op::Iff: {
        auto l = desugar( f.lhs(), universe );
        auto r = desugar( f.rhs(), universe );
        return Formula::conj( core_implies( l, r ), core_implies( r, l ) );
    }
    case Op::K:
        return Formula::knows( f.agent(), desugar( f.operand(), universe ) );
    case Op::H:
        return Formula::hopes( f.agent(), desugar( f.operand(), universe ) );
    case Op::B:
        return Formula::knows( f.agent(),
                               core_implies( core_correct( f.agent() ), desugar( f.operand(), universe ) ) );
    case Op::MutualHope: {
        if ( f.group().empty() )
            throw FormulaError( "mutual hope over an empty group" );
        auto body = desugar( f.operand(), universe );
        auto it = f.group().begin();
        Formula acc = Formula::hopes( *it, body );
        for ( ++it; it != f.group().end(); ++it )
            acc = Formula::conj( acc, Formula::hopes( *it, body ) );
        return acc;
    }
    case Op::Byz:
        return desugar( expand_byz( f.bound(), universe ), universe );
    }
    throw FormulaError( "unknown formula operator" );
}

} // namespace detail

// Rewrites every derived operator into {bot, atom, !, &, K, H}.  The universe
// fixes n for byz(f).
inline Formula desugar( const Formula& f, const Universe& universe )
{
    return detail::desugar( f, universe );
}

struct FormulaInfo
{
    std::set< Agent > agents;
    std::set< std::string > atoms;
    unsigned modal_depth = 0;
};

namespace detail
{

inline unsigned collect( const Formula& f, FormulaInfo& info )
{
    switch ( f.op() ) {
    case Op::Atom:
        info.atoms.insert( f.name() );
        return 0;
    case Op::K:
    case Op::H:
        info.agents.insert( f.agent() );
        return 1 + collect( f.operand(), info );
    default: {
        unsigned depth = 0;
        if ( f.is_unary() || f.is_binary() )
            depth = collect( f.lhs(), info );
        if ( f.is_binary() )
            depth = std::max( depth, collect( f.rhs(), info ) );
        return depth;
    }
    }
}

} // namespace detail

// Agents, atoms and K/H nesting depth of desugar(f).
inline FormulaInfo analyze( const Formula& f, const Universe& universe )
{
    FormulaInfo info;
    info.modal_depth = detail::collect( desugar( f, universe ), info );
    return info;
}

} // namespace hopecheck
