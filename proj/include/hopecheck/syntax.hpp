#pragma once

// Text syntax for formulas.
//
//   iff     ::= imp ( "<->" imp )*            left-associative
//   imp     ::= or ( "->" imp )?              right-associative
//   or      ::= and ( "|" and )*
//   and     ::= unary ( "&" unary )*
//   unary   ::= "!" unary | K[i] unary | H[i] unary | B[i] unary
//             | EH[i,j,...] unary | primary
//   primary ::= bot | top | correct(i) | type(i, name) | byz(n) | atom
//             | "(" iff ")"
//
// Agent ids are letters, digits and underscores; atom names must start with a
// letter or underscore and must not be one of the keywords below.

#include "formula.hpp"

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace hopecheck
{

class ParseError : public FormulaError
{
    std::size_t _position;

public:
    ParseError( const std::string& what, std::size_t position )
        : FormulaError( what + " at position " + std::to_string( position ) ), _position{ position }
    {}

    [[nodiscard]] std::size_t position() const { return _position; }
};

class UnknownAgentError : public FormulaError
{
    Agent _agent;

public:
    explicit UnknownAgentError( Agent a )
        : FormulaError( "unknown agent '" + a.id + "'" ), _agent{ std::move( a ) }
    {}

    [[nodiscard]] const Agent& agent() const { return _agent; }
};

inline bool is_keyword( std::string_view word )
{
    return word == "bot" || word == "top" || word == "correct" || word == "type" || word == "byz";
}

namespace detail
{

class Parser
{
    enum class Tok
    {
        Ident,
        Number,
        LParen,
        RParen,
        LBracket,
        RBracket,
        Comma,
        Not,
        And,
        Or,
        Implies,
        Iff,
        End,
    };

    struct Token
    {
        Tok kind;
        std::string text;
        std::size_t pos;
    };

    std::string_view _text;
    const Universe& _universe;
    std::size_t _cursor = 0;
    Token _tok;

    static bool ident_start( char c ) { return std::isalpha( static_cast< unsigned char >( c ) ) || c == '_'; }
    static bool ident_char( char c ) { return std::isalnum( static_cast< unsigned char >( c ) ) || c == '_'; }

    void advance()
    {
        while ( _cursor < _text.size() && std::isspace( static_cast< unsigned char >( _text[ _cursor ] ) ) )
            ++_cursor;
        const std::size_t start = _cursor;
        if ( _cursor >= _text.size() ) {
            _tok = { Tok::End, "", start };
            return;
        }
        const char c = _text[ _cursor ];
        auto single = [&]( Tok k ) {
            ++_cursor;
            _tok = { k, std::string( 1, c ), start };
        };
        switch ( c ) {
        case '(': return single( Tok::LParen );
        case ')': return single( Tok::RParen );
        case '[': return single( Tok::LBracket );
        case ']': return single( Tok::RBracket );
        case ',': return single( Tok::Comma );
        case '!': return single( Tok::Not );
        case '&': return single( Tok::And );
        case '|': return single( Tok::Or );
        default: break;
        }
        if ( _text.substr( _cursor, 3 ) == "<->" ) {
            _cursor += 3;
            _tok = { Tok::Iff, "<->", start };
            return;
        }
        if ( _text.substr( _cursor, 2 ) == "->" ) {
            _cursor += 2;
            _tok = { Tok::Implies, "->", start };
            return;
        }
        if ( ident_char( c ) ) {
            while ( _cursor < _text.size() && ident_char( _text[ _cursor ] ) )
                ++_cursor;
            std::string word( _text.substr( start, _cursor - start ) );
            const bool numeric = !ident_start( word.front() );
            if ( numeric ) {
                for ( char d : word )
                    if ( !std::isdigit( static_cast< unsigned char >( d ) ) )
                        throw ParseError( "malformed identifier '" + word + "'", start );
            }
            _tok = { numeric ? Tok::Number : Tok::Ident, std::move( word ), start };
            return;
        }
        throw ParseError( std::string( "unexpected character '" ) + c + "'", start );
    }

    [[noreturn]] void fail( const std::string& expected ) const
    {
        const std::string found = _tok.kind == Tok::End ? "end of input" : "'" + _tok.text + "'";
        throw ParseError( "expected " + expected + ", found " + found, _tok.pos );
    }

    void expect( Tok k, const char* what )
    {
        if ( _tok.kind != k )
            fail( what );
        advance();
    }

    Agent agent()
    {
        if ( _tok.kind != Tok::Ident && _tok.kind != Tok::Number )
            fail( "agent id" );
        Agent a{ _tok.text };
        if ( !_universe.contains( a ) )
            throw UnknownAgentError( a );
        advance();
        return a;
    }

    Formula iff()
    {
        Formula acc = imp();
        while ( _tok.kind == Tok::Iff ) {
            advance();
            acc = Formula::iff( acc, imp() );
        }
        return acc;
    }

    Formula imp()
    {
        Formula lhs = disj();
        if ( _tok.kind != Tok::Implies )
            return lhs;
        advance();
        return Formula::implies( lhs, imp() );
    }

    Formula disj()
    {
        Formula acc = conj();
        while ( _tok.kind == Tok::Or ) {
            advance();
            acc = Formula::disj( acc, conj() );
        }
        return acc;
    }

    Formula conj()
    {
        Formula acc = unary();
        while ( _tok.kind == Tok::And ) {
            advance();
            acc = Formula::conj( acc, unary() );
        }
        return acc;
    }

    bool at_modal_prefix()
    {
        if ( _tok.kind != Tok::Ident )
            return false;
        const auto& w = _tok.text;
        if ( w != "K" && w != "H" && w != "B" && w != "EH" )
            return false;
        std::size_t i = _cursor;
        while ( i < _text.size() && std::isspace( static_cast< unsigned char >( _text[ i ] ) ) )
            ++i;
        return i < _text.size() && _text[ i ] == '[';
    }

    Formula unary()
    {
        if ( _tok.kind == Tok::Not ) {
            advance();
            return Formula::negate( unary() );
        }
        if ( at_modal_prefix() ) {
            const std::string op = _tok.text;
            const std::size_t op_pos = _tok.pos;
            advance();
            expect( Tok::LBracket, "'['" );
            if ( op == "EH" ) {
                AgentGroup group;
                while ( true ) {
                    const std::size_t pos = _tok.pos;
                    if ( !group.insert( agent() ).second )
                        throw ParseError( "duplicate agent in group", pos );
                    if ( _tok.kind != Tok::Comma )
                        break;
                    advance();
                }
                expect( Tok::RBracket, "']'" );
                return Formula::mutual_hope( std::move( group ), unary() );
            }
            Agent a = agent();
            expect( Tok::RBracket, "']'" );
            Formula body = unary();
            if ( op == "K" )
                return Formula::knows( std::move( a ), std::move( body ) );
            if ( op == "H" )
                return Formula::hopes( std::move( a ), std::move( body ) );
            if ( op == "B" )
                return Formula::believes( std::move( a ), std::move( body ) );
            throw ParseError( "unknown modality " + op, op_pos );
        }
        return primary();
    }

    Formula primary()
    {
        if ( _tok.kind == Tok::LParen ) {
            advance();
            Formula f = iff();
            expect( Tok::RParen, "')'" );
            return f;
        }
        if ( _tok.kind != Tok::Ident )
            fail( "formula" );
        const std::string word = _tok.text;
        advance();
        if ( word == "bot" )
            return Formula::bot();
        if ( word == "top" )
            return Formula::top();
        if ( word == "correct" ) {
            expect( Tok::LParen, "'('" );
            Agent a = agent();
            expect( Tok::RParen, "')'" );
            return Formula::correct( std::move( a ) );
        }
        if ( word == "type" ) {
            expect( Tok::LParen, "'('" );
            Agent a = agent();
            expect( Tok::Comma, "','" );
            if ( _tok.kind != Tok::Ident )
                fail( "type name" );
            std::string type_name = _tok.text;
            advance();
            expect( Tok::RParen, "')'" );
            return Formula::type( std::move( a ), std::move( type_name ) );
        }
        if ( word == "byz" ) {
            expect( Tok::LParen, "'('" );
            if ( _tok.kind != Tok::Number )
                fail( "non-negative integer" );
            const std::size_t pos = _tok.pos;
            unsigned long bound = 0;
            try {
                bound = std::stoul( _tok.text );
            } catch ( const std::out_of_range& ) {
                throw ParseError( "byz bound out of range", pos );
            }
            advance();
            expect( Tok::RParen, "')'" );
            return Formula::byz( static_cast< unsigned >( bound ) );
        }
        return Formula::atom( word );
    }

public:
    Parser( std::string_view text, const Universe& universe ) : _text{ text }, _universe{ universe }
    {
        advance();
    }

    Formula parse()
    {
        Formula f = iff();
        if ( _tok.kind != Tok::End )
            fail( "end of input" );
        return f;
    }
};

// Binding strength; higher binds tighter.
inline int precedence( Op op )
{
    switch ( op ) {
    case Op::Iff: return 1;
    case Op::Implies: return 2;
    case Op::Or: return 3;
    case Op::And: return 4;
    default: return 5;
    }
}

inline void print( const Formula& f, std::string& out );

inline void print_operand( const Formula& f, bool parens, std::string& out )
{
    if ( parens )
        out += '(';
    print( f, out );
    if ( parens )
        out += ')';
}

inline void print( const Formula& f, std::string& out )
{
    switch ( f.op() ) {
    case Op::Bot: out += "bot"; return;
    case Op::Top: out += "top"; return;
    case Op::Atom: out += f.name(); return;
    case Op::Correct: out += "correct(" + f.agent().id + ")"; return;
    case Op::Type: out += "type(" + f.agent().id + "," + f.name() + ")"; return;
    case Op::Byz: out += "byz(" + std::to_string( f.bound() ) + ")"; return;
    case Op::Not: out += "!"; break;
    case Op::K: out += "K[" + f.agent().id + "] "; break;
    case Op::H: out += "H[" + f.agent().id + "] "; break;
    case Op::B: out += "B[" + f.agent().id + "] "; break;
    case Op::MutualHope: {
        out += "EH[";
        bool first = true;
        for ( const auto& a : f.group() ) {
            if ( !first )
                out += ',';
            out += a.id;
            first = false;
        }
        out += "] ";
        break;
    }
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Iff: {
        const int p = precedence( f.op() );
        const bool right_assoc = f.op() == Op::Implies;
        const int lp = precedence( f.lhs().op() );
        const int rp = precedence( f.rhs().op() );
        print_operand( f.lhs(), lp < p || ( lp == p && right_assoc ), out );
        switch ( f.op() ) {
        case Op::And: out += " & "; break;
        case Op::Or: out += " | "; break;
        case Op::Implies: out += " -> "; break;
        default: out += " <-> "; break;
        }
        print_operand( f.rhs(), rp < p || ( rp == p && !right_assoc ), out );
        return;
    }
    }
    print_operand( f.operand(), f.operand().is_binary(), out );
}

} // namespace detail

inline Formula parse( std::string_view text, const Universe& universe )
{
    return detail::Parser{ text, universe }.parse();
}

inline std::string print( const Formula& f )
{
    std::string out;
    detail::print( f, out );
    return out;
}

} // namespace hopecheck
