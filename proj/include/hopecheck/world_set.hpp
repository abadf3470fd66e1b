#pragma once

#include <boost/container/small_vector.hpp>

#include <bit>
#include <cstddef>
#include <cstdint>

namespace hopecheck
{

// Fixed-size set of world indices.  Models of up to 64 worlds stay off the
// heap, which keeps exhaustive sweeps over small models cheap.
class WorldSet
{
    using Word = std::uint64_t;
    static constexpr std::size_t bits = 64;

    std::size_t _size = 0;
    boost::container::small_vector< Word, 1 > _words;

    void trim()
    {
        if ( _size % bits != 0 )
            _words.back() &= ( Word{ 1 } << ( _size % bits ) ) - 1;
    }

public:
    WorldSet() = default;
    explicit WorldSet( std::size_t size, bool value = false )
        : _size{ size }, _words( ( size + bits - 1 ) / bits, value ? ~Word{ 0 } : Word{ 0 } )
    {
        if ( value && size > 0 )
            trim();
    }

    [[nodiscard]] std::size_t size() const { return _size; }

    [[nodiscard]] bool test( std::size_t i ) const { return ( _words[ i / bits ] >> ( i % bits ) ) & 1; }
    void set( std::size_t i ) { _words[ i / bits ] |= Word{ 1 } << ( i % bits ); }
    void reset( std::size_t i ) { _words[ i / bits ] &= ~( Word{ 1 } << ( i % bits ) ); }

    [[nodiscard]] std::size_t count() const
    {
        std::size_t n = 0;
        for ( auto w : _words )
            n += static_cast< std::size_t >( std::popcount( w ) );
        return n;
    }

    [[nodiscard]] bool none() const
    {
        for ( auto w : _words )
            if ( w != 0 )
                return false;
        return true;
    }

    [[nodiscard]] bool all() const { return count() == _size; }

    [[nodiscard]] bool subset_of( const WorldSet& other ) const
    {
        for ( std::size_t i = 0; i < _words.size(); ++i )
            if ( ( _words[ i ] & ~other._words[ i ] ) != 0 )
                return false;
        return true;
    }

    // Smallest member, or size() if empty.
    [[nodiscard]] std::size_t first() const
    {
        for ( std::size_t i = 0; i < _words.size(); ++i )
            if ( _words[ i ] != 0 )
                return i * bits + static_cast< std::size_t >( std::countr_zero( _words[ i ] ) );
        return _size;
    }

    WorldSet& operator&=( const WorldSet& o )
    {
        for ( std::size_t i = 0; i < _words.size(); ++i )
            _words[ i ] &= o._words[ i ];
        return *this;
    }

    WorldSet& operator|=( const WorldSet& o )
    {
        for ( std::size_t i = 0; i < _words.size(); ++i )
            _words[ i ] |= o._words[ i ];
        return *this;
    }

    [[nodiscard]] WorldSet operator~() const
    {
        WorldSet r = *this;
        for ( auto& w : r._words )
            w = ~w;
        if ( _size > 0 )
            r.trim();
        return r;
    }

    friend WorldSet operator&( WorldSet a, const WorldSet& b ) { return a &= b; }
    friend WorldSet operator|( WorldSet a, const WorldSet& b ) { return a |= b; }

    friend bool operator==( const WorldSet& a, const WorldSet& b )
    {
        return a._size == b._size && a._words == b._words;
    }
};

} // namespace hopecheck
