/* ctxmap: activity-aware LUT mapping library
 * Copyright (C) 2026  ctxmap contributors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file truth_table.hpp
  \brief Packed truth tables over at most 12 variables

  Bit `m` of a table is the function value on the minterm whose binary
  encoding is `m`; variable `i` is bit `i` of the minterm index.  Storage
  words beyond `2^n` bits are kept zero.
*/

#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

namespace ctxmap
{

class truth_table
{
public:
  static constexpr uint32_t max_vars = 12u;

  truth_table() : truth_table( 0u ) {}

  /*! \brief Constant-0 table on `num_vars` variables. */
  explicit truth_table( uint32_t num_vars ) : num_vars_( num_vars )
  {
    if ( num_vars > max_vars )
      throw std::invalid_argument( fmt::format( "truth table with {} variables exceeds the limit of {}", num_vars, max_vars ) );
    words_.assign( num_vars <= 6u ? 1u : ( 1u << ( num_vars - 6u ) ), 0u );
  }

  static truth_table constant( uint32_t num_vars, bool value )
  {
    truth_table tt( num_vars );
    if ( value )
    {
      for ( auto& w : tt.words_ )
        w = ~uint64_t{ 0 };
      tt.mask_padding();
    }
    return tt;
  }

  /*! \brief Projection onto variable `var`. */
  static truth_table nth_var( uint32_t num_vars, uint32_t var )
  {
    static constexpr uint64_t projections[] = { 0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
                                                0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };
    if ( var >= num_vars )
      throw std::out_of_range( fmt::format( "variable {} out of range for {} variables", var, num_vars ) );
    truth_table tt( num_vars );
    for ( auto i = 0u; i < tt.words_.size(); ++i )
    {
      if ( var < 6u )
        tt.words_[i] = projections[var];
      else
        tt.words_[i] = ( ( i >> ( var - 6u ) ) & 1u ) ? ~uint64_t{ 0 } : 0u;
    }
    tt.mask_padding();
    return tt;
  }

  /*! \brief Parses the `0x<hex>@<n>` text form. */
  static truth_table from_hex( std::string_view text )
  {
    auto const at = text.find( '@' );
    if ( text.size() < 4 || text.substr( 0, 2 ) != "0x" || at == std::string_view::npos )
      throw std::invalid_argument( fmt::format( "malformed truth table '{}'", text ) );
    uint32_t n = 0;
    for ( auto c : text.substr( at + 1 ) )
    {
      if ( c < '0' || c > '9' )
        throw std::invalid_argument( fmt::format( "malformed truth table '{}'", text ) );
      n = n * 10u + static_cast<uint32_t>( c - '0' );
      if ( n > max_vars )
        throw std::invalid_argument( fmt::format( "malformed truth table '{}'", text ) );
    }
    truth_table tt( n );
    auto const digits = text.substr( 2, at - 2 );
    if ( digits.empty() )
      throw std::invalid_argument( fmt::format( "malformed truth table '{}'", text ) );
    uint64_t bit = 0;
    for ( auto it = digits.rbegin(); it != digits.rend(); ++it, bit += 4u )
    {
      uint32_t nibble{};
      auto const c = *it;
      if ( c >= '0' && c <= '9' )
        nibble = c - '0';
      else if ( c >= 'a' && c <= 'f' )
        nibble = c - 'a' + 10;
      else if ( c >= 'A' && c <= 'F' )
        nibble = c - 'A' + 10;
      else
        throw std::invalid_argument( fmt::format( "malformed truth table '{}'", text ) );
      for ( auto k = 0u; k < 4u; ++k )
      {
        if ( ( nibble >> k ) & 1u )
        {
          if ( bit + k >= tt.num_bits() )
            throw std::invalid_argument( fmt::format( "truth table '{}' has bits beyond 2^{}", text, n ) );
          tt.set_bit( bit + k, true );
        }
      }
    }
    return tt;
  }

  uint32_t num_vars() const { return num_vars_; }
  uint64_t num_bits() const { return uint64_t{ 1 } << num_vars_; }
  std::span<uint64_t const> words() const { return words_; }

  bool get_bit( uint64_t minterm ) const { return ( words_[minterm >> 6] >> ( minterm & 63u ) ) & 1u; }

  void set_bit( uint64_t minterm, bool value )
  {
    auto const mask = uint64_t{ 1 } << ( minterm & 63u );
    if ( value )
      words_[minterm >> 6] |= mask;
    else
      words_[minterm >> 6] &= ~mask;
  }

  bool is_const0() const
  {
    for ( auto w : words_ )
      if ( w )
        return false;
    return true;
  }

  /*! \brief Text form, most significant nibble first, e.g. `0xE0@3`. */
  std::string to_hex() const
  {
    auto const digits = num_vars_ <= 2u ? 1u : ( 1u << ( num_vars_ - 2u ) );
    std::string hex;
    hex.reserve( digits );
    for ( auto d = digits; d-- > 0u; )
    {
      uint32_t nibble = 0;
      for ( auto k = 0u; k < 4u; ++k )
      {
        auto const m = uint64_t{ d } * 4u + k;
        if ( m < num_bits() && get_bit( m ) )
          nibble |= 1u << k;
      }
      hex.push_back( "0123456789ABCDEF"[nibble] );
    }
    return fmt::format( "0x{}@{}", hex, num_vars_ );
  }

  truth_table operator~() const
  {
    auto result = *this;
    for ( auto& w : result.words_ )
      w = ~w;
    result.mask_padding();
    return result;
  }

  truth_table operator&( truth_table const& other ) const { return binary( other, []( uint64_t a, uint64_t b ) { return a & b; } ); }
  truth_table operator|( truth_table const& other ) const { return binary( other, []( uint64_t a, uint64_t b ) { return a | b; } ); }
  truth_table operator^( truth_table const& other ) const { return binary( other, []( uint64_t a, uint64_t b ) { return a ^ b; } ); }

  bool operator==( truth_table const& other ) const = default;

private:
  template<typename Fn>
  truth_table binary( truth_table const& other, Fn&& fn ) const
  {
    if ( other.num_vars_ != num_vars_ )
      throw std::invalid_argument( fmt::format( "width mismatch: {} vs {} variables", num_vars_, other.num_vars_ ) );
    auto result = *this;
    for ( auto i = 0u; i < words_.size(); ++i )
      result.words_[i] = fn( words_[i], other.words_[i] );
    return result;
  }

  void mask_padding()
  {
    if ( num_vars_ < 6u )
      words_[0] &= ( uint64_t{ 1 } << ( 1u << num_vars_ ) ) - 1u;
  }

  uint32_t num_vars_{ 0 };
  std::vector<uint64_t> words_;
};

/*! \brief Number of minterms set to 1. */
inline uint64_t ones_count( truth_table const& tt )
{
  uint64_t count = 0;
  for ( auto w : tt.words() )
    count += static_cast<uint64_t>( std::popcount( w ) );
  return count;
}

/*! \brief Shannon cofactor with variable `pos` fixed to `value`.
 *
 * The result has one variable fewer; the remaining variables keep their
 * relative order.
 */
inline truth_table cofactor( truth_table const& tt, uint32_t pos, bool value )
{
  if ( pos >= tt.num_vars() )
    throw std::out_of_range( fmt::format( "cofactor position {} out of range for {} variables", pos, tt.num_vars() ) );
  truth_table result( tt.num_vars() - 1u );
  auto const low_mask = ( uint64_t{ 1 } << pos ) - 1u;
  auto const fixed = static_cast<uint64_t>( value ) << pos;
  for ( uint64_t m = 0; m < result.num_bits(); ++m )
  {
    auto const full = ( ( m & ~low_mask ) << 1 ) | fixed | ( m & low_mask );
    if ( tt.get_bit( full ) )
      result.set_bit( m, true );
  }
  return result;
}

/*! \brief Number of minterms on which two equally wide tables differ. */
inline uint64_t divergence_count( truth_table const& t0, truth_table const& t1 )
{
  return ones_count( t0 ^ t1 );
}

/*! \brief Inverse of cofactoring: inserts a variable at `pos` selecting between `t0` and `t1`. */
inline truth_table recompose( truth_table const& t0, truth_table const& t1, uint32_t pos )
{
  if ( t0.num_vars() != t1.num_vars() )
    throw std::invalid_argument( fmt::format( "width mismatch: {} vs {} variables", t0.num_vars(), t1.num_vars() ) );
  if ( pos > t0.num_vars() )
    throw std::out_of_range( fmt::format( "recompose position {} out of range for {} variables", pos, t0.num_vars() + 1u ) );
  truth_table result( t0.num_vars() + 1u );
  auto const low_mask = ( uint64_t{ 1 } << pos ) - 1u;
  for ( uint64_t m = 0; m < result.num_bits(); ++m )
  {
    auto const reduced = ( ( m >> 1 ) & ~low_mask ) | ( m & low_mask );
    auto const& source = ( ( m >> pos ) & 1u ) ? t1 : t0;
    if ( source.get_bit( reduced ) )
      result.set_bit( m, true );
  }
  return result;
}

/*! \brief True iff every minterm of `a` is also a minterm of `b`. */
inline bool implies( truth_table const& a, truth_table const& b )
{
  return ( a & ~b ).is_const0();
}

} // namespace ctxmap
