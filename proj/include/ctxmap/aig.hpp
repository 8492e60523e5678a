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
  \file aig.hpp
  \brief And-inverter graph with latches

  Variables are numbered AIGER-style: variable 0 is constant false and a
  literal encodes `2 * var + complement`.  An `aig` is a plain value; the
  builder members append nodes with fresh variable indices so that the
  topological invariant (AND fanins have smaller indices) holds by
  construction.  Hand-assembled networks can violate it, which is what
  `validate` is for.
*/

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <fmt/format.h>

namespace ctxmap
{

using var_t = uint32_t;

class literal
{
public:
  constexpr literal() = default;
  constexpr literal( var_t var, bool complemented ) : data_( ( var << 1 ) | static_cast<uint32_t>( complemented ) ) {}

  static constexpr literal from_encoded( uint32_t encoded )
  {
    literal l;
    l.data_ = encoded;
    return l;
  }

  static constexpr literal constant( bool value ) { return literal( 0, value ); }

  constexpr var_t var() const { return data_ >> 1; }
  constexpr bool is_complemented() const { return data_ & 1u; }
  constexpr uint32_t encoded() const { return data_; }
  constexpr bool is_constant() const { return var() == 0; }

  constexpr literal operator!() const { return from_encoded( data_ ^ 1u ); }
  constexpr literal operator^( bool complement ) const { return from_encoded( data_ ^ static_cast<uint32_t>( complement ) ); }

  constexpr auto operator<=>( literal const& ) const = default;

private:
  uint32_t data_{ 0 };
};

/* X is simulated as 0 */
enum class latch_init : uint8_t
{
  zero,
  one,
  undefined
};

struct and_gate
{
  var_t out{ 0 };
  literal fanin0;
  literal fanin1;
};

struct latch
{
  var_t out{ 0 };
  literal next;
  latch_init init{ latch_init::zero };
};

enum class node_kind : uint8_t
{
  none,
  constant,
  input,
  latch,
  and_gate
};

/*! \brief And-inverter graph.
 *
 * Inputs, latches, AND gates and outputs are kept in separate ordered
 * lists.  Symbol names are optional; a name vector is either empty or
 * sized like its list.
 */
struct aig
{
  uint32_t max_var{ 0 };
  std::vector<var_t> inputs;
  std::vector<latch> latches;
  std::vector<and_gate> ands;
  std::vector<literal> outputs;

  std::vector<std::string> input_names;
  std::vector<std::string> latch_names;
  std::vector<std::string> output_names;

  uint32_t num_vars() const { return max_var + 1u; }

  var_t create_input( std::string name = {} )
  {
    auto const v = ++max_var;
    add_name( input_names, inputs.size(), std::move( name ) );
    inputs.push_back( v );
    return v;
  }

  /*! \brief Adds a latch whose next state is constant 0 until `set_latch_next`. */
  var_t create_latch( latch_init init = latch_init::zero, std::string name = {} )
  {
    auto const v = ++max_var;
    add_name( latch_names, latches.size(), std::move( name ) );
    latches.push_back( { v, literal::constant( false ), init } );
    return v;
  }

  void set_latch_next( std::size_t index, literal next ) { latches.at( index ).next = next; }

  /*! \brief Appends an AND gate on a fresh variable.
   *
   * Trivial cases (constants, equal or complementary fanins) are folded
   * without creating a node.
   */
  literal create_and( literal a, literal b )
  {
    if ( a == literal::constant( false ) || b == literal::constant( false ) || a == !b )
      return literal::constant( false );
    if ( a == literal::constant( true ) )
      return b;
    if ( b == literal::constant( true ) || a == b )
      return a;
    if ( a.encoded() < b.encoded() )
      std::swap( a, b );
    auto const v = ++max_var;
    ands.push_back( { v, a, b } );
    return literal( v, false );
  }

  literal create_or( literal a, literal b ) { return !create_and( !a, !b ); }

  literal create_xor( literal a, literal b ) { return create_or( create_and( a, !b ), create_and( !a, b ) ); }

  /*! \brief 2:1 selector `sel ? then_ : else_` in the NOT(NOT(s&t) & NOT(!s&e)) form. */
  literal create_mux( literal sel, literal then_, literal else_ )
  {
    if ( then_ == else_ )
      return then_;
    return !create_and( !create_and( sel, then_ ), !create_and( !sel, else_ ) );
  }

  void create_output( literal l, std::string name = {} )
  {
    add_name( output_names, outputs.size(), std::move( name ) );
    outputs.push_back( l );
  }

private:
  static void add_name( std::vector<std::string>& names, std::size_t index, std::string name )
  {
    if ( name.empty() && names.empty() )
      return;
    names.resize( index, std::string{} );
    names.push_back( std::move( name ) );
  }
};

/*! \brief Orders the AND list by gate variable, which is topological for a valid network. */
inline void sort_topologically( aig& ntk )
{
  std::stable_sort( ntk.ands.begin(), ntk.ands.end(), []( auto const& a, auto const& b ) { return a.out < b.out; } );
}

/*! \brief Node kind of every variable, indexed by var.  Duplicates keep the first kind. */
inline std::vector<node_kind> node_kinds( aig const& ntk )
{
  std::vector<node_kind> kinds( ntk.num_vars(), node_kind::none );
  kinds[0] = node_kind::constant;
  auto mark = [&]( var_t v, node_kind k ) {
    if ( v < kinds.size() && kinds[v] == node_kind::none )
      kinds[v] = k;
  };
  for ( auto v : ntk.inputs )
    mark( v, node_kind::input );
  for ( auto const& l : ntk.latches )
    mark( l.out, node_kind::latch );
  for ( auto const& g : ntk.ands )
    mark( g.out, node_kind::and_gate );
  return kinds;
}

/*! \brief Index of the AND gate defining each var, or -1. */
inline std::vector<int32_t> and_index( aig const& ntk )
{
  std::vector<int32_t> index( ntk.num_vars(), -1 );
  for ( auto i = 0u; i < ntk.ands.size(); ++i )
  {
    auto const v = ntk.ands[i].out;
    if ( v < index.size() && index[v] < 0 )
      index[v] = static_cast<int32_t>( i );
  }
  return index;
}

/*! \brief Checks the structural invariants.
 *
 * Returns an empty list iff variable indices are unique, every AND fanin
 * has a smaller index than its gate, and no literal references an
 * undefined variable.
 */
inline std::vector<std::string> validate( aig const& ntk )
{
  std::vector<std::string> violations;
  std::vector<uint8_t> seen( ntk.num_vars(), 0 );
  seen[0] = 1;

  auto define = [&]( var_t v, char const* what ) {
    if ( v == 0 )
      violations.push_back( fmt::format( "{} defined on constant var 0", what ) );
    else if ( v > ntk.max_var )
      violations.push_back( fmt::format( "{} var {} exceeds max var {}", what, v, ntk.max_var ) );
    else if ( seen[v] )
      violations.push_back( fmt::format( "duplicate definition of var {}", v ) );
    else
      seen[v] = 1;
  };
  for ( auto v : ntk.inputs )
    define( v, "input" );
  for ( auto const& l : ntk.latches )
    define( l.out, "latch" );
  for ( auto const& g : ntk.ands )
    define( g.out, "and" );

  auto defined = [&]( literal l ) { return l.var() <= ntk.max_var && seen[l.var()]; };

  for ( auto const& g : ntk.ands )
  {
    for ( auto f : { g.fanin0, g.fanin1 } )
    {
      if ( !defined( f ) )
        violations.push_back( fmt::format( "dangling literal {} at var {}", f.encoded(), g.out ) );
      else if ( f.var() >= g.out )
        violations.push_back( fmt::format( "non-topological fanin at var {}", g.out ) );
    }
  }
  for ( auto const& l : ntk.latches )
  {
    if ( !defined( l.next ) )
      violations.push_back( fmt::format( "dangling literal {} at latch var {}", l.next.encoded(), l.out ) );
  }
  for ( auto i = 0u; i < ntk.outputs.size(); ++i )
  {
    if ( !defined( ntk.outputs[i] ) )
      violations.push_back( fmt::format( "dangling literal {} at output {}", ntk.outputs[i].encoded(), i ) );
  }
  return violations;
}

/*! \brief Unit-delay AND depth per variable.
 *
 * Constants, inputs and latch outputs sit at level 0.
 */
struct level_map
{
  std::vector<uint32_t> level;

  uint32_t operator[]( var_t v ) const { return level[v]; }
  uint32_t max_level() const { return level.empty() ? 0u : *std::max_element( level.begin(), level.end() ); }
};

inline level_map compute_levels( aig const& ntk )
{
  level_map levels;
  levels.level.assign( ntk.num_vars(), 0u );
  for ( auto const& g : ntk.ands )
    levels.level[g.out] = 1u + std::max( levels.level[g.fanin0.var()], levels.level[g.fanin1.var()] );
  return levels;
}

/*! \brief Number of references to each var from ANDs, latch inputs and outputs. */
inline std::vector<uint32_t> fanout_counts( aig const& ntk )
{
  std::vector<uint32_t> refs( ntk.num_vars(), 0u );
  for ( auto const& g : ntk.ands )
  {
    ++refs[g.fanin0.var()];
    ++refs[g.fanin1.var()];
  }
  for ( auto const& l : ntk.latches )
    ++refs[l.next.var()];
  for ( auto o : ntk.outputs )
    ++refs[o.var()];
  return refs;
}

inline std::string input_name( aig const& ntk, std::size_t index )
{
  if ( index < ntk.input_names.size() && !ntk.input_names[index].empty() )
    return ntk.input_names[index];
  return fmt::format( "pi{}", index );
}

inline std::string output_name( aig const& ntk, std::size_t index )
{
  if ( index < ntk.output_names.size() && !ntk.output_names[index].empty() )
    return ntk.output_names[index];
  return fmt::format( "po{}", index );
}

} // namespace ctxmap
