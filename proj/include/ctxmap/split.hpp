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
  \file split.hpp
  \brief Structural Shannon splits and dead-node sweeping

  A split of a cut on leaf position `pos` rebuilds the root as
  `x ? f1 : f0`, where `f0` and `f1` are the cofactors synthesized over the
  remaining leaves.  The roots of the fresh cofactor and selector logic are
  reported as mapping boundaries so that a later cover keeps them as LUT
  outputs instead of re-collapsing the split.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "aig.hpp"
#include "cuts.hpp"
#include "truth_table.hpp"

namespace ctxmap
{

struct split_request
{
  var_t root{ 0 };
  std::vector<var_t> leaves;
  truth_table function;
  uint32_t position{ 0 };
};

struct rebuild_result
{
  aig network;
  /*! \brief Literal in `network` implementing each variable of the source. */
  std::vector<literal> old_to_new;
  /*! \brief Roots of split logic that must stay LUT outputs. */
  std::vector<var_t> boundaries;
};

namespace detail
{

/* Shannon expansion on the highest support variable, with memoization */
class tt_synthesizer
{
public:
  explicit tt_synthesizer( aig& ntk ) : ntk_( ntk ) {}

  literal operator()( truth_table const& tt, std::vector<literal> const& vars )
  {
    if ( tt.is_const0() )
      return literal::constant( false );
    if ( ( ~tt ).is_const0() )
      return literal::constant( true );

    std::string key = tt.to_hex();
    for ( auto l : vars )
      key += fmt::format( ",{}", l.encoded() );
    if ( auto it = memo_.find( key ); it != memo_.end() )
      return it->second;

    auto const j = tt.num_vars() - 1u;
    auto const c0 = cofactor( tt, j, false );
    auto const c1 = cofactor( tt, j, true );
    auto rest = vars;
    rest.erase( rest.begin() + j );
    auto const result = c0 == c1 ? ( *this )( c0, rest ) : ntk_.create_mux( vars[j], ( *this )( c1, rest ), ( *this )( c0, rest ) );
    memo_.emplace( std::move( key ), result );
    return result;
  }

private:
  aig& ntk_;
  std::map<std::string, literal> memo_;
};

inline aig empty_like( aig const& ntk, std::vector<literal>& old_to_new )
{
  aig out;
  old_to_new.assign( ntk.num_vars(), literal::constant( false ) );
  for ( auto i = 0u; i < ntk.inputs.size(); ++i )
    old_to_new[ntk.inputs[i]] = literal( out.create_input( i < ntk.input_names.size() ? ntk.input_names[i] : std::string{} ), false );
  for ( auto i = 0u; i < ntk.latches.size(); ++i )
    old_to_new[ntk.latches[i].out] = literal(
        out.create_latch( ntk.latches[i].init, i < ntk.latch_names.size() ? ntk.latch_names[i] : std::string{} ), false );
  return out;
}

inline void finish_like( aig const& ntk, aig& out, std::vector<literal> const& old_to_new )
{
  auto map = [&]( literal l ) { return old_to_new[l.var()] ^ l.is_complemented(); };
  for ( auto i = 0u; i < ntk.latches.size(); ++i )
    out.set_latch_next( i, map( ntk.latches[i].next ) );
  for ( auto i = 0u; i < ntk.outputs.size(); ++i )
    out.create_output( map( ntk.outputs[i] ), i < ntk.output_names.size() ? ntk.output_names[i] : std::string{} );
}

} // namespace detail

/*! \brief Rebuilds the network with every requested split applied in one topological pass.
 *
 * The original cone of a split root is copied as well; it stays in place
 * for any other fanout and is otherwise left for `sweep`.  Inputs and
 * latches keep their order.
 */
inline rebuild_result apply_splits( aig const& ntk, std::span<split_request const> requests )
{
  std::vector<split_request const*> by_root( ntk.num_vars(), nullptr );
  for ( auto const& r : requests )
  {
    if ( r.leaves.size() < 2u )
      throw std::invalid_argument( fmt::format( "cannot split degenerate cut of var {} with {} leaves", r.root, r.leaves.size() ) );
    if ( r.position >= r.leaves.size() || r.function.num_vars() != r.leaves.size() )
      throw std::invalid_argument( fmt::format( "invalid split request at var {}", r.root ) );
    by_root.at( r.root ) = &r;
  }

  rebuild_result res;
  auto& out = res.network;
  out = detail::empty_like( ntk, res.old_to_new );
  auto map = [&]( literal l ) { return res.old_to_new[l.var()] ^ l.is_complemented(); };

  for ( auto const& g : ntk.ands )
  {
    auto const* r = by_root[g.out];
    if ( r == nullptr )
    {
      res.old_to_new[g.out] = out.create_and( map( g.fanin0 ), map( g.fanin1 ) );
      continue;
    }
    auto const fresh_from = out.max_var;
    std::vector<literal> rest;
    for ( auto i = 0u; i < r->leaves.size(); ++i )
      if ( i != r->position )
        rest.push_back( map( literal( r->leaves[i], false ) ) );
    auto const selector = map( literal( r->leaves[r->position], false ) );

    detail::tt_synthesizer synth( out );
    auto const f0 = synth( cofactor( r->function, r->position, false ), rest );
    auto const f1 = synth( cofactor( r->function, r->position, true ), rest );
    auto const root = out.create_mux( selector, f1, f0 );
    for ( auto l : { f0, f1, root } )
      if ( l.var() > fresh_from && std::find( res.boundaries.begin(), res.boundaries.end(), l.var() ) == res.boundaries.end() )
        res.boundaries.push_back( l.var() );
    res.old_to_new[g.out] = root;
  }
  detail::finish_like( ntk, out, res.old_to_new );
  std::sort( res.boundaries.begin(), res.boundaries.end() );
  return res;
}

/*! \brief Replaces the root of `c` by a Shannon split on leaf position `pos`.
 *
 * Returns the new network and the literal now implementing the root.
 */
inline std::pair<aig, literal> realize_split( aig const& ntk, cut const& c, uint32_t pos )
{
  if ( c.leaves.size() <= 1u )
    throw std::invalid_argument( fmt::format( "cannot split degenerate cut of var {} with {} leaves", c.root, c.leaves.size() ) );
  if ( pos >= c.leaves.size() )
    throw std::out_of_range( fmt::format( "split position {} out of range for {} leaves", pos, c.leaves.size() ) );
  split_request const r{ c.root, c.leaves, c.function, pos };
  auto res = apply_splits( ntk, std::span<split_request const>( &r, 1u ) );
  auto const root = res.old_to_new[c.root];
  return { std::move( res.network ), root };
}

/*! \brief Removes AND gates outside the transitive fan-in of outputs and latch inputs.
 *
 * `old_to_new` maps every live variable; dead ones map to constant 0.
 */
inline rebuild_result sweep( aig const& ntk, std::span<var_t const> boundaries = {} )
{
  std::vector<uint8_t> live( ntk.num_vars(), 0u );
  for ( auto o : ntk.outputs )
    live[o.var()] = 1u;
  for ( auto const& l : ntk.latches )
    live[l.next.var()] = 1u;
  for ( auto it = ntk.ands.rbegin(); it != ntk.ands.rend(); ++it )
  {
    if ( live[it->out] )
    {
      live[it->fanin0.var()] = 1u;
      live[it->fanin1.var()] = 1u;
    }
  }

  rebuild_result res;
  auto& out = res.network;
  out = detail::empty_like( ntk, res.old_to_new );
  auto map = [&]( literal l ) { return res.old_to_new[l.var()] ^ l.is_complemented(); };
  for ( auto const& g : ntk.ands )
    if ( live[g.out] )
      res.old_to_new[g.out] = out.create_and( map( g.fanin0 ), map( g.fanin1 ) );
  detail::finish_like( ntk, out, res.old_to_new );

  for ( auto v : boundaries )
  {
    if ( v < live.size() && live[v] )
    {
      auto const n = res.old_to_new[v].var();
      if ( n != 0u && std::find( res.boundaries.begin(), res.boundaries.end(), n ) == res.boundaries.end() )
        res.boundaries.push_back( n );
    }
  }
  std::sort( res.boundaries.begin(), res.boundaries.end() );
  return res;
}

} // namespace ctxmap
