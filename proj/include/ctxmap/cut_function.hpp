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
  \file cut_function.hpp
  \brief Truth table of a cut computed on the AIG
*/

#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include <fmt/format.h>

#include "aig.hpp"
#include "truth_table.hpp"

namespace ctxmap
{

/*! \brief Function of `root` over `leaves` (strictly ascending vars; leaf `i` is table variable `i`).
 *
 * Throws if some path from `root` reaches an input or latch output that is
 * not a leaf.  A root that is itself a leaf yields the projection.
 */
inline truth_table cut_truth_table( aig const& ntk, var_t root, std::span<var_t const> leaves )
{
  if ( leaves.size() > truth_table::max_vars )
    throw std::invalid_argument( fmt::format( "cut with {} leaves exceeds {} variables", leaves.size(), truth_table::max_vars ) );
  if ( !std::is_sorted( leaves.begin(), leaves.end() ) || std::adjacent_find( leaves.begin(), leaves.end() ) != leaves.end() )
    throw std::invalid_argument( "cut leaves must be strictly ascending" );
  if ( root > ntk.max_var )
    throw std::invalid_argument( fmt::format( "root var {} out of range", root ) );

  auto const n = static_cast<uint32_t>( leaves.size() );
  auto const gates = and_index( ntk );

  std::unordered_map<var_t, truth_table> tables;
  for ( auto i = 0u; i < n; ++i )
    tables.emplace( leaves[i], truth_table::nth_var( n, i ) );
  tables.emplace( 0u, truth_table( n ) );

  /* collect the cone between root and leaves */
  std::vector<var_t> cone;
  std::vector<var_t> stack{ root };
  std::unordered_map<var_t, bool> visited;
  while ( !stack.empty() )
  {
    auto const v = stack.back();
    stack.pop_back();
    if ( tables.count( v ) || visited[v] )
      continue;
    visited[v] = true;
    if ( gates[v] < 0 )
      throw std::invalid_argument( fmt::format( "leaves are not a cut of var {}: var {} reached", root, v ) );
    cone.push_back( v );
    auto const& g = ntk.ands[gates[v]];
    stack.push_back( g.fanin0.var() );
    stack.push_back( g.fanin1.var() );
  }
  std::sort( cone.begin(), cone.end() );

  auto value = [&]( literal l ) {
    auto const& t = tables.at( l.var() );
    return l.is_complemented() ? ~t : t;
  };
  for ( auto v : cone )
  {
    auto const& g = ntk.ands[gates[v]];
    tables.insert_or_assign( v, value( g.fanin0 ) & value( g.fanin1 ) );
  }
  return tables.at( root );
}

} // namespace ctxmap
