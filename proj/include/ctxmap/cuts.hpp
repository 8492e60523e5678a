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
  \file cuts.hpp
  \brief Priority-cut enumeration and sequential cone classification
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "aig.hpp"
#include "cut_function.hpp"
#include "truth_table.hpp"

namespace ctxmap
{

/*! \brief An enumerated cut with its mapping costs. */
struct priority_cut
{
  std::vector<var_t> leaves;
  uint32_t depth{ 0 };
  double area_flow{ 0.0 };
};

/*! \brief Total priority order: depth, area flow, leaf count, then leaf list. */
inline bool cut_priority_less( priority_cut const& a, priority_cut const& b )
{
  if ( a.depth != b.depth )
    return a.depth < b.depth;
  if ( a.area_flow != b.area_flow )
    return a.area_flow < b.area_flow;
  if ( a.leaves.size() != b.leaves.size() )
    return a.leaves.size() < b.leaves.size();
  return a.leaves < b.leaves;
}

struct cut_enumeration_params
{
  /*! \brief Maximum number of leaves (mapping LUT size). */
  uint32_t cut_size{ 6u };

  /*! \brief Maximum cuts kept per node, trivial cut included. */
  uint32_t cut_limit{ 8u };
};

/*! \brief Cut sets of all variables.
 *
 * `cuts[v]` holds the non-trivial cuts of an AND gate in priority order,
 * followed by the trivial cut `{v}`.  Inputs and latch outputs only hold
 * their trivial cut; the constant holds the empty cut.
 */
struct cut_database
{
  uint32_t cut_size{ 0 };
  std::vector<std::vector<priority_cut>> cuts;
  std::vector<uint32_t> arrival;
  std::vector<double> flow;
  std::vector<uint32_t> fanouts;
  std::vector<uint8_t> boundary;

  std::span<priority_cut const> operator[]( var_t v ) const { return cuts[v]; }

  /*! \brief Non-trivial cuts of `v` (empty for non-AND vars). */
  std::span<priority_cut const> nontrivial( var_t v ) const
  {
    auto const& set = cuts[v];
    if ( set.size() <= 1u )
      return {};
    return std::span<priority_cut const>( set.data(), set.size() - 1u );
  }
};

namespace detail
{

inline bool merge_leaves( std::vector<var_t> const& a, std::vector<var_t> const& b, uint32_t limit, std::vector<var_t>& out )
{
  out.clear();
  auto ia = a.begin(), ib = b.begin();
  while ( ia != a.end() || ib != b.end() )
  {
    var_t v;
    if ( ib == b.end() || ( ia != a.end() && *ia < *ib ) )
      v = *ia++;
    else if ( ia == a.end() || *ib < *ia )
      v = *ib++;
    else
    {
      v = *ia++;
      ++ib;
    }
    if ( out.size() == limit )
      return false;
    out.push_back( v );
  }
  return true;
}

inline bool is_subset( std::vector<var_t> const& small, std::vector<var_t> const& large )
{
  return small.size() <= large.size() && std::includes( large.begin(), large.end(), small.begin(), small.end() );
}

} // namespace detail

/*! \brief Enumerates K-feasible, dominance-filtered priority cuts.
 *
 * Variables listed in `boundaries` only contribute their trivial cut when
 * used as a fanin, so no cut of another node extends through them.
 */
inline cut_database enumerate_cuts( aig const& ntk, cut_enumeration_params const& ps, std::span<var_t const> boundaries = {} )
{
  if ( ps.cut_size < 2u || ps.cut_size > 8u )
    throw std::invalid_argument( fmt::format( "cut size {} outside [2, 8]", ps.cut_size ) );
  if ( ps.cut_limit < 2u )
    throw std::invalid_argument( fmt::format( "cut limit {} below 2", ps.cut_limit ) );

  cut_database db;
  db.cut_size = ps.cut_size;
  db.cuts.assign( ntk.num_vars(), {} );
  db.arrival.assign( ntk.num_vars(), 0u );
  db.flow.assign( ntk.num_vars(), 0.0 );
  db.fanouts = fanout_counts( ntk );
  db.boundary.assign( ntk.num_vars(), 0u );
  for ( auto v : boundaries )
    db.boundary.at( v ) = 1u;

  db.cuts[0].push_back( priority_cut{} );
  for ( auto v : ntk.inputs )
    db.cuts[v].push_back( { { v }, 0u, 0.0 } );
  for ( auto const& l : ntk.latches )
    db.cuts[l.out].push_back( { { l.out }, 0u, 0.0 } );

  auto fanin_cuts = [&]( var_t v ) -> std::span<priority_cut const> {
    auto const& set = db.cuts[v];
    if ( db.boundary[v] && set.size() > 1u )
      return std::span<priority_cut const>( &set.back(), 1u );
    return set;
  };

  std::vector<var_t> merged;
  std::vector<priority_cut> candidates;
  for ( auto const& g : ntk.ands )
  {
    candidates.clear();
    for ( auto const& c0 : fanin_cuts( g.fanin0.var() ) )
    {
      for ( auto const& c1 : fanin_cuts( g.fanin1.var() ) )
      {
        if ( !detail::merge_leaves( c0.leaves, c1.leaves, ps.cut_size, merged ) )
          continue;
        bool dominated = false;
        for ( auto const& c : candidates )
        {
          if ( detail::is_subset( c.leaves, merged ) )
          {
            dominated = true;
            break;
          }
        }
        if ( dominated )
          continue;
        std::erase_if( candidates, [&]( auto const& c ) { return detail::is_subset( merged, c.leaves ); } );
        candidates.push_back( { merged, 0u, 0.0 } );
      }
    }

    for ( auto& c : candidates )
    {
      uint32_t depth = 0;
      double flow = 1.0;
      for ( auto l : c.leaves )
      {
        depth = std::max( depth, db.arrival[l] );
        flow += db.flow[l] / std::max( 1u, db.fanouts[l] );
      }
      c.depth = depth + 1u;
      c.area_flow = flow;
    }
    std::sort( candidates.begin(), candidates.end(), cut_priority_less );
    if ( candidates.size() > ps.cut_limit - 1u )
      candidates.resize( ps.cut_limit - 1u );

    auto& set = db.cuts[g.out];
    set = candidates;
    if ( !set.empty() )
    {
      db.arrival[g.out] = set.front().depth;
      db.flow[g.out] = set.front().area_flow;
    }
    set.push_back( { { g.out }, db.arrival[g.out], db.flow[g.out] } );
  }
  return db;
}

/*! \brief Per-var structural context for cone classification. */
struct cone_context
{
  level_map levels;
  /*! \brief Transitive fan-in contains a latch output. */
  std::vector<uint8_t> from_latch;
  /*! \brief Transitive fan-out reaches a latch input. */
  std::vector<uint8_t> to_latch;
};

inline cone_context analyze_cones( aig const& ntk )
{
  cone_context ctx;
  ctx.levels = compute_levels( ntk );
  ctx.from_latch.assign( ntk.num_vars(), 0u );
  ctx.to_latch.assign( ntk.num_vars(), 0u );
  for ( auto const& l : ntk.latches )
  {
    ctx.from_latch[l.out] = 1u;
    ctx.to_latch[l.next.var()] = 1u;
  }
  for ( auto const& g : ntk.ands )
    ctx.from_latch[g.out] = ctx.from_latch[g.fanin0.var()] | ctx.from_latch[g.fanin1.var()];
  for ( auto it = ntk.ands.rbegin(); it != ntk.ands.rend(); ++it )
  {
    if ( ctx.to_latch[it->out] )
    {
      ctx.to_latch[it->fanin0.var()] = 1u;
      ctx.to_latch[it->fanin1.var()] = 1u;
    }
  }
  return ctx;
}

struct cone_class
{
  /*! \brief Longest AND path from the sequential/primary boundary to the root. */
  uint32_t depth{ 0 };
  /*! \brief Root lies on a register-to-register path. */
  bool sequential{ false };
};

inline cone_class classify_cone( cone_context const& ctx, var_t root )
{
  return { ctx.levels[root], ctx.from_latch[root] && ctx.to_latch[root] };
}

/*! \brief A cut as seen by the split heuristic. */
struct cut
{
  var_t root{ 0 };
  std::vector<var_t> leaves;
  truth_table function;
  uint32_t depth{ 0 };
  bool sequential{ false };
};

inline cut make_cut( aig const& ntk, cone_context const& ctx, var_t root, std::vector<var_t> leaves )
{
  cut c;
  c.root = root;
  c.function = cut_truth_table( ntk, root, leaves );
  c.leaves = std::move( leaves );
  auto const cls = classify_cone( ctx, root );
  c.depth = cls.depth;
  c.sequential = cls.sequential;
  return c;
}

inline cone_class classify_cone( aig const& ntk, cut const& c )
{
  return classify_cone( analyze_cones( ntk ), c.root );
}

} // namespace ctxmap
