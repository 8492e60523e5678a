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
  \file mapping.hpp
  \brief Depth-oriented LUT mapping with area-flow or activity-weighted tie-breaking

  Cuts are selected per AND gate by minimum depth.  Ties at equal depth
  are broken by area flow (baseline) or by
  `area_flow * (1 + lambda * sum(toggles(leaf) / cycles))` (activity
  mode), then by leaf count and leaf list.  The cover is extracted from
  the outputs and latch inputs.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "activity.hpp"
#include "aig.hpp"
#include "cut_function.hpp"
#include "cuts.hpp"
#include "simulation.hpp"
#include "truth_table.hpp"

namespace ctxmap
{

struct lut
{
  var_t root{ 0 };
  std::vector<var_t> leaves;
  truth_table function;
};

/*! \brief LUT cover of an AIG.
 *
 * LUT outputs keep the variable index of the AIG gate they implement, so
 * inputs, latches and outputs read exactly as in the source network.
 * LUTs are stored in ascending root order, which is topological.
 */
struct mapping_solution
{
  uint32_t max_var{ 0 };
  std::vector<var_t> inputs;
  std::vector<latch> latches;
  std::vector<literal> outputs;
  std::vector<lut> luts;
  uint32_t depth{ 0 };

  std::vector<std::string> input_names;
  std::vector<std::string> latch_names;
  std::vector<std::string> output_names;

  uint32_t num_vars() const { return max_var + 1u; }
  uint32_t area() const { return static_cast<uint32_t>( luts.size() ); }
};

/*! \brief Evaluates LUTs in the first `lanes` lanes. */
inline void evaluate_combinational( mapping_solution const& ntk, std::span<uint64_t> values, uint32_t lanes = 64u )
{
  values[0] = 0u;
  for ( auto const& l : ntk.luts )
  {
    uint64_t result = 0;
    for ( auto lane = 0u; lane < lanes; ++lane )
    {
      uint64_t minterm = 0;
      for ( auto i = 0u; i < l.leaves.size(); ++i )
        minterm |= ( ( values[l.leaves[i]] >> lane ) & 1u ) << i;
      result |= static_cast<uint64_t>( l.function.get_bit( minterm ) ) << lane;
    }
    values[l.root] = result;
  }
}

/*! \brief References to each var from LUT inputs, latch inputs and outputs. */
inline std::vector<uint32_t> fanout_counts( mapping_solution const& ntk )
{
  std::vector<uint32_t> refs( ntk.num_vars(), 0u );
  for ( auto const& l : ntk.luts )
    for ( auto leaf : l.leaves )
      ++refs[leaf];
  for ( auto const& l : ntk.latches )
    ++refs[l.next.var()];
  for ( auto o : ntk.outputs )
    ++refs[o.var()];
  return refs;
}

/*! \brief Checks that the cover is closed: every LUT leaf is an input, a latch output or an earlier LUT. */
inline std::vector<std::string> validate( mapping_solution const& ntk )
{
  std::vector<std::string> violations;
  std::vector<uint8_t> driven( ntk.num_vars(), 0u );
  driven[0] = 1u;
  for ( auto v : ntk.inputs )
    driven[v] = 1u;
  for ( auto const& l : ntk.latches )
    driven[l.out] = 1u;
  for ( auto const& l : ntk.luts )
  {
    for ( auto leaf : l.leaves )
      if ( !driven[leaf] )
        violations.push_back( fmt::format( "LUT {} reads undriven var {}", l.root, leaf ) );
    if ( l.function.num_vars() != l.leaves.size() )
      violations.push_back( fmt::format( "LUT {} has {} leaves but a {}-variable function", l.root, l.leaves.size(), l.function.num_vars() ) );
    driven[l.root] = 1u;
  }
  for ( auto const& l : ntk.latches )
    if ( !driven[l.next.var()] )
      violations.push_back( fmt::format( "latch {} reads undriven var {}", l.out, l.next.var() ) );
  for ( auto o : ntk.outputs )
    if ( !driven[o.var()] )
      violations.push_back( fmt::format( "output reads undriven var {}", o.var() ) );
  return violations;
}

enum class mapping_mode
{
  baseline,
  activity
};

struct map_params
{
  mapping_mode mode{ mapping_mode::baseline };

  /*! \brief Weight of the leaf activity term in activity mode. */
  double lambda_act{ 1.0 };
};

namespace detail
{

inline double activity_cost( priority_cut const& c, activity_map const& act, double lambda )
{
  double rate = 0.0;
  for ( auto l : c.leaves )
    rate += act.rate( l );
  return c.area_flow * ( 1.0 + lambda * rate );
}

} // namespace detail

/*! \brief Maps the AIG onto LUTs with `db.cut_size` inputs.
 *
 * `act` is required in activity mode and must cover every variable of
 * `ntk`.  Variables marked as boundaries in `db` are always LUT roots when
 * referenced.
 */
inline mapping_solution map_network( aig const& ntk, cut_database const& db, map_params const& ps = {},
                                     activity_map const* act = nullptr )
{
  if ( db.cuts.size() != ntk.num_vars() )
    throw std::invalid_argument( "cut database does not match the network" );
  if ( ps.mode == mapping_mode::activity && ( act == nullptr || act->toggles.size() != ntk.num_vars() ) )
    throw std::invalid_argument( "activity mapping needs toggle counts for every net" );

  auto const gates = and_index( ntk );

  /* best cut per AND gate */
  std::vector<int32_t> best( ntk.num_vars(), -1 );
  for ( auto const& g : ntk.ands )
  {
    auto const cuts = db.nontrivial( g.out );
    if ( cuts.empty() )
      throw std::logic_error( fmt::format( "no cut for var {}", g.out ) );
    auto chosen = 0u;
    for ( auto i = 1u; i < cuts.size(); ++i )
    {
      auto const& a = cuts[i];
      auto const& b = cuts[chosen];
      if ( a.depth != b.depth )
      {
        if ( a.depth < b.depth )
          chosen = i;
        continue;
      }
      if ( ps.mode == mapping_mode::activity )
      {
        auto const ca = detail::activity_cost( a, *act, ps.lambda_act );
        auto const cb = detail::activity_cost( b, *act, ps.lambda_act );
        if ( ca != cb )
        {
          if ( ca < cb )
            chosen = i;
          continue;
        }
      }
      if ( cut_priority_less( a, b ) )
        chosen = i;
    }
    best[g.out] = static_cast<int32_t>( chosen );
  }

  /* cover extraction */
  std::vector<uint8_t> needed( ntk.num_vars(), 0u );
  std::vector<var_t> stack;
  auto require = [&]( var_t v ) {
    if ( gates[v] >= 0 && !needed[v] )
    {
      needed[v] = 1u;
      stack.push_back( v );
    }
  };
  for ( auto o : ntk.outputs )
    require( o.var() );
  for ( auto const& l : ntk.latches )
    require( l.next.var() );
  while ( !stack.empty() )
  {
    auto const v = stack.back();
    stack.pop_back();
    for ( auto leaf : db.cuts[v][best[v]].leaves )
      require( leaf );
  }

  mapping_solution sol;
  sol.max_var = ntk.max_var;
  sol.inputs = ntk.inputs;
  sol.latches = ntk.latches;
  sol.outputs = ntk.outputs;
  sol.input_names = ntk.input_names;
  sol.latch_names = ntk.latch_names;
  sol.output_names = ntk.output_names;

  std::vector<uint32_t> lut_level( ntk.num_vars(), 0u );
  for ( auto const& g : ntk.ands )
  {
    if ( !needed[g.out] )
      continue;
    auto const& c = db.cuts[g.out][best[g.out]];
    uint32_t level = 0;
    for ( auto leaf : c.leaves )
      level = std::max( level, lut_level[leaf] );
    lut_level[g.out] = level + 1u;
    sol.depth = std::max( sol.depth, level + 1u );
    sol.luts.push_back( { g.out, c.leaves, cut_truth_table( ntk, g.out, c.leaves ) } );
  }
  std::sort( sol.luts.begin(), sol.luts.end(), []( auto const& a, auto const& b ) { return a.root < b.root; } );
  return sol;
}

} // namespace ctxmap
