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
  \file equivalence.hpp
  \brief Simulation-based equivalence checking between networks with matching interfaces

  Inputs, latches and outputs are matched by position.  When the number of
  inputs plus latches is at most `exhaustive_limit`, every assignment of
  inputs and latch outputs is enumerated and both the outputs and the
  latch next-state functions are compared, which implies sequential
  equivalence from the common reset state.  Otherwise both networks are
  simulated from reset on 64 independent random input streams for a total
  of `random_cycles` cycles.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "aig.hpp"
#include "simulation.hpp"

namespace ctxmap
{

struct equivalence_params
{
  uint32_t exhaustive_limit{ 14u };
  uint64_t random_cycles{ 100000u };
  uint64_t seed{ 1u };
};

struct equivalence_result
{
  bool equivalent{ true };
  bool exhaustive{ false };
  /*! \brief Input assignments (exhaustive) or cycles (random) compared. */
  uint64_t patterns{ 0 };
  std::string mismatch;
};

template<class Reference, class Implementation>
equivalence_result check_equivalence( Reference const& ref, Implementation const& impl, equivalence_params const& ps = {} )
{
  equivalence_result res;
  if ( ref.inputs.size() != impl.inputs.size() || ref.latches.size() != impl.latches.size() ||
       ref.outputs.size() != impl.outputs.size() )
  {
    res.equivalent = false;
    res.mismatch = "interface mismatch";
    return res;
  }
  for ( auto i = 0u; i < ref.latches.size(); ++i )
  {
    if ( latch_init_word( ref.latches[i].init ) != latch_init_word( impl.latches[i].init ) )
    {
      res.equivalent = false;
      res.mismatch = fmt::format( "latch {} init differs", i );
      return res;
    }
  }

  auto const num_free = ref.inputs.size() + ref.latches.size();
  if ( num_free <= ps.exhaustive_limit )
  {
    res.exhaustive = true;
    std::vector<uint64_t> va( ref.num_vars(), 0u ), vb( impl.num_vars(), 0u );
    auto const total = uint64_t{ 1 } << num_free;
    for ( uint64_t base = 0; base < total; base += 64u )
    {
      auto const lanes = static_cast<uint32_t>( std::min<uint64_t>( 64u, total - base ) );
      auto const mask = lanes == 64u ? ~uint64_t{ 0 } : ( ( uint64_t{ 1 } << lanes ) - 1u );
      for ( auto j = 0u; j < num_free; ++j )
      {
        uint64_t word = 0;
        for ( auto lane = 0u; lane < lanes; ++lane )
          word |= ( ( ( base + lane ) >> j ) & 1u ) << lane;
        if ( j < ref.inputs.size() )
        {
          va[ref.inputs[j]] = word;
          vb[impl.inputs[j]] = word;
        }
        else
        {
          va[ref.latches[j - ref.inputs.size()].out] = word;
          vb[impl.latches[j - ref.inputs.size()].out] = word;
        }
      }
      evaluate_combinational( ref, std::span<uint64_t>( va ), lanes );
      evaluate_combinational( impl, std::span<uint64_t>( vb ), lanes );
      for ( auto o = 0u; o < ref.outputs.size(); ++o )
      {
        auto const diff = ( literal_value( va, ref.outputs[o] ) ^ literal_value( vb, impl.outputs[o] ) ) & mask;
        if ( diff )
        {
          res.equivalent = false;
          res.mismatch = fmt::format( "output {} differs on assignment {}", o, base + std::countr_zero( diff ) );
          return res;
        }
      }
      for ( auto l = 0u; l < ref.latches.size(); ++l )
      {
        auto const diff = ( literal_value( va, ref.latches[l].next ) ^ literal_value( vb, impl.latches[l].next ) ) & mask;
        if ( diff )
        {
          res.equivalent = false;
          res.mismatch = fmt::format( "next state of latch {} differs on assignment {}", l, base + std::countr_zero( diff ) );
          return res;
        }
      }
      res.patterns += lanes;
    }
    return res;
  }

  sequential_simulator<Reference> sa( ref );
  sequential_simulator<Implementation> sb( impl );
  std::mt19937_64 rng( ps.seed );
  std::vector<uint64_t> words( ref.inputs.size(), 0u );
  auto const steps = ( ps.random_cycles + 63u ) / 64u;
  for ( uint64_t c = 0; c < steps; ++c )
  {
    for ( auto& w : words )
      w = rng();
    sa.evaluate( words );
    sb.evaluate( words );
    for ( auto o = 0u; o < ref.outputs.size(); ++o )
    {
      if ( sa.output( o ) != sb.output( o ) )
      {
        res.equivalent = false;
        res.mismatch = fmt::format( "output {} differs in cycle {}", o, c );
        return res;
      }
    }
    for ( auto l = 0u; l < ref.latches.size(); ++l )
    {
      if ( sa.next_state( l ) != sb.next_state( l ) )
      {
        res.equivalent = false;
        res.mismatch = fmt::format( "next state of latch {} differs in cycle {}", l, c );
        return res;
      }
    }
    sa.clock();
    sb.clock();
    res.patterns += 64u;
  }
  return res;
}

} // namespace ctxmap
