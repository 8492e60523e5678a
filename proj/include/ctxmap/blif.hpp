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
  \file blif.hpp
  \brief BLIF netlist writer for LUT covers

  Emits `.model`, `.inputs`, `.outputs`, `.latch` (rising edge on the
  global clock `clk`, explicit init), one `.names` block per LUT with one
  cover line per on-set minterm, and `.end`.  Outputs that cannot reuse a
  LUT net directly get a buffer or inverter block; those are not counted
  as LUT area.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include <fmt/format.h>

#include "mapping.hpp"

namespace ctxmap
{

inline constexpr char const* blif_clock_name = "clk";

namespace detail
{

inline std::string sanitize_net_name( std::string name )
{
  for ( auto& c : name )
    if ( c == ' ' || c == '\t' || c == '#' || c == '\\' || c == '=' )
      c = '_';
  return name;
}

class net_namer
{
public:
  net_namer() { used_.insert( blif_clock_name ); }

  std::string claim( std::string const& wanted, var_t v )
  {
    auto name = sanitize_net_name( wanted );
    if ( name.empty() || used_.count( name ) )
      name = fmt::format( "{}_{}", name.empty() ? "n" : name, v );
    while ( used_.count( name ) )
      name += "_";
    used_.insert( name );
    return name;
  }

private:
  std::unordered_set<std::string> used_;
};

} // namespace detail

/*! \brief Writes the cover as BLIF; refuses LUTs wider than `lut_size`. */
inline std::string write_blif( mapping_solution const& sol, std::string const& model_name, uint32_t lut_size )
{
  for ( auto const& l : sol.luts )
    if ( l.leaves.size() > lut_size )
      throw std::invalid_argument( fmt::format( "LUT at var {} has {} inputs, exceeding LUT size {}", l.root, l.leaves.size(), lut_size ) );

  detail::net_namer namer;
  std::vector<std::string> names( sol.num_vars() );
  std::vector<uint8_t> is_lut( sol.num_vars(), 0u );
  for ( auto const& l : sol.luts )
    is_lut[l.root] = 1u;

  std::vector<std::string> input_nets;
  for ( auto i = 0u; i < sol.inputs.size(); ++i )
  {
    auto const wanted = i < sol.input_names.size() && !sol.input_names[i].empty() ? sol.input_names[i] : fmt::format( "pi{}", i );
    names[sol.inputs[i]] = namer.claim( wanted, sol.inputs[i] );
    input_nets.push_back( names[sol.inputs[i]] );
  }
  for ( auto i = 0u; i < sol.latches.size(); ++i )
  {
    auto const v = sol.latches[i].out;
    auto const wanted = i < sol.latch_names.size() && !sol.latch_names[i].empty() ? sol.latch_names[i] : fmt::format( "n{}", v );
    names[v] = namer.claim( wanted, v );
  }

  /* outputs that directly expose a LUT net name it */
  std::vector<std::string> output_nets( sol.outputs.size() );
  std::vector<uint8_t> output_direct( sol.outputs.size(), 0u );
  for ( auto i = 0u; i < sol.outputs.size(); ++i )
  {
    auto const o = sol.outputs[i];
    auto const wanted = i < sol.output_names.size() && !sol.output_names[i].empty() ? sol.output_names[i] : fmt::format( "po{}", i );
    if ( !o.is_complemented() && is_lut[o.var()] && names[o.var()].empty() )
    {
      names[o.var()] = namer.claim( wanted, o.var() );
      output_nets[i] = names[o.var()];
      output_direct[i] = 1u;
    }
    else if ( !o.is_complemented() && !o.is_constant() && names[o.var()] == wanted )
    {
      output_nets[i] = wanted;
      output_direct[i] = 1u;
    }
    else
    {
      output_nets[i] = namer.claim( wanted, sol.max_var + 1u + i );
    }
  }
  for ( auto const& l : sol.luts )
    if ( names[l.root].empty() )
      names[l.root] = namer.claim( fmt::format( "n{}", l.root ), l.root );

  std::string out = fmt::format( ".model {}\n", detail::sanitize_net_name( model_name ) );
  out += ".inputs";
  for ( auto const& n : input_nets )
    out += " " + n;
  if ( !sol.latches.empty() )
    out += fmt::format( " {}", blif_clock_name );
  out += "\n.outputs";
  for ( auto const& n : output_nets )
    out += " " + n;
  out += "\n";

  /* single-input helper block driving `target` from literal `src` */
  std::string helpers;
  auto drive = [&]( literal src, std::string const& target ) {
    if ( src.is_constant() )
    {
      helpers += fmt::format( ".names {}\n", target );
      if ( src.is_complemented() )
        helpers += "1\n";
      return;
    }
    helpers += fmt::format( ".names {} {}\n{} 1\n", names[src.var()], target, src.is_complemented() ? '0' : '1' );
  };

  for ( auto i = 0u; i < sol.latches.size(); ++i )
  {
    auto const& l = sol.latches[i];
    std::string next;
    if ( !l.next.is_complemented() && !l.next.is_constant() )
      next = names[l.next.var()];
    else
    {
      next = namer.claim( names[l.out] + "_next", l.out );
      drive( l.next, next );
    }
    out += fmt::format( ".latch {} {} re {} {}\n", next, names[l.out], blif_clock_name, l.init == latch_init::one ? 1 : 0 );
  }

  for ( auto const& l : sol.luts )
  {
    out += ".names";
    for ( auto leaf : l.leaves )
      out += " " + names[leaf];
    out += " " + names[l.root] + "\n";
    for ( uint64_t m = 0; m < l.function.num_bits(); ++m )
    {
      if ( !l.function.get_bit( m ) )
        continue;
      for ( auto i = 0u; i < l.leaves.size(); ++i )
        out += ( ( m >> i ) & 1u ) ? '1' : '0';
      out += l.leaves.empty() ? "1\n" : " 1\n";
    }
  }

  for ( auto i = 0u; i < sol.outputs.size(); ++i )
    if ( !output_direct[i] )
      drive( sol.outputs[i], output_nets[i] );
  out += helpers;
  out += ".end\n";
  return out;
}

} // namespace ctxmap
