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
  \file oracle.hpp
  \brief Independent scalar reference models used by the tests

  Everything here works one bit at a time on `std::vector<bool>` and
  deliberately avoids the library's word-parallel code paths.
*/

#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <ctxmap/aig.hpp>

namespace ctxmap::testing
{

/*! \brief Scalar cycle simulator over an AIG, node values resolved by recursion. */
class scalar_aig
{
public:
  explicit scalar_aig( aig const& ntk ) : ntk_( ntk ), driver_( ntk.max_var + 1u, -1 ), state_( ntk.latches.size() )
  {
    for ( auto i = 0u; i < ntk.ands.size(); ++i )
      driver_[ntk.ands[i].out] = static_cast<int>( i );
    reset();
  }

  void reset()
  {
    for ( auto i = 0u; i < ntk_.latches.size(); ++i )
      state_[i] = ntk_.latches[i].init == latch_init::one;
  }

  /*! \brief Evaluates every variable for the given input bits; latch outputs come from the state. */
  std::vector<bool> evaluate( std::vector<bool> const& in )
  {
    std::vector<int8_t> memo( ntk_.max_var + 1u, -1 );
    memo[0] = 0;
    for ( auto i = 0u; i < ntk_.inputs.size(); ++i )
      memo[ntk_.inputs[i]] = in.at( i ) ? 1 : 0;
    for ( auto i = 0u; i < ntk_.latches.size(); ++i )
      memo[ntk_.latches[i].out] = state_[i] ? 1 : 0;
    values_.assign( ntk_.max_var + 1u, false );
    for ( var_t v = 0; v <= ntk_.max_var; ++v )
      values_[v] = resolve( v, memo );
    return values_;
  }

  bool lit( literal l ) const { return values_[l.var()] != l.is_complemented(); }

  std::vector<bool> outputs() const
  {
    std::vector<bool> out;
    for ( auto o : ntk_.outputs )
      out.push_back( lit( o ) );
    return out;
  }

  void clock()
  {
    for ( auto i = 0u; i < ntk_.latches.size(); ++i )
      state_[i] = lit( ntk_.latches[i].next );
  }

  std::vector<bool>& state() { return state_; }

private:
  bool resolve( var_t v, std::vector<int8_t>& memo ) const
  {
    if ( memo[v] >= 0 )
      return memo[v] == 1;
    if ( driver_[v] < 0 )
    {
      memo[v] = 0;
      return false;
    }
    auto const& g = ntk_.ands[driver_[v]];
    auto const a = resolve( g.fanin0.var(), memo ) != g.fanin0.is_complemented();
    auto const b = resolve( g.fanin1.var(), memo ) != g.fanin1.is_complemented();
    memo[v] = ( a && b ) ? 1 : 0;
    return memo[v] == 1;
  }

  aig const& ntk_;
  std::vector<int> driver_;
  std::vector<bool> state_;
  std::vector<bool> values_;
};

/*! \brief Per-variable toggle counts from the scalar simulator, one row per cycle. */
inline std::vector<uint32_t> scalar_toggles( aig const& ntk, std::vector<std::vector<bool>> const& rows )
{
  scalar_aig sim( ntk );
  std::vector<uint32_t> toggles( ntk.max_var + 1u, 0u );
  if ( rows.empty() )
    return toggles;
  auto prev = sim.evaluate( rows[0] );
  for ( std::size_t c = 1; c <= rows.size(); ++c )
  {
    sim.clock();
    auto const cur = sim.evaluate( rows[c - 1] );
    for ( var_t v = 1; v <= ntk.max_var; ++v )
      toggles[v] += cur[v] != prev[v];
    prev = cur;
  }
  return toggles;
}

/*! \brief Function of `root` over `leaves` by brute-force scalar evaluation of the cone. */
inline std::vector<bool> scalar_cut_function( aig const& ntk, var_t root, std::vector<var_t> const& leaves )
{
  std::vector<int> driver( ntk.max_var + 1u, -1 );
  for ( auto i = 0u; i < ntk.ands.size(); ++i )
    driver[ntk.ands[i].out] = static_cast<int>( i );
  std::vector<bool> out( std::size_t{ 1 } << leaves.size() );
  for ( std::size_t m = 0; m < out.size(); ++m )
  {
    std::map<var_t, bool> memo;
    for ( auto i = 0u; i < leaves.size(); ++i )
      memo[leaves[i]] = ( m >> i ) & 1u;
    auto rec = [&]( auto&& self, var_t v ) -> bool {
      if ( auto it = memo.find( v ); it != memo.end() )
        return it->second;
      if ( v == 0 || driver[v] < 0 )
        throw std::logic_error( "cone escapes the leaves" );
      auto const& g = ntk.ands[driver[v]];
      auto const r = ( self( self, g.fanin0.var() ) != g.fanin0.is_complemented() ) &&
                     ( self( self, g.fanin1.var() ) != g.fanin1.is_complemented() );
      memo[v] = r;
      return r;
    };
    out[m] = rec( rec, root );
  }
  return out;
}

/*! \brief Minimal BLIF model: `.names` covers and `.latch` lines, simulated per cycle. */
class blif_model
{
public:
  explicit blif_model( std::string const& text )
  {
    std::istringstream in( text );
    std::string line;
    cover* current = nullptr;
    while ( std::getline( in, line ) )
    {
      std::istringstream ls( line );
      std::vector<std::string> tok;
      for ( std::string t; ls >> t; )
        tok.push_back( t );
      if ( tok.empty() )
        continue;
      if ( tok[0] == ".inputs" )
        inputs.assign( tok.begin() + 1, tok.end() );
      else if ( tok[0] == ".outputs" )
        outputs.assign( tok.begin() + 1, tok.end() );
      else if ( tok[0] == ".latch" )
      {
        latches.push_back( { tok.at( 1 ), tok.at( 2 ), tok.size() > 5 && tok[5] == "1" } );
        current = nullptr;
      }
      else if ( tok[0] == ".names" )
      {
        covers.push_back( { { tok.begin() + 1, tok.end() - 1 }, tok.back(), {} } );
        current = &covers.back();
      }
      else if ( tok[0] == ".model" || tok[0] == ".end" )
        current = nullptr;
      else if ( current )
        current->rows.push_back( tok.size() == 1 ? std::string{} : tok[0] );
    }
  }

  struct cover
  {
    std::vector<std::string> ins;
    std::string out;
    std::vector<std::string> rows;
  };
  struct latch_line
  {
    std::string d, q;
    bool init;
  };

  std::vector<std::string> inputs, outputs;
  std::vector<latch_line> latches;
  std::vector<cover> covers;

  void reset()
  {
    state.clear();
    for ( auto const& l : latches )
      state[l.q] = l.init;
  }

  /*! \brief Evaluates all nets for the given primary input values (clock excluded). */
  std::map<std::string, bool> evaluate( std::map<std::string, bool> in )
  {
    for ( auto const& [q, v] : state )
      in[q] = v;
    std::map<std::string, cover const*> by_out;
    for ( auto const& c : covers )
      by_out[c.out] = &c;
    auto rec = [&]( auto&& self, std::string const& net ) -> bool {
      if ( auto it = in.find( net ); it != in.end() )
        return it->second;
      auto const* c = by_out.at( net );
      bool value = false;
      for ( auto const& row : c->rows )
      {
        bool match = true;
        for ( auto i = 0u; i < c->ins.size(); ++i )
          if ( row[i] != '-' && ( row[i] == '1' ) != self( self, c->ins[i] ) )
            match = false;
        value = value || match;
      }
      in[net] = value;
      return value;
    };
    for ( auto const& o : outputs )
      rec( rec, o );
    for ( auto const& l : latches )
      rec( rec, l.d );
    last = in;
    return in;
  }

  void clock()
  {
    for ( auto const& l : latches )
      state[l.q] = last.at( l.d );
  }

  std::map<std::string, bool> state;
  std::map<std::string, bool> last;
};

} // namespace ctxmap::testing
