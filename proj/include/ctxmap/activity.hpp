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
  \file activity.hpp
  \brief Seeded toggle-count simulation and activity scores

  Toggle semantics (zero delay, no glitches): the initial sample holds the
  latches at their init values with the first input vector applied.  Cycle
  `i` clocks the latches from sample `i-1` and applies input vector `i-1`.
  A net toggles in cycle `i` when its sample differs from sample `i-1`.

  Random vectors come from `std::mt19937_64` seeded with the configured
  seed.  Each cycle draws `ceil(I / 64)` words; input `i` takes bit
  `i % 64` of draw `i / 64`.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "aig.hpp"
#include "aiger.hpp"
#include "simulation.hpp"

namespace ctxmap
{

/*! \brief Input stimulus: seeded random bits or explicit rows of `0`/`1`. */
class vector_source
{
public:
  static vector_source random( uint64_t seed, uint32_t cycles )
  {
    if ( cycles == 0u )
      throw std::invalid_argument( "vector source needs at least one cycle" );
    vector_source src;
    src.seed_ = seed;
    src.cycles_ = cycles;
    return src;
  }

  static vector_source from_rows( std::vector<std::string> rows )
  {
    while ( !rows.empty() && rows.back().empty() )
      rows.pop_back();
    if ( rows.empty() )
      throw std::invalid_argument( "vector source needs at least one cycle" );
    for ( auto i = 0u; i < rows.size(); ++i )
    {
      if ( !rows[i].empty() && rows[i].back() == '\r' )
        rows[i].pop_back();
      if ( rows[i].find_first_not_of( "01" ) != std::string::npos )
        throw parse_error( i + 1u, "vector row must contain only '0' and '1'" );
    }
    vector_source src;
    src.cycles_ = static_cast<uint32_t>( rows.size() );
    src.rows_ = std::move( rows );
    return src;
  }

  static vector_source from_file( std::string const& path )
  {
    std::ifstream in( path );
    if ( !in )
      throw std::runtime_error( fmt::format( "cannot open '{}'", path ) );
    std::vector<std::string> rows;
    for ( std::string line; std::getline( in, line ); )
      rows.push_back( line );
    return from_rows( std::move( rows ) );
  }

  bool is_random() const { return rows_.empty(); }
  uint32_t cycles() const { return cycles_; }
  uint64_t seed() const { return seed_; }

  /*! \brief Calls `fn( std::span<uint8_t const> )` once per cycle with one 0/1 entry per input. */
  template<class Fn>
  void generate( std::size_t num_inputs, Fn&& fn ) const
  {
    std::vector<uint8_t> bits( num_inputs, 0u );
    if ( is_random() )
    {
      std::mt19937_64 rng( seed_ );
      for ( auto c = 0u; c < cycles_; ++c )
      {
        uint64_t word = 0;
        for ( auto i = 0u; i < num_inputs; ++i )
        {
          if ( i % 64u == 0u )
            word = rng();
          bits[i] = ( word >> ( i % 64u ) ) & 1u;
        }
        fn( std::span<uint8_t const>( bits ) );
      }
      return;
    }
    for ( auto r = 0u; r < rows_.size(); ++r )
    {
      if ( rows_[r].size() != num_inputs )
        throw parse_error( r + 1u, fmt::format( "vector row has {} bits, expected {}", rows_[r].size(), num_inputs ) );
      for ( auto i = 0u; i < num_inputs; ++i )
        bits[i] = rows_[r][i] == '1';
      fn( std::span<uint8_t const>( bits ) );
    }
  }

private:
  vector_source() = default;

  uint64_t seed_{ 0 };
  uint32_t cycles_{ 0 };
  std::vector<std::string> rows_;
};

/*! \brief Per-net toggle counters. */
struct activity_map
{
  std::vector<uint32_t> toggles;
  uint32_t cycles{ 0 };
  uint32_t s_max{ 0 };

  double rate( var_t v ) const { return cycles ? static_cast<double>( toggles[v] ) / cycles : 0.0; }
};

/* maximum over non-constant vars */
inline uint32_t max_toggles( std::span<uint32_t const> toggles )
{
  return toggles.size() > 1u ? *std::max_element( toggles.begin() + 1, toggles.end() ) : 0u;
}

/*! \brief Incremental single-lane toggle counter.
 *
 * Feeding a vector stream in consecutive blocks yields the same counts as
 * feeding it at once, since the last sample is carried across calls.
 */
template<class Ntk>
class toggle_counter
{
public:
  explicit toggle_counter( Ntk const& ntk )
      : ntk_( ntk ), sim_( ntk, 1u ), words_( ntk.inputs.size(), 0u ), previous_( ntk.num_vars(), 0u ),
        toggles_( ntk.num_vars(), 0u )
  {
  }

  void step( std::span<uint8_t const> bits )
  {
    for ( auto i = 0u; i < words_.size(); ++i )
      words_[i] = bits[i] & 1u;
    if ( !started_ )
    {
      auto const initial = sim_.evaluate( words_ );
      std::copy( initial.begin(), initial.end(), previous_.begin() );
      started_ = true;
    }
    sim_.clock();
    auto const current = sim_.evaluate( words_ );
    for ( auto v = 0u; v < current.size(); ++v )
    {
      toggles_[v] += static_cast<uint32_t>( ( current[v] ^ previous_[v] ) & 1u );
      previous_[v] = current[v];
    }
    ++cycles_;
  }

  activity_map result() const
  {
    activity_map act;
    act.toggles = toggles_;
    act.cycles = cycles_;
    act.s_max = max_toggles( act.toggles );
    return act;
  }

private:
  Ntk const& ntk_;
  sequential_simulator<Ntk> sim_;
  std::vector<uint64_t> words_;
  std::vector<uint64_t> previous_;
  std::vector<uint32_t> toggles_;
  uint32_t cycles_{ 0 };
  bool started_{ false };
};

/*! \brief Counts per-net transitions over the whole vector stream. */
template<class Ntk>
activity_map simulate_toggles( Ntk const& ntk, vector_source const& src )
{
  toggle_counter<Ntk> counter( ntk );
  src.generate( ntk.inputs.size(), [&]( std::span<uint8_t const> bits ) { counter.step( bits ); } );
  return counter.result();
}

struct activity_score_table
{
  std::vector<uint32_t> score;
  uint32_t s_max{ 0 };
};

/*! \brief Raw toggle counts as scores; s_max is the maximum over all non-constant nets (no explicit clock net exists). */
inline activity_score_table activity_scores( activity_map const& act )
{
  return { act.toggles, max_toggles( act.toggles ) };
}

/*! \brief CSV with header `var,role,toggles,cycles`, one row per defined var in ascending order. */
inline std::string export_activity( activity_map const& act, aig const& ntk )
{
  auto const kinds = node_kinds( ntk );
  std::string csv = "var,role,toggles,cycles\n";
  for ( auto v = 1u; v < kinds.size(); ++v )
  {
    char const* role = nullptr;
    switch ( kinds[v] )
    {
    case node_kind::input:
      role = "input";
      break;
    case node_kind::latch:
      role = "latch";
      break;
    case node_kind::and_gate:
      role = "and";
      break;
    default:
      continue;
    }
    csv += fmt::format( "{},{},{},{}\n", v, role, v < act.toggles.size() ? act.toggles[v] : 0u, act.cycles );
  }
  return csv;
}

/*! \brief Reads an activity CSV back against the network it was exported for. */
inline activity_map import_activity( std::string_view csv, aig const& ntk )
{
  auto const lines = detail::split_lines( csv );
  if ( lines.empty() || lines[0] != "var,role,toggles,cycles" )
    throw parse_error( 1, "activity CSV header must be 'var,role,toggles,cycles'" );
  auto const kinds = node_kinds( ntk );
  activity_map act;
  act.toggles.assign( ntk.num_vars(), 0u );
  bool have_cycles = false;
  for ( auto i = 1u; i < lines.size(); ++i )
  {
    if ( lines[i].empty() )
      continue;
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for ( ;; )
    {
      auto const comma = lines[i].find( ',', start );
      fields.push_back( lines[i].substr( start, comma == std::string_view::npos ? std::string_view::npos : comma - start ) );
      if ( comma == std::string_view::npos )
        break;
      start = comma + 1;
    }
    if ( fields.size() != 4u )
      throw parse_error( i + 1u, "activity row must have 4 fields" );
    auto const v = detail::parse_uint( fields[0], i + 1u );
    if ( v == 0u || v >= kinds.size() || kinds[v] == node_kind::none )
      throw parse_error( i + 1u, fmt::format( "activity row for unknown var {}", v ) );
    auto const cycles = detail::parse_uint( fields[3], i + 1u );
    if ( have_cycles && cycles != act.cycles )
      throw parse_error( i + 1u, "inconsistent cycle count" );
    act.cycles = cycles;
    have_cycles = true;
    act.toggles[v] = detail::parse_uint( fields[2], i + 1u );
    if ( act.toggles[v] > act.cycles )
      throw parse_error( i + 1u, "toggle count exceeds cycle count" );
  }
  if ( !have_cycles )
    throw parse_error( 0, "activity CSV has no rows" );
  act.s_max = max_toggles( act.toggles );
  return act;
}

} // namespace ctxmap
