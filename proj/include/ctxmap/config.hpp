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
  \file config.hpp
  \brief key=value run configuration
*/

#pragma once

#include <array>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <fmt/format.h>

#include "aiger.hpp"
#include "ctxsplit.hpp"
#include "flow.hpp"

namespace ctxmap
{

class config_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

enum class config_origin
{
  default_value,
  file,
  flag
};

inline char const* to_string( config_origin o )
{
  switch ( o )
  {
  case config_origin::file:
    return "file";
  case config_origin::flag:
    return "flag";
  default:
    return "default";
  }
}

struct config
{
  uint32_t lut_size{ 6u };
  uint32_t guard_band{ 2u };
  double alpha_lut{ 1.0 };
  double beta_sens{ 1.0 };
  sens_mode sensitivity{ sens_mode::excess };
  double lambda_act{ 1.0 };
  uint64_t seed{ 1u };
  uint64_t cycles{ 1024u };
  uint32_t max_cuts_per_node{ 8u };

  /*! \brief Origin of each key, for the echoed header. */
  std::map<std::string, config_origin> origin;

  config()
  {
    for ( auto k : keys() )
      origin[std::string( k )] = config_origin::default_value;
  }

  static constexpr std::array<std::string_view, 9> keys()
  {
    return { "lutSize", "guardBand", "alphaLut", "betaSens", "sensMode", "lambdaAct", "seed", "cycles", "maxCutsPerNode" };
  }

  /*! \brief Assigns one key from its textual value. */
  void set( std::string_view key, std::string_view value, config_origin from );

  /*! \brief Rejects values outside the supported ranges. */
  void check() const
  {
    if ( lut_size < 2u || lut_size > 8u )
      throw config_error( fmt::format( "lutSize {} outside [2, 8]", lut_size ) );
    if ( cycles == 0u )
      throw config_error( "cycles must be positive" );
    if ( max_cuts_per_node < 2u )
      throw config_error( fmt::format( "maxCutsPerNode {} below 2", max_cuts_per_node ) );
    if ( alpha_lut < 0.0 || beta_sens < 0.0 || lambda_act < 0.0 )
      throw config_error( "alphaLut, betaSens and lambdaAct must be non-negative" );
  }

  split_params split() const
  {
    split_params ps;
    ps.lut_size = lut_size;
    ps.guard_band = guard_band;
    ps.alpha_lut = alpha_lut;
    ps.beta_sens = beta_sens;
    ps.sensitivity = sensitivity;
    return ps;
  }

  flow_params flow( split_policy policy ) const
  {
    flow_params ps;
    ps.split = split();
    ps.cut_limit = max_cuts_per_node;
    ps.policy = policy;
    ps.mapping = { policy == split_policy::none ? mapping_mode::baseline : mapping_mode::activity, lambda_act };
    ps.equivalence.seed = seed;
    return ps;
  }

  std::string value_of( std::string_view key ) const
  {
    if ( key == "lutSize" )
      return fmt::format( "{}", lut_size );
    if ( key == "guardBand" )
      return fmt::format( "{}", guard_band );
    if ( key == "alphaLut" )
      return fmt::format( "{}", alpha_lut );
    if ( key == "betaSens" )
      return fmt::format( "{}", beta_sens );
    if ( key == "sensMode" )
      return sensitivity == sens_mode::excess ? "excess" : "literal";
    if ( key == "lambdaAct" )
      return fmt::format( "{}", lambda_act );
    if ( key == "seed" )
      return fmt::format( "{}", seed );
    if ( key == "cycles" )
      return fmt::format( "{}", cycles );
    return fmt::format( "{}", max_cuts_per_node );
  }

  /*! \brief One comment line listing every resolved key with its origin. */
  std::string header() const
  {
    std::string out = "# config";
    for ( auto k : keys() )
      out += fmt::format( " {}={}({})", k, value_of( k ), to_string( origin.at( std::string( k ) ) ) );
    return out + "\n";
  }
};

namespace detail
{

template<class T>
T parse_config_number( std::string_view key, std::string_view value )
{
  T out{};
  auto const [ptr, ec] = std::from_chars( value.data(), value.data() + value.size(), out );
  if ( ec != std::errc{} || ptr != value.data() + value.size() || value.empty() )
    throw config_error( fmt::format( "cannot parse value '{}' for {}", value, key ) );
  return out;
}

inline std::string_view trim( std::string_view s )
{
  auto const b = s.find_first_not_of( " \t\r" );
  if ( b == std::string_view::npos )
    return {};
  auto const e = s.find_last_not_of( " \t\r" );
  return s.substr( b, e - b + 1 );
}

} // namespace detail

inline void config::set( std::string_view key, std::string_view value, config_origin from )
{
  using detail::parse_config_number;
  if ( key == "lutSize" )
    lut_size = parse_config_number<uint32_t>( key, value );
  else if ( key == "guardBand" )
    guard_band = parse_config_number<uint32_t>( key, value );
  else if ( key == "alphaLut" )
    alpha_lut = parse_config_number<double>( key, value );
  else if ( key == "betaSens" )
    beta_sens = parse_config_number<double>( key, value );
  else if ( key == "sensMode" )
  {
    if ( value == "excess" )
      sensitivity = sens_mode::excess;
    else if ( value == "literal" )
      sensitivity = sens_mode::literal;
    else
      throw config_error( fmt::format( "unknown sensMode '{}'", value ) );
  }
  else if ( key == "lambdaAct" )
    lambda_act = parse_config_number<double>( key, value );
  else if ( key == "seed" )
    seed = parse_config_number<uint64_t>( key, value );
  else if ( key == "cycles" )
    cycles = parse_config_number<uint64_t>( key, value );
  else if ( key == "maxCutsPerNode" )
    max_cuts_per_node = parse_config_number<uint32_t>( key, value );
  else
    throw config_error( fmt::format( "unknown config key '{}'", key ) );
  origin[std::string( key )] = from;
}

/*! \brief Parses key=value lines on top of `base`; `#` starts a comment. */
inline config parse_config( std::string_view text, config base = {} )
{
  std::size_t line_no = 0;
  for ( auto line : detail::split_lines( text ) )
  {
    ++line_no;
    if ( auto const hash = line.find( '#' ); hash != std::string_view::npos )
      line = line.substr( 0, hash );
    line = detail::trim( line );
    if ( line.empty() )
      continue;
    auto const eq = line.find( '=' );
    if ( eq == std::string_view::npos )
      throw config_error( fmt::format( "expected key=value at line {}", line_no ) );
    base.set( detail::trim( line.substr( 0, eq ) ), detail::trim( line.substr( eq + 1 ) ), config_origin::file );
  }
  base.check();
  return base;
}

inline config load_config( std::string const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw config_error( fmt::format( "cannot open config file '{}'", path ) );
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config( ss.str() );
}

} // namespace ctxmap
