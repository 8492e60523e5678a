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
  \file aiger.hpp
  \brief ASCII AIGER reader and writer
*/

#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "aig.hpp"

namespace ctxmap
{

/*! \brief Malformed input, carrying the 1-based line number (0 if unknown). */
class parse_error : public std::runtime_error
{
public:
  parse_error( std::size_t line, std::string const& message )
      : std::runtime_error( line ? fmt::format( "{} at line {}", message, line ) : message ), line_( line )
  {
  }

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

namespace detail
{

inline std::vector<std::string_view> split_lines( std::string_view text )
{
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while ( start < text.size() )
  {
    auto end = text.find( '\n', start );
    if ( end == std::string_view::npos )
      end = text.size();
    auto line = text.substr( start, end - start );
    if ( !line.empty() && line.back() == '\r' )
      line.remove_suffix( 1 );
    lines.push_back( line );
    start = end + 1;
  }
  return lines;
}

inline std::vector<std::string_view> split_tokens( std::string_view line )
{
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while ( i < line.size() )
  {
    while ( i < line.size() && ( line[i] == ' ' || line[i] == '\t' ) )
      ++i;
    auto const start = i;
    while ( i < line.size() && line[i] != ' ' && line[i] != '\t' )
      ++i;
    if ( i > start )
      tokens.push_back( line.substr( start, i - start ) );
  }
  return tokens;
}

inline uint32_t parse_uint( std::string_view token, std::size_t line )
{
  uint32_t value{};
  auto const [ptr, ec] = std::from_chars( token.data(), token.data() + token.size(), value );
  if ( ec != std::errc{} || ptr != token.data() + token.size() )
    throw parse_error( line, fmt::format( "expected unsigned integer, got '{}'", token ) );
  return value;
}

} // namespace detail

/*! \brief Parses an ASCII AIGER ("aag") document.
 *
 * Literal encodings are kept exactly as in the file.  AND definitions must
 * be topologically ordered (fanin variables below the gate variable).
 * Symbol lines (`i`, `l`, `o`) are read; the comment section is skipped.
 */
inline aig parse_aiger( std::string_view text )
{
  auto const lines = detail::split_lines( text );
  if ( lines.empty() )
    throw parse_error( 1, "empty document" );

  auto const header = detail::split_tokens( lines[0] );
  if ( header.size() != 6 || header[0] != "aag" )
    throw parse_error( 1, "malformed header, expected 'aag M I L O A'" );
  auto const M = detail::parse_uint( header[1], 1 );
  auto const I = detail::parse_uint( header[2], 1 );
  auto const L = detail::parse_uint( header[3], 1 );
  auto const O = detail::parse_uint( header[4], 1 );
  auto const A = detail::parse_uint( header[5], 1 );
  aig ntk;
  ntk.max_var = M;
  std::vector<uint8_t> defined( M + 1u, 0 );
  defined[0] = 1;

  std::size_t cursor = 1;
  auto next_line = [&]( char const* section ) {
    if ( cursor >= lines.size() || lines[cursor].empty() )
      throw parse_error( cursor + 1, fmt::format( "truncated {} section", section ) );
    auto const tokens = detail::split_tokens( lines[cursor] );
    ++cursor;
    return tokens;
  };
  auto read_literal = [&]( std::string_view token ) {
    auto const l = literal::from_encoded( detail::parse_uint( token, cursor ) );
    if ( l.var() > M )
      throw parse_error( cursor, fmt::format( "literal {} out of range (M={})", l.encoded(), M ) );
    return l;
  };
  auto define = [&]( literal l, char const* what ) {
    if ( l.is_complemented() )
      throw parse_error( cursor, fmt::format( "{} literal {} must be even", what, l.encoded() ) );
    if ( l.var() == 0 )
      throw parse_error( cursor, fmt::format( "{} cannot redefine the constant", what ) );
    if ( defined[l.var()] )
      throw parse_error( cursor, fmt::format( "duplicate definition of var {}", l.var() ) );
    defined[l.var()] = 1;
    return l.var();
  };

  for ( auto i = 0u; i < I; ++i )
  {
    auto const tokens = next_line( "input" );
    if ( tokens.size() != 1 )
      throw parse_error( cursor, "input line must hold exactly one literal" );
    ntk.inputs.push_back( define( read_literal( tokens[0] ), "input" ) );
  }

  std::vector<std::size_t> latch_lines;
  for ( auto i = 0u; i < L; ++i )
  {
    auto const tokens = next_line( "latch" );
    if ( tokens.size() != 2 && tokens.size() != 3 )
      throw parse_error( cursor, "latch line must hold 2 or 3 literals" );
    latch l;
    auto const cur = read_literal( tokens[0] );
    l.out = define( cur, "latch" );
    l.next = read_literal( tokens[1] );
    if ( tokens.size() == 3 )
    {
      auto const init = detail::parse_uint( tokens[2], cursor );
      if ( init == 0 )
        l.init = latch_init::zero;
      else if ( init == 1 )
        l.init = latch_init::one;
      else if ( init == cur.encoded() )
        l.init = latch_init::undefined;
      else
        throw parse_error( cursor, fmt::format( "invalid latch init {}", init ) );
    }
    ntk.latches.push_back( l );
    latch_lines.push_back( cursor );
  }

  std::vector<std::size_t> output_lines;
  for ( auto i = 0u; i < O; ++i )
  {
    auto const tokens = next_line( "output" );
    if ( tokens.size() != 1 )
      throw parse_error( cursor, "output line must hold exactly one literal" );
    ntk.outputs.push_back( read_literal( tokens[0] ) );
    output_lines.push_back( cursor );
  }

  std::vector<std::size_t> and_lines;
  for ( auto i = 0u; i < A; ++i )
  {
    auto const tokens = next_line( "AND" );
    if ( tokens.size() != 3 )
      throw parse_error( cursor, "AND line must hold exactly three literals" );
    and_gate g;
    g.out = define( read_literal( tokens[0] ), "AND" );
    g.fanin0 = read_literal( tokens[1] );
    g.fanin1 = read_literal( tokens[2] );
    if ( g.fanin0.var() >= g.out || g.fanin1.var() >= g.out )
      throw parse_error( cursor, fmt::format( "non-topological AND at var {}", g.out ) );
    if ( !defined[g.fanin0.var()] || !defined[g.fanin1.var()] )
      throw parse_error( cursor, fmt::format( "dangling literal in AND at var {}", g.out ) );
    ntk.ands.push_back( g );
    and_lines.push_back( cursor );
  }

  for ( auto i = 0u; i < L; ++i )
    if ( !defined[ntk.latches[i].next.var()] )
      throw parse_error( latch_lines[i], fmt::format( "dangling literal {}", ntk.latches[i].next.encoded() ) );
  for ( auto i = 0u; i < O; ++i )
    if ( !defined[ntk.outputs[i].var()] )
      throw parse_error( output_lines[i], fmt::format( "dangling literal {}", ntk.outputs[i].encoded() ) );

  /* symbol table, then optional comment section */
  for ( ; cursor < lines.size(); ++cursor )
  {
    auto const line = lines[cursor];
    if ( line.empty() )
      continue;
    if ( line == "c" || line.rfind( "c ", 0 ) == 0 )
      break;
    auto const space = line.find( ' ' );
    if ( space == std::string_view::npos || space < 2 )
      throw parse_error( cursor + 1, "malformed symbol line" );
    auto const index = detail::parse_uint( line.substr( 1, space - 1 ), cursor + 1 );
    std::string name( line.substr( space + 1 ) );
    auto assign = [&]( std::vector<std::string>& names, std::size_t count ) {
      if ( index >= count )
        throw parse_error( cursor + 1, fmt::format( "symbol index {} out of range", index ) );
      names.resize( count );
      names[index] = std::move( name );
    };
    switch ( line[0] )
    {
    case 'i':
      assign( ntk.input_names, I );
      break;
    case 'l':
      assign( ntk.latch_names, L );
      break;
    case 'o':
      assign( ntk.output_names, O );
      break;
    default:
      throw parse_error( cursor + 1, "malformed symbol line" );
    }
  }

  return ntk;
}

inline aig read_aiger_file( std::string const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw std::runtime_error( fmt::format( "cannot open '{}'", path ) );
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_aiger( buffer.str() );
}

/*! \brief Serializes to ASCII AIGER.
 *
 * Latch init 0 is written in the short two-literal form.
 */
inline std::string write_aiger( aig const& ntk )
{
  std::string out = fmt::format( "aag {} {} {} {} {}\n", ntk.max_var, ntk.inputs.size(), ntk.latches.size(),
                                 ntk.outputs.size(), ntk.ands.size() );
  for ( auto v : ntk.inputs )
    out += fmt::format( "{}\n", 2u * v );
  for ( auto const& l : ntk.latches )
  {
    switch ( l.init )
    {
    case latch_init::zero:
      out += fmt::format( "{} {}\n", 2u * l.out, l.next.encoded() );
      break;
    case latch_init::one:
      out += fmt::format( "{} {} 1\n", 2u * l.out, l.next.encoded() );
      break;
    case latch_init::undefined:
      out += fmt::format( "{} {} {}\n", 2u * l.out, l.next.encoded(), 2u * l.out );
      break;
    }
  }
  for ( auto o : ntk.outputs )
    out += fmt::format( "{}\n", o.encoded() );
  for ( auto const& g : ntk.ands )
    out += fmt::format( "{} {} {}\n", 2u * g.out, g.fanin0.encoded(), g.fanin1.encoded() );

  auto symbols = [&]( char prefix, std::vector<std::string> const& names ) {
    for ( auto i = 0u; i < names.size(); ++i )
      if ( !names[i].empty() )
        out += fmt::format( "{}{} {}\n", prefix, i, names[i] );
  };
  symbols( 'i', ntk.input_names );
  symbols( 'l', ntk.latch_names );
  symbols( 'o', ntk.output_names );
  return out;
}

} // namespace ctxmap
