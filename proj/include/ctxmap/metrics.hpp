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
  \file metrics.hpp
  \brief Power/area/delay records, AD and PD products, and comparison tables

  Delta conventions: for power, delay and PD a positive delta is an
  improvement, `(base - variant) / base * 100`; for area and AD a positive
  delta is an overhead, `(variant - base) / base * 100`.
*/

#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "activity.hpp"
#include "aiger.hpp"
#include "mapping.hpp"

namespace ctxmap
{

enum class record_source
{
  /*! \brief Desk-scale proxies: LUT count, unit LUT depth, toggle-based power proxy. */
  internal,
  /*! \brief Published or vendor-tool numbers (watts, LUTs, ns). */
  external
};

struct design_record
{
  std::string name;
  std::string variant;
  double power{ 0.0 };
  double area{ 0.0 };
  double delay{ 0.0 };
  record_source source{ record_source::internal };
};

struct products
{
  double ad{ 0.0 };
  double pd{ 0.0 };
};

inline products compute_products( design_record const& rec )
{
  return { rec.area * rec.delay, rec.power * rec.delay };
}

struct comparison_row
{
  design_record baseline;
  design_record variant;
  double delta_p{ 0.0 };
  double delta_a{ 0.0 };
  double delta_d{ 0.0 };
  double ad_base{ 0.0 };
  double ad_var{ 0.0 };
  double delta_ad{ 0.0 };
  double pd_base{ 0.0 };
  double pd_var{ 0.0 };
  double delta_pd{ 0.0 };
};

namespace detail
{

inline double percent_change( double from, double to )
{
  if ( from == 0.0 )
    return to == 0.0 ? 0.0 : std::numeric_limits<double>::quiet_NaN();
  return ( to - from ) / from * 100.0;
}

} // namespace detail

inline comparison_row compare( design_record const& baseline, design_record const& variant )
{
  if ( baseline.source != variant.source )
    throw std::invalid_argument( fmt::format( "cannot compare internal and external records ('{}' vs '{}')", baseline.name, variant.name ) );
  comparison_row row{ baseline, variant };
  auto const pb = compute_products( baseline );
  auto const pv = compute_products( variant );
  row.ad_base = pb.ad;
  row.ad_var = pv.ad;
  row.pd_base = pb.pd;
  row.pd_var = pv.pd;
  row.delta_p = -detail::percent_change( baseline.power, variant.power );
  row.delta_a = detail::percent_change( baseline.area, variant.area );
  row.delta_d = -detail::percent_change( baseline.delay, variant.delay );
  row.delta_ad = detail::percent_change( pb.ad, pv.ad );
  row.delta_pd = -detail::percent_change( pb.pd, pv.pd );
  /* avoid printing -0 */
  for ( auto* d : { &row.delta_p, &row.delta_a, &row.delta_d, &row.delta_ad, &row.delta_pd } )
    if ( *d == 0.0 )
      *d = 0.0;
  return row;
}

/*! \brief Per-net power contributions `toggles / cycles * (1 + fanout)`, indexed by var. */
inline std::vector<double> net_power( mapping_solution const& sol, activity_map const& act )
{
  if ( act.toggles.size() != sol.num_vars() )
    throw std::invalid_argument( fmt::format( "activity covers {} nets, mapping has {}", act.toggles.size(), sol.num_vars() ) );
  auto const fanout = fanout_counts( sol );
  std::vector<double> contribution( sol.num_vars(), 0.0 );
  auto add = [&]( var_t v ) { contribution[v] = act.rate( v ) * ( 1.0 + fanout[v] ); };
  for ( auto v : sol.inputs )
    add( v );
  for ( auto const& l : sol.latches )
    add( l.out );
  for ( auto const& l : sol.luts )
    add( l.root );
  return contribution;
}

/*! \brief Switching power proxy of a mapped design; `act` must come from simulating `sol`. */
inline double power_proxy( mapping_solution const& sol, activity_map const& act )
{
  double total = 0.0;
  for ( auto c : net_power( sol, act ) )
    total += c;
  return total;
}

/*! \brief Internal record of a mapped design simulated on `vectors`. */
inline design_record make_record( std::string name, std::string variant, mapping_solution const& sol, vector_source const& vectors )
{
  design_record rec;
  rec.name = std::move( name );
  rec.variant = std::move( variant );
  rec.power = power_proxy( sol, simulate_toggles( sol, vectors ) );
  rec.area = sol.area();
  rec.delay = sol.depth;
  rec.source = record_source::internal;
  return rec;
}

namespace detail
{

inline std::vector<std::string> split_csv( std::string_view line )
{
  std::vector<std::string> fields;
  std::size_t start = 0;
  for ( ;; )
  {
    auto const comma = line.find( ',', start );
    auto field = line.substr( start, comma == std::string_view::npos ? std::string_view::npos : comma - start );
    while ( !field.empty() && ( field.front() == ' ' || field.front() == '\t' ) )
      field.remove_prefix( 1 );
    while ( !field.empty() && ( field.back() == ' ' || field.back() == '\t' ) )
      field.remove_suffix( 1 );
    fields.emplace_back( field );
    if ( comma == std::string_view::npos )
      break;
    start = comma + 1;
  }
  return fields;
}

inline double parse_double( std::string const& s, std::size_t line )
{
  try
  {
    std::size_t used = 0;
    auto const v = std::stod( s, &used );
    if ( used != s.size() )
      throw std::invalid_argument( s );
    return v;
  }
  catch ( std::exception const& )
  {
    throw parse_error( line, fmt::format( "expected a number, got '{}'", s ) );
  }
}

} // namespace detail

/*! \brief Reads records from CSV with columns `name, variant, power, area, delay` (any order, extra columns ignored).
 *
 * A `source` column selects internal/external per row; without it every
 * row is external.  Lines starting with `#` are skipped.
 */
inline std::vector<design_record> read_records( std::string_view csv )
{
  std::vector<design_record> records;
  std::map<std::string, std::size_t> column;
  auto const lines = detail::split_lines( csv );
  bool have_header = false;
  for ( auto i = 0u; i < lines.size(); ++i )
  {
    if ( lines[i].empty() || lines[i].front() == '#' )
      continue;
    auto const fields = detail::split_csv( lines[i] );
    if ( !have_header )
    {
      for ( auto c = 0u; c < fields.size(); ++c )
        column[fields[c]] = c;
      for ( auto required : { "name", "variant", "power", "area", "delay" } )
        if ( !column.count( required ) )
          throw parse_error( i + 1u, fmt::format( "record CSV lacks column '{}'", required ) );
      have_header = true;
      continue;
    }
    if ( fields.size() < column.size() )
      throw parse_error( i + 1u, fmt::format( "expected {} fields, got {}", column.size(), fields.size() ) );
    design_record rec;
    rec.name = fields[column["name"]];
    rec.variant = fields[column["variant"]];
    rec.power = detail::parse_double( fields[column["power"]], i + 1u );
    rec.area = detail::parse_double( fields[column["area"]], i + 1u );
    rec.delay = detail::parse_double( fields[column["delay"]], i + 1u );
    rec.source = record_source::external;
    if ( auto it = column.find( "source" ); it != column.end() )
    {
      auto const& s = fields[it->second];
      if ( s == "internal" )
        rec.source = record_source::internal;
      else if ( s != "external" )
        throw parse_error( i + 1u, fmt::format( "unknown record source '{}'", s ) );
    }
    records.push_back( std::move( rec ) );
  }
  return records;
}

inline std::vector<design_record> read_records_file( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
    throw std::runtime_error( fmt::format( "cannot open '{}'", path ) );
  std::stringstream buffer;
  buffer << in.rdbuf();
  return read_records( buffer.str() );
}

inline std::string record_csv_header() { return "name,variant,power,area,delay,AD,PD,source\n"; }

inline std::string to_csv( design_record const& rec )
{
  auto const p = compute_products( rec );
  return fmt::format( "{},{},{:.6f},{:.0f},{:.2f},{:.2f},{:.6f},{}\n", rec.name, rec.variant, rec.power, rec.area, rec.delay, p.ad, p.pd,
                      rec.source == record_source::internal ? "internal" : "external" );
}

/*! \brief Pairs records of the same design by variant label. */
inline std::vector<comparison_row> compare_variants( std::vector<design_record> const& records, std::string const& baseline,
                                                     std::string const& variant )
{
  std::vector<comparison_row> rows;
  std::vector<std::string> order;
  std::map<std::string, design_record const*> base, var;
  for ( auto const& r : records )
  {
    if ( r.variant == baseline )
    {
      if ( !base.count( r.name ) && !var.count( r.name ) )
        order.push_back( r.name );
      base[r.name] = &r;
    }
    else if ( r.variant == variant )
    {
      if ( !base.count( r.name ) && !var.count( r.name ) )
        order.push_back( r.name );
      var[r.name] = &r;
    }
  }
  for ( auto const& name : order )
  {
    if ( !base.count( name ) || !var.count( name ) )
      throw std::invalid_argument( fmt::format( "design '{}' lacks variant '{}'", name, base.count( name ) ? variant : baseline ) );
    rows.push_back( compare( *base[name], *var[name] ) );
  }
  return rows;
}

/*! \brief Report CSV: a baseline row (deltas empty) and a variant row per comparison. */
inline std::string report_csv( std::vector<comparison_row> const& rows )
{
  std::string out = "name,variant,power,area,delay,AD,PD,deltaP,deltaA,deltaD,deltaAD,deltaPD\n";
  for ( auto const& r : rows )
  {
    out += fmt::format( "{},{},{:.6g},{:.6g},{:.6g},{:.6g},{:.6g},,,,,\n", r.baseline.name, r.baseline.variant, r.baseline.power,
                        r.baseline.area, r.baseline.delay, r.ad_base, r.pd_base );
    out += fmt::format( "{},{},{:.6g},{:.6g},{:.6g},{:.6g},{:.6g},{:.2f},{:.2f},{:.2f},{:.2f},{:.2f}\n", r.variant.name, r.variant.variant,
                        r.variant.power, r.variant.area, r.variant.delay, r.ad_var, r.pd_var, r.delta_p, r.delta_a, r.delta_d, r.delta_ad,
                        r.delta_pd );
  }
  return out;
}

/*! \brief Markdown table; column groups follow Power, Area, Delay, AD, PD. */
inline std::string report_markdown( std::vector<comparison_row> const& rows )
{
  if ( rows.empty() )
    return {};
  auto const& b = rows.front().baseline.variant;
  auto const& v = rows.front().variant.variant;
  std::string out = fmt::format( "| Benchmark | Power {0} | Power {1} | ΔP (%) | Area {0} | Area {1} | ΔA (%) | Delay {0} | Delay {1} | ΔD (%) "
                                 "| AD {0} | AD {1} | ΔAD (%) | PD {0} | PD {1} | ΔPD (%) |\n",
                                 b, v );
  out += "|---|";
  for ( auto i = 0; i < 15; ++i )
    out += "---:|";
  out += "\n";
  for ( auto const& r : rows )
  {
    out += fmt::format( "| {} | {:.4g} | {:.4g} | {:.1f} | {:.0f} | {:.0f} | {:.1f} | {:.2f} | {:.2f} | {:.1f} | {:.0f} | {:.0f} | {:.1f} | {:.4g} "
                        "| {:.4g} | {:.1f} |\n",
                        r.baseline.name, r.baseline.power, r.variant.power, r.delta_p, r.baseline.area, r.variant.area, r.delta_a,
                        r.baseline.delay, r.variant.delay, r.delta_d, r.ad_base, r.ad_var, r.delta_ad, r.pd_base, r.pd_var, r.delta_pd );
  }
  return out;
}

} // namespace ctxmap
