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
  \file flow.hpp
  \brief Simulate, split, map and check pipeline

  The flow maps the source network once, evaluates every LUT cut of that
  preliminary cover with the split heuristic (in topological order), applies
  all accepted splits in one rebuild, sweeps dead logic, re-simulates, and
  maps again with the split roots kept as LUT outputs.  The final cover is
  checked for equivalence against the unmodified source.
*/

#pragma once

#include <cstdint>
#include <future>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "activity.hpp"
#include "aig.hpp"
#include "ctxsplit.hpp"
#include "cuts.hpp"
#include "equivalence.hpp"
#include "mapping.hpp"
#include "metrics.hpp"
#include "split.hpp"

namespace ctxmap
{

enum class split_policy
{
  /*! \brief No splits (baseline flow). */
  none,
  /*! \brief Split only when the best score is positive. */
  contextual,
  /*! \brief Split every eligible cut on its best-scoring position, whatever the score. */
  always
};

struct flow_params
{
  split_params split{};
  uint32_t cut_limit{ 8u };
  split_policy policy{ split_policy::contextual };
  map_params mapping{ mapping_mode::activity, 1.0 };
  equivalence_params equivalence{};
  bool check_equivalence{ true };
};

/*! \brief Flow parameters of the plain depth-oriented baseline. */
inline flow_params baseline_flow( flow_params ps )
{
  ps.policy = split_policy::none;
  ps.mapping.mode = mapping_mode::baseline;
  return ps;
}

/* cones up to this depth are reported as shallow */
inline constexpr uint32_t shallow_cone_limit = 64u;

struct trace_row
{
  var_t root{ 0 };
  uint32_t depth{ 0 };
  bool sequential{ false };
  std::vector<var_t> leaves;
  truth_table function;
  split_decision decision;
  /*! \brief The network was rewritten at this root. */
  bool modified{ false };
};

struct flow_result
{
  aig network;
  std::vector<var_t> boundaries;
  mapping_solution mapping;
  std::vector<trace_row> trace;
  uint32_t splits_applied{ 0 };
  equivalence_result equivalence;
};

/*! \brief Runs the flow on `source`.
 *
 * `decision_activity` holds the toggle counts used for split decisions
 * (and for the preliminary cover in activity mode); `vectors` drives the
 * re-simulation of the rewritten network.
 */
inline flow_result run_flow( aig const& source, activity_map const& decision_activity, vector_source const& vectors,
                             flow_params const& ps )
{
  cut_enumeration_params const cps{ ps.split.lut_size, ps.cut_limit };
  if ( decision_activity.toggles.size() != source.num_vars() )
    throw std::invalid_argument( "activity map does not match the source network" );

  flow_result res;
  if ( ps.policy == split_policy::none )
  {
    res.network = source;
  }
  else
  {
    auto const prelim = map_network( source, enumerate_cuts( source, cps ), ps.mapping, &decision_activity );
    auto const ctx = analyze_cones( source );

    std::vector<split_request> requests;
    for ( auto const& l : prelim.luts )
    {
      if ( l.leaves.size() < 2u )
        continue;
      trace_row row;
      auto const c = make_cut( source, ctx, l.root, l.leaves );
      row.root = c.root;
      row.depth = c.depth;
      row.sequential = c.sequential;
      row.leaves = c.leaves;
      row.function = c.function;
      row.decision = evaluate_split( c, leaf_scores( c, decision_activity ), decision_activity.s_max, ps.split );
      if ( ps.policy == split_policy::always && row.decision.best_position )
      {
        row.decision.applied = true;
        row.decision.reason = split_reason::applied;
      }
      if ( row.decision.applied )
      {
        requests.push_back( { c.root, c.leaves, c.function, *row.decision.best_position } );
        row.modified = true;
      }
      res.trace.push_back( std::move( row ) );
    }

    res.splits_applied = static_cast<uint32_t>( requests.size() );
    if ( requests.empty() )
    {
      res.network = source;
    }
    else
    {
      auto split = apply_splits( source, requests );
      auto swept = sweep( split.network, split.boundaries );
      res.network = std::move( swept.network );
      res.boundaries = std::move( swept.boundaries );
    }
  }

  auto const cuts = enumerate_cuts( res.network, cps, res.boundaries );
  if ( ps.mapping.mode == mapping_mode::activity )
  {
    auto const act = res.network.num_vars() == source.num_vars() && res.splits_applied == 0u
                         ? decision_activity
                         : simulate_toggles( res.network, vectors );
    res.mapping = map_network( res.network, cuts, ps.mapping, &act );
  }
  else
  {
    res.mapping = map_network( res.network, cuts, ps.mapping );
  }

  if ( ps.check_equivalence )
    res.equivalence = check_equivalence( source, res.mapping, ps.equivalence );
  return res;
}

struct regime_summary
{
  uint32_t shallow_evaluated{ 0 };
  uint32_t shallow_applied{ 0 };
  uint32_t deep_evaluated{ 0 };
  uint32_t deep_applied{ 0 };
};

/*! \brief Histogram of evaluated and applied cuts over shallow (d <= 64) and deep cones. */
inline regime_summary summarize_regimes( std::span<trace_row const> trace )
{
  regime_summary s;
  for ( auto const& row : trace )
  {
    auto const deep = row.depth > shallow_cone_limit;
    ( deep ? s.deep_evaluated : s.shallow_evaluated ) += 1u;
    if ( row.modified )
      ( deep ? s.deep_applied : s.shallow_applied ) += 1u;
  }
  return s;
}

/*! \brief Decision trace CSV, one row per evaluated cut.
 *
 * `candidates` lists `pos:pi:dN:Plut:Psens:score` entries separated by `;`.
 */
inline std::string trace_csv( std::span<trace_row const> trace )
{
  std::string out = "root,depth,seq,n,regime,function,candidates,reason,bestVar,bestScore\n";
  for ( auto const& row : trace )
  {
    std::string candidates;
    for ( auto const& c : row.decision.candidates )
    {
      if ( !candidates.empty() )
        candidates += ';';
      candidates += fmt::format( "{}:{:.6f}:{:.6f}:{:.6f}:{:.6f}:{:.6f}", c.position, c.pi, c.delta_n, c.p_lut, c.p_sens, c.score );
    }
    out += fmt::format( "{},{},{},{},{},{},{},{},{},{}\n", row.root, row.depth, row.sequential ? 1 : 0, row.leaves.size(),
                        row.depth > shallow_cone_limit ? "deep" : "shallow", row.function.to_hex(), candidates,
                        to_string( row.decision.reason ),
                        row.decision.best_position ? fmt::format( "{}", *row.decision.best_position ) : std::string{},
                        row.decision.best_position ? fmt::format( "{:.6f}", row.decision.best_score ) : std::string{} );
  }
  return out;
}

struct sweep_row
{
  uint32_t guard_band{ 0 };
  uint32_t min_depth{ 0 };
  uint32_t area{ 0 };
  uint32_t depth{ 0 };
  double power{ 0.0 };
  uint32_t splits_applied{ 0 };
  bool equivalent{ true };
};

/*! \brief Runs the flow once per guard band; rows come back in the order of `guard_bands`.
 *
 * Up to `jobs` flows run concurrently; results do not depend on `jobs`.
 */
inline std::vector<sweep_row> guard_band_sweep( aig const& source, activity_map const& act, vector_source const& vectors,
                                                flow_params const& ps, std::span<uint32_t const> guard_bands, uint32_t jobs = 1u )
{
  if ( guard_bands.empty() )
    throw std::invalid_argument( "guard-band range is empty" );
  auto run_one = [&]( uint32_t g ) {
    auto p = ps;
    p.split.guard_band = g;
    auto const res = run_flow( source, act, vectors, p );
    sweep_row row;
    row.guard_band = g;
    row.min_depth = p.split.min_depth();
    row.area = res.mapping.area();
    row.depth = res.mapping.depth;
    row.power = power_proxy( res.mapping, simulate_toggles( res.mapping, vectors ) );
    row.splits_applied = res.splits_applied;
    row.equivalent = !p.check_equivalence || res.equivalence.equivalent;
    return row;
  };

  std::vector<sweep_row> rows( guard_bands.size() );
  jobs = std::max( 1u, jobs );
  for ( std::size_t start = 0; start < guard_bands.size(); start += jobs )
  {
    std::vector<std::future<sweep_row>> batch;
    for ( auto i = start; i < std::min<std::size_t>( start + jobs, guard_bands.size() ); ++i )
      batch.push_back( std::async( jobs > 1u ? std::launch::async : std::launch::deferred, run_one, guard_bands[i] ) );
    for ( auto i = 0u; i < batch.size(); ++i )
      rows[start + i] = batch[i].get();
  }
  return rows;
}

inline std::string sweep_csv( std::span<sweep_row const> rows, split_params const& ps )
{
  std::string out = fmt::format( "# K={} default guardBand=2 configured guardBand={}\n", ps.effective_lut_size(), ps.guard_band );
  out += "guardBand,dMin,area,depth,power,splitsApplied\n";
  for ( auto const& r : rows )
    out += fmt::format( "{},{},{},{},{:.6f},{}\n", r.guard_band, r.min_depth, r.area, r.depth, r.power, r.splits_applied );
  return out;
}

} // namespace ctxmap
