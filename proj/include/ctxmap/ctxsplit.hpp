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
  \file ctxsplit.hpp
  \brief Context-aware Shannon split decision

  For a cut with truth table `T` on `n` leaves, each leaf position is a
  split candidate scored as

      score = dN - P_lut - P_sens

  where

  - `dN = N1(T) - E[N_after]` is the expected reduction in ones-count,
    with `E[N_after] = pi * N_min + (1 - pi) * N_max` over the cofactor
    ones-counts and `pi` the prior that the quiet cofactor is selected;
  - `pi = 0.5` for combinational cones, and
    `clip(0.95 - 0.45 * s / s_max, [0.5, 0.95])` for sequential ones,
    with `s` the toggle count of the candidate leaf;
  - `P_lut = alpha * (2^max(0, n - K + 2) - 1)` charges LUT pressure as
    the support approaches the effective LUT size `K = max(lutSize, 6)`;
  - `P_sens = beta * (N1(T0 ^ T1) - |N0 - N1|)` (excess mode) or
    `beta * N1(T0 ^ T1)` (literal mode) charges selector sensitivity.

  Only cuts rooted in sequential cones of depth `d >= K + guardBand` are
  scored.  The highest-scoring position wins, ties going to the lower
  position; the split is applied iff that score is strictly positive.
*/

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "activity.hpp"
#include "aig.hpp"
#include "cuts.hpp"
#include "split.hpp"
#include "truth_table.hpp"

namespace ctxmap
{

enum class sens_mode
{
  /*! \brief Penalty is the full cofactor XOR count. */
  literal,
  /*! \brief Penalty is the XOR count in excess of |N0 - N1|; zero for nested cofactors. */
  excess
};

/*! \brief Parameters of the split heuristic.
 *
 * Defaults: effective LUT size floored at 6, guard band 2, prior clipped
 * to [0.5, 0.95] with slope 0.45, unit penalty weights, excess mode.
 */
struct split_params
{
  /*! \brief Mapper LUT size. */
  uint32_t lut_size{ 6u };

  /*! \brief Margin `g` in `d_min = K + g`. */
  uint32_t guard_band{ 2u };

  double pi_high{ 0.95 };
  double pi_low{ 0.5 };
  double pi_slope{ 0.45 };

  /*! \brief Weight of the LUT-pressure penalty. */
  double alpha_lut{ 1.0 };

  /*! \brief Weight of the cofactor-divergence penalty. */
  double beta_sens{ 1.0 };

  sens_mode sensitivity{ sens_mode::excess };

  /*! \brief `K = max(lutSize, 6)`. */
  uint32_t effective_lut_size() const { return std::max( lut_size, 6u ); }

  /*! \brief `d_min = K + guardBand`. */
  uint32_t min_depth() const { return effective_lut_size() + guard_band; }
};

/* prior for cones that are not register-bounded */
inline constexpr double unbiased_prior = 0.5;

/*! \brief Prior that the quiet cofactor is selected.
 *
 * A fully static design (`s_max = 0`) is treated as `s / s_max = 0`.
 */
inline double pi_of_score( uint32_t s, uint32_t s_max, bool sequential, split_params const& ps )
{
  if ( !sequential )
    return unbiased_prior;
  auto const ratio = s_max == 0u ? 0.0 : static_cast<double>( s ) / static_cast<double>( s_max );
  return std::clamp( ps.pi_high - ps.pi_slope * ratio, ps.pi_low, ps.pi_high );
}

inline double expected_after( uint64_t n_min, uint64_t n_max, double pi )
{
  return pi * static_cast<double>( n_min ) + ( 1.0 - pi ) * static_cast<double>( n_max );
}

struct cofactor_counts
{
  uint64_t total{ 0 };
  uint64_t n0{ 0 };
  uint64_t n1{ 0 };
  uint64_t divergence{ 0 };
};

inline cofactor_counts count_cofactors( truth_table const& tt, uint32_t pos )
{
  auto const t0 = cofactor( tt, pos, false );
  auto const t1 = cofactor( tt, pos, true );
  return { ones_count( tt ), ones_count( t0 ), ones_count( t1 ), divergence_count( t0, t1 ) };
}

/*! \brief Expected ones-count reduction of splitting `tt` on `pos`. */
inline double delta_n( truth_table const& tt, uint32_t pos, double pi )
{
  auto const c = count_cofactors( tt, pos );
  return static_cast<double>( c.total ) - expected_after( std::min( c.n0, c.n1 ), std::max( c.n0, c.n1 ), pi );
}

/*! \brief LUT-pressure penalty, zero while `n_new <= K - 2` and doubling per variable beyond. */
inline double p_lut( uint32_t n_new, split_params const& ps )
{
  auto const k = static_cast<int64_t>( ps.effective_lut_size() );
  auto const excess = std::max<int64_t>( 0, static_cast<int64_t>( n_new ) - k + 2 );
  return ps.alpha_lut * ( std::ldexp( 1.0, static_cast<int>( excess ) ) - 1.0 );
}

inline double p_sens( truth_table const& tt, uint32_t pos, split_params const& ps )
{
  auto const c = count_cofactors( tt, pos );
  auto divergence = static_cast<double>( c.divergence );
  if ( ps.sensitivity == sens_mode::excess )
    divergence -= static_cast<double>( c.n0 > c.n1 ? c.n0 - c.n1 : c.n1 - c.n0 );
  return ps.beta_sens * divergence;
}

/*! \brief Context of one candidate: activity score of the split leaf and cut shape. */
struct split_context
{
  uint32_t score{ 0 };
  uint32_t s_max{ 0 };
  bool sequential{ false };
  uint32_t n_new{ 0 };
};

struct split_components
{
  uint32_t position{ 0 };
  double pi{ 0.0 };
  double delta_n{ 0.0 };
  double p_lut{ 0.0 };
  double p_sens{ 0.0 };
  double score{ 0.0 };
};

inline split_components score_split( truth_table const& tt, uint32_t pos, split_context const& ctx, split_params const& ps )
{
  if ( pos >= tt.num_vars() )
    throw std::out_of_range( fmt::format( "split position {} out of range for {} variables", pos, tt.num_vars() ) );
  split_components c;
  c.position = pos;
  c.pi = pi_of_score( ctx.score, ctx.s_max, ctx.sequential, ps );
  c.delta_n = delta_n( tt, pos, c.pi );
  c.p_lut = p_lut( ctx.n_new, ps );
  c.p_sens = p_sens( tt, pos, ps );
  c.score = c.delta_n - c.p_lut - c.p_sens;
  return c;
}

enum class split_reason
{
  ineligible,
  no_positive_score,
  applied
};

inline char const* to_string( split_reason r )
{
  switch ( r )
  {
  case split_reason::ineligible:
    return "ineligible";
  case split_reason::no_positive_score:
    return "noPositiveScore";
  case split_reason::applied:
    return "applied";
  }
  return "?";
}

struct split_decision
{
  bool applied{ false };
  std::optional<uint32_t> best_position;
  double best_score{ -std::numeric_limits<double>::infinity() };
  std::vector<split_components> candidates;
  split_reason reason{ split_reason::ineligible };
};

/*! \brief True iff the cut may be split at all: sequential, deep enough, and at least two leaves. */
inline bool is_eligible( cut const& c, split_params const& ps )
{
  return c.sequential && c.depth >= ps.min_depth() && c.leaves.size() >= 2u;
}

/*! \brief Scores every leaf position of an eligible cut and picks the split.
 *
 * `leaf_scores[i]` is the activity score of `c.leaves[i]`.  Nothing is
 * evaluated for ineligible cuts.
 */
inline split_decision evaluate_split( cut const& c, std::span<uint32_t const> leaf_scores, uint32_t s_max, split_params const& ps )
{
  split_decision d;
  if ( !is_eligible( c, ps ) )
    return d;
  if ( leaf_scores.size() != c.leaves.size() )
    throw std::invalid_argument( "one activity score per leaf required" );

  auto const n = static_cast<uint32_t>( c.leaves.size() );
  for ( auto pos = 0u; pos < n; ++pos )
  {
    auto const comp = score_split( c.function, pos, { leaf_scores[pos], s_max, c.sequential, n }, ps );
    d.candidates.push_back( comp );
    if ( comp.score > d.best_score )
    {
      d.best_score = comp.score;
      d.best_position = pos;
    }
  }
  d.applied = d.best_score > 0.0;
  d.reason = d.applied ? split_reason::applied : split_reason::no_positive_score;
  return d;
}

inline std::vector<uint32_t> leaf_scores( cut const& c, activity_map const& act )
{
  std::vector<uint32_t> scores;
  scores.reserve( c.leaves.size() );
  for ( auto l : c.leaves )
    scores.push_back( l < act.toggles.size() ? act.toggles[l] : 0u );
  return scores;
}

/*! \brief Evaluates one cut and applies the split when its best score is positive.
 *
 * The returned network equals the input unless the decision is `applied`.
 */
inline std::pair<split_decision, aig> contextual_decompose( aig const& ntk, cut const& c, activity_map const& act,
                                                            split_params const& ps )
{
  auto const scores = leaf_scores( c, act );
  auto decision = evaluate_split( c, scores, act.s_max, ps );
  if ( !decision.applied )
    return { std::move( decision ), ntk };
  auto [network, root] = realize_split( ntk, c, *decision.best_position );
  (void)root;
  return { std::move( decision ), std::move( network ) };
}

} // namespace ctxmap
