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
  \file simulation.hpp
  \brief Word-parallel cycle simulation

  Every variable carries a 64-bit word; bit `k` is the value in lane `k`.
  Lanes are independent runs of the same network.  A network type is
  simulable if it exposes `num_vars()`, `inputs`, `latches` and `outputs`
  and an `evaluate_combinational( ntk, values, lanes )` overload found by
  argument-dependent lookup.
*/

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "aig.hpp"

namespace ctxmap
{

inline uint64_t literal_value( std::span<uint64_t const> values, literal l )
{
  return values[l.var()] ^ ( l.is_complemented() ? ~uint64_t{ 0 } : uint64_t{ 0 } );
}

/*! \brief Evaluates all AND gates assuming inputs and latch outputs are set. */
inline void evaluate_combinational( aig const& ntk, std::span<uint64_t> values, uint32_t /* lanes */ = 64u )
{
  values[0] = 0u;
  for ( auto const& g : ntk.ands )
    values[g.out] = literal_value( values, g.fanin0 ) & literal_value( values, g.fanin1 );
}

inline uint64_t latch_init_word( latch_init init )
{
  return init == latch_init::one ? ~uint64_t{ 0 } : uint64_t{ 0 };
}

template<class Ntk>
class sequential_simulator
{
public:
  explicit sequential_simulator( Ntk const& ntk, uint32_t lanes = 64u )
      : ntk_( ntk ), lanes_( lanes ), values_( ntk.num_vars(), 0u ), state_( ntk.latches.size(), 0u )
  {
    if ( lanes == 0u || lanes > 64u )
      throw std::invalid_argument( fmt::format( "lane count {} outside [1, 64]", lanes ) );
    reset();
  }

  /*! \brief Puts every latch at its init value (X as 0). */
  void reset()
  {
    for ( auto i = 0u; i < ntk_.latches.size(); ++i )
      state_[i] = latch_init_word( ntk_.latches[i].init );
  }

  /*! \brief Applies one input word per primary input and evaluates the combinational logic. */
  std::span<uint64_t const> evaluate( std::span<uint64_t const> input_words )
  {
    if ( input_words.size() != ntk_.inputs.size() )
      throw std::invalid_argument( fmt::format( "expected {} input words, got {}", ntk_.inputs.size(), input_words.size() ) );
    for ( auto i = 0u; i < ntk_.inputs.size(); ++i )
      values_[ntk_.inputs[i]] = input_words[i];
    for ( auto i = 0u; i < ntk_.latches.size(); ++i )
      values_[ntk_.latches[i].out] = state_[i];
    evaluate_combinational( ntk_, std::span<uint64_t>( values_ ), lanes_ );
    return values_;
  }

  /*! \brief Loads every latch from its next-state literal under the last evaluation. */
  void clock()
  {
    for ( auto i = 0u; i < ntk_.latches.size(); ++i )
      state_[i] = literal_value( values_, ntk_.latches[i].next );
  }

  uint64_t output( std::size_t index ) const { return literal_value( values_, ntk_.outputs[index] ); }
  uint64_t next_state( std::size_t index ) const { return literal_value( values_, ntk_.latches[index].next ); }
  std::span<uint64_t const> values() const { return values_; }
  std::span<uint64_t> state() { return state_; }

private:
  Ntk const& ntk_;
  uint32_t lanes_;
  std::vector<uint64_t> values_;
  std::vector<uint64_t> state_;
};

} // namespace ctxmap
