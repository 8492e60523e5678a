#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <ctxmap/activity.hpp>
#include <ctxmap/aig.hpp>
#include <ctxmap/cuts.hpp>
#include <ctxmap/equivalence.hpp>
#include <ctxmap/mapping.hpp>

#include "support/circuits.hpp"
#include "support/oracle.hpp"

using namespace ctxmap;

namespace
{

mapping_solution map_baseline( aig const& ntk, uint32_t k )
{
  return map_network( ntk, enumerate_cuts( ntk, { k, 8 } ) );
}

/* compares outputs and next states of a cover against the scalar AIG oracle on random cycles */
void check_against_oracle( aig const& ntk, mapping_solution const& sol, uint64_t seed, int cycles )
{
  testing::scalar_aig ref( ntk );
  std::vector<uint64_t> values( sol.num_vars(), 0u );
  std::vector<uint64_t> state( sol.latches.size(), 0u );
  for ( auto i = 0u; i < sol.latches.size(); ++i )
    state[i] = sol.latches[i].init == latch_init::one;
  std::mt19937_64 rng( seed );
  for ( auto c = 0; c < cycles; ++c )
  {
    std::vector<bool> in( ntk.inputs.size() );
    for ( auto i = 0u; i < in.size(); ++i )
    {
      in[i] = rng() & 1u;
      values[sol.inputs[i]] = in[i];
    }
    for ( auto i = 0u; i < sol.latches.size(); ++i )
      values[sol.latches[i].out] = state[i];
    evaluate_combinational( sol, values, 1u );
    ref.evaluate( in );
    for ( auto o = 0u; o < sol.outputs.size(); ++o )
      REQUIRE( ( ( values[sol.outputs[o].var()] & 1u ) != sol.outputs[o].is_complemented() ) == ref.lit( ntk.outputs[o] ) );
    for ( auto i = 0u; i < sol.latches.size(); ++i )
      state[i] = ( values[sol.latches[i].next.var()] & 1u ) != sol.latches[i].next.is_complemented();
    ref.clock();
  }
}

} // namespace

TEST_CASE( "eight-input AND tree", "[mapping]" )
{
  aig ntk;
  std::vector<literal> xs;
  for ( auto i = 0; i < 8; ++i )
    xs.emplace_back( ntk.create_input(), false );
  while ( xs.size() > 1u )
  {
    std::vector<literal> next;
    for ( auto i = 0u; i + 1u < xs.size(); i += 2u )
      next.push_back( ntk.create_and( xs[i], xs[i + 1u] ) );
    xs = next;
  }
  ntk.create_output( xs[0] );
  auto const sol = map_baseline( ntk, 6 );
  CHECK( sol.area() == 2u );
  CHECK( sol.depth == 2u );
  CHECK( validate( sol ).empty() );
}

TEST_CASE( "small functions fit one LUT", "[mapping]" )
{
  for ( uint64_t seed = 0; seed < 30u; ++seed )
  {
    auto const n = 2u + seed % 5u;
    auto ntk = testing::random_aig( seed, n, 0, 30, 0 );
    if ( ntk.ands.empty() )
      continue;
    ntk.create_output( literal( ntk.ands.back().out, seed & 1u ) );
    auto const sol = map_baseline( ntk, 6 );
    CHECK( sol.area() == 1u );
    CHECK( sol.depth == 1u );
  }
}

TEST_CASE( "activity mode prefers quiet leaves", "[mapping]" )
{
  aig ntk;
  auto const a = literal( ntk.create_input( "a" ), false );
  auto const b = literal( ntk.create_input( "b" ), false );
  auto const c = literal( ntk.create_input( "c" ), false );
  auto const d = literal( ntk.create_input( "d" ), false );
  auto const p = ntk.create_and( a, b );
  auto const q = ntk.create_and( c, d );
  auto const r = ntk.create_and( p, q );
  ntk.create_output( r );

  std::vector<std::string> rows;
  for ( auto i = 0; i < 40; ++i )
  {
    auto const hot = i % 2 == 0 ? "11" : "00";
    auto const quiet = ( i / 10 ) % 2 == 0 ? "00" : "11";
    rows.push_back( std::string( hot ) + quiet );
  }
  auto const act = simulate_toggles( ntk, vector_source::from_rows( rows ) );
  REQUIRE( act.toggles[a.var()] >= 10u * act.toggles[c.var()] );
  REQUIRE( act.toggles[b.var()] >= 10u * act.toggles[d.var()] );

  auto const db = enumerate_cuts( ntk, { 3, 8 } );
  auto const base = map_network( ntk, db, { mapping_mode::baseline, 1.0 } );
  auto const quiet = map_network( ntk, db, { mapping_mode::activity, 1.0 }, &act );

  auto const root_leaves = []( mapping_solution const& s, var_t root ) {
    for ( auto const& l : s.luts )
      if ( l.root == root )
        return l.leaves;
    return std::vector<var_t>{};
  };
  CHECK( base.depth == quiet.depth );
  CHECK( base.area() == quiet.area() );
  CHECK( root_leaves( quiet, r.var() ) == std::vector<var_t>{ c.var(), d.var(), p.var() } );
  CHECK( root_leaves( base, r.var() ) == std::vector<var_t>{ a.var(), b.var(), q.var() } );
}

TEST_CASE( "mapped covers are equivalent to their source", "[mapping]" )
{
  std::vector<aig> designs = { testing::ripple_adder( 6 ), testing::counter( 6, true ), testing::accumulator( 5 ) };
  for ( uint64_t seed = 0; seed < 25u; ++seed )
    designs.push_back( testing::random_aig( seed, 4u + seed % 9u, seed % 5u, 60u + 10u * ( seed % 7u ), 4u ) );

  for ( auto const& ntk : designs )
  {
    for ( uint32_t k : { 2u, 3u, 4u, 6u, 8u } )
    {
      auto const sol = map_baseline( ntk, k );
      REQUIRE( validate( sol ).empty() );
      REQUIRE( sol.depth <= std::max( 1u, compute_levels( ntk ).max_level() ) );
      for ( auto const& l : sol.luts )
        REQUIRE( l.leaves.size() <= k );
      auto const eq = check_equivalence( ntk, sol, {} );
      REQUIRE( eq.equivalent );
      check_against_oracle( ntk, sol, 3, 300 );

      auto const act = simulate_toggles( ntk, vector_source::random( 2, 200 ) );
      auto const weighted = map_network( ntk, enumerate_cuts( ntk, { k, 8 } ), { mapping_mode::activity, 1.0 }, &act );
      REQUIRE( weighted.depth == sol.depth );
      REQUIRE( check_equivalence( ntk, weighted, {} ).equivalent );
    }
  }
}

TEST_CASE( "equivalence checking catches a broken cover", "[equivalence]" )
{
  auto const ntk = testing::accumulator( 4 );
  auto sol = map_baseline( ntk, 4 );
  REQUIRE( check_equivalence( ntk, sol, {} ).equivalent );
  REQUIRE( check_equivalence( ntk, sol, {} ).exhaustive );
  for ( auto& l : sol.luts )
    if ( l.root == sol.latches[2].next.var() )
      l.function = ~l.function;
  auto const eq = check_equivalence( ntk, sol, {} );
  CHECK_FALSE( eq.equivalent );
  CHECK_FALSE( eq.mismatch.empty() );

  auto big = testing::random_aig( 1, 20, 2, 200, 4 );
  auto big_sol = map_baseline( big, 6 );
  equivalence_params ps;
  ps.random_cycles = 2000;
  auto const r = check_equivalence( big, big_sol, ps );
  CHECK( r.equivalent );
  CHECK_FALSE( r.exhaustive );
}
