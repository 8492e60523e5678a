#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <ctxmap/aig.hpp>
#include <ctxmap/cut_function.hpp>
#include <ctxmap/cuts.hpp>
#include <ctxmap/equivalence.hpp>
#include <ctxmap/split.hpp>

#include "support/circuits.hpp"
#include "support/oracle.hpp"

using namespace ctxmap;

namespace
{

/* function of literal `root` in `ntk` over `leaves`, via the scalar oracle */
std::vector<bool> literal_function( aig const& ntk, literal root, std::vector<var_t> const& leaves )
{
  if ( root.is_constant() )
    return std::vector<bool>( std::size_t{ 1 } << leaves.size(), root.is_complemented() );
  auto f = testing::scalar_cut_function( ntk, root.var(), leaves );
  if ( root.is_complemented() )
    f.flip();
  return f;
}

std::vector<bool> table_bits( truth_table const& tt )
{
  std::vector<bool> b( tt.num_bits() );
  for ( uint64_t m = 0; m < b.size(); ++m )
    b[m] = tt.get_bit( m );
  return b;
}

} // namespace

TEST_CASE( "split of AND2 on position 0", "[split]" )
{
  aig ntk;
  auto const a = literal( ntk.create_input(), false );
  auto const b = literal( ntk.create_input(), false );
  auto const g = ntk.create_and( a, b );
  ntk.create_output( g );
  auto const c = make_cut( ntk, analyze_cones( ntk ), g.var(), { a.var(), b.var() } );

  REQUIRE( cofactor( c.function, 0, false ).is_const0() );
  REQUIRE( cofactor( c.function, 0, true ) == truth_table::nth_var( 1, 0 ) );
  auto const [split, root] = realize_split( ntk, c, 0 );
  CHECK( validate( split ).empty() );
  CHECK( literal_function( split, root, c.leaves ) == table_bits( c.function ) );
  CHECK( split.ands.size() == 1u );
  CHECK( check_equivalence( ntk, split ).equivalent );
}

TEST_CASE( "split of the 0xE0 guard on position 2", "[split]" )
{
  aig ntk;
  auto const x0 = literal( ntk.create_input(), false );
  auto const x1 = literal( ntk.create_input(), false );
  auto const x2 = literal( ntk.create_input(), false );
  auto const g = ntk.create_and( x2, ntk.create_or( x0, x1 ) );
  ntk.create_output( g );
  auto const c = make_cut( ntk, analyze_cones( ntk ), g.var(), { x0.var(), x1.var(), x2.var() } );
  REQUIRE( c.function.to_hex() == "0xE0@3" );
  REQUIRE( cofactor( c.function, 2, false ).is_const0() );
  REQUIRE( cofactor( c.function, 2, true ).to_hex() == "0xE@2" );

  auto const [split, root] = realize_split( ntk, c, 2 );
  CHECK( validate( split ).empty() );
  CHECK( literal_function( split, root, c.leaves ) == table_bits( c.function ) );
  CHECK( check_equivalence( ntk, split ).equivalent );
  if ( !root.is_complemented() )
    CHECK( cut_truth_table( split, root.var(), c.leaves ) == c.function );
}

TEST_CASE( "degenerate split requests", "[split]" )
{
  aig ntk;
  auto const a = literal( ntk.create_input(), false );
  auto const b = literal( ntk.create_input(), false );
  auto const g = ntk.create_and( a, b );
  ntk.create_output( g );
  auto const ctx = analyze_cones( ntk );
  CHECK_THROWS( realize_split( ntk, make_cut( ntk, ctx, g.var(), { g.var() } ), 0 ) );
  CHECK_THROWS( realize_split( ntk, make_cut( ntk, ctx, g.var(), { a.var(), b.var() } ), 2 ) );
}

TEST_CASE( "splits preserve function on 1,000 random cuts", "[split]" )
{
  std::mt19937_64 rng( 2024 );
  auto done = 0;
  for ( uint64_t seed = 0; done < 1000; ++seed )
  {
    auto const ntk = testing::random_aig( seed, 10, 3, 120, 4 );
    auto const ctx = analyze_cones( ntk );
    auto const db = enumerate_cuts( ntk, { 8, 10 } );
    for ( auto k = 0; k < 20 && done < 1000; ++k )
    {
      auto const& g = ntk.ands[rng() % ntk.ands.size()];
      auto const cuts = db.nontrivial( g.out );
      auto const& pc = cuts[rng() % cuts.size()];
      if ( pc.leaves.size() < 2u )
        continue;
      auto const c = make_cut( ntk, ctx, g.out, pc.leaves );
      auto const pos = static_cast<uint32_t>( rng() % c.leaves.size() );
      auto const [split, root] = realize_split( ntk, c, pos );
      REQUIRE( validate( split ).empty() );
      REQUIRE( literal_function( split, root, c.leaves ) == table_bits( c.function ) );
      ++done;
    }
  }
  CHECK( done == 1000 );
}

TEST_CASE( "batched splits and sweep keep the network equivalent", "[split]" )
{
  for ( uint64_t seed = 0; seed < 30u; ++seed )
  {
    auto const ntk = testing::random_aig( seed, 6, 4, 90, 4 );
    auto const ctx = analyze_cones( ntk );
    auto const db = enumerate_cuts( ntk, { 6, 8 } );
    std::vector<split_request> requests;
    for ( auto i = 0u; i < ntk.ands.size(); i += 7u )
    {
      auto const& g = ntk.ands[i];
      auto const& pc = db.nontrivial( g.out ).front();
      if ( pc.leaves.size() < 2u )
        continue;
      auto const c = make_cut( ntk, ctx, g.out, pc.leaves );
      requests.push_back( { c.root, c.leaves, c.function, static_cast<uint32_t>( i % c.leaves.size() ) } );
    }
    auto const split = apply_splits( ntk, requests );
    REQUIRE( validate( split.network ).empty() );
    REQUIRE( check_equivalence( ntk, split.network ).equivalent );
    auto const swept = sweep( split.network, split.boundaries );
    REQUIRE( validate( swept.network ).empty() );
    REQUIRE( swept.network.ands.size() <= split.network.ands.size() );
    REQUIRE( check_equivalence( ntk, swept.network ).equivalent );
    for ( auto b : swept.boundaries )
      REQUIRE( b <= swept.network.max_var );
  }
}

TEST_CASE( "sweep removes dead logic only", "[split]" )
{
  aig ntk;
  auto const a = literal( ntk.create_input(), false );
  auto const b = literal( ntk.create_input(), false );
  auto const live = ntk.create_and( a, b );
  ntk.create_and( a, !b );
  ntk.create_output( live );
  auto const swept = sweep( ntk );
  CHECK( swept.network.ands.size() == 1u );
  CHECK( swept.old_to_new[live.var()] == literal( 3, false ) );
  CHECK( check_equivalence( ntk, swept.network ).equivalent );
}
