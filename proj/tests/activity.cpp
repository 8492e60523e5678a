#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include <ctxmap/activity.hpp>
#include <ctxmap/aig.hpp>

#include "support/circuits.hpp"
#include "support/oracle.hpp"

using namespace ctxmap;

namespace
{

std::vector<std::vector<bool>> random_rows( aig const& ntk, vector_source const& src )
{
  std::vector<std::vector<bool>> rows;
  src.generate( ntk.inputs.size(), [&]( std::span<uint8_t const> bits ) { rows.emplace_back( bits.begin(), bits.end() ); } );
  return rows;
}

} // namespace

TEST_CASE( "two-bit counter toggles", "[activity]" )
{
  auto const ntk = testing::counter( 2, false );
  auto const act = simulate_toggles( ntk, vector_source::random( 1, 8 ) );
  CHECK( act.cycles == 8u );
  CHECK( act.toggles[ntk.latches[0].out] == 8u );
  CHECK( act.toggles[ntk.latches[1].out] == 4u );
  auto const scores = activity_scores( act );
  CHECK( scores.s_max == 8u );
  CHECK( scores.score[ntk.latches[1].out] == 4u );
  CHECK( export_activity( act, ntk ).find( "\n1,latch,8,8\n" ) != std::string::npos );
}

TEST_CASE( "alternating inverter toggles", "[activity]" )
{
  aig ntk;
  auto const a = literal( ntk.create_input(), false );
  auto const b = literal( ntk.create_input(), false );
  auto const g = ntk.create_and( !a, b );
  ntk.create_output( g );
  auto const src = vector_source::from_rows( { "01", "11", "01", "11", "01", "11", "01", "11" } );
  auto const act = simulate_toggles( ntk, src );
  CHECK( act.toggles[g.var()] == 7u );
  CHECK( act.toggles[b.var()] == 0u );
  CHECK( act.s_max == 7u );
}

TEST_CASE( "constant and static nets", "[activity]" )
{
  aig ntk;
  auto const a = literal( ntk.create_input(), false );
  auto const z = ntk.create_and( a, !a );
  ntk.create_output( z );
  auto const act = simulate_toggles( ntk, vector_source::random( 3, 100 ) );
  CHECK( act.toggles[0] == 0u );
  CHECK( act.toggles[a.var()] > 0u );

  aig quiet;
  quiet.create_input();
  quiet.create_input();
  auto const still = simulate_toggles( quiet, vector_source::from_rows( { "00", "00", "00" } ) );
  CHECK( still.s_max == 0u );
  CHECK( export_activity( still, quiet ) == "var,role,toggles,cycles\n1,input,0,3\n2,input,0,3\n" );
}

TEST_CASE( "toggle counts match the scalar oracle", "[activity]" )
{
  std::vector<aig> designs = { testing::counter( 5, true ), testing::accumulator( 4 ), testing::guarded_datapath( 7, {} ) };
  for ( uint64_t seed = 0; seed < 8u; ++seed )
    designs.push_back( testing::random_aig( seed, 6, 4, 70, 4 ) );
  for ( auto const& ntk : designs )
  {
    auto const src = vector_source::random( 11, 300 );
    auto const act = simulate_toggles( ntk, src );
    CHECK( act.toggles == testing::scalar_toggles( ntk, random_rows( ntk, src ) ) );
    for ( auto t : act.toggles )
      CHECK( t <= act.cycles );
  }
}

TEST_CASE( "determinism and partition additivity", "[activity]" )
{
  auto const ntk = testing::random_aig( 42, 9, 5, 120, 6 );
  auto const src = vector_source::random( 7, 1000 );
  auto const once = simulate_toggles( ntk, src );
  CHECK( simulate_toggles( ntk, src ).toggles == once.toggles );

  std::vector<std::vector<uint8_t>> rows;
  src.generate( ntk.inputs.size(), [&]( std::span<uint8_t const> bits ) { rows.emplace_back( bits.begin(), bits.end() ); } );
  for ( std::size_t split : { std::size_t{ 1 }, std::size_t{ 137 }, std::size_t{ 500 }, std::size_t{ 999 } } )
  {
    toggle_counter<aig> counter( ntk );
    for ( std::size_t i = 0; i < split; ++i )
      counter.step( rows[i] );
    auto const first = counter.result();
    for ( std::size_t i = split; i < rows.size(); ++i )
      counter.step( rows[i] );
    auto const total = counter.result();
    CHECK( total.toggles == once.toggles );
    CHECK( first.cycles == split );
  }
}

TEST_CASE( "more cycles never lower a counter", "[activity]" )
{
  auto const ntk = testing::random_aig( 8, 6, 3, 60, 3 );
  auto prev = simulate_toggles( ntk, vector_source::random( 5, 10 ) );
  for ( uint32_t cycles : { 20u, 50u, 200u, 1000u } )
  {
    auto const cur = simulate_toggles( ntk, vector_source::random( 5, cycles ) );
    for ( auto v = 0u; v < cur.toggles.size(); ++v )
      CHECK( cur.toggles[v] >= prev.toggles[v] );
    prev = cur;
  }
}

TEST_CASE( "activity CSV round trip", "[activity]" )
{
  auto const ntk = testing::guarded_datapath( 2, {} );
  auto const act = simulate_toggles( ntk, vector_source::random( 1, 256 ) );
  auto const csv = export_activity( act, ntk );
  auto const back = import_activity( csv, ntk );
  CHECK( back.toggles == act.toggles );
  CHECK( back.cycles == act.cycles );
  CHECK( back.s_max == act.s_max );
  CHECK( export_activity( back, ntk ) == csv );
  CHECK_THROWS_AS( import_activity( "var,toggles\n", ntk ), parse_error );
}

TEST_CASE( "vector source errors", "[activity]" )
{
  CHECK_THROWS( vector_source::random( 1, 0 ) );
  CHECK_THROWS_AS( vector_source::from_rows( { "01", "0x" } ), parse_error );
  aig ntk;
  ntk.create_input();
  ntk.create_input();
  ntk.create_input();
  CHECK_THROWS_AS( simulate_toggles( ntk, vector_source::from_rows( { "011", "01" } ) ), parse_error );
}
