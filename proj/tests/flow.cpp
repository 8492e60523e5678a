#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include <ctxmap/activity.hpp>
#include <ctxmap/blif.hpp>
#include <ctxmap/config.hpp>
#include <ctxmap/flow.hpp>

#include "support/circuits.hpp"

using namespace ctxmap;

TEST_CASE( "baseline flow leaves the network alone", "[flow]" )
{
  auto const ntk = testing::guarded_datapath( 1, {} );
  auto const src = vector_source::random( 1, 256 );
  auto const act = simulate_toggles( ntk, src );
  auto const res = run_flow( ntk, act, src, config{}.flow( split_policy::none ) );
  CHECK( res.trace.empty() );
  CHECK( res.splits_applied == 0u );
  CHECK( res.equivalence.equivalent );
  CHECK( res.mapping.area() > 0u );
}

TEST_CASE( "context-aware flow trace is consistent", "[flow]" )
{
  config const cfg;
  for ( auto const& [name, ntk] : testing::guarded_family() )
  {
    auto const src = vector_source::random( cfg.seed, 512 );
    auto const act = simulate_toggles( ntk, src );
    for ( auto policy : { split_policy::contextual, split_policy::always } )
    {
      auto const res = run_flow( ntk, act, src, cfg.flow( policy ) );
      INFO( name );
      REQUIRE( res.equivalence.equivalent );
      uint32_t modified = 0;
      for ( auto const& row : res.trace )
      {
        auto const eligible = row.sequential && row.depth >= cfg.split().min_depth();
        REQUIRE( ( row.decision.reason != split_reason::ineligible ) == eligible );
        if ( policy == split_policy::contextual )
        {
          REQUIRE( row.modified == ( row.decision.reason == split_reason::applied ) );
          REQUIRE( row.decision.applied == ( row.decision.best_score > 0.0 ) );
        }
        modified += row.modified;
      }
      REQUIRE( modified == res.splits_applied );
    }
  }
}

TEST_CASE( "trace CSV layout", "[flow]" )
{
  auto const ntk = testing::guarded_family()[0].network;
  auto const src = vector_source::random( 1, 256 );
  auto const res = run_flow( ntk, simulate_toggles( ntk, src ), src, config{}.flow( split_policy::contextual ) );
  auto const csv = trace_csv( res.trace );
  CHECK( csv.rfind( "root,depth,seq,n,regime,function,candidates,reason,bestVar,bestScore\n", 0 ) == 0u );
  CHECK( static_cast<std::size_t>( std::count( csv.begin(), csv.end(), '\n' ) ) == res.trace.size() + 1u );
  auto const s = summarize_regimes( res.trace );
  CHECK( s.shallow_evaluated + s.deep_evaluated == res.trace.size() );
}

TEST_CASE( "guard-band sweep", "[flow]" )
{
  config const cfg;
  auto const ntk = testing::guarded_family()[3].network;
  auto const src = vector_source::random( 1, 256 );
  auto const act = simulate_toggles( ntk, src );
  std::vector<uint32_t> const bands{ 0, 1, 2, 3, 4, 5, 6, 8, 12, 40 };
  auto const rows = guard_band_sweep( ntk, act, src, cfg.flow( split_policy::contextual ), bands, 1 );
  REQUIRE( rows.size() == bands.size() );
  for ( auto i = 1u; i < rows.size(); ++i )
    CHECK( rows[i].splits_applied <= rows[i - 1].splits_applied );
  for ( auto const& r : rows )
    CHECK( r.equivalent );

  /* with no eligible cone the flow is the unsplit activity-mode mapping */
  auto unsplit = cfg.flow( split_policy::none );
  unsplit.mapping.mode = mapping_mode::activity;
  auto const base = run_flow( ntk, act, src, unsplit );
  auto const& last = rows.back();
  CHECK( last.splits_applied == 0u );
  CHECK( last.area == base.mapping.area() );
  CHECK( last.depth == base.mapping.depth );

  auto const parallel = guard_band_sweep( ntk, act, src, cfg.flow( split_policy::contextual ), bands, 4 );
  CHECK( sweep_csv( parallel, cfg.split() ) == sweep_csv( rows, cfg.split() ) );
  CHECK( sweep_csv( rows, cfg.split() ).find( "default guardBand=2" ) != std::string::npos );
  CHECK_THROWS( guard_band_sweep( ntk, act, src, cfg.flow( split_policy::contextual ), {}, 1 ) );
}
