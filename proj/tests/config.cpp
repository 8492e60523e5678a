#include <catch2/catch_amalgamated.hpp>

#include <ctxmap/config.hpp>

using namespace ctxmap;

TEST_CASE( "defaults", "[config]" )
{
  auto const c = parse_config( "" );
  CHECK( c.lut_size == 6u );
  CHECK( c.guard_band == 2u );
  CHECK( c.alpha_lut == 1.0 );
  CHECK( c.beta_sens == 1.0 );
  CHECK( c.sensitivity == sens_mode::excess );
  CHECK( c.lambda_act == 1.0 );
  CHECK( c.seed == 1u );
  CHECK( c.cycles == 1024u );
  CHECK( c.max_cuts_per_node == 8u );
  CHECK( c.header() ==
         "# config lutSize=6(default) guardBand=2(default) alphaLut=1(default) betaSens=1(default) sensMode=excess(default) "
         "lambdaAct=1(default) seed=1(default) cycles=1024(default) maxCutsPerNode=8(default)\n" );
}

TEST_CASE( "file values and flag precedence", "[config]" )
{
  auto c = parse_config( "# tuned\nguardBand=4\n  lutSize = 5  # inline\nsensMode=literal\n\n" );
  CHECK( c.guard_band == 4u );
  CHECK( c.lut_size == 5u );
  CHECK( c.sensitivity == sens_mode::literal );
  CHECK( c.origin.at( "guardBand" ) == config_origin::file );
  c.set( "guardBand", "2", config_origin::flag );
  CHECK( c.guard_band == 2u );
  CHECK( c.header().find( "guardBand=2(flag)" ) != std::string::npos );
  CHECK( c.header().find( "lutSize=5(file)" ) != std::string::npos );
  CHECK( c.split().min_depth() == 8u );
}

TEST_CASE( "config errors", "[config]" )
{
  auto message = []( std::string const& text ) {
    try
    {
      parse_config( text );
    }
    catch ( config_error const& e )
    {
      return std::string( e.what() );
    }
    return std::string{};
  };
  CHECK( message( "sensMode=linear" ).find( "unknown sensMode" ) != std::string::npos );
  CHECK( message( "colour=blue" ).find( "unknown config key" ) != std::string::npos );
  CHECK( message( "lutSize=1" ).find( "lutSize" ) != std::string::npos );
  CHECK( message( "lutSize=9" ).find( "lutSize" ) != std::string::npos );
  CHECK( message( "cycles=0" ).find( "cycles" ) != std::string::npos );
  CHECK( message( "maxCutsPerNode=1" ).find( "maxCutsPerNode" ) != std::string::npos );
  CHECK( message( "guardBand=two" ).find( "cannot parse" ) != std::string::npos );
  CHECK( message( "guardBand" ).find( "key=value" ) != std::string::npos );
  CHECK_THROWS_AS( load_config( "/nonexistent/ctxmap.cfg" ), config_error );
}
