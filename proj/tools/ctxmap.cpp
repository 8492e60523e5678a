/* ctxmap command-line front end.
 *
 *   ctxmap sim    design.aag -o act.csv
 *   ctxmap map    --baseline|--context-aware|--always-split design.aag -o out.blif [--record r.csv] [--trace t.csv]
 *   ctxmap trace  design.aag [-o trace.csv]
 *   ctxmap sweep  design.aag --guard-bands 0:8 [--jobs N] [-o sweep.csv]
 *   ctxmap report (--records a.csv ... | --external table.csv) --baseline w/o --variant w/C.A. [--markdown]
 *
 * Settings resolve as command-line flag > config file > built-in default.
 */

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include <ctxmap.hpp>

using namespace ctxmap;

namespace
{

constexpr char const* equivalence_help =
    "Every mapping is checked against its source network before any output is written: exhaustively over all input and "
    "latch-state assignments when there are at most 14 of them combined, otherwise with at least 100,000 "
    "seeded random cycles (64 parallel lanes of 1,563 steps each). A mismatch is reported as an error and nothing is written.";

struct settings_options
{
  std::string config_path;
  std::vector<std::pair<std::string, std::optional<std::string>>> flags = {
      { "lutSize", {} }, { "guardBand", {} }, { "alphaLut", {} },  { "betaSens", {} },       { "sensMode", {} },
      { "lambdaAct", {} }, { "seed", {} },    { "cycles", {} },    { "maxCutsPerNode", {} },
  };

  void attach( CLI::App& app )
  {
    app.add_option( "--config", config_path, "key=value configuration file" )->check( CLI::ExistingFile );
    static constexpr std::array<std::pair<char const*, char const*>, 9> names = { {
        { "--lut-size", "LUT input count K" },
        { "--guard-band", "extra depth g above K required for a split" },
        { "--alpha-lut", "weight of the LUT-growth penalty" },
        { "--beta-sens", "weight of the sensitivity penalty" },
        { "--sens-mode", "sensitivity penalty mode: excess or literal" },
        { "--lambda-act", "activity weight in the mapper's cost" },
        { "--seed", "seed of the random input vectors" },
        { "--cycles", "number of simulated cycles" },
        { "--max-cuts", "priority cuts kept per node" },
    } };
    for ( auto i = 0u; i < names.size(); ++i )
      app.add_option( names[i].first, flags[i].second, names[i].second );
  }

  config resolve() const
  {
    config cfg;
    if ( !config_path.empty() )
      cfg = load_config( config_path );
    for ( auto const& [key, value] : flags )
      if ( value )
        cfg.set( key, *value, config_origin::flag );
    cfg.check();
    if ( cfg.cycles > std::numeric_limits<uint32_t>::max() )
      throw config_error( "cycles exceeds 2^32 - 1" );
    return cfg;
  }
};

struct design_options
{
  std::string input;
  std::string vectors_path;
  std::string activity_path;
  std::string name;

  void attach( CLI::App& app, bool with_activity )
  {
    app.add_option( "design", input, "ASCII AIGER (.aag) input" )->required()->check( CLI::ExistingFile );
    app.add_option( "--vectors", vectors_path, "input vectors, one row of 0/1 per cycle (overrides --seed/--cycles)" )
        ->check( CLI::ExistingFile );
    app.add_option( "--name", name, "design name used in records (default: file stem)" );
    if ( with_activity )
      app.add_option( "--activity", activity_path, "toggle counts from 'ctxmap sim' used for split decisions" )
          ->check( CLI::ExistingFile );
  }

  std::string design_name() const { return name.empty() ? std::filesystem::path( input ).stem().string() : name; }

  vector_source vectors( config const& cfg ) const
  {
    if ( !vectors_path.empty() )
      return vector_source::from_file( vectors_path );
    return vector_source::random( cfg.seed, static_cast<uint32_t>( cfg.cycles ) );
  }
};

std::string read_text( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
    throw std::runtime_error( fmt::format( "cannot open '{}'", path ) );
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit( std::string const& path, std::string const& text )
{
  if ( path.empty() || path == "-" )
  {
    std::fwrite( text.data(), 1, text.size(), stdout );
    return;
  }
  std::ofstream out( path, std::ios::binary );
  if ( !out )
    throw std::runtime_error( fmt::format( "cannot write '{}'", path ) );
  out << text;
  if ( !out )
    throw std::runtime_error( fmt::format( "cannot write '{}'", path ) );
}

struct prepared
{
  aig network;
  config cfg;
  vector_source vectors;
  activity_map activity;
};

prepared prepare( design_options const& d, settings_options const& s )
{
  auto cfg = s.resolve();
  auto ntk = read_aiger_file( d.input );
  if ( auto const problems = validate( ntk ); !problems.empty() )
    throw std::runtime_error( fmt::format( "invalid network '{}': {}", d.input, problems.front() ) );
  auto vectors = d.vectors( cfg );
  auto act = d.activity_path.empty() ? simulate_toggles( ntk, vectors ) : import_activity( read_text( d.activity_path ), ntk );
  return { std::move( ntk ), std::move( cfg ), std::move( vectors ), std::move( act ) };
}

flow_result checked_flow( prepared const& p, split_policy policy )
{
  auto res = run_flow( p.network, p.activity, p.vectors, p.cfg.flow( policy ) );
  if ( !res.equivalence.equivalent )
    throw std::runtime_error( fmt::format( "internal error: mapped network is not equivalent to the source ({})", res.equivalence.mismatch ) );
  return res;
}

std::vector<uint32_t> parse_guard_bands( std::string const& text )
{
  std::vector<uint32_t> out;
  auto number = [&]( std::string const& s ) {
    std::size_t used = 0;
    unsigned long v = 0;
    try
    {
      v = std::stoul( s, &used );
    }
    catch ( std::exception const& )
    {
      used = 0;
    }
    if ( used != s.size() || s.empty() || s[0] == '-' || v > 64u )
      throw std::invalid_argument( fmt::format( "invalid guard band '{}'", s ) );
    return static_cast<uint32_t>( v );
  };
  if ( auto const colon = text.find( ':' ); colon != std::string::npos )
  {
    auto const lo = number( text.substr( 0, colon ) ), hi = number( text.substr( colon + 1 ) );
    for ( auto g = lo; g <= hi; ++g )
      out.push_back( g );
  }
  else
  {
    std::stringstream ss( text );
    for ( std::string item; std::getline( ss, item, ',' ); )
      out.push_back( number( item ) );
  }
  if ( out.empty() )
    throw std::invalid_argument( fmt::format( "guard-band range '{}' is empty", text ) );
  return out;
}

std::string single_line( std::string s )
{
  for ( auto& c : s )
    if ( c == '\n' || c == '\r' )
      c = ' ';
  return s;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "ctxmap: activity-aware LUT mapping with guarded Shannon splits" };
  app.footer( equivalence_help );
  app.require_subcommand( 1 );

  /* sim */
  auto* sim = app.add_subcommand( "sim", "simulate random or given vectors and write per-net toggle counts" );
  settings_options sim_settings;
  design_options sim_design;
  std::string sim_out;
  sim_settings.attach( *sim );
  sim_design.attach( *sim, false );
  sim->add_option( "-o,--output", sim_out, "activity CSV (default: stdout)" );

  /* map */
  auto* map = app.add_subcommand( "map", "map to K-LUTs and write BLIF" );
  map->footer( equivalence_help );
  settings_options map_settings;
  design_options map_design;
  std::string map_out, map_record, map_trace, map_variant;
  bool baseline = false, context_aware = false, always_split = false;
  map_settings.attach( *map );
  map_design.attach( *map, true );
  auto* b_flag = map->add_flag( "--baseline", baseline, "depth-optimal mapping, no splits" );
  auto* c_flag = map->add_flag( "--context-aware", context_aware, "activity-aware mapping with context-scored splits (default)" );
  auto* a_flag = map->add_flag( "--always-split", always_split, "split every eligible cut on its best position regardless of score" );
  b_flag->excludes( c_flag )->excludes( a_flag );
  c_flag->excludes( a_flag );
  map->add_option( "-o,--output", map_out, "BLIF netlist (default: stdout)" );
  map->add_option( "--record", map_record, "design record CSV" );
  map->add_option( "--trace", map_trace, "split decision trace CSV" );
  map->add_option( "--variant", map_variant, "variant label in the record (default: w/o, w/C.A. or w/always)" );

  /* trace */
  auto* trace = app.add_subcommand( "trace", "write the split decision trace of a context-aware run" );
  trace->footer( equivalence_help );
  settings_options trace_settings;
  design_options trace_design;
  std::string trace_out;
  trace_settings.attach( *trace );
  trace_design.attach( *trace, true );
  trace->add_option( "-o,--output", trace_out, "trace CSV (default: stdout)" );

  /* sweep */
  auto* sweep = app.add_subcommand( "sweep", "run the context-aware flow over a range of guard bands" );
  sweep->footer( equivalence_help );
  settings_options sweep_settings;
  design_options sweep_design;
  std::string sweep_out, sweep_bands = "0:8";
  uint32_t sweep_jobs = 1;
  sweep_settings.attach( *sweep );
  sweep_design.attach( *sweep, true );
  sweep->add_option( "--guard-bands", sweep_bands, "'lo:hi' or comma list" )->capture_default_str();
  sweep->add_option( "--jobs", sweep_jobs, "concurrent flows (results do not depend on it)" )->check( CLI::Range( 1u, 256u ) );
  sweep->add_option( "-o,--output", sweep_out, "sweep CSV (default: stdout)" );

  /* report */
  auto* report = app.add_subcommand( "report", "compare two variants from record files" );
  settings_options report_settings;
  std::vector<std::string> report_records;
  std::string report_external, report_out, report_base = "w/o", report_variant = "w/C.A.";
  bool report_md = false;
  report->add_option( "--config", report_settings.config_path, "configuration file echoed into the header" )->check( CLI::ExistingFile );
  auto* rec_opt = report->add_option( "--records", report_records, "record CSV written by 'ctxmap map' (repeatable)" )->check( CLI::ExistingFile );
  auto* ext_opt = report->add_option( "--external", report_external, "CSV with name,variant,power,area,delay columns" )->check( CLI::ExistingFile );
  rec_opt->excludes( ext_opt );
  report->add_option( "--baseline", report_base, "baseline variant label" )->capture_default_str();
  report->add_option( "--variant", report_variant, "compared variant label" )->capture_default_str();
  report->add_flag( "--markdown", report_md, "Markdown table instead of CSV" );
  report->add_option( "-o,--output", report_out, "report (default: stdout)" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::ParseError const& e )
  {
    if ( e.get_exit_code() == 0 )
      return app.exit( e );
    fmt::print( stderr, "error: {}\n", single_line( e.what() ) );
    return 2;
  }

  try
  {
    if ( sim->parsed() )
    {
      auto const p = prepare( sim_design, sim_settings );
      emit( sim_out, export_activity( p.activity, p.network ) );
    }
    else if ( map->parsed() )
    {
      auto const policy = baseline ? split_policy::none : ( always_split ? split_policy::always : split_policy::contextual );
      auto const p = prepare( map_design, map_settings );
      auto const res = checked_flow( p, policy );
      auto const name = map_design.design_name();
      auto const label = !map_variant.empty() ? map_variant
                         : policy == split_policy::none    ? std::string( "w/o" )
                         : policy == split_policy::always  ? std::string( "w/always" )
                                                           : std::string( "w/C.A." );
      auto const blif = write_blif( res.mapping, name, p.cfg.lut_size );
      auto const record = p.cfg.header() + record_csv_header() + to_csv( make_record( name, label, res.mapping, p.vectors ) );
      auto const trace_text = p.cfg.header() + trace_csv( res.trace );
      emit( map_out, blif );
      if ( !map_record.empty() )
        emit( map_record, record );
      if ( !map_trace.empty() )
        emit( map_trace, trace_text );
    }
    else if ( trace->parsed() )
    {
      auto const p = prepare( trace_design, trace_settings );
      auto const res = checked_flow( p, split_policy::contextual );
      emit( trace_out, p.cfg.header() + trace_csv( res.trace ) );
    }
    else if ( sweep->parsed() )
    {
      auto const bands = parse_guard_bands( sweep_bands );
      auto const p = prepare( sweep_design, sweep_settings );
      auto const rows = guard_band_sweep( p.network, p.activity, p.vectors, p.cfg.flow( split_policy::contextual ), bands, sweep_jobs );
      for ( auto const& r : rows )
        if ( !r.equivalent )
          throw std::runtime_error( fmt::format( "internal error: mapping at guard band {} is not equivalent to the source", r.guard_band ) );
      emit( sweep_out, p.cfg.header() + sweep_csv( rows, p.cfg.split() ) );
    }
    else if ( report->parsed() )
    {
      auto const cfg = report_settings.resolve();
      if ( report_records.empty() && report_external.empty() )
        throw std::invalid_argument( "report needs --records or --external" );
      std::vector<design_record> records;
      if ( !report_external.empty() )
      {
        records = read_records_file( report_external );
        for ( auto const& r : records )
          if ( r.source != record_source::external )
            throw std::invalid_argument( fmt::format( "'{}' holds internal record '{}'; use --records", report_external, r.name ) );
      }
      for ( auto const& path : report_records )
        for ( auto& r : read_records_file( path ) )
          records.push_back( std::move( r ) );
      auto const rows = compare_variants( records, report_base, report_variant );
      if ( rows.empty() )
        throw std::invalid_argument( fmt::format( "no design has both variants '{}' and '{}'", report_base, report_variant ) );
      auto const header = cfg.header();
      emit( report_out, report_md ? "<!-- " + header.substr( 2, header.size() - 3 ) + " -->\n\n" + report_markdown( rows )
                                  : header + report_csv( rows ) );
    }
  }
  catch ( std::exception const& e )
  {
    fmt::print( stderr, "error: {}\n", single_line( e.what() ) );
    return 1;
  }
  return 0;
}
