#include <cctype>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <lrof/lrof.hpp>

using namespace lrof;

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_counterexample = 1;
constexpr int exit_usage = 2;

struct FunctionInput
{
  std::string table;
  std::string formula;
  std::optional<unsigned> arity;

  void attach( CLI::App* cmd )
  {
    auto* t = cmd->add_option( "--table", table, "truth table n:HEX" );
    auto* f = cmd->add_option( "--formula", formula, "formula text, e.g. \"x1x2 | x3\"" );
    cmd->add_option( "--arity", arity, "arity for --formula" );
    t->excludes( f );
  }

  TruthTable get() const
  {
    if ( !table.empty() )
      return parse_table( table );
    if ( formula.empty() )
      throw precondition_error( "give --table n:HEX or --formula TEXT --arity N" );
    if ( !arity )
      throw precondition_error( "--formula needs --arity" );
    return eval_to_table( parse_formula( formula, *arity ) );
  }
};

std::string points_text( const std::vector<Point>& ps )
{
  std::string s;
  for ( const auto& p : ps )
    s += ( s.empty() ? "" : " " ) + p.to_string();
  return s.empty() ? "-" : s;
}

std::string opt_formula( const std::optional<std::string>& f ) { return f ? "yes  " + *f : "no"; }

void print_classification( const ClassificationReport& r )
{
  std::string rel;
  for ( auto v : r.relevant )
    rel += ( rel.empty() ? "x" : " x" ) + std::to_string( v );
  std::cout << "table:          " << r.table << "\n"
            << "relevant:       " << ( rel.empty() ? "-" : rel ) << " (k = " << r.k << ")\n"
            << "positive:       " << ( r.positive ? "yes" : "no" ) << "\n"
            << "canalyzing:     ";
  if ( r.canalyzing )
    std::cout << "yes  x" << r.canalyzing->var + 1 << "=" << r.canalyzing->input << " forces " << r.canalyzing->output << "\n";
  else
    std::cout << "no\n";
  std::cout << "read-once:      " << opt_formula( r.read_once ) << "\n"
            << "lro:            " << opt_formula( r.lro ) << "\n"
            << "threshold:      " << ( r.threshold ? "yes  " + r.threshold->to_string() : "no" ) << "\n"
            << "chow:           " << to_string( r.chow ) << "  " << r.chow_parameters.to_string();
  if ( r.chow_collision )
    std::cout << "  collision " << *r.chow_collision;
  std::cout << "\n";
  if ( r.extremal )
    std::cout << "minimal ones:   " << points_text( r.extremal->minimal_ones ) << "\n"
              << "maximal zeros:  " << points_text( r.extremal->maximal_zeros ) << "\n"
              << "r:              " << r.extremal->r() << "\n";
  if ( r.specification_number )
    std::cout << "sigma:          " << *r.specification_number << "\n"
              << "essential:      " << points_text( *r.essential_points ) << "\n";
  if ( r.summability )
    std::cout << "2-summable:     " << points_text( r.summability->false_points ) << " vs " << points_text( r.summability->true_points ) << "\n";
}

TruthTable parse_pattern( const std::string& text )
{
  const auto colon = text.find( ':' );
  if ( colon != std::string::npos && colon > 0 && std::isdigit( static_cast<unsigned char>( text[0] ) ) )
    return parse_table( text );
  return make_family( parse_family( text ) );
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{"Boolean function classification: threshold, read-once, lro, Chow, specification number"};
  app.require_subcommand( 1 );
  bool json = false;

  FunctionInput in;
  auto* classify_cmd = app.add_subcommand( "classify", "all predicates, counts and certificates" );
  auto* extremal_cmd = app.add_subcommand( "extremal", "minimal ones, maximal zeros and r(f) of a positive function" );
  auto* threshold_cmd = app.add_subcommand( "threshold", "threshold representation or a 2-summability witness" );
  auto* specnum_cmd = app.add_subcommand( "specnum", "specification number and essential points" );
  auto* chow_cmd = app.add_subcommand( "chow", "Chow parameters and verdict" );
  auto* contains_cmd = app.add_subcommand( "contains", "search for a restriction equal or equivalent to a pattern" );
  for ( auto* c : {classify_cmd, extremal_cmd, threshold_cmd, specnum_cmd, chow_cmd, contains_cmd} )
  {
    in.attach( c );
    c->add_flag( "--json", json, "emit JSON" );
  }

  std::string pattern;
  bool exact = false;
  contains_cmd->add_option( "--pattern", pattern, "family[:n] or n:HEX" )->required();
  contains_cmd->add_flag( "--exact", exact, "no renaming or negation of variables" );

  auto* family_cmd = app.add_subcommand( "family", "table and DNF of a named family member" );
  std::string family_name_arg;
  std::optional<unsigned> family_n;
  family_cmd->add_option( "name", family_name_arg, "g_n, f_n, h1_n, h2_n, h3, h4, g1, g2 (optionally name:n)" )->required();
  family_cmd->add_option( "n", family_n, "arity for parameterised families" );
  family_cmd->add_flag( "--json", json, "emit JSON" );

  auto* enumerate_cmd = app.add_subcommand( "enumerate", "all positive functions of an arity" );
  unsigned enum_n = 0;
  bool count_only = false;
  enumerate_cmd->add_option( "--arity,-n", enum_n, "arity (at most 6)" )->required();
  enumerate_cmd->add_flag( "--count", count_only, "print the count only" );
  enumerate_cmd->add_flag( "--json", json, "emit JSON" );

  auto* verify_cmd = app.add_subcommand( "verify", "run a verification harness" );
  std::string theorem;
  VerifyOptions vopts;
  bool list = false;
  verify_cmd->add_option( "theorem-id", theorem, "harness id (see --list)" );
  verify_cmd->add_flag( "--list", list, "list harness ids" );
  verify_cmd->add_option( "--n-min", vopts.n_min, "smallest arity" );
  verify_cmd->add_option( "--n-max", vopts.n_max, "largest arity" );
  verify_cmd->add_option( "--jobs,-j", vopts.jobs, "worker threads" )->check( CLI::Range( 1u, 256u ) );
  verify_cmd->add_option( "--samples", vopts.samples, "random instances for sampled harnesses" );
  verify_cmd->add_option( "--seed", vopts.seed, "random seed for sampled harnesses" );
  verify_cmd->add_flag( "--json", json, "emit JSON" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::CallForHelp& e )
  {
    return app.exit( e );
  }
  catch ( const CLI::ParseError& e )
  {
    app.exit( e );
    return exit_usage;
  }

  try
  {
    if ( *classify_cmd )
    {
      const auto r = classify( in.get() );
      if ( json )
        std::cout << dump( to_json( r ) );
      else
        print_classification( r );
    }
    else if ( *extremal_cmd )
    {
      const auto e = extremal_sets( in.get() );
      if ( json )
        std::cout << dump( to_json( e ) );
      else
        std::cout << "minimal ones:  " << points_text( e.minimal_ones ) << "\n"
                  << "maximal zeros: " << points_text( e.maximal_zeros ) << "\n"
                  << "r:             " << e.r() << "\n";
    }
    else if ( *threshold_cmd )
    {
      const auto f = in.get();
      const auto rep = is_threshold( f );
      std::optional<SummabilityWitness> w;
      if ( !rep && f.arity() <= max_summability_arity[2] )
        w = is_k_summable( f, 2 );
      if ( json )
      {
        Json j;
        j["table"] = to_hex_string( f );
        j["threshold"] = rep.has_value();
        j["representation"] = rep ? to_json( *rep ) : Json( nullptr );
        j["summability"] = w ? to_json( *w ) : Json( nullptr );
        std::cout << dump( j );
      }
      else if ( rep )
        std::cout << "threshold: " << rep->to_string() << "\n";
      else if ( w )
        std::cout << "not threshold; 2-summable: " << points_text( w->false_points ) << " vs " << points_text( w->true_points ) << "\n";
      else
        std::cout << "not threshold\n";
    }
    else if ( *specnum_cmd )
    {
      const auto f = in.get();
      const auto rep = is_threshold( f );
      if ( !rep )
        throw precondition_error( "function is not threshold" );
      const auto ess = essential_points( f );
      if ( json )
      {
        Json j;
        j["table"] = to_hex_string( f );
        j["specification_number"] = ess.size();
        j["essential_points"] = to_json( ess );
        j["representation"] = to_json( *rep );
        std::cout << dump( j );
      }
      else
        std::cout << "sigma:     " << ess.size() << "\n"
                  << "essential: " << points_text( ess ) << "\n"
                  << "threshold: " << rep->to_string() << "\n";
    }
    else if ( *chow_cmd )
    {
      const auto f = in.get();
      const auto params = chow_parameters( f );
      const auto v = is_chow( f );
      if ( json )
      {
        Json j;
        j["table"] = to_hex_string( f );
        j["parameters"] = to_json( params );
        j["status"] = std::string( to_string( v.status ) );
        j["collision"] = v.collision ? Json( to_hex_string( *v.collision ) ) : Json( nullptr );
        j["representation"] = v.threshold ? to_json( *v.threshold ) : Json( nullptr );
        j["note"] = v.note;
        std::cout << dump( j );
      }
      else
      {
        std::cout << "parameters: " << params.to_string() << "\n"
                  << "verdict:    " << to_string( v.status ) << " (" << v.note << ")\n";
        if ( v.collision )
          std::cout << "collision:  " << to_hex_string( *v.collision ) << "\n";
      }
    }
    else if ( *contains_cmd )
    {
      const auto f = in.get();
      const auto p = parse_pattern( pattern );
      const auto w = contains_restriction( f, p, !exact );
      if ( json )
      {
        Json j;
        j["table"] = to_hex_string( f );
        j["pattern"] = to_hex_string( p );
        j["exact"] = exact;
        j["witness"] = w ? to_json( *w ) : Json( nullptr );
        std::cout << dump( j );
      }
      else if ( !w )
        std::cout << "none\n";
      else
      {
        std::string perm;
        for ( auto v : w->map.perm )
          perm += ( perm.empty() ? "" : " " ) + std::to_string( v + 1 );
        std::string neg;
        for ( auto v : to_indices( w->map.negated ) )
          neg += ( neg.empty() ? "x" : " x" ) + std::to_string( v + 1 );
        std::cout << "restriction: " << ( w->assignment.size() ? w->assignment.to_string() : "(none)" ) << "\n"
                  << "permutation: " << ( perm.empty() ? "-" : perm ) << "\n"
                  << "negated:     " << ( neg.empty() ? "-" : neg ) << "\n";
      }
    }
    else if ( *family_cmd )
    {
      auto text = family_name_arg;
      if ( family_n )
        text += ":" + std::to_string( *family_n );
      const auto spec = parse_family( text );
      const auto f = make_family( spec );
      if ( json )
      {
        Json j;
        j["family"] = to_string( spec );
        j["table"] = to_hex_string( f );
        j["formula"] = family_formula( spec );
        std::cout << dump( j );
      }
      else
        std::cout << to_hex_string( f ) << "\n" << family_formula( spec ) << "\n";
    }
    else if ( *enumerate_cmd )
    {
      if ( json )
      {
        Json tables = Json::array();
        const auto count = enumerate_positive( enum_n, [&]( const TruthTable& f ) {
          if ( !count_only )
            tables.push_back( to_hex_string( f ) );
        } );
        Json j;
        j["arity"] = enum_n;
        j["count"] = count;
        if ( !count_only )
          j["tables"] = tables;
        std::cout << dump( j );
      }
      else
      {
        const auto count = enumerate_positive( enum_n, [&]( const TruthTable& f ) {
          if ( !count_only )
            std::cout << to_hex_string( f ) << "\n";
        } );
        if ( count_only )
          std::cout << count << "\n";
      }
    }
    else if ( *verify_cmd )
    {
      if ( list )
      {
        for ( const auto& h : harnesses() )
          std::cout << h.id << "  [" << h.default_min << ".." << h.default_max << "]  " << h.summary << "\n";
        return exit_ok;
      }
      if ( theorem.empty() )
        throw precondition_error( "verify needs a theorem id (see verify --list)" );
      const auto r = verify( theorem, vopts );
      if ( json )
        std::cout << dump( to_json( r ) );
      else
      {
        std::cout << r.theorem << " n=" << r.n_min << ".." << r.n_max << ": " << ( r.passed() ? "PASS" : "FAIL" ) << ", "
                  << r.instances << " instances, " << r.counterexample_count << " counterexamples, " << r.duration_ms << " ms\n";
        for ( const auto& c : r.counterexamples )
          std::cout << "  " << c.table << "  " << c.detail << "\n";
      }
      return r.passed() ? exit_ok : exit_counterexample;
    }
  }
  catch ( const std::invalid_argument& e ) // precondition and parse errors
  {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_ok;
}
