/*!
  \file report_json.hpp
  \brief JSON encoding and decoding of reports

  Keys keep insertion order, so decoding an emitted document and encoding it
  again reproduces it byte for byte. Points are coordinate arrays (x1 first),
  variables are 1-based, tables use the n:HEX text format.
*/

#pragma once

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chow.hpp"
#include "classify.hpp"
#include "monotone.hpp"
#include "patterns.hpp"
#include "threshold.hpp"
#include "truth_table.hpp"
#include "verify.hpp"

namespace lrof
{

using Json = nlohmann::ordered_json;

/* two-space indentation and a trailing newline */
inline std::string dump( const Json& j ) { return j.dump( 2 ) + "\n"; }

namespace detail
{

template<typename T, typename Fn>
Json optional_json( const std::optional<T>& v, Fn&& fn )
{
  return v ? fn( *v ) : Json( nullptr );
}

inline long long integral( const Rational& q )
{
  if ( q.get_den() != 1 || !q.get_num().fits_slong_p() )
    throw std::domain_error( "representation entry is not a 64-bit integer: " + q.get_str() );
  return q.get_num().get_si();
}

} // namespace detail

/* --- points and point lists ----------------------------------------- */

inline Json to_json( const Point& p ) { return p.coordinates(); }

inline Point point_from_json( const Json& j ) { return Point::from_coordinates( j.get<std::vector<int>>() ); }

inline Json to_json( const std::vector<Point>& ps )
{
  Json a = Json::array();
  for ( const auto& p : ps )
    a.push_back( to_json( p ) );
  return a;
}

inline std::vector<Point> points_from_json( const Json& j )
{
  std::vector<Point> ps;
  for ( const auto& e : j )
    ps.push_back( point_from_json( e ) );
  return ps;
}

/* --- module records ----------------------------------------------------- */

inline Json to_json( const ExtremalSets& e )
{
  Json j;
  j["minimal_ones"] = to_json( e.minimal_ones );
  j["maximal_zeros"] = to_json( e.maximal_zeros );
  j["r"] = e.r();
  return j;
}

inline ExtremalSets extremal_sets_from_json( const Json& j )
{
  ExtremalSets e;
  e.minimal_ones = points_from_json( j.at( "minimal_ones" ) );
  e.maximal_zeros = points_from_json( j.at( "maximal_zeros" ) );
  if ( j.at( "r" ).get<std::size_t>() != e.r() )
    throw std::invalid_argument( "extremal count does not match the point lists" );
  return e;
}

inline Json to_json( const ThresholdRepresentation& r )
{
  Json j;
  Json w = Json::array();
  for ( const auto& x : r.weights )
    w.push_back( detail::integral( x ) );
  j["weights"] = w;
  j["threshold"] = detail::integral( r.threshold );
  j["inequality"] = r.to_string();
  return j;
}

inline ThresholdRepresentation threshold_from_json( const Json& j )
{
  ThresholdRepresentation r;
  for ( const auto& w : j.at( "weights" ) )
    r.weights.emplace_back( w.get<long>() );
  r.threshold = j.at( "threshold" ).get<long>();
  if ( j.at( "inequality" ).get<std::string>() != r.to_string() )
    throw std::invalid_argument( "inequality text does not match the weights" );
  return r;
}

inline Json to_json( const SummabilityWitness& w )
{
  Json j;
  j["false_points"] = to_json( w.false_points );
  j["true_points"] = to_json( w.true_points );
  return j;
}

inline SummabilityWitness summability_from_json( const Json& j )
{
  return {points_from_json( j.at( "false_points" ) ), points_from_json( j.at( "true_points" ) )};
}

inline Json to_json( const CanalyzingCertificate& c )
{
  Json j;
  j["variable"] = c.var + 1;
  j["input"] = c.input ? 1 : 0;
  j["output"] = c.output ? 1 : 0;
  return j;
}

inline CanalyzingCertificate canalyzing_from_json( const Json& j )
{
  return {j.at( "variable" ).get<unsigned>() - 1, j.at( "input" ).get<int>() != 0, j.at( "output" ).get<int>() != 0};
}

inline Json to_json( const ChowParameters& p )
{
  Json j;
  j["per_variable"] = p.per_variable;
  j["total"] = p.total;
  return j;
}

inline ChowParameters chow_parameters_from_json( const Json& j )
{
  return {j.at( "per_variable" ).get<std::vector<uint32_t>>(), j.at( "total" ).get<uint32_t>()};
}

inline ChowStatus chow_status_from_string( std::string_view s )
{
  for ( auto c : {ChowStatus::chow, ChowStatus::not_chow, ChowStatus::unknown} )
  {
    if ( to_string( c ) == s )
      return c;
  }
  throw std::invalid_argument( "unknown Chow status '" + std::string( s ) + "'" );
}

inline Json to_json( const RestrictionWitness& w )
{
  Json j;
  Json a = Json::array();
  for ( const auto& b : w.assignment.bindings() )
    a.push_back( Json{{"variable", b.var + 1}, {"value", b.value ? 1 : 0}} );
  j["assignment"] = a;
  Json perm = Json::array();
  for ( auto p : w.map.perm )
    perm.push_back( p + 1 );
  j["permutation"] = perm;
  Json neg = Json::array();
  for ( auto v : to_indices( w.map.negated ) )
    neg.push_back( v + 1 );
  j["negated"] = neg;
  j["output_negated"] = w.output_negated;
  return j;
}

/* --- classification report ----------------------------------------------- */

namespace detail
{

inline Json formula_json( const std::optional<std::string>& f )
{
  Json j;
  j["holds"] = f.has_value();
  j["formula"] = f ? Json( *f ) : Json( nullptr );
  return j;
}

inline std::optional<std::string> formula_from_json( const Json& j )
{
  if ( !j.at( "holds" ).get<bool>() )
    return std::nullopt;
  return j.at( "formula" ).get<std::string>();
}

} // namespace detail

inline Json to_json( const ClassificationReport& r )
{
  Json j;
  j["table"] = r.table;
  j["arity"] = r.arity;
  j["relevant"] = r.relevant;
  j["k"] = r.k;
  j["positive"] = r.positive;
  j["canalyzing"] = detail::optional_json( r.canalyzing, []( const auto& c ) { return to_json( c ); } );
  j["read_once"] = detail::formula_json( r.read_once );
  j["lro"] = detail::formula_json( r.lro );

  Json th;
  th["holds"] = r.threshold.has_value();
  th["representation"] = detail::optional_json( r.threshold, []( const auto& t ) { return to_json( t ); } );
  j["threshold"] = th;

  Json ch;
  ch["parameters"] = to_json( r.chow_parameters );
  ch["status"] = std::string( to_string( r.chow ) );
  ch["collision"] = r.chow_collision ? Json( *r.chow_collision ) : Json( nullptr );
  ch["note"] = r.chow_note;
  j["chow"] = ch;

  j["extremal"] = detail::optional_json( r.extremal, []( const auto& e ) { return to_json( e ); } );
  j["specification_number"] = r.specification_number ? Json( *r.specification_number ) : Json( nullptr );
  j["essential_points"] = detail::optional_json( r.essential_points, []( const auto& e ) { return to_json( e ); } );
  j["summability"] = detail::optional_json( r.summability, []( const auto& w ) { return to_json( w ); } );
  return j;
}

inline ClassificationReport classification_from_json( const Json& j )
{
  ClassificationReport r;
  r.table = j.at( "table" ).get<std::string>();
  r.arity = j.at( "arity" ).get<unsigned>();
  r.relevant = j.at( "relevant" ).get<std::vector<unsigned>>();
  r.k = j.at( "k" ).get<unsigned>();
  r.positive = j.at( "positive" ).get<bool>();
  if ( !j.at( "canalyzing" ).is_null() )
    r.canalyzing = canalyzing_from_json( j["canalyzing"] );
  r.read_once = detail::formula_from_json( j.at( "read_once" ) );
  r.lro = detail::formula_from_json( j.at( "lro" ) );
  if ( j.at( "threshold" ).at( "holds" ).get<bool>() )
    r.threshold = threshold_from_json( j["threshold"].at( "representation" ) );

  const auto& ch = j.at( "chow" );
  r.chow_parameters = chow_parameters_from_json( ch.at( "parameters" ) );
  r.chow = chow_status_from_string( ch.at( "status" ).get<std::string>() );
  if ( !ch.at( "collision" ).is_null() )
    r.chow_collision = ch["collision"].get<std::string>();
  r.chow_note = ch.at( "note" ).get<std::string>();

  if ( !j.at( "extremal" ).is_null() )
    r.extremal = extremal_sets_from_json( j["extremal"] );
  if ( !j.at( "specification_number" ).is_null() )
    r.specification_number = j["specification_number"].get<std::size_t>();
  if ( !j.at( "essential_points" ).is_null() )
    r.essential_points = points_from_json( j["essential_points"] );
  if ( !j.at( "summability" ).is_null() )
    r.summability = summability_from_json( j["summability"] );
  if ( const auto why = r.inconsistency(); !why.empty() )
    throw std::invalid_argument( "inconsistent classification report: " + why );
  return r;
}

/* --- verification report --------------------------------------------------- */

inline Json to_json( const VerificationReport& r )
{
  Json j;
  j["theorem"] = r.theorem;
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  j["instances"] = r.instances;
  j["passed"] = r.passed();
  j["counterexample_count"] = r.counterexample_count;
  Json cs = Json::array();
  for ( const auto& c : r.counterexamples )
    cs.push_back( Json{{"table", c.table}, {"detail", c.detail}} );
  j["counterexamples"] = cs;
  j["duration_ms"] = r.duration_ms;
  return j;
}

inline VerificationReport verification_from_json( const Json& j )
{
  VerificationReport r;
  r.theorem = j.at( "theorem" ).get<std::string>();
  r.n_min = j.at( "n_min" ).get<unsigned>();
  r.n_max = j.at( "n_max" ).get<unsigned>();
  r.instances = j.at( "instances" ).get<uint64_t>();
  r.counterexample_count = j.at( "counterexample_count" ).get<uint64_t>();
  for ( const auto& c : j.at( "counterexamples" ) )
    r.counterexamples.push_back( {c.at( "table" ).get<std::string>(), c.at( "detail" ).get<std::string>()} );
  r.duration_ms = j.at( "duration_ms" ).get<uint64_t>();
  if ( j.at( "passed" ).get<bool>() != r.passed() )
    throw std::invalid_argument( "passed flag contradicts the counterexample list" );
  return r;
}

} // namespace lrof
