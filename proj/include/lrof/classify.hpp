/*!
  \file classify.hpp
  \brief One record holding every predicate, count and certificate for a function
*/

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chow.hpp"
#include "formula.hpp"
#include "monotone.hpp"
#include "readonce.hpp"
#include "threshold.hpp"
#include "truth_table.hpp"

namespace lrof
{

struct ClassificationReport
{
  std::string table;
  unsigned arity = 0;
  std::vector<unsigned> relevant; // 1-based
  unsigned k = 0;

  bool positive = false;
  std::optional<CanalyzingCertificate> canalyzing;
  std::optional<std::string> read_once; // certificate formula
  std::optional<std::string> lro;       // nested certificate formula
  std::optional<ThresholdRepresentation> threshold;

  ChowParameters chow_parameters;
  ChowStatus chow = ChowStatus::unknown;
  std::optional<std::string> chow_collision; // n:HEX
  std::string chow_note;

  std::optional<ExtremalSets> extremal; // positive only
  std::optional<std::size_t> specification_number;
  std::optional<std::vector<Point>> essential_points; // threshold only
  std::optional<SummabilityWitness> summability;      // non-threshold, k = 2

  /* empty when consistent, otherwise the first violated relation */
  std::string inconsistency() const
  {
    if ( k != relevant.size() )
      return "k differs from the relevant-variable count";
    if ( lro && !( read_once && threshold ) )
      return "lro but not both read-once and threshold";
    if ( threshold && chow == ChowStatus::not_chow )
      return "threshold but not Chow";
    if ( positive != extremal.has_value() )
      return "extremal sets present iff positive violated";
    if ( positive && threshold && extremal->r() < k + 1 )
      return "positive threshold with r < k + 1";
    if ( threshold.has_value() != specification_number.has_value() )
      return "specification number present iff threshold violated";
    if ( specification_number && *specification_number != essential_points->size() )
      return "specification number differs from essential-point count";
    if ( threshold && summability )
      return "threshold function with a summability witness";
    return {};
  }
};

inline ClassificationReport classify( const TruthTable& f )
{
  ClassificationReport r;
  r.table = to_hex_string( f );
  r.arity = f.arity();
  for ( auto v : to_indices( relevant_variables( f ) ) )
    r.relevant.push_back( v + 1 );
  r.k = static_cast<unsigned>( r.relevant.size() );

  r.positive = is_positive( f );
  r.canalyzing = is_canalyzing( f );
  if ( auto ro = is_read_once( f ) )
    r.read_once = render( *ro );
  if ( auto l = is_lro( f ) )
    r.lro = render( *l );
  r.threshold = is_threshold( f );

  r.chow_parameters = chow_parameters( f );
  auto verdict = is_chow( f );
  r.chow = verdict.status;
  if ( verdict.collision )
    r.chow_collision = to_hex_string( *verdict.collision );
  r.chow_note = verdict.note;

  if ( r.positive )
    r.extremal = extremal_sets( f );
  if ( r.threshold )
  {
    r.essential_points = essential_points( f );
    r.specification_number = r.essential_points->size();
  }
  else if ( f.arity() <= max_summability_arity[2] )
    r.summability = is_k_summable( f, 2 );

  if ( const auto bad = r.inconsistency(); !bad.empty() )
    throw std::logic_error( "inconsistent classification of " + r.table + ": " + bad );
  return r;
}

} // namespace lrof
