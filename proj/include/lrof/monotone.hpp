/*!
  \file monotone.hpp
  \brief Positive (monotone) functions: positivity, maximal zeros, minimal
         ones, canalyzing variables
*/

#pragma once

#include <algorithm>
#include <iterator>
#include <optional>
#include <vector>

#include "truth_table.hpp"

namespace lrof
{

inline bool is_positive( const TruthTable& f )
{
  for ( unsigned i = 0; i < f.arity(); ++i )
  {
    if ( !is_positive_in( f, i ) )
      return false;
  }
  return true;
}

/*! \brief Extremal points of a positive function

  Both lists are sorted by point index.
*/
struct ExtremalSets
{
  std::vector<Point> maximal_zeros;
  std::vector<Point> minimal_ones;

  std::size_t r() const noexcept { return maximal_zeros.size() + minimal_ones.size(); }

  /* all extremal points, sorted by index */
  std::vector<Point> all() const
  {
    std::vector<Point> v;
    v.reserve( r() );
    std::merge( maximal_zeros.begin(), maximal_zeros.end(), minimal_ones.begin(), minimal_ones.end(), std::back_inserter( v ) );
    return v;
  }
};

namespace detail
{

/* bitmasks of minimal ones and maximal zeros, valid for any f */
inline std::pair<TruthTable, TruthTable> extremal_masks( const TruthTable& f )
{
  const unsigned n = f.arity();
  if ( n <= 6 )
  {
    const uint64_t w = f.words()[0];
    const uint64_t valid = n == 6 ? ~uint64_t{0} : ( ( uint64_t{1} << ( uint64_t{1} << n ) ) - 1 );
    const uint64_t z = ~w & valid;
    uint64_t lower_one = 0, upper_zero = 0;
    for ( unsigned i = 0; i < n; ++i )
    {
      const auto m = var_zero_masks[i];
      const auto s = 1u << i;
      lower_one |= ( w & m ) << s;
      upper_zero |= ( z >> s ) & m;
    }
    return {TruthTable::from_word( n, w & ~lower_one ), TruthTable::from_word( n, z & ~upper_zero )};
  }

  TruthTable mins( n ), maxs( n );
  for ( uint32_t x = 0; x < ( uint32_t{1} << n ); ++x )
  {
    const bool v = f.bit( x );
    bool extremal = true;
    for ( unsigned i = 0; i < n && extremal; ++i )
    {
      const uint32_t e = uint32_t{1} << i;
      if ( v && ( x & e ) && f.bit( x ^ e ) )
        extremal = false;
      if ( !v && !( x & e ) && !f.bit( x | e ) )
        extremal = false;
    }
    if ( extremal )
      ( v ? mins : maxs ).set_bit( x, true );
  }
  return {mins, maxs};
}

inline std::vector<Point> points_of( const TruthTable& mask )
{
  std::vector<Point> pts;
  const auto w = mask.words();
  for ( std::size_t j = 0; j < w.size(); ++j )
  {
    for ( uint64_t b = w[j]; b; b &= b - 1 )
    {
      pts.emplace_back( mask.arity(), static_cast<uint32_t>( j * 64 + static_cast<unsigned>( std::countr_zero( b ) ) ) );
    }
  }
  return pts;
}

} // namespace detail

inline ExtremalSets extremal_sets( const TruthTable& f )
{
  if ( !is_positive( f ) )
    throw precondition_error( "extremal sets are defined for positive functions only" );
  const auto [mins, maxs] = detail::extremal_masks( f );
  return {detail::points_of( maxs ), detail::points_of( mins )};
}

inline std::size_t extremal_count( const TruthTable& f )
{
  if ( !is_positive( f ) )
    throw precondition_error( "extremal sets are defined for positive functions only" );
  const auto [mins, maxs] = detail::extremal_masks( f );
  return mins.count_ones() + maxs.count_ones();
}

/*! \brief f restricted to x_var = input is the constant output */
struct CanalyzingCertificate
{
  unsigned var;
  bool input;
  bool output;
  friend bool operator==( const CanalyzingCertificate&, const CanalyzingCertificate& ) = default;
};

/* first certificate by (variable, input value) */
inline std::optional<CanalyzingCertificate> is_canalyzing( const TruthTable& f )
{
  for ( unsigned i = 0; i < f.arity(); ++i )
  {
    for ( bool a : {false, true} )
    {
      const auto c = cofactor( f, i, a );
      if ( c.is_const0() )
        return CanalyzingCertificate{i, a, false};
      if ( c.is_const1() )
        return CanalyzingCertificate{i, a, true};
    }
  }
  return std::nullopt;
}

/*! \brief Extremal points corresponding to at least one variable of `vars`

  A maximal zero corresponds to x_i when its i-th coordinate is 0, a minimal
  one when it is 1. Sorted by point index.
*/
inline std::vector<Point> extremals_corresponding( const TruthTable& f, VarSet vars )
{
  const auto ext = extremal_sets( f );
  if ( vars & ~relevant_variables( f ) )
    throw precondition_error( "variable set contains an irrelevant variable" );

  std::vector<Point> out;
  for ( const auto& p : ext.all() )
  {
    const bool is_one = f.bit( p.index() );
    const uint32_t hits = is_one ? ( p.index() & vars ) : ( ~p.index() & vars );
    if ( hits )
      out.push_back( p );
  }
  return out;
}

} // namespace lrof
