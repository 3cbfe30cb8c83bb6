/*!
  \file chow.hpp
  \brief Chow parameters and Chow-function decisions
*/

#pragma once

#include <array>
#include <bit>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "patterns.hpp"
#include "readonce.hpp"
#include "threshold.hpp"
#include "truth_table.hpp"

namespace lrof
{

/*! \brief (w_1(f), ..., w_n(f), w(f)): true points with x_i = 1, and all true points */
struct ChowParameters
{
  std::vector<uint32_t> per_variable;
  uint32_t total = 0;

  /* "(6,6,6,6,9)" */
  std::string to_string() const
  {
    std::string s = "(";
    for ( auto w : per_variable )
      s += std::to_string( w ) + ",";
    return s + std::to_string( total ) + ")";
  }

  friend bool operator==( const ChowParameters&, const ChowParameters& ) = default;
};

inline ChowParameters chow_parameters( const TruthTable& f )
{
  ChowParameters p;
  p.total = static_cast<uint32_t>( f.count_ones() );
  p.per_variable.assign( f.arity(), 0 );
  const auto w = f.words();
  for ( unsigned i = 0; i < f.arity(); ++i )
  {
    uint32_t c = 0;
    if ( i < 6 )
    {
      for ( auto word : w )
        c += static_cast<uint32_t>( std::popcount( word & ~detail::var_zero_masks[i] ) );
    }
    else
    {
      const std::size_t stride = std::size_t{1} << ( i - 6 );
      for ( std::size_t j = 0; j < w.size(); ++j )
      {
        if ( j & stride )
          c += static_cast<uint32_t>( std::popcount( w[j] ) );
      }
    }
    p.per_variable[i] = c;
  }
  return p;
}

inline constexpr unsigned max_exact_chow_arity = 4u;

namespace detail
{

/* parameters of a table with arity <= 4 packed into 5-bit fields */
inline uint32_t chow_key_small( uint64_t w, unsigned n )
{
  uint32_t key = static_cast<uint32_t>( std::popcount( w ) );
  for ( unsigned i = 0; i < n; ++i )
    key |= static_cast<uint32_t>( std::popcount( w & ~var_zero_masks[i] ) ) << ( 5 * ( i + 1 ) );
  return key;
}

inline uint64_t function_count( unsigned n ) { return uint64_t{1} << ( uint64_t{1} << n ); }

/* for every parameter key of arity n <= 4, the two smallest tables having it */
inline const std::unordered_map<uint32_t, std::array<uint64_t, 2>>& smallest_by_key( unsigned n )
{
  static const auto tables = [] {
    std::array<std::unordered_map<uint32_t, std::array<uint64_t, 2>>, max_exact_chow_arity + 1> t;
    for ( unsigned m = 0; m <= max_exact_chow_arity; ++m )
    {
      for ( uint64_t g = 0; g < function_count( m ); ++g )
      {
        auto [it, fresh] = t[m].try_emplace( chow_key_small( g, m ), std::array<uint64_t, 2>{g, ~uint64_t{0}} );
        if ( !fresh && it->second[1] == ~uint64_t{0} )
          it->second[1] = g;
      }
    }
    return t;
  }();
  return tables[n];
}

/* smallest-index function other than f with f's parameters */
inline std::optional<TruthTable> smallest_collision( const TruthTable& f )
{
  const unsigned n = f.arity();
  const uint64_t fw = f.words()[0];
  const auto& pair = smallest_by_key( n ).at( chow_key_small( fw, n ) );
  const uint64_t g = pair[0] != fw ? pair[0] : pair[1];
  if ( g == ~uint64_t{0} )
    return std::nullopt;
  return TruthTable::from_word( n, g );
}

} // namespace detail

/*! \brief Chow parameters of every function of a fixed arity n <= 4, bucketed */
class ChowIndex
{
public:
  explicit ChowIndex( unsigned n ) : n_( n )
  {
    if ( n > max_exact_chow_arity )
      throw precondition_error( "exhaustive Chow index supports arity <= 4" );
    for ( uint64_t g = 0; g < detail::function_count( n ); ++g )
    {
      ++buckets_[detail::chow_key_small( g, n )];
    }
  }

  unsigned arity() const noexcept { return n_; }

  bool is_chow( const TruthTable& f ) const { return class_size( f ) == 1; }

  /* number of functions sharing f's parameters (f included) */
  uint64_t class_size( const TruthTable& f ) const
  {
    if ( f.arity() != n_ )
      throw precondition_error( "arity mismatch with Chow index" );
    return buckets_.at( detail::chow_key_small( f.words()[0], n_ ) );
  }

private:
  unsigned n_;
  std::unordered_map<uint32_t, uint64_t> buckets_;
};

enum class ChowStatus
{
  chow,
  not_chow,
  unknown
};

inline std::string_view to_string( ChowStatus s )
{
  switch ( s )
  {
  case ChowStatus::chow:
    return "chow";
  case ChowStatus::not_chow:
    return "not_chow";
  case ChowStatus::unknown:
    return "unknown";
  }
  return "?";
}

struct ChowVerdict
{
  ChowStatus status = ChowStatus::unknown;
  std::optional<TruthTable> collision;                // not_chow: distinct function, equal parameters
  std::optional<ThresholdRepresentation> threshold;   // chow via threshold
  std::string note;
};

namespace detail
{

/* f with the subcube of `a` replaced by g (g over the free variables) */
inline TruthTable splice( const TruthTable& f, const PartialAssignment& a, const TruthTable& g )
{
  uint32_t mask = 0, value = 0;
  for ( const auto& b : a.bindings() )
  {
    mask |= uint32_t{1} << b.var;
    if ( b.value )
      value |= uint32_t{1} << b.var;
  }
  std::vector<unsigned> free_vars;
  for ( unsigned i = 0; i < f.arity(); ++i )
  {
    if ( !( ( mask >> i ) & 1u ) )
      free_vars.push_back( i );
  }
  return TruthTable::from_function( f.arity(), [&]( uint32_t x ) {
    if ( ( x & mask ) != value )
      return f.bit( x );
    uint32_t y = 0;
    for ( std::size_t j = 0; j < free_vars.size(); ++j )
    {
      if ( ( x >> free_vars[j] ) & 1u )
        y |= uint32_t{1} << j;
    }
    return g.bit( y );
  } );
}

inline ChowVerdict not_chow_verdict( const TruthTable& f, TruthTable other, std::string note )
{
  if ( other == f || chow_parameters( other ) != chow_parameters( f ) )
    throw std::logic_error( "invalid Chow collision certificate" );
  return {ChowStatus::not_chow, std::move( other ), std::nullopt, std::move( note )};
}

} // namespace detail

/*! \brief Decides whether f is a Chow function

  Arity <= 4: exact, by comparing with every function of the same arity.
  Larger arity: threshold functions are Chow; read-once functions that are
  not lro contain a restriction equivalent to g1 or g2, whose parameter
  collision lifts to f by replacing that subcube. Anything else is unknown.
*/
inline ChowVerdict is_chow( const TruthTable& f )
{
  if ( f.arity() <= max_exact_chow_arity )
  {
    if ( auto other = detail::smallest_collision( f ) )
      return detail::not_chow_verdict( f, *other, "exhaustive comparison" );
    return {ChowStatus::chow, std::nullopt, std::nullopt, "exhaustive comparison"};
  }

  if ( auto rep = is_threshold( f ) )
    return {ChowStatus::chow, std::nullopt, std::move( rep ), "threshold functions are Chow"};

  if ( is_read_once( f ) && !is_lro( f ) )
  {
    for ( auto fam : {Family::g1, Family::g2} )
    {
      const auto w = contains_restriction( f, make_family( {fam, 4} ), true );
      if ( !w )
        continue;
      const auto sub = restrict( f, w->assignment );
      const auto partner = detail::smallest_collision( sub );
      if ( !partner )
        throw std::logic_error( "g1/g2 restriction without a Chow collision" );
      return detail::not_chow_verdict( f, detail::splice( f, w->assignment, *partner ),
                                       "collision lifted from restriction " + w->assignment.to_string() + " equivalent to " + std::string( family_name( fam ) ) );
    }
    throw std::logic_error( "read-once non-lro function without a g1/g2 restriction" );
  }
  return {ChowStatus::unknown, std::nullopt, std::nullopt, "no decision rule applies above arity 4"};
}

} // namespace lrof
