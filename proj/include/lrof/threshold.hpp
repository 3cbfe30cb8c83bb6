/*!
  \file threshold.hpp
  \brief Threshold functions: exact recognition, summability witnesses,
         essential points and the specification number

  A function f is threshold when weights w and a threshold t exist with
  f(x) = 0 <=> w.x <= t. All decisions are made with the exact LP of
  rational_lp.hpp; the unit gap (ones satisfy w.x >= t + 1) loses nothing
  since any strict separation of finitely many points can be rescaled.
*/

#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "monotone.hpp"
#include "rational_lp.hpp"
#include "readonce.hpp"
#include "truth_table.hpp"

namespace lrof
{

struct ThresholdRepresentation
{
  std::vector<Rational> weights;
  Rational threshold;

  /* f(x) = 0 <=> w.x <= t at every point */
  bool represents( const TruthTable& f ) const
  {
    if ( weights.size() != f.arity() )
      return false;
    Rational s;
    for ( uint32_t x = 0; x < f.num_bits(); ++x )
    {
      s = 0;
      for ( unsigned i = 0; i < f.arity(); ++i )
      {
        if ( ( x >> i ) & 1u )
          s += weights[i];
      }
      if ( ( s > threshold ) != f.bit( x ) )
        return false;
    }
    return true;
  }

  /* "3x1 + 2x2 + 2x3 + x4 <= 4" */
  std::string to_string() const
  {
    std::string s;
    for ( std::size_t i = 0; i < weights.size(); ++i )
    {
      const auto& w = weights[i];
      const auto var = "x" + std::to_string( i + 1 );
      if ( s.empty() )
      {
        if ( sgn( w ) < 0 )
          s += "-";
      }
      else
        s += sgn( w ) < 0 ? " - " : " + ";
      const Rational a = abs( w );
      if ( a != 1 )
        s += a.get_str();
      s += var;
    }
    if ( s.empty() )
      s = "0";
    return s + " <= " + threshold.get_str();
  }

  friend bool operator==( const ThresholdRepresentation&, const ThresholdRepresentation& ) = default;
};

namespace detail
{

/* scale so that all entries are coprime integers */
inline void normalize_integral( ThresholdRepresentation& r )
{
  mpz_class l = 1, g = 0;
  auto each = [&]( auto&& fn ) {
    for ( auto& w : r.weights )
      fn( w );
    fn( r.threshold );
  };
  each( [&]( Rational& q ) { mpz_lcm( l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t() ); } );
  each( [&]( Rational& q ) {
    q *= l;
    q.canonicalize();
    mpz_gcd( g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t() );
  } );
  if ( g > 1 )
    each( [&]( Rational& q ) { q /= g; } );
}

inline ThresholdRepresentation from_lp_solution( const std::vector<Rational>& z, unsigned n )
{
  ThresholdRepresentation r;
  r.weights.assign( z.begin(), z.begin() + n );
  r.threshold = z[n];
  return r;
}

inline std::vector<long> point_row( uint32_t x, unsigned n, long sign )
{
  std::vector<long> a( n + 1, 0 );
  for ( unsigned i = 0; i < n; ++i )
  {
    if ( ( x >> i ) & 1u )
      a[i] = sign;
  }
  a[n] = -sign;
  return a;
}

/* positive f: separate maximal zeros from minimal ones with w >= 0 */
inline std::optional<ThresholdRepresentation> positive_threshold_lp( const TruthTable& g )
{
  const unsigned n = g.arity();
  const auto [mins, maxs] = extremal_masks( g );
  FeasibilitySystem sys( n + 1 );
  for ( const auto& p : points_of( maxs ) )
    sys.add_less_equal( point_row( p.index(), n, 1 ), 0 ); // w.x - t <= 0
  for ( const auto& p : points_of( mins ) )
    sys.add_less_equal( point_row( p.index(), n, -1 ), -1 ); // t + 1 - w.y <= 0
  for ( unsigned i = 0; i < n; ++i )
  {
    std::vector<long> a( n + 1, 0 );
    a[i] = -1;
    sys.add_less_equal( a, 0 );
  }
  const auto z = sys.solve();
  if ( !z )
    return std::nullopt;
  return from_lp_solution( *z, n );
}

} // namespace detail

/*! \brief Exact threshold recognition

  Threshold functions are unate, so binate inputs are rejected outright.
  Otherwise the function is made positive by negating variables, the
  maximal zeros are separated from the minimal ones with nonnegative weights,
  and the weights are mapped back. The result has coprime integer entries and
  is re-verified on every point.
*/
inline std::optional<ThresholdRepresentation> is_threshold( const TruthTable& f )
{
  const unsigned n = f.arity();
  const auto neg = detail::unate_negations( f );
  if ( !neg )
    return std::nullopt;

  const auto g = negate_variables( f, *neg );
  auto rep = detail::positive_threshold_lp( g );
  if ( !rep )
    return std::nullopt;

  // g(x) = f(x ^ neg): w_i x_i with x_i -> 1 - x_i
  for ( unsigned i = 0; i < n; ++i )
  {
    if ( ( *neg >> i ) & 1u )
    {
      rep->threshold -= rep->weights[i];
      rep->weights[i] = -rep->weights[i];
    }
  }
  detail::normalize_integral( *rep );
  if ( !rep->represents( f ) )
    throw std::logic_error( "threshold representation fails re-verification" );
  return rep;
}

/*! \brief Threshold recognition from the full system over all 2^n points with
           unconstrained weights (no unateness shortcut) */
inline std::optional<ThresholdRepresentation> is_threshold_full_lp( const TruthTable& f )
{
  const unsigned n = f.arity();
  FeasibilitySystem sys( n + 1 );
  for ( uint32_t x = 0; x < f.num_bits(); ++x )
  {
    if ( f.bit( x ) )
      sys.add_less_equal( detail::point_row( x, n, -1 ), -1 );
    else
      sys.add_less_equal( detail::point_row( x, n, 1 ), 0 );
  }
  const auto z = sys.solve();
  if ( !z )
    return std::nullopt;
  auto rep = detail::from_lp_solution( *z, n );
  detail::normalize_integral( rep );
  if ( !rep.represents( f ) )
    throw std::logic_error( "threshold representation fails re-verification" );
  return rep;
}

/*! \brief r false points and r true points with equal coordinate sums */
struct SummabilityWitness
{
  std::vector<Point> false_points;
  std::vector<Point> true_points;

  bool is_valid_for( const TruthTable& f ) const
  {
    if ( false_points.size() != true_points.size() || false_points.size() < 2 )
      return false;
    std::vector<int> sum( f.arity(), 0 );
    for ( const auto& p : false_points )
    {
      if ( p.arity() != f.arity() || f.bit( p.index() ) )
        return false;
      for ( unsigned i = 0; i < f.arity(); ++i )
        sum[i] += p.coordinate( i );
    }
    for ( const auto& p : true_points )
    {
      if ( p.arity() != f.arity() || !f.bit( p.index() ) )
        return false;
      for ( unsigned i = 0; i < f.arity(); ++i )
        sum[i] -= p.coordinate( i );
    }
    return std::all_of( sum.begin(), sum.end(), []( int s ) { return s == 0; } );
  }
};

namespace detail
{

/* coordinate i of x moved to bits 2i..2i+1, so sums of up to 3 points add lane-wise */
inline uint64_t spread_lanes( uint32_t x )
{
  uint64_t r = 0;
  for ( unsigned i = 0; x; ++i, x >>= 1 )
  {
    if ( x & 1u )
      r |= uint64_t{1} << ( 2 * i );
  }
  return r;
}

} // namespace detail

inline constexpr unsigned max_summability_arity[] = {0, 0, 12, 8};

/*! \brief Searches for a k-summability witness, k in {2, 3}

  Multisets of r = 2..k zeros are indexed by their coordinate sum; multisets
  of ones are then scanned in lexicographic order. The first hit is returned.
*/
inline std::optional<SummabilityWitness> is_k_summable( const TruthTable& f, unsigned k )
{
  if ( k < 2 || k > 3 )
    throw precondition_error( "k-summability is supported for k = 2 and k = 3 only" );
  if ( f.arity() > max_summability_arity[k] )
    throw precondition_error( "arity too large for " + std::to_string( k ) + "-summability search" );

  const unsigned n = f.arity();
  std::vector<uint32_t> zeros, ones;
  std::vector<uint64_t> zs, os;
  for ( uint32_t x = 0; x < f.num_bits(); ++x )
  {
    ( f.bit( x ) ? ones : zeros ).push_back( x );
    ( f.bit( x ) ? os : zs ).push_back( detail::spread_lanes( x ) );
  }

  auto to_points = [n]( std::initializer_list<uint32_t> xs ) {
    std::vector<Point> v;
    for ( auto x : xs )
      v.emplace_back( n, x );
    return v;
  };

  {
    std::unordered_map<uint64_t, std::pair<uint32_t, uint32_t>> sums;
    for ( std::size_t a = 0; a < zeros.size(); ++a )
      for ( std::size_t b = a; b < zeros.size(); ++b )
        sums.try_emplace( zs[a] + zs[b], zeros[a], zeros[b] );
    for ( std::size_t a = 0; a < ones.size(); ++a )
      for ( std::size_t b = a; b < ones.size(); ++b )
      {
        const auto it = sums.find( os[a] + os[b] );
        if ( it != sums.end() )
          return SummabilityWitness{to_points( {it->second.first, it->second.second} ), to_points( {ones[a], ones[b]} )};
      }
  }

  if ( k == 3 )
  {
    struct Triple
    {
      uint32_t a, b, c;
    };
    std::unordered_map<uint64_t, Triple> sums;
    for ( std::size_t a = 0; a < zeros.size(); ++a )
      for ( std::size_t b = a; b < zeros.size(); ++b )
        for ( std::size_t c = b; c < zeros.size(); ++c )
          sums.try_emplace( zs[a] + zs[b] + zs[c], Triple{zeros[a], zeros[b], zeros[c]} );
    for ( std::size_t a = 0; a < ones.size(); ++a )
      for ( std::size_t b = a; b < ones.size(); ++b )
        for ( std::size_t c = b; c < ones.size(); ++c )
        {
          const auto it = sums.find( os[a] + os[b] + os[c] );
          if ( it != sums.end() )
          {
            const auto& t = it->second;
            return SummabilityWitness{to_points( {t.a, t.b, t.c} ), to_points( {ones[a], ones[b], ones[c]} )};
          }
        }
  }
  return std::nullopt;
}

namespace detail
{

inline void require_threshold( const TruthTable& f )
{
  if ( !is_threshold( f ) )
    throw precondition_error( "function is not threshold" );
}

inline bool flip_is_threshold( const TruthTable& f, uint32_t x )
{
  auto g = f;
  g.flip_bit( x );
  return is_threshold( g ).has_value();
}

} // namespace detail

/*! \brief p is essential when f flipped at p alone is still threshold */
inline bool is_essential( const TruthTable& f, const Point& p )
{
  if ( p.arity() != f.arity() )
    throw precondition_error( "arity mismatch between function and point" );
  detail::require_threshold( f );
  return detail::flip_is_threshold( f, p.index() );
}

namespace detail
{

/* w.p = t, w.x <= t on zeros, w.y >= t + 1 on ones, over all 2^n points with free weights */
inline bool hyperplane_through( const TruthTable& f, uint32_t p )
{
  const unsigned n = f.arity();
  FeasibilitySystem sys( n + 1 );
  for ( uint32_t x = 0; x < f.num_bits(); ++x )
  {
    if ( f.bit( x ) )
      sys.add_less_equal( point_row( x, n, -1 ), -1 );
    else if ( x == p )
      sys.add_equal( point_row( x, n, 1 ), 0 );
    else
      sys.add_less_equal( point_row( x, n, 1 ), 0 );
  }
  return sys.solve().has_value();
}

} // namespace detail

/*! \brief Whether some separating hyperplane of f passes through the zero p */
inline bool zero_on_separating_hyperplane( const TruthTable& f, const Point& p )
{
  if ( p.arity() != f.arity() )
    throw precondition_error( "arity mismatch between function and point" );
  detail::require_threshold( f );
  if ( f.bit( p.index() ) )
    throw precondition_error( "point is a one of the function" );
  return detail::hyperplane_through( f, p.index() );
}

/* sorted by index */
inline std::vector<Point> essential_points( const TruthTable& f )
{
  detail::require_threshold( f );
  std::vector<Point> pts;
  for ( uint32_t x = 0; x < f.num_bits(); ++x )
  {
    if ( detail::flip_is_threshold( f, x ) )
      pts.emplace_back( f.arity(), x );
  }
  return pts;
}

/* the minimum size of a specifying set, which equals the essential-point count */
inline std::size_t specification_number( const TruthTable& f ) { return essential_points( f ).size(); }

/*! \brief S specifies f among threshold functions iff it holds every essential point */
inline bool is_specifying_set( const TruthTable& f, std::span<const Point> set )
{
  const auto ess = essential_points( f );
  return std::all_of( ess.begin(), ess.end(), [&]( const Point& p ) {
    return std::find( set.begin(), set.end(), p ) != set.end();
  } );
}

} // namespace lrof
