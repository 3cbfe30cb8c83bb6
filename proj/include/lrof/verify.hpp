/*!
  \file verify.hpp
  \brief Exhaustive and sampled verification harnesses with stable ids
*/

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "chow.hpp"
#include "enumerate.hpp"
#include "monotone.hpp"
#include "patterns.hpp"
#include "random_functions.hpp"
#include "readonce.hpp"
#include "threshold.hpp"
#include "truth_table.hpp"

namespace lrof
{

struct Counterexample
{
  std::string table; // n:HEX
  std::string detail;
  friend bool operator==( const Counterexample&, const Counterexample& ) = default;
};

struct VerificationReport
{
  std::string theorem;
  unsigned n_min = 0;
  unsigned n_max = 0;
  uint64_t instances = 0;
  uint64_t counterexample_count = 0;
  std::vector<Counterexample> counterexamples; // first max_reported, in sweep order
  uint64_t duration_ms = 0;

  bool passed() const noexcept { return counterexamples.empty(); }
  friend bool operator==( const VerificationReport&, const VerificationReport& ) = default;
};

struct VerifyOptions
{
  std::optional<unsigned> n_min;
  std::optional<unsigned> n_max;
  unsigned jobs = 1;
  std::optional<uint64_t> samples; // sampled harnesses only
  uint64_t seed = 1;
};

inline constexpr std::size_t max_reported = 32;

/*! \brief Per-worker collector of checked instances and failures */
class Sink
{
public:
  void count( uint64_t k = 1 ) noexcept { instances_ += k; }

  void fail( const TruthTable& f, std::string detail ) { fail( to_hex_string( f ), std::move( detail ) ); }

  void fail( std::string table, std::string detail )
  {
    ++failures_;
    if ( found_.size() < max_reported )
      found_.push_back( {std::move( table ), std::move( detail )} );
  }

  /* records a failure unless ok */
  void expect( bool ok, const TruthTable& f, const char* what )
  {
    if ( !ok )
      fail( f, what );
  }

  void merge_into( VerificationReport& r ) const
  {
    r.instances += instances_;
    r.counterexample_count += failures_;
    for ( const auto& c : found_ )
    {
      if ( r.counterexamples.size() < max_reported )
        r.counterexamples.push_back( c );
    }
  }

private:
  uint64_t instances_ = 0;
  uint64_t failures_ = 0;
  std::vector<Counterexample> found_;
};

/*! \brief Runs fn(i, sink) for i in [0, count) on `jobs` threads

  Each worker takes one contiguous block; sinks are merged in block order,
  so reports do not depend on the number of jobs.
*/
template<typename Fn>
void parallel_for( uint64_t count, unsigned jobs, VerificationReport& report, Fn&& fn )
{
  jobs = std::max( 1u, std::min<unsigned>( jobs, static_cast<unsigned>( std::min<uint64_t>( count, 1024 ) ) ) );
  std::vector<Sink> sinks( jobs );
  if ( jobs == 1 )
  {
    for ( uint64_t i = 0; i < count; ++i )
      fn( i, sinks[0] );
  }
  else
  {
    std::vector<std::exception_ptr> errors( jobs );
    std::vector<std::thread> pool;
    for ( unsigned w = 0; w < jobs; ++w )
    {
      pool.emplace_back( [&, w] {
        try
        {
          const uint64_t lo = count * w / jobs, hi = count * ( w + 1 ) / jobs;
          for ( uint64_t i = lo; i < hi; ++i )
            fn( i, sinks[w] );
        }
        catch ( ... )
        {
          errors[w] = std::current_exception();
        }
      } );
    }
    for ( auto& t : pool )
      t.join();
    for ( auto& e : errors )
    {
      if ( e )
        std::rethrow_exception( e );
    }
  }
  for ( const auto& s : sinks )
    s.merge_into( report );
}

namespace detail
{

inline uint64_t all_functions( unsigned n ) { return uint64_t{1} << ( uint64_t{1} << n ); }

/* fn(f, sink) for every function of arity n <= 4 */
template<typename Fn>
void for_all_functions( unsigned n, unsigned jobs, VerificationReport& r, Fn&& fn )
{
  parallel_for( all_functions( n ), jobs, r, [&]( uint64_t w, Sink& s ) { fn( TruthTable::from_word( n, w ), s ); } );
}

/* fn(f, sink) for every positive function of arity n <= 6 */
template<typename Fn>
void for_all_positive( unsigned n, unsigned jobs, VerificationReport& r, Fn&& fn )
{
  if ( n == 0 )
  {
    parallel_for( 2, 1, r, [&]( uint64_t w, Sink& s ) { fn( TruthTable::from_word( 0, w ), s ); } );
    return;
  }
  const auto sub = positive_tables( n - 1 );
  const unsigned half = 1u << ( n - 1 );
  parallel_for( sub.size(), jobs, r, [&]( uint64_t i, Sink& s ) {
    const auto f1 = sub[i];
    for ( auto f0 : sub )
    {
      if ( ( f0 & ~f1 ) == 0 )
        fn( TruthTable::from_word( n, f0 | ( f1 << half ) ), s );
    }
  } );
}

inline Rng arity_rng( uint64_t seed, unsigned n ) { return Rng( seed * 0x9E3779B97F4A7C15ull + n ); }

/* the i-th maximal zero y_i of f_n: x1 = 0, x_{i+1} = 0, every other coordinate 1 */
inline uint32_t f_family_y( unsigned n, unsigned i )
{
  const uint32_t all = ( uint32_t{1} << n ) - 1;
  return all & ~uint32_t{1} & ~( uint32_t{1} << i );
}

inline std::string point_list( const std::vector<Point>& ps )
{
  std::string s;
  for ( const auto& p : ps )
    s += ( s.empty() ? "" : " " ) + p.to_string();
  return s;
}

inline bool contains_g_member( const TruthTable& f )
{
  for ( unsigned m = 3; m <= f.arity(); ++m )
  {
    if ( contains_restriction( f, make_family( {Family::g_n, m} ), true ) )
      return true;
  }
  return false;
}

inline bool has_g1_g2_restriction( const TruthTable& f )
{
  if ( f.arity() < 4 )
    return false;
  return contains_restriction( f, make_family( {Family::g1, 4} ), true ) ||
         contains_restriction( f, make_family( {Family::g2, 4} ), true );
}

/* every table reached by fixing at least one variable of f */
template<typename Fn>
void for_each_proper_restriction( const TruthTable& f, Fn&& fn )
{
  for ( unsigned k = 1; k <= f.arity(); ++k )
  {
    for_each_assignment( f.arity(), k, [&]( const PartialAssignment& a ) {
      fn( restrict( f, a ), a );
      return false;
    } );
  }
}

/* --- harness bodies --------------------------------------------------- */

inline void run_extremal_points( const VerifyOptions& o, VerificationReport& r )
{
  for ( unsigned n = r.n_min; n <= r.n_max; ++n )
  {
    for_all_positive( n, o.jobs, r, []( const TruthTable& f, Sink& s ) {
      s.count();
      const auto rr = extremal_count( f );
      const auto k = relevant_count( f );
      if ( rr < k + 1 )
        s.fail( f, "r(f) = " + std::to_string( rr ) + " < k + 1 = " + std::to_string( k + 1 ) );
      else if ( ( rr == k + 1 ) != is_lro( f ).has_value() )
        s.fail( f, "r(f) = k + 1 disagrees with lro" );
    } );
  }
}

inline void run_acyclic_correspondence( const VerifyOptions& o, VerificationReport& r )
{
  for ( unsigned n = r.n_min; n <= r.n_max; ++n )
  {
    for_all_positive( n, o.jobs, r, []( const TruthTable& f, Sink& s ) {
      s.count();
      const auto rel = relevant_variables( f );
      for ( VarSet sub = rel; sub != 0; sub = ( sub - 1 ) & rel )
      {
        const auto c = extremals_corresponding( f, sub ).size();
        if ( c < static_cast<std::size_t>( std::popcount( sub ) ) + 1 )
        {
          std::string vars;
          for ( auto v : to_indices( sub ) )
            vars += ( vars.empty() ? "x" : ",x" ) + std::to_string( v + 1 );
          s.fail( f, "only " + std::to_string( c ) + " extremal points correspond to {" + vars + "}" );
          return;
        }
      }
    } );
  }
}

inline void run_lro_chow( const VerifyOptions& o, VerificationReport& r )
{
  for ( unsigned n = r.n_min; n <= r.n_max; ++n )
  {
    const ChowIndex index( n );
    for_all_functions( n, o.jobs, r, [&]( const TruthTable& f, Sink& s ) {
      s.count();
      const bool chow = index.is_chow( f );
      if ( is_threshold( f ) && !chow )
        s.fail( f, "threshold but not Chow" );
      if ( !is_read_once( f ) )
        return;
      const bool lro = is_lro( f ).has_value();
      const bool forbidden = has_g1_g2_restriction( f );
      if ( lro != chow )
        s.fail( f, lro ? "read-once lro but not Chow" : "read-once Chow but not lro" );
      if ( lro == forbidden )
        s.fail( f, lro ? "lro with a g1/g2 restriction" : "read-once non-lro without a g1/g2 restriction" );
    } );
  }
}

inline void run_chow_collision( const VerifyOptions& o, VerificationReport& r )
{
  const auto g1 = make_family( {Family::g1, 4} );
  const auto g2 = make_family( {Family::g2, 4} );
  struct Case
  {
    TruthTable f, partner;
    ChowParameters expected;
  };
  const std::vector<Case> cases = {
      {g1, eval_to_table( parse_formula( "(x1 | x3)(x2 | x4)", 4 ) ), {{6, 6, 6, 6}, 9}},
      {g2, eval_to_table( parse_formula( "x1x3 | x2x4", 4 ) ), {{5, 5, 5, 5}, 7}}};
  parallel_for( cases.size(), o.jobs, r, [&]( uint64_t i, Sink& s ) {
    const auto& c = cases[i];
    s.count();
    s.expect( c.f != c.partner, c.f, "collision partner equals the function" );
    s.expect( chow_parameters( c.f ) == c.expected, c.f, "unexpected Chow parameters" );
    s.expect( chow_parameters( c.partner ) == c.expected, c.partner, "partner has different Chow parameters" );
    s.expect( is_chow( c.f ).status == ChowStatus::not_chow, c.f, "not reported as non-Chow" );
    s.expect( is_read_once( c.f ) && !is_lro( c.f ), c.f, "not read-once non-lro" );
  } );
}

inline void run_chow_restriction_closed( const VerifyOptions& o, VerificationReport& r )
{
  std::vector<ChowIndex> index;
  for ( unsigned m = 0; m <= r.n_max; ++m )
    index.emplace_back( m );
  for ( unsigned n = r.n_min; n <= r.n_max; ++n )
  {
    for_all_functions( n, o.jobs, r, [&]( const TruthTable& f, Sink& s ) {
      if ( !index[n].is_chow( f ) )
        return;
      s.count();
      bool ok = true;
      for_each_proper_restriction( f, [&]( const TruthTable& g, const PartialAssignment& a ) {
        if ( ok && !index[g.arity()].is_chow( g ) )
        {
          ok = false;
          s.fail( f, "restriction " + a.to_string() + " = " + to_hex_string( g ) + " is not Chow" );
        }
      } );
    } );
  }
}

inline void run_g_family( const VerifyOptions& o, VerificationReport& r )
{
  parallel_for( r.n_max - r.n_min + 1, o.jobs, r, [&]( uint64_t i, Sink& s ) {
    const unsigned n = r.n_min + static_cast<unsigned>( i );
    const auto g = make_family( {Family::g_n, n} );
    s.count();
    s.expect( is_positive( g ), g, "not positive" );
    s.expect( !is_canalyzing( g ), g, "canalyzing" );
    s.expect( !is_read_once( g ), g, "read-once" );
    s.expect( !is_lro( g ), g, "lro" );
    s.expect( is_threshold( g ).has_value(), g, "not threshold" );
    // minimal ones lie on w.x = n - 1 and maximal zeros on w.x = n - 2, so
    // g_n(x) = 1 <=> w.x >= n - 1, i.e. zeros satisfy w.x <= n - 2
    ThresholdRepresentation printed;
    printed.weights.assign( n, 1 );
    printed.weights[0] = n - 2;
    printed.threshold = n - 2;
    s.expect( printed.represents( g ), g, "weights (n-2, 1, ..., 1) do not separate at n-1" );
    const auto ext = extremal_sets( g );
    auto level = [n]( const Point& p ) { return ( n - 2 ) * p.coordinate( 0 ) + std::popcount( p.index() >> 1 ); };
    s.expect( std::all_of( ext.minimal_ones.begin(), ext.minimal_ones.end(), [&]( const Point& p ) { return level( p ) == n - 1; } ), g,
              "a minimal one is off the hyperplane w.x = n-1" );
    s.expect( std::all_of( ext.maximal_zeros.begin(), ext.maximal_zeros.end(), [&]( const Point& p ) { return level( p ) == n - 2; } ), g,
              "a maximal zero is off the hyperplane w.x = n-2" );
    s.expect( ext.r() == 2 * n, g, "extremal count differs from 2n" );
    const auto ess = essential_points( g );
    if ( ess.size() != 2 * n )
      s.fail( g, "specification number " + std::to_string( ess.size() ) + " differs from 2n" );
    auto all = ext.all();
    std::sort( all.begin(), all.end() );
    s.expect( ess == all, g, "essential points differ from the extremal points" );
  } );
}

inline void run_g_minimality( const VerifyOptions& o, VerificationReport& r )
{
  // every proper restriction of every negation image of g_n is lro
  for ( unsigned n = std::max( r.n_min, 3u ); n <= r.n_max; ++n )
  {
    const auto g = make_family( {Family::g_n, n} );
    parallel_for( uint64_t{1} << n, o.jobs, r, [&]( uint64_t neg, Sink& s ) {
      const auto h = negate_variables( g, static_cast<VarSet>( neg ) );
      s.count();
      s.expect( !is_lro( h ), h, "member of G is lro" );
      bool ok = true;
      for_each_proper_restriction( h, [&]( const TruthTable& sub, const PartialAssignment& a ) {
        if ( ok && !is_lro( sub ) )
        {
          ok = false;
          s.fail( h, "restriction " + a.to_string() + " is not lro" );
        }
      } );
    } );
  }
  // threshold functions: not lro <=> some restriction is in G
  for ( unsigned n = 0; n <= std::min( r.n_max, 4u ); ++n )
  {
    for_all_functions( n, o.jobs, r, []( const TruthTable& f, Sink& s ) {
      if ( !is_threshold( f ) )
        return;
      s.count();
      const bool lro = is_lro( f ).has_value();
      if ( lro == contains_g_member( f ) )
        s.fail( f, lro ? "lro threshold function contains a member of G" : "non-lro threshold function contains no member of G" );
    } );
  }
}

/* the printed 2-summability witnesses, as (false points, true points) */
inline SummabilityWitness printed_witness( const FamilySpec& spec )
{
  const unsigned n = spec.n;
  const uint32_t all = ( uint32_t{1} << n ) - 1;
  auto pts = [n]( uint32_t a, uint32_t b ) { return std::vector<Point>{Point( n, a ), Point( n, b )}; };
  auto bits = []( std::initializer_list<int> c ) { return Point::from_coordinates( c ).index(); };
  switch ( spec.family )
  {
  case Family::h1_n:
    return {pts( 1u, all & ~1u ), pts( 0u, all )};
  case Family::h2_n:
    return {pts( 1u, all & ~1u ), pts( 2u, all & ~2u )};
  case Family::h3:
    return {pts( bits( {0, 0, 1, 1, 1} ), bits( {1, 1, 0, 0, 0} ) ), pts( bits( {0, 1, 1, 0, 0} ), bits( {1, 0, 0, 1, 1} ) )};
  case Family::h4:
    return {pts( bits( {1, 0, 0, 1} ), bits( {0, 1, 1, 0} ) ), pts( bits( {1, 1, 0, 0} ), bits( {0, 0, 1, 1} ) )};
  default:
    throw precondition_error( "no printed witness for " + to_string( spec ) );
  }
}

inline void run_stetsenko( const VerifyOptions& o, VerificationReport& r )
{
  std::vector<FamilySpec> members;
  for ( unsigned n = std::max( r.n_min, 2u ); n <= r.n_max; ++n )
  {
    members.push_back( {Family::h1_n, n} );
    if ( n >= 3 )
      members.push_back( {Family::h2_n, n} );
  }
  members.push_back( {Family::h3, 5} );
  members.push_back( {Family::h4, 4} );
  parallel_for( members.size(), o.jobs, r, [&]( uint64_t i, Sink& s ) {
    const auto& spec = members[i];
    const auto h = make_family( spec );
    s.count();
    s.expect( printed_witness( spec ).is_valid_for( h ), h, "printed 2-summability witness is invalid" );
    const auto w = is_k_summable( h, 2 );
    s.expect( w && w->is_valid_for( h ), h, "no 2-summability witness found" );
    s.expect( !is_threshold( h ), h, "threshold" );
    s.expect( !is_read_once( h ), h, "read-once" );
  } );

  for ( unsigned n = 0; n <= std::min( r.n_max, 4u ); ++n )
  {
    for_all_functions( n, o.jobs, r, []( const TruthTable& f, Sink& s ) {
      s.count();
      const bool ro = is_read_once( f ).has_value();
      const auto w = stetsenko_witness( f );
      if ( ro == w.has_value() )
      {
        s.fail( f, ro ? "read-once function with a minimal non-read-once restriction" : "non-read-once function without a witness" );
        return;
      }
      if ( w )
      {
        s.expect( w->witness.apply( f ) == shrink_to_support( make_family( w->family ) ), f, "witness does not reproduce the pattern" );
      }
    } );
  }
}

inline void run_conjecture_counterexample( const VerifyOptions& o, VerificationReport& r )
{
  parallel_for( r.n_max - r.n_min + 1, o.jobs, r, [&]( uint64_t i, Sink& s ) {
    const unsigned n = r.n_min + static_cast<unsigned>( i );
    const auto f = make_family( {Family::f_n, n} );
    s.count();
    s.expect( is_positive( f ), f, "not positive" );
    s.expect( relevant_count( f ) == n, f, "does not depend on all variables" );
    s.expect( !is_lro( f ), f, "lro" );
    s.expect( is_threshold( f ).has_value(), f, "not threshold" );
    ThresholdRepresentation printed;
    printed.weights.assign( n, 2 );
    printed.weights[0] = 2 * static_cast<long>( n ) - 5;
    printed.weights[n - 1] = 1;
    printed.threshold = 2 * static_cast<long>( n ) - 4;
    s.expect( printed.represents( f ), f, "printed threshold inequality does not represent f_n" );

    const auto ext = extremal_sets( f );
    s.expect( ext.r() == 2 * n - 1, f, "extremal count differs from 2n - 1" );
    std::vector<Point> non_essential;
    for ( unsigned j = 1; j <= n - 2; ++j )
      non_essential.emplace_back( n, f_family_y( n, j ) );
    std::sort( non_essential.begin(), non_essential.end() );

    const auto ess = essential_points( f );
    std::vector<Point> expected;
    for ( const auto& p : ext.all() )
    {
      if ( !std::binary_search( non_essential.begin(), non_essential.end(), p ) )
        expected.push_back( p );
    }
    std::sort( expected.begin(), expected.end() );
    if ( ess != expected )
      s.fail( f, "essential points " + point_list( ess ) + " differ from the extremal points without y_1..y_{n-2}" );
    s.expect( ess.size() == n + 1, f, "specification number differs from n + 1" );
  } );
}

inline uint64_t per_arity_samples( const VerifyOptions& o, uint64_t total_default, unsigned arities )
{
  const uint64_t total = o.samples.value_or( total_default );
  return arities == 0 ? 0 : ( total + arities - 1 ) / arities;
}

inline void run_essential_oracles( const VerifyOptions& o, VerificationReport& r )
{
  auto check = []( const TruthTable& f, Sink& s ) {
    s.count();
    for ( uint32_t x = 0; x < f.num_bits(); ++x )
    {
      if ( f.bit( x ) )
        continue;
      if ( detail::flip_is_threshold( f, x ) != detail::hyperplane_through( f, x ) )
      {
        s.fail( f, "oracles disagree at zero " + Point( f.arity(), x ).to_string() );
        return;
      }
    }
  };

  const unsigned lo = std::max( r.n_min, 1u );
  for ( unsigned n = lo; n <= std::min( r.n_max, 4u ); ++n )
  {
    for_all_functions( n, o.jobs, r, [&]( const TruthTable& f, Sink& s ) {
      if ( is_threshold( f ) )
        check( f, s );
    } );
  }

  const unsigned sampled_lo = std::max( lo, 5u );
  if ( r.n_max < sampled_lo )
    return;
  const auto per = per_arity_samples( o, 1000, r.n_max - sampled_lo + 1 );
  for ( unsigned n = sampled_lo; n <= r.n_max; ++n )
  {
    auto rng = arity_rng( o.seed, n );
    std::vector<TruthTable> fs;
    for ( uint64_t i = 0; i < per; ++i )
      fs.push_back( random_threshold( n, rng ) );
    parallel_for( fs.size(), o.jobs, r, [&]( uint64_t i, Sink& s ) { check( fs[i], s ); } );
  }
}

inline void run_threshold_spec_bound( const VerifyOptions& o, VerificationReport& r )
{
  for ( unsigned n = r.n_min; n <= r.n_max; ++n )
  {
    for_all_functions( n, o.jobs, r, [n]( const TruthTable& f, Sink& s ) {
      if ( relevant_count( f ) != n || !is_threshold( f ) )
        return;
      s.count();
      const auto sigma = specification_number( f );
      if ( sigma < n + 1 )
        s.fail( f, "specification number " + std::to_string( sigma ) + " < n + 1" );
    } );
  }
}

inline void run_lro_spec_number( const VerifyOptions& o, VerificationReport& r )
{
  const auto per = o.samples.value_or( 500 );
  for ( unsigned n = r.n_min; n <= r.n_max; ++n )
  {
    auto rng = arity_rng( o.seed, n );
    std::vector<TruthTable> fs;
    for ( uint64_t i = 0; i < per; ++i )
      fs.push_back( random_lro( n, rng ) );
    parallel_for( fs.size(), o.jobs, r, [&]( uint64_t i, Sink& s ) {
      const auto& f = fs[i];
      s.count();
      s.expect( is_lro( f ).has_value() && relevant_count( f ) == n, f, "generated function is not lro on all variables" );
      const auto sigma = specification_number( f );
      if ( sigma != n + 1 )
        s.fail( f, "specification number " + std::to_string( sigma ) + " differs from n + 1" );
    } );
  }
}

inline void run_dedekind( const VerifyOptions& o, VerificationReport& r )
{
  for ( unsigned n = r.n_min; n <= r.n_max; ++n )
  {
    Sink s;
    std::vector<uint64_t> words;
    const auto count = enumerate_positive( n, [&]( const TruthTable& f ) { words.push_back( f.words()[0] ); } );
    s.count( count );
    const auto label = std::to_string( n ) + ":*";
    if ( count != dedekind_numbers[n] )
      s.fail( label, "enumerated " + std::to_string( count ) + " positive functions, expected " + std::to_string( dedekind_numbers[n] ) );
    if ( !std::is_sorted( words.begin(), words.end() ) || std::adjacent_find( words.begin(), words.end() ) != words.end() )
      s.fail( label, "enumeration is not strictly ascending" );
    for ( auto w : words )
    {
      if ( !is_positive( TruthTable::from_word( n, w ) ) )
      {
        s.fail( TruthTable::from_word( n, w ), "enumerated function is not positive" );
        break;
      }
    }
    if ( n <= 4 )
    {
      std::vector<uint64_t> brute;
      for ( uint64_t w = 0; w < all_functions( n ); ++w )
      {
        if ( is_positive( TruthTable::from_word( n, w ) ) )
          brute.push_back( w );
      }
      if ( brute != words )
        s.fail( label, "enumeration differs from brute-force positivity filtering" );
    }
    s.merge_into( r );
  }
  (void)o;
}

inline void run_lro_eq_ro_and_threshold( const VerifyOptions& o, VerificationReport& r )
{
  for ( unsigned n = r.n_min; n <= r.n_max; ++n )
  {
    for_all_functions( n, o.jobs, r, []( const TruthTable& f, Sink& s ) {
      s.count();
      const bool lro = is_lro( f ).has_value();
      if ( lro != ( is_read_once( f ) && is_threshold( f ) ) )
        s.fail( f, lro ? "lro but not read-once threshold" : "read-once threshold but not lro" );
    } );
  }
}

} // namespace detail

struct Harness
{
  std::string_view id;
  std::string_view summary;
  unsigned default_min, default_max; // arity range
  unsigned lowest, highest;          // supported range
  void ( *run )( const VerifyOptions&, VerificationReport& );
};

inline const std::vector<Harness>& harnesses()
{
  static const std::vector<Harness> list = {
      {"extremal-points", "positive f: r(f) >= k + 1, with equality exactly for lro f", 0, 5, 0, 6, detail::run_extremal_points},
      {"acyclic-correspondence", "positive f: every variable set S has at least |S| + 1 corresponding extremal points", 0, 4, 0, 5, detail::run_acyclic_correspondence},
      {"lro-chow", "read-once f: lro <=> Chow <=> no g1/g2 restriction; threshold => Chow", 0, 4, 0, 4, detail::run_lro_chow},
      {"chow-collision", "g1 and g2 share Chow parameters with a different function", 4, 4, 4, 4, detail::run_chow_collision},
      {"chow-restriction-closed", "every restriction of a Chow function is Chow", 0, 4, 0, 4, detail::run_chow_restriction_closed},
      {"g-family", "g_n: positive, not canalyzing, not read-once, threshold, 2n extremal points, sigma = 2n", 3, 10, 3, 12, detail::run_g_family},
      {"g-minimality", "proper restrictions of G members are lro; threshold f is not lro iff it contains a G member", 3, 6, 3, 8, detail::run_g_minimality},
      {"stetsenko", "h-functions are 2-summable; f is not read-once iff a minimal non-read-once restriction exists", 2, 6, 2, 8, detail::run_stetsenko},
      {"conjecture-counterexample", "f_n: positive threshold, not lro, sigma = n + 1, y_1..y_{n-2} not essential", 4, 10, 4, 12, detail::run_conjecture_counterexample},
      {"essential-oracles", "flip oracle and separating-hyperplane oracle agree on every zero", 1, 8, 1, 10, detail::run_essential_oracles},
      {"threshold-spec-bound", "threshold f depending on all n variables: sigma >= n + 1", 0, 4, 0, 4, detail::run_threshold_spec_bound},
      {"lro-spec-number", "lro f depending on all n variables: sigma = n + 1", 2, 8, 0, 10, detail::run_lro_spec_number},
      {"dedekind", "positive-function enumeration matches the Dedekind numbers", 0, 5, 0, 6, detail::run_dedekind},
      {"lro-eq-ro-and-threshold", "lro <=> read-once and threshold", 0, 4, 0, 4, detail::run_lro_eq_ro_and_threshold},
  };
  return list;
}

inline const Harness* find_harness( std::string_view id )
{
  for ( const auto& h : harnesses() )
  {
    if ( h.id == id )
      return &h;
  }
  return nullptr;
}

/*! \brief Runs the harness with the given id

  Throws precondition_error for an unknown id or an arity range outside the
  harness's supported range.
*/
inline VerificationReport verify( std::string_view id, const VerifyOptions& opts = {} )
{
  const auto* h = find_harness( id );
  if ( !h )
    throw precondition_error( "unknown theorem id '" + std::string( id ) + "'" );
  VerificationReport r;
  r.theorem = std::string( h->id );
  r.n_min = opts.n_min.value_or( h->default_min );
  r.n_max = opts.n_max.value_or( h->default_max );
  if ( r.n_min > r.n_max || r.n_min < h->lowest || r.n_max > h->highest )
    throw precondition_error( "arity range " + std::to_string( r.n_min ) + ".." + std::to_string( r.n_max ) + " outside " +
                              std::to_string( h->lowest ) + ".." + std::to_string( h->highest ) + " for " + r.theorem );
  const auto start = std::chrono::steady_clock::now();
  h->run( opts, r );
  r.duration_ms = static_cast<uint64_t>( std::chrono::duration_cast<std::chrono::milliseconds>( std::chrono::steady_clock::now() - start ).count() );
  return r;
}

} // namespace lrof
