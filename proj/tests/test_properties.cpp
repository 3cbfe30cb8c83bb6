#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include <lrof/chow.hpp>
#include <lrof/classify.hpp>
#include <lrof/enumerate.hpp>
#include <lrof/monotone.hpp>
#include <lrof/patterns.hpp>
#include <lrof/random_functions.hpp>
#include <lrof/readonce.hpp>
#include <lrof/threshold.hpp>

#include "oracles.hpp"

using namespace lrof;

namespace
{

uint64_t function_count( unsigned n ) { return uint64_t{1} << ( 1u << n ); }

/* every partial assignment with at least one fixed variable, as var -> value */
std::vector<std::map<unsigned, int>> proper_assignments( unsigned n )
{
  std::vector<std::map<unsigned, int>> out;
  uint32_t total = 1;
  for ( unsigned i = 0; i < n; ++i )
    total *= 3;
  for ( uint32_t code = 0; code < total; ++code )
  {
    std::map<unsigned, int> a;
    uint32_t c = code;
    for ( unsigned i = 0; i < n; ++i, c /= 3 )
    {
      if ( c % 3 != 2 )
        a[i] = static_cast<int>( c % 3 );
    }
    if ( !a.empty() )
      out.push_back( a );
  }
  return out;
}

/* all tables obtained from p by renaming and negating variables */
std::set<uint64_t> orbit( const TruthTable& p )
{
  const unsigned m = p.arity();
  std::set<uint64_t> out;
  std::vector<unsigned> perm( m );
  std::iota( perm.begin(), perm.end(), 0u );
  do
  {
    for ( uint32_t neg = 0; neg < ( 1u << m ); ++neg )
    {
      const auto t = oracle::table( m, [&]( const oracle::Coords& c ) {
        uint32_t x = 0;
        for ( unsigned i = 0; i < m; ++i )
          x |= static_cast<uint32_t>( c[i] ^ ( ( neg >> i ) & 1u ) ) << perm[i];
        return p.bit( x );
      } );
      out.insert( t.words()[0] );
    }
  } while ( std::next_permutation( perm.begin(), perm.end() ) );
  return out;
}

/* some restriction of f fixing n - m variables lies in the orbit (patterns of arity m) */
bool brute_contains( const TruthTable& f, unsigned m, const std::set<uint64_t>& patterns )
{
  const unsigned n = f.arity();
  if ( m > n )
    return false;
  if ( m == n )
    return patterns.count( f.words()[0] ) > 0;
  for ( const auto& a : proper_assignments( n ) )
  {
    if ( n - a.size() == m && patterns.count( oracle::restrict( f, a ).words()[0] ) )
      return true;
  }
  return false;
}

std::map<std::vector<unsigned>, unsigned> chow_buckets( unsigned n )
{
  std::map<std::vector<unsigned>, unsigned> b;
  for ( uint64_t w = 0; w < function_count( n ); ++w )
    ++b[oracle::chow( TruthTable::from_word( n, w ) )];
  return b;
}

/* a random positive function: OR of random monomials */
TruthTable random_positive( unsigned n, std::mt19937_64& rng )
{
  std::vector<std::vector<int>> terms( rng() % 6 );
  for ( auto& t : terms )
  {
    for ( unsigned i = 0; i < n; ++i )
    {
      if ( rng() % 3 == 0 )
        t.push_back( static_cast<int>( i ) + 1 );
    }
  }
  return oracle::dnf( n, terms );
}

unsigned oracle_corresponding( const TruthTable& f, uint32_t s )
{
  const auto [ones, zeros] = oracle::extremal( f );
  unsigned count = 0;
  for ( auto x : ones )
    count += ( x & s ) != 0;
  for ( auto x : zeros )
    count += ( ~x & s ) != 0;
  return count;
}

} // namespace

/* --- classification reports ------------------------------------------ */

TEST( ClassifyProperties, exhaustive_up_to_four_variables )
{
  for ( unsigned n = 0; n <= 4; ++n )
  {
    const auto thresholds = oracle::threshold_set( n );
    const auto read_once = oracle::formula_set( n, false );
    const auto lro = oracle::formula_set( n, true );
    for ( uint64_t w = 0; w < function_count( n ); ++w )
    {
      const auto f = TruthTable::from_word( n, w );
      const auto r = classify( f );
      ASSERT_EQ( r.inconsistency(), "" ) << r.table;
      ASSERT_EQ( r.threshold.has_value(), thresholds.count( w ) > 0 ) << r.table;
      ASSERT_EQ( r.read_once.has_value(), read_once.count( w ) > 0 ) << r.table;
      ASSERT_EQ( r.lro.has_value(), lro.count( w ) > 0 ) << r.table;
      ASSERT_EQ( r.positive, oracle::is_positive( f ) ) << r.table;
      ASSERT_EQ( r.k, oracle::relevant( f ).size() ) << r.table;
      ASSERT_NE( r.chow, ChowStatus::unknown ) << r.table;
    }
  }
}

TEST( ClassifyProperties, random_functions_up_to_six_variables )
{
  Rng rng( 71 );
  for ( int rep = 0; rep < 10000; ++rep )
  {
    const unsigned n = rng() % 7;
    const auto f = random_table( n, rng );
    const auto r = classify( f );
    ASSERT_EQ( r.inconsistency(), "" ) << r.table;
    ASSERT_EQ( parse_table( r.table ), f );
    if ( r.chow_collision )
    {
      const auto g = parse_table( *r.chow_collision );
      ASSERT_NE( g, f );
      ASSERT_EQ( oracle::chow( g ), oracle::chow( f ) ) << r.table;
    }
  }
}

/* --- extremal points ------------------------------------------------- */

TEST( ExtremalProperties, lower_bound_and_equality_for_positive_functions )
{
  for ( unsigned n = 0; n <= 5; ++n )
  {
    const auto lro = n <= 4 ? oracle::formula_set( n, true ) : std::set<uint64_t>{};
    std::size_t seen = 0;
    enumerate_positive( n, [&]( const TruthTable& f ) {
      ++seen;
      const auto [ones, zeros] = oracle::extremal( f );
      const auto r = ones.size() + zeros.size();
      const auto k = oracle::relevant( f ).size();
      EXPECT_GE( r, k + 1 ) << to_hex_string( f );
      const bool is_lro_f = n <= 4 ? lro.count( f.words()[0] ) > 0 : is_lro( f ).has_value();
      EXPECT_EQ( r == k + 1, is_lro_f ) << to_hex_string( f );
    } );
    EXPECT_EQ( seen, dedekind_numbers[n] );
  }
}

TEST( ExtremalProperties, corresponding_points_exhaustive )
{
  for ( unsigned n = 0; n <= 4; ++n )
  {
    for ( uint64_t w = 0; w < function_count( n ); ++w )
    {
      const auto f = TruthTable::from_word( n, w );
      if ( !oracle::is_positive( f ) )
        continue;
      uint32_t rel = 0;
      for ( auto i : oracle::relevant( f ) )
        rel |= 1u << i;
      for ( uint32_t s = rel; s != 0; s = ( s - 1 ) & rel )
      {
        const auto c = oracle_corresponding( f, s );
        EXPECT_GE( c, static_cast<unsigned>( std::popcount( s ) ) + 1 ) << to_hex_string( f ) << " " << s;
        EXPECT_EQ( extremals_corresponding( f, s ).size(), c );
      }
    }
  }
}

TEST( ExtremalProperties, corresponding_points_random )
{
  std::mt19937_64 rng( 73 );
  for ( int rep = 0; rep < 400; ++rep )
  {
    const unsigned n = 5 + rng() % 2;
    const auto f = random_positive( n, rng );
    uint32_t rel = 0;
    for ( auto i : oracle::relevant( f ) )
      rel |= 1u << i;
    for ( uint32_t s = rel; s != 0; s = ( s - 1 ) & rel )
      ASSERT_GE( extremals_corresponding( f, s ).size(), static_cast<std::size_t>( std::popcount( s ) ) + 1 ) << to_hex_string( f );
  }
}

/* --- read-once, lro, threshold --------------------------------------- */

TEST( ReadOnceProperties, lro_is_read_once_and_threshold )
{
  for ( unsigned n = 0; n <= 4; ++n )
  {
    for ( uint64_t w = 0; w < function_count( n ); ++w )
    {
      const auto f = TruthTable::from_word( n, w );
      const bool ro = is_read_once( f ).has_value();
      const bool th = is_threshold( f ).has_value();
      ASSERT_EQ( is_lro( f ).has_value(), ro && th ) << to_hex_string( f );
    }
  }
  // the same identity between the independent formula and weight enumerations
  for ( unsigned n = 0; n <= 4; ++n )
  {
    const auto ro = oracle::formula_set( n, false );
    const auto th = oracle::threshold_set( n );
    std::set<uint64_t> both;
    std::set_intersection( ro.begin(), ro.end(), th.begin(), th.end(), std::inserter( both, both.end() ) );
    EXPECT_EQ( oracle::formula_set( n, true ), both ) << n;
  }
}

TEST( ReadOnceProperties, lro_implies_read_once )
{
  for ( unsigned n = 0; n <= 5; ++n )
  {
    enumerate_positive( n, [&]( const TruthTable& f ) {
      if ( is_lro( f ) )
      {
        EXPECT_TRUE( is_read_once( f ).has_value() ) << to_hex_string( f );
      }
    } );
  }
  Rng rng( 75 );
  for ( int rep = 0; rep < 2000; ++rep )
  {
    const unsigned n = 1 + rng() % 8;
    const auto f = rep % 2 ? random_lro( n, rng ) : random_table( std::min( n, 5u ), rng );
    if ( is_lro( f ) )
    {
      ASSERT_TRUE( is_read_once( f ).has_value() ) << to_hex_string( f );
    }
  }
}

/* --- Chow ------------------------------------------------------------ */

TEST( ChowProperties, restrictions_of_chow_functions_are_chow )
{
  std::vector<std::map<std::vector<unsigned>, unsigned>> buckets;
  for ( unsigned m = 0; m <= 4; ++m )
    buckets.push_back( chow_buckets( m ) );
  for ( unsigned n = 0; n <= 4; ++n )
  {
    const auto assignments = proper_assignments( n );
    std::size_t chow_count = 0;
    for ( uint64_t w = 0; w < function_count( n ); ++w )
    {
      const auto f = TruthTable::from_word( n, w );
      if ( buckets[n].at( oracle::chow( f ) ) != 1 )
        continue;
      ++chow_count;
      for ( const auto& a : assignments )
      {
        const auto g = oracle::restrict( f, a );
        ASSERT_EQ( buckets[g.arity()].at( oracle::chow( g ) ), 1u ) << to_hex_string( f ) << " -> " << to_hex_string( g );
      }
    }
    EXPECT_GT( chow_count, 0u );
  }
}

TEST( ChowProperties, read_once_chow_iff_lro_iff_no_g1_g2 )
{
  const auto forbidden = [] {
    auto a = orbit( make_family( {Family::g1, 4} ) );
    const auto b = orbit( make_family( {Family::g2, 4} ) );
    a.insert( b.begin(), b.end() );
    return a;
  }();
  for ( unsigned n = 0; n <= 4; ++n )
  {
    const auto buckets = chow_buckets( n );
    const auto lro = oracle::formula_set( n, true );
    for ( auto w : oracle::formula_set( n, false ) )
    {
      const auto f = TruthTable::from_word( n, w );
      const bool chow = buckets.at( oracle::chow( f ) ) == 1;
      const bool is_lro_f = lro.count( w ) > 0;
      EXPECT_EQ( chow, is_lro_f ) << to_hex_string( f );
      EXPECT_EQ( is_lro_f, !brute_contains( f, 4, forbidden ) ) << to_hex_string( f );
      EXPECT_EQ( is_chow( f ).status == ChowStatus::chow, chow ) << to_hex_string( f );
    }
  }
}

TEST( ChowProperties, threshold_functions_are_chow )
{
  for ( unsigned n = 0; n <= 4; ++n )
  {
    const auto buckets = chow_buckets( n );
    for ( auto w : oracle::threshold_set( n ) )
      EXPECT_EQ( buckets.at( oracle::chow( TruthTable::from_word( n, w ) ) ), 1u ) << n << ":" << w;
  }
}

/* --- the G family ---------------------------------------------------- */

TEST( GFamilyProperties, threshold_non_lro_iff_contains_g_member )
{
  std::map<unsigned, std::set<uint64_t>> g;
  for ( unsigned m = 3; m <= 4; ++m )
    g[m] = orbit( make_family( {Family::g_n, m} ) );
  for ( unsigned n = 0; n <= 4; ++n )
  {
    const auto lro = oracle::formula_set( n, true );
    for ( auto w : oracle::threshold_set( n ) )
    {
      const auto f = TruthTable::from_word( n, w );
      bool brute = false, library = false;
      for ( unsigned m = 3; m <= n; ++m )
      {
        brute = brute || brute_contains( f, m, g[m] );
        library = library || contains_restriction( f, make_family( {Family::g_n, m} ), true ).has_value();
      }
      EXPECT_EQ( brute, library ) << to_hex_string( f );
      EXPECT_EQ( lro.count( w ) > 0, !brute ) << to_hex_string( f );
    }
  }
}

TEST( GFamilyProperties, canonical_form_is_a_class_function )
{
  Rng rng( 77 );
  for ( int rep = 0; rep < 300; ++rep )
  {
    const unsigned n = 1 + rng() % 6;
    const auto f = random_table( n, rng );
    std::vector<unsigned> pi( n );
    std::iota( pi.begin(), pi.end(), 0u );
    std::shuffle( pi.begin(), pi.end(), rng );
    const VarSet s = static_cast<VarSet>( rng() & ( ( 1u << n ) - 1 ) );
    const auto g = permute_variables( negate_variables( f, s ), pi );
    ASSERT_EQ( canonical_form( f ), canonical_form( g ) ) << to_hex_string( f );
  }
  // and separates classes: equal forms exactly on orbits, n <= 3
  for ( unsigned n = 0; n <= 3; ++n )
  {
    for ( uint64_t w = 0; w < function_count( n ); ++w )
    {
      const auto f = TruthTable::from_word( n, w );
      const auto o = orbit( f );
      for ( uint64_t u = 0; u < function_count( n ); ++u )
      {
        const auto h = TruthTable::from_word( n, u );
        ASSERT_EQ( canonical_form( f ) == canonical_form( h ), o.count( u ) > 0 ) << to_hex_string( f ) << " " << to_hex_string( h );
      }
    }
  }
}
