#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include <lrof/truth_table.hpp>

#include "oracles.hpp"

using namespace lrof;

namespace
{

const auto maj3 = oracle::dnf( 3, {{1, 2}, {1, 3}, {2, 3}} );
const auto f4 = oracle::dnf( 4, {{1, 2}, {1, 3}, {2, 3, 4}} );
const auto g1 = oracle::table( 4, []( const oracle::Coords& c ) { return ( c[0] || c[1] ) && ( c[2] || c[3] ); } );

} // namespace

TEST( Point, index_and_coordinates_are_bijective )
{
  for ( unsigned n = 1; n <= 6; ++n )
  {
    for ( uint32_t x = 0; x < ( 1u << n ); ++x )
    {
      const Point p( n, x );
      const auto c = p.coordinates();
      uint32_t idx = 0;
      for ( unsigned i = 0; i < n; ++i )
        idx += static_cast<uint32_t>( c[i] ) << i;
      EXPECT_EQ( idx, x );
      EXPECT_EQ( Point::from_coordinates( std::span<const int>( c ) ), p );
    }
  }
  EXPECT_EQ( Point::from_coordinates( {1, 0, 1} ).index(), 5u );
  EXPECT_EQ( Point( 3, 5 ).to_string(), "(1,0,1)" );
  EXPECT_THROW( Point( 2, 4 ), precondition_error );
  EXPECT_THROW( Point::from_coordinates( {0, 2} ), precondition_error );
}

TEST( TruthTable, majority_table_text )
{
  EXPECT_EQ( maj3, parse_table( "3:E8" ) );
  EXPECT_EQ( to_hex_string( maj3 ), "3:E8" );
  EXPECT_EQ( to_hex_string( f4 ), "4:E8A8" );
  EXPECT_EQ( to_hex_string( g1 ), "4:EEE0" );
}

TEST( TruthTable, text_format_round_trip_and_errors )
{
  std::mt19937_64 rng( 7 );
  for ( unsigned n = 0; n <= 9; ++n )
  {
    for ( int rep = 0; rep < 20; ++rep )
    {
      const auto f = oracle::table( n, [&]( const oracle::Coords& ) { return rng() & 1u; } );
      EXPECT_EQ( parse_table( to_hex_string( f ) ), f );
    }
  }
  EXPECT_EQ( parse_table( "3:e8" ), maj3 );
  EXPECT_EQ( to_hex_string( TruthTable::constant( 0, true ) ), "0:1" );
  EXPECT_EQ( to_hex_string( TruthTable::variable( 1, 0 ) ), "1:2" );
  EXPECT_THROW( parse_table( "3:E" ), parse_error );
  EXPECT_THROW( parse_table( "3:E8A" ), parse_error );
  EXPECT_THROW( parse_table( "E8" ), parse_error );
  EXPECT_THROW( parse_table( "3:G8" ), parse_error );
  EXPECT_THROW( parse_table( "21:0" ), parse_error );
  EXPECT_THROW( parse_table( "1:4" ), parse_error );
}

TEST( TruthTable, equality_needs_same_arity )
{
  EXPECT_NE( TruthTable::constant( 2, false ), TruthTable::constant( 3, false ) );
  EXPECT_EQ( TruthTable::constant( 3, false ), TruthTable( 3 ) );
}

TEST( Evaluate, majority_points )
{
  EXPECT_TRUE( evaluate( maj3, Point::from_coordinates( {1, 1, 0} ) ) );
  EXPECT_FALSE( evaluate( maj3, Point::from_coordinates( {1, 0, 0} ) ) );
  for ( uint32_t x = 0; x < 8; ++x )
    EXPECT_FALSE( evaluate( TruthTable::constant( 3, false ), Point( 3, x ) ) );
  EXPECT_THROW( evaluate( maj3, Point( 2, 0 ) ), precondition_error );
}

TEST( Restrict, paper_style_examples )
{
  EXPECT_EQ( restrict( f4, PartialAssignment( 4, {{3, true}} ) ), maj3 );
  EXPECT_EQ( restrict( f4, PartialAssignment( 4 ) ), f4 );
  const auto x2x4 = oracle::dnf( 2, {{1, 2}} );
  EXPECT_EQ( restrict( g1, PartialAssignment( 4, {{0, false}, {2, false}} ) ), x2x4 );
}

TEST( Restrict, matches_brute_force_interleaving )
{
  std::mt19937_64 rng( 11 );
  for ( unsigned n = 1; n <= 7; ++n )
  {
    const auto f = oracle::table( n, [&]( const oracle::Coords& ) { return rng() & 1u; } );
    for ( int rep = 0; rep < 30; ++rep )
    {
      std::map<unsigned, int> fixed;
      PartialAssignment a( n );
      for ( unsigned i = 0; i < n; ++i )
      {
        if ( rng() % 3 == 0 )
        {
          const int v = rng() & 1u;
          fixed[i] = v;
          a.bind( i, v );
        }
      }
      EXPECT_EQ( restrict( f, a ), oracle::restrict( f, fixed ) );
    }
  }
}

TEST( Restrict, errors )
{
  EXPECT_THROW( restrict( f4, PartialAssignment( 3 ) ), precondition_error );
  PartialAssignment a( 3 );
  a.bind( 1, true );
  EXPECT_THROW( a.bind( 1, false ), precondition_error );
  EXPECT_THROW( a.bind( 3, false ), precondition_error );
  EXPECT_EQ( PartialAssignment( 4, {{1, false}, {3, true}} ).to_string(), "x2=0, x4=1" );
}

TEST( RelevantVariables, examples )
{
  EXPECT_EQ( to_indices( relevant_variables( oracle::dnf( 3, {{1, 2}} ) ) ), ( std::vector<unsigned>{0, 1} ) );
  EXPECT_EQ( relevant_variables( TruthTable::constant( 4, true ) ), 0u );
  EXPECT_EQ( to_indices( relevant_variables( f4 ) ), ( std::vector<unsigned>{0, 1, 2, 3} ) );
}

TEST( RelevantVariables, matches_brute_force )
{
  std::mt19937_64 rng( 3 );
  for ( unsigned n = 0; n <= 8; ++n )
  {
    for ( int rep = 0; rep < 40; ++rep )
    {
      // sparse tables so that irrelevant variables actually occur
      const auto base = oracle::table( std::min( n, 3u ), [&]( const oracle::Coords& ) { return rng() & 1u; } );
      const auto f = oracle::table( n, [&]( const oracle::Coords& c ) {
        uint32_t y = 0;
        for ( unsigned i = 0; i < base.arity(); ++i )
          y |= static_cast<uint32_t>( c[( i * 2 ) % n] ) << i;
        return base.bit( y );
      } );
      EXPECT_EQ( to_indices( relevant_variables( f ) ), oracle::relevant( f ) );
    }
  }
}

TEST( NegateVariables, examples )
{
  EXPECT_EQ( negate_variables( parse_table( "2:6" ), 0b01 ), parse_table( "2:9" ) );
  EXPECT_EQ( negate_variables( f4, 0 ), f4 );
  EXPECT_EQ( negate_variables( maj3, 0b111 ), parse_table( "3:17" ) );
  EXPECT_THROW( negate_variables( maj3, 0b1000 ), precondition_error );
}

TEST( NegateVariables, pointwise_definition_and_involution )
{
  std::mt19937_64 rng( 5 );
  for ( unsigned n = 1; n <= 8; ++n )
  {
    const auto f = oracle::table( n, [&]( const oracle::Coords& ) { return rng() & 1u; } );
    const VarSet s = static_cast<VarSet>( rng() ) & ( ( 1u << n ) - 1 );
    const auto g = negate_variables( f, s );
    for ( uint32_t x = 0; x < f.num_bits(); ++x )
      EXPECT_EQ( g.bit( x ), f.bit( x ^ s ) );
    EXPECT_EQ( negate_variables( g, s ), f );
  }
}

TEST( PermuteVariables, examples )
{
  for ( const auto& p : std::vector<std::vector<unsigned>>{{0, 1, 2}, {2, 0, 1}, {1, 2, 0}, {2, 1, 0}} )
    EXPECT_EQ( permute_variables( maj3, p ), maj3 );
  EXPECT_EQ( permute_variables( parse_table( "2:A" ), {1, 0} ), parse_table( "2:C" ) );
  const auto swapped = oracle::table( 4, []( const oracle::Coords& c ) { return ( c[0] || c[2] ) && ( c[1] || c[3] ); } );
  EXPECT_EQ( permute_variables( g1, {0, 2, 1, 3} ), swapped );
  EXPECT_THROW( permute_variables( maj3, {0, 0, 1} ), precondition_error );
  EXPECT_THROW( permute_variables( maj3, {0, 1} ), precondition_error );
}

TEST( PermuteVariables, pointwise_definition_and_composition )
{
  std::mt19937_64 rng( 9 );
  for ( unsigned n = 1; n <= 7; ++n )
  {
    const auto f = oracle::table( n, [&]( const oracle::Coords& ) { return rng() & 1u; } );
    std::vector<unsigned> pi( n ), rho( n );
    std::iota( pi.begin(), pi.end(), 0u );
    std::iota( rho.begin(), rho.end(), 0u );
    std::shuffle( pi.begin(), pi.end(), rng );
    std::shuffle( rho.begin(), rho.end(), rng );

    // g(x_1..x_n) = f(x_pi(1)..x_pi(n))
    const auto g = permute_variables( f, pi );
    for ( uint32_t x = 0; x < f.num_bits(); ++x )
    {
      const auto c = oracle::coords( n, x );
      uint32_t y = 0;
      for ( unsigned i = 0; i < n; ++i )
        y |= static_cast<uint32_t>( c[pi[i]] ) << i;
      EXPECT_EQ( g.bit( x ), f.bit( y ) );
    }

    std::vector<unsigned> sigma( n );
    for ( unsigned i = 0; i < n; ++i )
      sigma[i] = rho[pi[i]];
    EXPECT_EQ( permute_variables( permute_variables( f, pi ), rho ), permute_variables( f, sigma ) );
  }
}

TEST( Cofactor, interleaving_reconstructs_function )
{
  std::mt19937_64 rng( 13 );
  for ( unsigned n = 1; n <= 8; ++n )
  {
    const auto f = oracle::table( n, [&]( const oracle::Coords& ) { return rng() & 1u; } );
    for ( unsigned i = 0; i < n; ++i )
    {
      const auto c0 = cofactor( f, i, false ), c1 = cofactor( f, i, true );
      const auto rebuilt = TruthTable::from_function( n, [&]( uint32_t x ) {
        const uint32_t low = x & ( ( 1u << i ) - 1 ), high = ( x >> ( i + 1 ) ) << i;
        return ( ( x >> i ) & 1u ) ? c1.bit( low | high ) : c0.bit( low | high );
      } );
      EXPECT_EQ( rebuilt, f );
      EXPECT_EQ( is_relevant( f, i ), c0 != c1 );
    }
  }
}

TEST( ShrinkAndExtend, inverse_on_support )
{
  const auto f = oracle::dnf( 5, {{2, 4}, {-5}} );
  const auto g = shrink_to_support( f );
  EXPECT_EQ( g.arity(), 3u );
  const std::vector<unsigned> vars = {1, 3, 4};
  EXPECT_EQ( extend_to( g, 5, vars ), f );
}

TEST( TruthTable, large_arity_operations )
{
  std::mt19937_64 rng( 17 );
  const unsigned n = 12;
  const auto f = oracle::table( n, [&]( const oracle::Coords& ) { return rng() & 1u; } );
  EXPECT_EQ( parse_table( to_hex_string( f ) ), f );
  EXPECT_EQ( negate_variables( negate_variables( f, 0xA53 ), 0xA53 ), f );
  for ( unsigned i : {0u, 5u, 6u, 11u} )
  {
    std::map<unsigned, int> fixed{{i, 1}};
    EXPECT_EQ( cofactor( f, i, true ), oracle::restrict( f, fixed ) );
  }
  EXPECT_EQ( ( ~f ).count_ones(), f.num_bits() - f.count_ones() );
}
