/*!
  \file random_functions.hpp
  \brief Seeded generators for random tables, threshold and lro functions
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "formula.hpp"
#include "truth_table.hpp"

namespace lrof
{

using Rng = std::mt19937_64;

inline TruthTable random_table( unsigned n, Rng& rng )
{
  TruthTable t( n );
  for ( std::size_t i = 0; i < t.num_bits(); ++i )
  {
    if ( rng() & 1u )
      t.set_bit( i, true );
  }
  return t;
}

/*! \brief Non-constant threshold function with integer weights in [-2n, 2n]

  The threshold is drawn strictly between the smallest and largest weight
  sums, so both a zero and a one exist.
*/
inline TruthTable random_threshold( unsigned n, Rng& rng )
{
  if ( n == 0 )
    throw precondition_error( "a non-constant function needs at least one variable" );
  const long bound = 2 * static_cast<long>( n );
  std::uniform_int_distribution<long> wd( -bound, bound );
  for ( ;; )
  {
    std::vector<long> w( n );
    long lo = 0, hi = 0;
    for ( auto& x : w )
    {
      x = wd( rng );
      ( x < 0 ? lo : hi ) += x;
    }
    if ( lo == hi )
      continue;
    const long t = std::uniform_int_distribution<long>( lo, hi - 1 )( rng );
    return TruthTable::from_function( n, [&]( uint32_t x ) {
      long s = 0;
      for ( unsigned i = 0; i < n; ++i )
      {
        if ( ( x >> i ) & 1u )
          s += w[i];
      }
      return s > t;
    } );
  }
}

/*! \brief Nested formula depending on all n variables

  Variables are attached in random order, each as a literal of random
  polarity joined by a random connective.
*/
inline FormulaAst random_lro_formula( unsigned n, Rng& rng )
{
  if ( n == 0 )
    return {0, make_const( rng() & 1u )};
  std::vector<unsigned> order( n );
  std::iota( order.begin(), order.end(), 0u );
  std::shuffle( order.begin(), order.end(), rng );

  auto node = make_literal( order.back(), rng() & 1u );
  for ( auto it = order.rbegin() + 1; it != order.rend(); ++it )
  {
    auto lit = make_literal( *it, rng() & 1u );
    node = ( rng() & 1u ) ? make_and( {std::move( lit ), std::move( node )} ) : make_or( {std::move( lit ), std::move( node )} );
  }
  return {n, std::move( node )};
}

inline TruthTable random_lro( unsigned n, Rng& rng ) { return eval_to_table( random_lro_formula( n, rng ) ); }

} // namespace lrof
