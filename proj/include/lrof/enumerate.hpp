/*!
  \file enumerate.hpp
  \brief Enumeration of all positive functions of small arity
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "truth_table.hpp"

namespace lrof
{

inline constexpr unsigned max_enumeration_arity = 6u;

/* Dedekind numbers for n = 0..6 */
inline constexpr uint64_t dedekind_numbers[] = {2, 3, 6, 20, 168, 7581, 7828354};

namespace detail
{

/* Positive functions of arity n as table words, ascending. A positive f
   splits into f0 = f|x_n=0 and f1 = f|x_n=1 with f0 <= f1, both positive. */
inline std::vector<uint64_t> positive_words( unsigned n )
{
  if ( n == 0 )
    return {0, 1};
  const auto sub = positive_words( n - 1 );
  const unsigned half = 1u << ( n - 1 );
  std::vector<uint64_t> out;
  for ( auto f1 : sub )
  {
    for ( auto f0 : sub )
    {
      if ( ( f0 & ~f1 ) == 0 )
        out.push_back( f0 | ( f1 << half ) );
    }
  }
  return out;
}

} // namespace detail

/*! \brief Calls fn(f) for every positive function on n <= 6 variables

  Functions are produced in ascending table order. Returns the count.
*/
template<typename Fn>
uint64_t enumerate_positive( unsigned n, Fn&& fn )
{
  if ( n > max_enumeration_arity )
    throw precondition_error( "positive-function enumeration supports arity <= 6" );
  if ( n == 0 )
  {
    fn( TruthTable::from_word( 0, 0 ) );
    fn( TruthTable::from_word( 0, 1 ) );
    return 2;
  }
  const auto sub = detail::positive_words( n - 1 );
  const unsigned half = 1u << ( n - 1 );
  uint64_t count = 0;
  for ( auto f1 : sub )
  {
    for ( auto f0 : sub )
    {
      if ( ( f0 & ~f1 ) != 0 )
        continue;
      fn( TruthTable::from_word( n, f0 | ( f1 << half ) ) );
      ++count;
    }
  }
  return count;
}

inline std::vector<TruthTable> enumerate_positive( unsigned n )
{
  std::vector<TruthTable> out;
  enumerate_positive( n, [&]( const TruthTable& f ) { out.push_back( f ); } );
  return out;
}

/*! \brief Positive functions of arity n <= 6 as table words, ascending */
inline std::vector<uint64_t> positive_tables( unsigned n )
{
  if ( n > max_enumeration_arity )
    throw precondition_error( "positive-function enumeration supports arity <= 6" );
  return detail::positive_words( n );
}

} // namespace lrof
