/*!
  \file rational_lp.hpp
  \brief Exact feasibility of systems of linear inequalities over the rationals

  A system { a_j . z <= b_j } in free variables z is feasible iff its Farkas
  alternative { lambda >= 0, sum lambda_j a_j = 0, sum lambda_j b_j = -1 } is
  not. The alternative has only dims + 1 rows, however many constraints the
  primal has, so we run phase one of the simplex method on it (Bland's rule,
  exact arithmetic). When its optimum is positive, the simplex multipliers
  at the optimum yield a feasible z directly.
*/

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace lrof
{

using Rational = mpq_class;

class FeasibilitySystem
{
public:
  explicit FeasibilitySystem( std::size_t dims ) : dims_( dims ) {}

  std::size_t dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return rows_.size(); }

  /* a . z <= b */
  void add_less_equal( std::span<const long> a, long b ) { add( a, b, false ); }

  /* a . z == b */
  void add_equal( std::span<const long> a, long b ) { add( a, b, true ); }

  /*! \brief A rational point satisfying every constraint, or nullopt */
  std::optional<std::vector<Rational>> solve() const
  {
    const auto cols = alternative_columns();
    std::optional<std::vector<Rational>> z;
    if ( auto r = solve_integer( cols ) )
      z = std::move( *r );
    else
      z = solve_rational( cols );

    if ( z && !satisfies( *z ) )
      throw std::logic_error( "LP solution fails re-verification" );
    return z;
  }

  bool satisfies( std::span<const Rational> z ) const
  {
    Rational lhs;
    for ( const auto& r : rows_ )
    {
      lhs = 0;
      for ( std::size_t i = 0; i < dims_; ++i )
      {
        if ( r.a[i] != 0 )
          lhs += r.a[i] * z[i];
      }
      if ( r.equality ? lhs != r.b : lhs > r.b )
        return false;
    }
    return true;
  }

private:
  struct Row
  {
    std::vector<long> a;
    long b;
    bool equality;
  };

  /* Columns of the alternative (a_j, -b_j), one per inequality and a +/- pair
     per equality, stored dense with dims + 1 entries. */
  std::vector<std::vector<long>> alternative_columns() const
  {
    std::vector<std::vector<long>> cols;
    for ( const auto& r : rows_ )
    {
      for ( long s : {1L, -1L} )
      {
        std::vector<long> c( dims_ + 1 );
        for ( std::size_t i = 0; i < dims_; ++i )
          c[i] = s * r.a[i];
        c[dims_] = -s * r.b;
        cols.push_back( std::move( c ) );
        if ( !r.equality )
          break;
      }
    }
    return cols;
  }

  /* Phase one with integer-preserving pivots: every stored entry is the true
     value times the current denominator (the previous pivot), and updates
     divide exactly. Returns nullopt if an entry leaves the int64 range. */
  std::optional<std::optional<std::vector<Rational>>> solve_integer( const std::vector<std::vector<long>>& cols ) const
  {
    using i128 = __int128;
    const std::size_t R = dims_ + 1, C = cols.size(), W = C + R + 1, rhs = W - 1;
    std::vector<std::vector<int64_t>> T( R + 1, std::vector<int64_t>( W, 0 ) );
    auto& obj = T[R];
    for ( std::size_t j = 0; j < C; ++j )
    {
      for ( std::size_t i = 0; i < R; ++i )
      {
        T[i][j] = cols[j][i];
        obj[j] -= cols[j][i];
      }
    }
    for ( std::size_t i = 0; i < R; ++i )
      T[i][C + i] = 1;
    T[dims_][rhs] = 1;
    obj[rhs] = -1;

    std::vector<std::size_t> basis( R );
    for ( std::size_t i = 0; i < R; ++i )
      basis[i] = C + i;

    int64_t denom = 1;
    constexpr i128 lim = std::numeric_limits<int64_t>::max();
    for ( ;; )
    {
      std::size_t enter = W;
      for ( std::size_t j = 0; j + 1 < W; ++j )
      {
        if ( obj[j] < 0 )
        {
          enter = j;
          break;
        }
      }
      if ( enter == W )
        break;

      std::size_t leave = R;
      for ( std::size_t i = 0; i < R; ++i )
      {
        if ( T[i][enter] <= 0 )
          continue;
        if ( leave == R )
        {
          leave = i;
          continue;
        }
        // compare T[i][rhs]/T[i][enter] with T[leave][rhs]/T[leave][enter]
        const i128 lhs = static_cast<i128>( T[i][rhs] ) * T[leave][enter];
        const i128 cur = static_cast<i128>( T[leave][rhs] ) * T[i][enter];
        if ( lhs < cur || ( lhs == cur && basis[i] < basis[leave] ) )
          leave = i;
      }
      if ( leave == R )
        throw std::logic_error( "phase one of the alternative system is unbounded" );

      const auto& prow = T[leave];
      const int64_t piv = prow[enter];
      for ( std::size_t i = 0; i <= R; ++i )
      {
        if ( i == leave )
          continue;
        auto& row = T[i];
        const int64_t factor = row[enter];
        for ( std::size_t j = 0; j < W; ++j )
        {
          i128 v = static_cast<i128>( row[j] ) * piv;
          if ( factor != 0 && prow[j] != 0 )
            v -= static_cast<i128>( factor ) * prow[j];
          v /= denom;
          if ( v > lim || v < -lim )
            return std::nullopt;
          row[j] = static_cast<int64_t>( v );
        }
      }
      denom = piv;
      basis[leave] = enter;
    }

    if ( obj[rhs] == 0 )
      return std::optional<std::vector<Rational>>{};

    // multipliers pi_i = 1 - reduced cost of artificial i
    std::vector<Rational> pi( R );
    for ( std::size_t i = 0; i < R; ++i )
      pi[i] = 1 - Rational( static_cast<long>( obj[C + i] ), static_cast<unsigned long>( denom ) );
    std::vector<Rational> z( dims_ );
    for ( std::size_t i = 0; i < dims_; ++i )
      z[i] = pi[i] / pi[dims_];
    return std::optional<std::vector<Rational>>{std::move( z )};
  }

  std::optional<std::vector<Rational>> solve_rational( const std::vector<std::vector<long>>& cols ) const
  {
    const std::size_t R = dims_ + 1, C = cols.size(), W = C + R + 1, rhs = W - 1;
    std::vector<std::vector<Rational>> T( R + 1, std::vector<Rational>( W ) );
    auto& obj = T[R];
    for ( std::size_t j = 0; j < C; ++j )
    {
      for ( std::size_t i = 0; i < R; ++i )
      {
        if ( cols[j][i] != 0 )
        {
          T[i][j] = cols[j][i];
          obj[j] -= cols[j][i];
        }
      }
    }
    for ( std::size_t i = 0; i < R; ++i )
      T[i][C + i] = 1;
    T[dims_][rhs] = 1;
    obj[rhs] = -1;

    std::vector<std::size_t> basis( R );
    for ( std::size_t i = 0; i < R; ++i )
      basis[i] = C + i;

    std::vector<std::size_t> nz;
    Rational best, ratio;
    for ( ;; )
    {
      std::size_t enter = W;
      for ( std::size_t j = 0; j + 1 < W; ++j )
      {
        if ( sgn( obj[j] ) < 0 )
        {
          enter = j;
          break;
        }
      }
      if ( enter == W )
        break;

      std::size_t leave = R;
      for ( std::size_t i = 0; i < R; ++i )
      {
        if ( sgn( T[i][enter] ) <= 0 )
          continue;
        ratio = T[i][rhs] / T[i][enter];
        if ( leave == R || ratio < best || ( ratio == best && basis[i] < basis[leave] ) )
        {
          leave = i;
          best = ratio;
        }
      }
      if ( leave == R )
        throw std::logic_error( "phase one of the alternative system is unbounded" );

      auto& prow = T[leave];
      const Rational piv = prow[enter];
      nz.clear();
      for ( std::size_t j = 0; j < W; ++j )
      {
        if ( sgn( prow[j] ) != 0 )
        {
          prow[j] /= piv;
          nz.push_back( j );
        }
      }
      for ( std::size_t i = 0; i <= R; ++i )
      {
        if ( i == leave || sgn( T[i][enter] ) == 0 )
          continue;
        const Rational factor = T[i][enter];
        auto& row = T[i];
        for ( auto j : nz )
          row[j] -= factor * prow[j];
      }
      basis[leave] = enter;
    }

    if ( sgn( obj[rhs] ) == 0 )
      return std::nullopt;

    std::vector<Rational> pi( R );
    for ( std::size_t i = 0; i < R; ++i )
      pi[i] = 1 - obj[C + i];
    std::vector<Rational> z( dims_ );
    for ( std::size_t i = 0; i < dims_; ++i )
      z[i] = pi[i] / pi[dims_];
    return z;
  }

  void add( std::span<const long> a, long b, bool eq )
  {
    if ( a.size() != dims_ )
      throw std::invalid_argument( "constraint dimension mismatch" );
    rows_.push_back( {std::vector<long>( a.begin(), a.end() ), b, eq} );
  }

  std::size_t dims_;
  std::vector<Row> rows_;
};

} // namespace lrof
