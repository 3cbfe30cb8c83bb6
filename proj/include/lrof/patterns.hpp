/*!
  \file patterns.hpp
  \brief Named function families, equivalence under renaming and negation of
         variables, and forbidden-restriction search
*/

#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "formula.hpp"
#include "truth_table.hpp"

namespace lrof
{

enum class Family
{
  g_n,
  f_n,
  h1_n,
  h2_n,
  h3,
  h4,
  g1,
  g2
};

struct FamilySpec
{
  Family family;
  unsigned n;

  friend bool operator==( const FamilySpec&, const FamilySpec& ) = default;
};

inline std::string_view family_name( Family f )
{
  switch ( f )
  {
  case Family::g_n:
    return "g_n";
  case Family::f_n:
    return "f_n";
  case Family::h1_n:
    return "h1_n";
  case Family::h2_n:
    return "h2_n";
  case Family::h3:
    return "h3";
  case Family::h4:
    return "h4";
  case Family::g1:
    return "g1";
  case Family::g2:
    return "g2";
  }
  return "?";
}

inline bool has_fixed_arity( Family f ) { return f == Family::h3 || f == Family::h4 || f == Family::g1 || f == Family::g2; }

/* "g_n:5", "h4" */
inline std::string to_string( const FamilySpec& s )
{
  std::string r( family_name( s.family ) );
  if ( !has_fixed_arity( s.family ) )
    r += ":" + std::to_string( s.n );
  return r;
}

inline void validate( const FamilySpec& s )
{
  unsigned lo = 0, hi = max_arity;
  switch ( s.family )
  {
  case Family::g_n:
  case Family::h2_n:
    lo = 3;
    break;
  case Family::h1_n:
    lo = 2;
    break;
  case Family::f_n:
    lo = 4;
    break;
  case Family::h3:
    lo = hi = 5;
    break;
  case Family::h4:
  case Family::g1:
  case Family::g2:
    lo = hi = 4;
    break;
  }
  if ( s.n < lo || s.n > hi )
    throw precondition_error( "arity " + std::to_string( s.n ) + " outside the range of family " + std::string( family_name( s.family ) ) );
}

/* accepts "g_n:5", "g:5", "h1_n:3", "h4", "g1", ... */
inline FamilySpec parse_family( std::string_view text )
{
  std::string_view name = text;
  std::optional<unsigned> n;
  if ( const auto c = text.find( ':' ); c != std::string_view::npos )
  {
    name = text.substr( 0, c );
    unsigned v = 0;
    const auto digits = text.substr( c + 1 );
    if ( digits.empty() || digits.size() > 3 )
      throw parse_error( "invalid family arity", c + 1 );
    for ( char ch : digits )
    {
      if ( ch < '0' || ch > '9' )
        throw parse_error( "invalid family arity", c + 1 );
      v = v * 10 + static_cast<unsigned>( ch - '0' );
    }
    n = v;
  }
  static constexpr std::pair<std::string_view, Family> names[] = {
      {"g_n", Family::g_n}, {"g", Family::g_n}, {"f_n", Family::f_n}, {"f", Family::f_n}, {"h1_n", Family::h1_n}, {"h1", Family::h1_n}, {"h2_n", Family::h2_n}, {"h2", Family::h2_n}, {"h3", Family::h3}, {"h4", Family::h4}, {"g1", Family::g1}, {"g2", Family::g2}};
  for ( const auto& [s, fam] : names )
  {
    if ( s != name )
      continue;
    FamilySpec spec{fam, 0};
    if ( has_fixed_arity( fam ) )
    {
      spec.n = fam == Family::h3 ? 5 : 4;
      if ( n && *n != spec.n )
        throw precondition_error( "family " + std::string( s ) + " has fixed arity " + std::to_string( spec.n ) );
    }
    else
    {
      if ( !n )
        throw parse_error( "family " + std::string( s ) + " needs an arity, e.g. " + std::string( s ) + ":4", text.size() );
      spec.n = *n;
    }
    validate( spec );
    return spec;
  }
  throw parse_error( "unknown family '" + std::string( name ) + "'", 0 );
}

namespace detail
{

inline std::string var_run( unsigned from, unsigned to, bool negated = false )
{
  std::string s;
  for ( unsigned i = from; i <= to; ++i )
    s += ( negated ? "!x" : "x" ) + std::to_string( i );
  return s;
}

} // namespace detail

/*! \brief The defining formula of a family member, in the formula grammar */
inline std::string family_formula( const FamilySpec& s )
{
  validate( s );
  const unsigned n = s.n;
  std::string r;
  auto term = [&r]( const std::string& t ) {
    if ( !r.empty() )
      r += " | ";
    r += t;
  };
  switch ( s.family )
  {
  case Family::g_n:
    for ( unsigned i = 2; i <= n; ++i )
      term( "x1x" + std::to_string( i ) );
    term( detail::var_run( 2, n ) );
    break;
  case Family::f_n:
    for ( unsigned i = 2; i + 1 <= n; ++i )
      term( "x1x" + std::to_string( i ) );
    term( detail::var_run( 2, n ) );
    break;
  case Family::h1_n:
    term( detail::var_run( 1, n ) );
    term( detail::var_run( 1, n, true ) );
    break;
  case Family::h2_n:
    term( "x1(x2 | " + detail::var_run( 3, n ) + ")" );
    term( "x2" + detail::var_run( 3, n, true ) );
    break;
  case Family::h3:
    r = "x1(x3x4 | x5) | x2(x3 | x4x5)";
    break;
  case Family::h4:
    r = "x1(x2 | x3) | x3x4";
    break;
  case Family::g1:
    r = "(x1 | x2)(x3 | x4)";
    break;
  case Family::g2:
    r = "x1x2 | x3x4";
    break;
  }
  return r;
}

inline TruthTable make_family( const FamilySpec& s ) { return eval_to_table( parse_formula( family_formula( s ), s.n ) ); }

/*! \brief pattern = permute_variables( negate_variables( source, negated ), perm ) */
struct EquivalenceMap
{
  std::vector<unsigned> perm;
  VarSet negated = 0;

  TruthTable apply( const TruthTable& source ) const { return permute_variables( negate_variables( source, negated ), perm ); }

  friend bool operator==( const EquivalenceMap&, const EquivalenceMap& ) = default;
};

inline constexpr unsigned max_canonical_arity = 6u;
inline constexpr unsigned max_match_arity = 8u;

/*! \brief Least table (by value) over all renamings and variable negations of
           f restricted to its relevant variables */
inline TruthTable canonical_form( const TruthTable& f )
{
  const auto g = shrink_to_support( f );
  const unsigned k = g.arity();
  if ( k > max_canonical_arity )
    throw precondition_error( "canonical_form supports at most " + std::to_string( max_canonical_arity ) + " relevant variables" );

  std::vector<unsigned> perm( k );
  std::iota( perm.begin(), perm.end(), 0u );
  TruthTable best = g;
  do
  {
    const auto p = permute_variables( g, perm );
    for ( VarSet s = 0; s < ( VarSet{1} << k ); ++s )
    {
      auto c = negate_variables( p, s );
      if ( c < best )
        best = std::move( c );
    }
  } while ( std::next_permutation( perm.begin(), perm.end() ) );
  return best;
}

namespace detail
{

/* Backtracking matcher. Source variable i is sent to target variable perm[i]
   with polarity bit i of `negated`. After fixing source variables 0..j-1 the
   weights of corresponding cofactors must agree, which prunes the search. */
class EquivalenceMatcher
{
public:
  EquivalenceMatcher( const TruthTable& source, const TruthTable& target )
      : src_( source ), dst_( target ), m_( source.arity() ), perm_( m_ ), used_( 0 )
  {
  }

  std::optional<EquivalenceMap> run()
  {
    if ( src_.arity() != dst_.arity() || src_.count_ones() != dst_.count_ones() )
      return std::nullopt;
    if ( extend( 0 ) )
      return EquivalenceMap{perm_, negated_};
    return std::nullopt;
  }

private:
  bool consistent( unsigned j ) const
  {
    // source cofactor key: low j bits; target key: bit i = x[perm[i]] ^ neg_i
    std::vector<uint32_t> cs( std::size_t{1} << j, 0 ), ct( std::size_t{1} << j, 0 );
    const uint32_t low = ( uint32_t{1} << j ) - 1;
    for ( uint32_t x = 0; x < src_.num_bits(); ++x )
    {
      if ( src_.bit( x ) )
        ++cs[x & low];
      if ( dst_.bit( x ) )
      {
        uint32_t key = 0;
        for ( unsigned i = 0; i < j; ++i )
          key |= ( ( ( x >> perm_[i] ) ^ ( negated_ >> i ) ) & 1u ) << i;
        ++ct[key];
      }
    }
    return cs == ct;
  }

  bool extend( unsigned i )
  {
    if ( i == m_ )
      return EquivalenceMap{perm_, negated_}.apply( src_ ) == dst_;
    for ( unsigned t = 0; t < m_; ++t )
    {
      if ( ( used_ >> t ) & 1u )
        continue;
      for ( bool neg : {false, true} )
      {
        perm_[i] = t;
        negated_ = neg ? ( negated_ | ( VarSet{1} << i ) ) : ( negated_ & ~( VarSet{1} << i ) );
        used_ |= VarSet{1} << t;
        if ( consistent( i + 1 ) && extend( i + 1 ) )
          return true;
        used_ &= ~( VarSet{1} << t );
      }
    }
    negated_ &= ~( VarSet{1} << i );
    return false;
  }

  const TruthTable& src_;
  const TruthTable& dst_;
  unsigned m_;
  std::vector<unsigned> perm_;
  VarSet used_;
  VarSet negated_ = 0;
};

} // namespace detail

/*! \brief A map with target = map.apply( source ), if one exists */
inline std::optional<EquivalenceMap> find_equivalence( const TruthTable& source, const TruthTable& target )
{
  if ( source.arity() > max_match_arity )
    throw precondition_error( "equivalence matching supports at most " + std::to_string( max_match_arity ) + " variables" );
  return detail::EquivalenceMatcher( source, target ).run();
}

/*! \brief Restriction of f that maps onto a pattern

  The pattern is the restriction of f to `assignment`, followed by `map`,
  and complemented when `output_negated` is set.
*/
struct RestrictionWitness
{
  PartialAssignment assignment;
  EquivalenceMap map;
  bool output_negated = false;

  TruthTable apply( const TruthTable& f ) const
  {
    auto t = map.apply( restrict( f, assignment ) );
    return output_negated ? ~t : t;
  }
};

namespace detail
{

/* Calls fn(assignment) for every assignment fixing exactly `k` of n variables:
   fixed sets in lexicographic order, then values lexicographically. Stops
   when fn returns true. */
template<typename Fn>
bool for_each_assignment( unsigned n, unsigned k, Fn&& fn )
{
  std::vector<unsigned> set( k );
  std::iota( set.begin(), set.end(), 0u );
  for ( ;; )
  {
    for ( uint32_t v = 0; v < ( uint32_t{1} << k ); ++v )
    {
      PartialAssignment a( n );
      for ( unsigned j = 0; j < k; ++j )
        a.bind( set[j], ( v >> ( k - 1 - j ) ) & 1u );
      if ( fn( a ) )
        return true;
    }
    // next combination
    int j = static_cast<int>( k ) - 1;
    while ( j >= 0 && set[static_cast<unsigned>( j )] == n - k + static_cast<unsigned>( j ) )
      --j;
    if ( j < 0 )
      return false;
    ++set[static_cast<unsigned>( j )];
    for ( unsigned l = static_cast<unsigned>( j ) + 1; l < k; ++l )
      set[l] = set[l - 1] + 1;
  }
}

} // namespace detail

/*! \brief First restriction of f equal to the pattern, exactly or up to
           renaming and negation of variables

  Irrelevant pattern variables are dropped first, so the residual arity of
  every candidate restriction equals the pattern's relevant-variable count.
*/
inline std::optional<RestrictionWitness> contains_restriction( const TruthTable& f, const TruthTable& pattern, bool up_to_equivalence )
{
  const auto p = shrink_to_support( pattern );
  const unsigned m = p.arity();
  const unsigned n = f.arity();
  if ( m > n )
    throw precondition_error( "pattern has more relevant variables than the function has arguments" );
  if ( up_to_equivalence && m > max_match_arity )
    throw precondition_error( "pattern has more than " + std::to_string( max_match_arity ) + " relevant variables" );

  const auto ones = p.count_ones();
  std::optional<RestrictionWitness> found;
  detail::for_each_assignment( n, n - m, [&]( const PartialAssignment& a ) {
    const auto r = restrict( f, a );
    if ( r.count_ones() != ones )
      return false;
    std::vector<unsigned> id( m );
    std::iota( id.begin(), id.end(), 0u );
    if ( r == p )
    {
      found = RestrictionWitness{a, {id, 0}, false};
      return true;
    }
    if ( !up_to_equivalence )
      return false;
    if ( auto map = find_equivalence( r, p ) )
    {
      found = RestrictionWitness{a, *map, false};
      return true;
    }
    return false;
  } );
  return found;
}

/*! \brief Minimal non-read-once patterns g_m, h1_m, h2_m, h3, h4 with at most n variables,
           ordered by arity then family */
inline std::vector<FamilySpec> stetsenko_list( unsigned n )
{
  std::vector<FamilySpec> list;
  for ( unsigned m = 2; m <= n; ++m )
  {
    if ( m >= 3 )
      list.push_back( {Family::g_n, m} );
    list.push_back( {Family::h1_n, m} );
    if ( m >= 3 )
      list.push_back( {Family::h2_n, m} );
    if ( m == 5 )
      list.push_back( {Family::h3, 5} );
    if ( m == 4 )
      list.push_back( {Family::h4, 4} );
  }
  return list;
}

inline constexpr unsigned max_stetsenko_arity = 8u;

struct StetsenkoWitness
{
  FamilySpec family;
  RestrictionWitness witness;
};

/*! \brief A restriction of f equivalent to a minimal non-read-once function

  Members are matched up to renaming and negation of variables, and also in
  complemented form, since the complement of a read-once function is
  read-once. Search order: the member list order, member before complement.
*/
inline std::optional<StetsenkoWitness> stetsenko_witness( const TruthTable& f )
{
  if ( f.arity() > max_stetsenko_arity )
    throw precondition_error( "stetsenko_witness supports at most " + std::to_string( max_stetsenko_arity ) + " variables" );
  for ( const auto& spec : stetsenko_list( f.arity() ) )
  {
    const auto pattern = make_family( spec );
    for ( bool complemented : {false, true} )
    {
      if ( auto w = contains_restriction( f, complemented ? ~pattern : pattern, true ) )
      {
        w->output_negated = complemented;
        return StetsenkoWitness{spec, *w};
      }
    }
  }
  return std::nullopt;
}

} // namespace lrof
