/*!
  \file truth_table.hpp
  \brief Complete truth tables of Boolean functions and the primitive
         manipulations on them (evaluation, restriction, renaming, negation).

  Variables are indexed from 0 internally and printed as x1..xn. Bit i of a
  table is the value at the point whose index is i, where variable x1 is the
  least significant bit of the index.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lrof
{

inline constexpr unsigned max_arity = 20u;

/*! \brief Raised for violated preconditions (arity mismatch, bad index, ...) */
class precondition_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/*! \brief Raised when text input (tables, formulas, patterns) is malformed */
class parse_error : public std::invalid_argument
{
public:
  parse_error( const std::string& msg, std::size_t pos = 0 )
      : std::invalid_argument( msg ), position( pos ) {}
  std::size_t position;
};

namespace detail
{

inline void check_arity( unsigned n, unsigned cap = max_arity )
{
  if ( n > cap )
  {
    throw precondition_error( "arity " + std::to_string( n ) + " exceeds supported maximum " + std::to_string( cap ) );
  }
}

/* bits where variable i (< 6) is 0 */
inline constexpr uint64_t var_zero_masks[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};

} // namespace detail

/*! \brief A vertex of the hypercube B^n, stored by its index */
class Point
{
public:
  Point() = default;
  Point( unsigned arity, uint32_t index ) : arity_( arity ), index_( index )
  {
    detail::check_arity( arity );
    if ( arity < 32 && index >= ( uint32_t{1} << arity ) )
    {
      throw precondition_error( "point index out of range" );
    }
  }

  static Point from_coordinates( std::span<const int> coords )
  {
    uint32_t idx = 0;
    for ( std::size_t i = 0; i < coords.size(); ++i )
    {
      if ( coords[i] != 0 && coords[i] != 1 )
      {
        throw precondition_error( "point coordinates must be 0 or 1" );
      }
      idx |= static_cast<uint32_t>( coords[i] ) << i;
    }
    return Point( static_cast<unsigned>( coords.size() ), idx );
  }

  static Point from_coordinates( std::initializer_list<int> coords )
  {
    return from_coordinates( std::span<const int>( coords.begin(), coords.size() ) );
  }

  unsigned arity() const noexcept { return arity_; }
  uint32_t index() const noexcept { return index_; }
  bool coordinate( unsigned i ) const noexcept { return ( index_ >> i ) & 1u; }

  std::vector<int> coordinates() const
  {
    std::vector<int> c( arity_ );
    for ( unsigned i = 0; i < arity_; ++i )
    {
      c[i] = coordinate( i ) ? 1 : 0;
    }
    return c;
  }

  /* "(1,0,1)" */
  std::string to_string() const
  {
    std::string s = "(";
    for ( unsigned i = 0; i < arity_; ++i )
    {
      if ( i )
        s += ',';
      s += coordinate( i ) ? '1' : '0';
    }
    return s + ")";
  }

  friend bool operator==( const Point&, const Point& ) = default;
  friend auto operator<=>( const Point& a, const Point& b )
  {
    if ( auto c = a.arity_ <=> b.arity_; c != 0 )
      return c;
    return a.index_ <=> b.index_;
  }

private:
  unsigned arity_ = 0;
  uint32_t index_ = 0;
};

/*! \brief Truth table of an n-variable Boolean function, 0 <= n <= 20 */
class TruthTable
{
public:
  TruthTable() : words_( 1, 0 ) {}

  explicit TruthTable( unsigned arity )
      : arity_( arity )
  {
    detail::check_arity( arity );
    words_.assign( word_count( arity ), 0 );
  }

  /* builds the table of `fn(index)` for every index */
  template<typename Fn>
  static TruthTable from_function( unsigned arity, Fn&& fn )
  {
    TruthTable t( arity );
    for ( std::size_t i = 0; i < t.num_bits(); ++i )
    {
      if ( fn( static_cast<uint32_t>( i ) ) )
        t.set_bit( i, true );
    }
    return t;
  }

  /* arity <= 6 only */
  static TruthTable from_word( unsigned arity, uint64_t bits )
  {
    if ( arity > 6 )
      throw precondition_error( "from_word requires arity <= 6" );
    TruthTable t( arity );
    t.words_[0] = bits & t.last_word_mask();
    return t;
  }

  static TruthTable constant( unsigned arity, bool value )
  {
    TruthTable t( arity );
    if ( value )
    {
      std::fill( t.words_.begin(), t.words_.end(), ~uint64_t{0} );
      t.words_.back() &= t.last_word_mask();
    }
    return t;
  }

  /* the projection onto variable `var` */
  static TruthTable variable( unsigned arity, unsigned var )
  {
    if ( var >= arity )
      throw precondition_error( "variable index out of range" );
    return from_function( arity, [var]( uint32_t i ) { return ( i >> var ) & 1u; } );
  }

  unsigned arity() const noexcept { return arity_; }
  std::size_t num_bits() const noexcept { return std::size_t{1} << arity_; }

  bool bit( std::size_t i ) const noexcept { return ( words_[i >> 6] >> ( i & 63 ) ) & 1u; }

  void set_bit( std::size_t i, bool v ) noexcept
  {
    const uint64_t m = uint64_t{1} << ( i & 63 );
    if ( v )
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }

  void flip_bit( std::size_t i ) noexcept { words_[i >> 6] ^= uint64_t{1} << ( i & 63 ); }

  std::span<const uint64_t> words() const noexcept { return words_; }
  std::span<uint64_t> words() noexcept { return words_; }

  std::size_t count_ones() const noexcept
  {
    std::size_t c = 0;
    for ( auto w : words_ )
      c += static_cast<std::size_t>( std::popcount( w ) );
    return c;
  }

  bool is_const0() const noexcept
  {
    return std::all_of( words_.begin(), words_.end(), []( auto w ) { return w == 0; } );
  }

  bool is_const1() const noexcept { return count_ones() == num_bits(); }

  bool is_constant() const noexcept { return is_const0() || is_const1(); }

  TruthTable operator~() const
  {
    TruthTable r = *this;
    for ( auto& w : r.words_ )
      w = ~w;
    r.words_.back() &= r.last_word_mask();
    return r;
  }

  TruthTable& operator&=( const TruthTable& o )
  {
    same_arity( o );
    for ( std::size_t i = 0; i < words_.size(); ++i )
      words_[i] &= o.words_[i];
    return *this;
  }

  TruthTable& operator|=( const TruthTable& o )
  {
    same_arity( o );
    for ( std::size_t i = 0; i < words_.size(); ++i )
      words_[i] |= o.words_[i];
    return *this;
  }

  TruthTable& operator^=( const TruthTable& o )
  {
    same_arity( o );
    for ( std::size_t i = 0; i < words_.size(); ++i )
      words_[i] ^= o.words_[i];
    return *this;
  }

  friend TruthTable operator&( TruthTable a, const TruthTable& b ) { return a &= b; }
  friend TruthTable operator|( TruthTable a, const TruthTable& b ) { return a |= b; }
  friend TruthTable operator^( TruthTable a, const TruthTable& b ) { return a ^= b; }

  /* pointwise a <= b */
  bool implies( const TruthTable& o ) const
  {
    same_arity( o );
    for ( std::size_t i = 0; i < words_.size(); ++i )
    {
      if ( words_[i] & ~o.words_[i] )
        return false;
    }
    return true;
  }

  friend bool operator==( const TruthTable& a, const TruthTable& b ) = default;

  /* orders by arity, then by the numeric value of the table */
  friend std::strong_ordering operator<=>( const TruthTable& a, const TruthTable& b )
  {
    if ( auto c = a.arity_ <=> b.arity_; c != 0 )
      return c;
    for ( std::size_t i = a.words_.size(); i-- > 0; )
    {
      if ( auto c = a.words_[i] <=> b.words_[i]; c != 0 )
        return c;
    }
    return std::strong_ordering::equal;
  }

private:
  static std::size_t word_count( unsigned arity ) { return arity <= 6 ? 1 : std::size_t{1} << ( arity - 6 ); }

  uint64_t last_word_mask() const noexcept
  {
    return arity_ >= 6 ? ~uint64_t{0} : ( ( uint64_t{1} << ( uint64_t{1} << arity_ ) ) - 1 );
  }

  void same_arity( const TruthTable& o ) const
  {
    if ( arity_ != o.arity_ )
      throw precondition_error( "arity mismatch" );
  }

  unsigned arity_ = 0;
  std::vector<uint64_t> words_;
};

/*! \brief A set of variable bindings x_i = value with pairwise distinct i */
class PartialAssignment
{
public:
  struct Binding
  {
    unsigned var;
    bool value;
    friend bool operator==( const Binding&, const Binding& ) = default;
  };

  PartialAssignment() = default;
  explicit PartialAssignment( unsigned arity ) : arity_( arity ) { detail::check_arity( arity ); }

  PartialAssignment( unsigned arity, std::initializer_list<Binding> bs ) : PartialAssignment( arity )
  {
    for ( const auto& b : bs )
      bind( b.var, b.value );
  }

  PartialAssignment& bind( unsigned var, bool value )
  {
    if ( var >= arity_ )
      throw precondition_error( "bound variable x" + std::to_string( var + 1 ) + " out of range" );
    if ( is_bound( var ) )
      throw precondition_error( "variable x" + std::to_string( var + 1 ) + " bound twice" );
    bindings_.push_back( {var, value} );
    return *this;
  }

  bool is_bound( unsigned var ) const
  {
    return std::any_of( bindings_.begin(), bindings_.end(), [var]( const Binding& b ) { return b.var == var; } );
  }

  unsigned arity() const noexcept { return arity_; }
  std::span<const Binding> bindings() const noexcept { return bindings_; }
  std::size_t size() const noexcept { return bindings_.size(); }

  /* "x2=0, x4=1" in binding order */
  std::string to_string() const
  {
    std::string s;
    for ( const auto& b : bindings_ )
    {
      if ( !s.empty() )
        s += ", ";
      s += "x" + std::to_string( b.var + 1 ) + "=" + ( b.value ? "1" : "0" );
    }
    return s;
  }

  friend bool operator==( const PartialAssignment&, const PartialAssignment& ) = default;

private:
  unsigned arity_ = 0;
  std::vector<Binding> bindings_;
};

/* a variable set as a bitmask over variable indices */
using VarSet = uint32_t;

inline std::vector<unsigned> to_indices( VarSet s )
{
  std::vector<unsigned> r;
  for ( unsigned i = 0; s; ++i, s >>= 1 )
  {
    if ( s & 1u )
      r.push_back( i );
  }
  return r;
}

inline VarSet from_indices( std::span<const unsigned> vars )
{
  VarSet s = 0;
  for ( auto v : vars )
    s |= VarSet{1} << v;
  return s;
}

inline bool evaluate( const TruthTable& f, const Point& p )
{
  if ( p.arity() != f.arity() )
    throw precondition_error( "arity mismatch between function and point" );
  return f.bit( p.index() );
}

/*! \brief Restriction of `f` to the bindings of `a`

  Surviving variables keep their relative order and are renumbered from 0.
*/
inline TruthTable restrict( const TruthTable& f, const PartialAssignment& a )
{
  if ( a.arity() != f.arity() )
    throw precondition_error( "arity mismatch between function and assignment" );

  const unsigned n = f.arity();
  uint32_t fixed_mask = 0, fixed_value = 0;
  for ( const auto& b : a.bindings() )
  {
    fixed_mask |= uint32_t{1} << b.var;
    if ( b.value )
      fixed_value |= uint32_t{1} << b.var;
  }
  std::vector<unsigned> free_vars;
  for ( unsigned i = 0; i < n; ++i )
  {
    if ( !( ( fixed_mask >> i ) & 1u ) )
      free_vars.push_back( i );
  }

  const auto m = static_cast<unsigned>( free_vars.size() );
  TruthTable g( m );
  for ( uint32_t y = 0; y < ( uint32_t{1} << m ); ++y )
  {
    uint32_t x = fixed_value;
    for ( unsigned j = 0; j < m; ++j )
    {
      if ( ( y >> j ) & 1u )
        x |= uint32_t{1} << free_vars[j];
    }
    if ( f.bit( x ) )
      g.set_bit( y, true );
  }
  return g;
}

/* f restricted to x_var = value */
inline TruthTable cofactor( const TruthTable& f, unsigned var, bool value )
{
  PartialAssignment a( f.arity() );
  a.bind( var, value );
  return restrict( f, a );
}

namespace detail
{

/* Calls fn(lo, hi) on aligned word slices of the two cofactors of `var`,
   each masked to the positions where var = 0. Stops early when fn is false. */
template<typename Fn>
bool for_each_cofactor_pair( const TruthTable& f, unsigned var, Fn&& fn )
{
  const auto w = f.words();
  if ( var < 6 )
  {
    const auto shift = 1u << var;
    const auto m = var_zero_masks[var];
    for ( auto word : w )
    {
      if ( !fn( word & m, ( word >> shift ) & m ) )
        return false;
    }
    return true;
  }
  const std::size_t stride = std::size_t{1} << ( var - 6 );
  for ( std::size_t j = 0; j < w.size(); ++j )
  {
    if ( j & stride )
      continue;
    if ( !fn( w[j], w[j + stride] ) )
      return false;
  }
  return true;
}

} // namespace detail

inline bool is_relevant( const TruthTable& f, unsigned var )
{
  if ( var >= f.arity() )
    throw precondition_error( "variable index out of range" );
  return !detail::for_each_cofactor_pair( f, var, []( uint64_t lo, uint64_t hi ) { return lo == hi; } );
}

/* f(x) <= f(x with x_var = 1) for every x */
inline bool is_positive_in( const TruthTable& f, unsigned var )
{
  return detail::for_each_cofactor_pair( f, var, []( uint64_t lo, uint64_t hi ) { return ( lo & ~hi ) == 0; } );
}

inline bool is_negative_in( const TruthTable& f, unsigned var )
{
  return detail::for_each_cofactor_pair( f, var, []( uint64_t lo, uint64_t hi ) { return ( hi & ~lo ) == 0; } );
}

inline VarSet relevant_variables( const TruthTable& f )
{
  VarSet s = 0;
  for ( unsigned i = 0; i < f.arity(); ++i )
  {
    if ( is_relevant( f, i ) )
      s |= VarSet{1} << i;
  }
  return s;
}

inline unsigned relevant_count( const TruthTable& f ) { return static_cast<unsigned>( std::popcount( relevant_variables( f ) ) ); }

/*! \brief g(x) = f(x with the coordinates in `vars` flipped) */
inline TruthTable negate_variables( const TruthTable& f, VarSet vars )
{
  if ( f.arity() < 32 && ( vars >> f.arity() ) != 0 )
    throw precondition_error( "negated variable out of range" );
  if ( vars == 0 )
    return f;
  if ( f.arity() <= 6 )
  {
    // swap the two halves for each negated variable, word-local
    uint64_t w = f.words()[0];
    for ( unsigned i = 0; i < f.arity(); ++i )
    {
      if ( ( vars >> i ) & 1u )
      {
        const auto m = detail::var_zero_masks[i];
        const auto s = 1u << i;
        w = ( ( w & m ) << s ) | ( ( w >> s ) & m );
      }
    }
    return TruthTable::from_word( f.arity(), w );
  }
  return TruthTable::from_function( f.arity(), [&]( uint32_t x ) { return f.bit( x ^ vars ); } );
}

/*! \brief g(x_1..x_n) = f(x_{perm[0]}, ..., x_{perm[n-1]})

  `perm[i]` names the argument of g placed at position i of f.
*/
inline TruthTable permute_variables( const TruthTable& f, std::span<const unsigned> perm )
{
  const unsigned n = f.arity();
  if ( perm.size() != n )
    throw precondition_error( "permutation size does not match arity" );
  uint32_t seen = 0;
  for ( auto p : perm )
  {
    if ( p >= n || ( ( seen >> p ) & 1u ) )
      throw precondition_error( "not a permutation" );
    seen |= uint32_t{1} << p;
  }
  return TruthTable::from_function( n, [&]( uint32_t x ) {
    uint32_t y = 0;
    for ( unsigned i = 0; i < n; ++i )
    {
      if ( ( x >> perm[i] ) & 1u )
        y |= uint32_t{1} << i;
    }
    return f.bit( y );
  } );
}

inline TruthTable permute_variables( const TruthTable& f, std::initializer_list<unsigned> perm )
{
  return permute_variables( f, std::span<const unsigned>( perm.begin(), perm.size() ) );
}

/*! \brief Drops irrelevant variables; returns the table over the relevant ones
           (ascending original index) */
inline TruthTable shrink_to_support( const TruthTable& f )
{
  const VarSet rel = relevant_variables( f );
  PartialAssignment a( f.arity() );
  for ( unsigned i = 0; i < f.arity(); ++i )
  {
    if ( !( ( rel >> i ) & 1u ) )
      a.bind( i, false );
  }
  return restrict( f, a );
}

/*! \brief Lifts `g` (over `vars`, ascending) into an n-variable table */
inline TruthTable extend_to( const TruthTable& g, unsigned n, std::span<const unsigned> vars )
{
  if ( vars.size() != g.arity() )
    throw precondition_error( "extend_to: variable list does not match arity" );
  return TruthTable::from_function( n, [&]( uint32_t x ) {
    uint32_t y = 0;
    for ( std::size_t j = 0; j < vars.size(); ++j )
    {
      if ( ( x >> vars[j] ) & 1u )
        y |= uint32_t{1} << j;
    }
    return g.bit( y );
  } );
}

/* "n:HEX", most significant hex digit first */
inline std::string to_hex_string( const TruthTable& f )
{
  static constexpr char digits[] = "0123456789ABCDEF";
  const std::size_t ndigits = f.arity() < 2 ? 1 : f.num_bits() / 4;
  std::string s = std::to_string( f.arity() ) + ":";
  for ( std::size_t d = ndigits; d-- > 0; )
  {
    unsigned v = 0;
    for ( unsigned b = 0; b < 4; ++b )
    {
      const auto i = d * 4 + b;
      if ( i < f.num_bits() && f.bit( i ) )
        v |= 1u << b;
    }
    s += digits[v];
  }
  return s;
}

inline TruthTable parse_table( std::string_view text )
{
  const auto colon = text.find( ':' );
  if ( colon == std::string_view::npos || colon == 0 )
    throw parse_error( "truth table must have the form n:HEX", 0 );

  unsigned n = 0;
  for ( std::size_t i = 0; i < colon; ++i )
  {
    if ( text[i] < '0' || text[i] > '9' || n > max_arity )
      throw parse_error( "invalid arity in truth table", i );
    n = n * 10 + static_cast<unsigned>( text[i] - '0' );
  }
  if ( n > max_arity )
    throw parse_error( "arity exceeds " + std::to_string( max_arity ), 0 );

  const auto hex = text.substr( colon + 1 );
  const std::size_t ndigits = n < 2 ? 1 : ( std::size_t{1} << n ) / 4;
  if ( hex.size() != ndigits )
    throw parse_error( "expected " + std::to_string( ndigits ) + " hex digits for arity " + std::to_string( n ), colon + 1 );

  TruthTable f( n );
  for ( std::size_t k = 0; k < ndigits; ++k )
  {
    const char c = hex[k];
    unsigned v;
    if ( c >= '0' && c <= '9' )
      v = static_cast<unsigned>( c - '0' );
    else if ( c >= 'a' && c <= 'f' )
      v = static_cast<unsigned>( c - 'a' + 10 );
    else if ( c >= 'A' && c <= 'F' )
      v = static_cast<unsigned>( c - 'A' + 10 );
    else
      throw parse_error( std::string( "invalid hex digit '" ) + c + "'", colon + 1 + k );

    const std::size_t d = ndigits - 1 - k;
    for ( unsigned b = 0; b < 4; ++b )
    {
      if ( !( ( v >> b ) & 1u ) )
        continue;
      const auto i = d * 4 + b;
      if ( i >= f.num_bits() )
        throw parse_error( "hex value exceeds 2^n bits", colon + 1 + k );
      f.set_bit( i, true );
    }
  }
  return f;
}

} // namespace lrof
