/*!
  \file readonce.hpp
  \brief Read-once and linear read-once (nested canalyzing) recognition with
         certificate formulas
*/

#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "formula.hpp"
#include "monotone.hpp"
#include "truth_table.hpp"

namespace lrof
{

namespace detail
{

/* Variables i with f negative (and not positive) in x_i, or nullopt if f is
   binate in some variable. */
inline std::optional<VarSet> unate_negations( const TruthTable& f )
{
  VarSet neg = 0;
  for ( unsigned i = 0; i < f.arity(); ++i )
  {
    if ( is_positive_in( f, i ) )
      continue;
    if ( !is_negative_in( f, i ) )
      return std::nullopt;
    neg |= VarSet{1} << i;
  }
  return neg;
}

struct DisjointSets
{
  explicit DisjointSets( unsigned n ) : parent( n ) { std::iota( parent.begin(), parent.end(), 0u ); }

  unsigned find( unsigned x )
  {
    while ( parent[x] != x )
      x = parent[x] = parent[parent[x]];
    return x;
  }

  void unite( unsigned a, unsigned b )
  {
    a = find( a );
    b = find( b );
    if ( a != b )
      parent[std::max( a, b )] = std::min( a, b );
  }

  std::vector<unsigned> parent;
};

/* Connected components of the "occur together" relation over the given
   variable sets, each component as a mask ordered by its lowest variable. */
inline std::vector<VarSet> components( unsigned n, const std::vector<VarSet>& groups )
{
  DisjointSets ds( n );
  for ( auto g : groups )
  {
    const auto vs = to_indices( g );
    for ( std::size_t j = 1; j < vs.size(); ++j )
      ds.unite( vs[0], vs[j] );
  }
  std::vector<VarSet> comps;
  std::vector<int> slot( n, -1 );
  for ( unsigned i = 0; i < n; ++i )
  {
    const auto r = ds.find( i );
    if ( slot[r] < 0 )
    {
      slot[r] = static_cast<int>( comps.size() );
      comps.push_back( 0 );
    }
    comps[static_cast<std::size_t>( slot[r] )] |= VarSet{1} << i;
  }
  return comps;
}

/* g positive, every variable relevant; vars maps g's variables to output indices */
inline std::optional<FormulaNode> decompose_positive( const TruthTable& g, const std::vector<unsigned>& vars )
{
  const unsigned m = g.arity();
  if ( m == 1 )
    return make_var( vars[0] );

  const auto [mins, maxs] = extremal_masks( g );
  const uint32_t all = ( uint32_t{1} << m ) - 1;

  for ( bool conj : {true, false} )
  {
    // prime clauses of a positive function are the zero coordinates of its
    // maximal zeros, prime implicants the one coordinates of its minimal ones
    std::vector<VarSet> groups;
    for ( const auto& p : points_of( conj ? maxs : mins ) )
      groups.push_back( conj ? ( ~p.index() & all ) : p.index() );

    const auto comps = components( m, groups );
    if ( comps.size() < 2 )
      continue;

    std::vector<FormulaNode> children;
    TruthTable recomposed = TruthTable::constant( m, conj );
    for ( auto comp : comps )
    {
      // the block's function: all other variables at the neutral value
      PartialAssignment a( m );
      std::vector<unsigned> sub_vars;
      for ( unsigned i = 0; i < m; ++i )
      {
        if ( ( comp >> i ) & 1u )
          sub_vars.push_back( i );
        else
          a.bind( i, conj );
      }
      const auto block = restrict( g, a );
      const auto lifted = extend_to( block, m, sub_vars );
      if ( conj )
        recomposed &= lifted;
      else
        recomposed |= lifted;

      std::vector<unsigned> mapped;
      for ( auto v : sub_vars )
        mapped.push_back( vars[v] );
      auto child = decompose_positive( block, mapped );
      if ( !child )
        return std::nullopt;
      children.push_back( std::move( *child ) );
    }
    if ( recomposed != g )
      return std::nullopt;
    return conj ? make_and( std::move( children ) ) : make_or( std::move( children ) );
  }
  return std::nullopt;
}

inline FormulaNode apply_negations( FormulaNode n, VarSet neg )
{
  using K = FormulaNode::Kind;
  if ( n.kind == K::variable )
    return ( ( neg >> n.var ) & 1u ) ? make_not( std::move( n ) ) : n;
  for ( auto& c : n.children )
    c = apply_negations( std::move( c ), neg );
  return n;
}

inline std::optional<FormulaNode> nested_certificate( const TruthTable& f, const std::vector<unsigned>& vars )
{
  if ( f.is_const0() || f.is_const1() )
    return make_const( f.is_const1() );

  for ( unsigned i = 0; i < f.arity(); ++i )
  {
    for ( bool a : {false, true} )
    {
      const auto c = cofactor( f, i, a );
      if ( !c.is_constant() )
        continue;
      const bool out = c.is_const1();
      const auto rest = cofactor( f, i, !a );
      std::vector<unsigned> sub_vars = vars;
      sub_vars.erase( sub_vars.begin() + i );
      auto t = nested_certificate( rest, sub_vars );
      if ( !t )
        return std::nullopt; // restrictions of lro functions are lro
      // x_i = a forces out: the literal is true exactly when x_i = a (or) / x_i != a (and)
      const auto lit = make_literal( vars[i], out ? a : !a );
      if ( t->kind == FormulaNode::Kind::constant )
        return lit;
      if ( out )
        return make_or( {lit, std::move( *t )} );
      return make_and( {lit, std::move( *t )} );
    }
  }
  return std::nullopt;
}

} // namespace detail

/*! \brief Read-once recognition

  Returns a formula in which every variable occurs at most once, or nullopt.
  Read-once functions are unate, so the function is first made positive by
  negating variables. A positive function splits as a conjunction exactly
  along the connected components of its prime clauses and as a disjunction
  along those of its prime implicants; the recursion follows these splits.
*/
inline std::optional<FormulaAst> is_read_once( const TruthTable& f )
{
  const unsigned n = f.arity();
  if ( f.is_constant() )
    return FormulaAst{n, make_const( f.is_const1() )};

  const auto neg = detail::unate_negations( f );
  if ( !neg )
    return std::nullopt;

  const auto g = negate_variables( f, *neg );
  const auto support = to_indices( relevant_variables( g ) );
  auto node = detail::decompose_positive( shrink_to_support( g ), support );
  if ( !node )
    return std::nullopt;

  FormulaAst ast{n, detail::apply_negations( std::move( *node ), *neg )};
  if ( eval_to_table( ast ) != f )
    throw std::logic_error( "read-once certificate does not reproduce the function" );
  return ast;
}

/*! \brief Linear read-once recognition with a nested-formula certificate

  Canalyzing variables are tried in ascending index, input value 0 before 1.
  No backtracking is needed since every restriction of an lro function is lro.
*/
inline std::optional<FormulaAst> is_lro( const TruthTable& f )
{
  std::vector<unsigned> vars( f.arity() );
  std::iota( vars.begin(), vars.end(), 0u );
  auto node = detail::nested_certificate( f, vars );
  if ( !node )
    return std::nullopt;
  FormulaAst ast{f.arity(), std::move( *node )};
  if ( eval_to_table( ast ) != f )
    throw std::logic_error( "nested certificate does not reproduce the function" );
  return ast;
}

} // namespace lrof
