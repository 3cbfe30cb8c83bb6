/*!
  \file formula.hpp
  \brief Boolean formulas over x1..xn: parsing, printing, evaluation

  Grammar (loosest to tightest):

      expr   := term ( '|' term )*
      term   := factor ( ['&'] factor )*      juxtaposition is conjunction
      factor := '!' factor | '(' expr ')' | 'x' DIGITS | '0' | '1'

  Conjunctions and disjunctions are n-ary and kept flattened.
*/

#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "monotone.hpp"
#include "truth_table.hpp"

namespace lrof
{

struct FormulaNode
{
  enum class Kind
  {
    constant,
    variable,
    negation,
    conjunction,
    disjunction
  };

  Kind kind = Kind::constant;
  bool value = false; // constant
  unsigned var = 0;   // variable, 0-based
  std::vector<FormulaNode> children;

  bool is_literal() const noexcept
  {
    return kind == Kind::variable || ( kind == Kind::negation && children[0].kind == Kind::variable );
  }

  friend bool operator==( const FormulaNode&, const FormulaNode& ) = default;
};

inline FormulaNode make_const( bool v ) { return {FormulaNode::Kind::constant, v, 0, {}}; }

inline FormulaNode make_var( unsigned i ) { return {FormulaNode::Kind::variable, false, i, {}}; }

inline FormulaNode make_not( FormulaNode c )
{
  FormulaNode n{FormulaNode::Kind::negation, false, 0, {}};
  n.children.push_back( std::move( c ) );
  return n;
}

inline FormulaNode make_literal( unsigned i, bool positive ) { return positive ? make_var( i ) : make_not( make_var( i ) ); }

namespace detail
{

inline FormulaNode make_nary( FormulaNode::Kind kind, std::vector<FormulaNode> cs )
{
  std::vector<FormulaNode> flat;
  for ( auto& c : cs )
  {
    if ( c.kind == kind )
    {
      for ( auto& cc : c.children )
        flat.push_back( std::move( cc ) );
    }
    else
    {
      flat.push_back( std::move( c ) );
    }
  }
  if ( flat.empty() )
    return make_const( kind == FormulaNode::Kind::conjunction );
  if ( flat.size() == 1 )
    return std::move( flat.front() );
  FormulaNode n{kind, false, 0, std::move( flat )};
  return n;
}

} // namespace detail

inline FormulaNode make_and( std::vector<FormulaNode> cs ) { return detail::make_nary( FormulaNode::Kind::conjunction, std::move( cs ) ); }
inline FormulaNode make_or( std::vector<FormulaNode> cs ) { return detail::make_nary( FormulaNode::Kind::disjunction, std::move( cs ) ); }

/*! \brief A formula together with its declared arity */
struct FormulaAst
{
  unsigned arity = 0;
  FormulaNode root;

  friend bool operator==( const FormulaAst&, const FormulaAst& ) = default;
};

/* rebuilds the tree through make_and/make_or */
inline FormulaNode flatten( const FormulaNode& n )
{
  using K = FormulaNode::Kind;
  switch ( n.kind )
  {
  case K::negation:
    return make_not( flatten( n.children[0] ) );
  case K::conjunction:
  case K::disjunction:
  {
    std::vector<FormulaNode> cs;
    for ( const auto& c : n.children )
      cs.push_back( flatten( c ) );
    return detail::make_nary( n.kind, std::move( cs ) );
  }
  default:
    return n;
  }
}

namespace detail
{

class FormulaParser
{
public:
  FormulaParser( std::string_view text, unsigned arity ) : text_( text ), arity_( arity ) {}

  FormulaNode parse()
  {
    auto n = expr();
    skip_ws();
    if ( pos_ != text_.size() )
      fail( std::string( "unexpected character '" ) + text_[pos_] + "'" );
    return n;
  }

private:
  [[noreturn]] void fail( const std::string& msg ) const
  {
    throw parse_error( msg + " at position " + std::to_string( pos_ ), pos_ );
  }

  void skip_ws()
  {
    while ( pos_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[pos_] ) ) )
      ++pos_;
  }

  bool at_factor_start()
  {
    skip_ws();
    if ( pos_ >= text_.size() )
      return false;
    const char c = text_[pos_];
    return c == '!' || c == '(' || c == 'x' || c == 'X' || c == '0' || c == '1';
  }

  FormulaNode expr()
  {
    std::vector<FormulaNode> terms;
    terms.push_back( term() );
    for ( ;; )
    {
      skip_ws();
      if ( pos_ < text_.size() && text_[pos_] == '|' )
      {
        ++pos_;
        terms.push_back( term() );
      }
      else
        break;
    }
    return make_or( std::move( terms ) );
  }

  FormulaNode term()
  {
    std::vector<FormulaNode> fs;
    fs.push_back( factor() );
    for ( ;; )
    {
      skip_ws();
      if ( pos_ < text_.size() && text_[pos_] == '&' )
      {
        ++pos_;
        fs.push_back( factor() );
      }
      else if ( at_factor_start() )
        fs.push_back( factor() );
      else
        break;
    }
    return make_and( std::move( fs ) );
  }

  FormulaNode factor()
  {
    skip_ws();
    if ( pos_ >= text_.size() )
      fail( "unexpected end of input" );
    const char c = text_[pos_];
    if ( c == '!' )
    {
      ++pos_;
      return make_not( factor() );
    }
    if ( c == '(' )
    {
      ++pos_;
      auto e = expr();
      skip_ws();
      if ( pos_ >= text_.size() || text_[pos_] != ')' )
        fail( "expected ')'" );
      ++pos_;
      return e;
    }
    if ( c == '0' || c == '1' )
    {
      ++pos_;
      return make_const( c == '1' );
    }
    if ( c == 'x' || c == 'X' )
    {
      const auto start = pos_++;
      if ( pos_ < text_.size() && text_[pos_] == '_' )
        ++pos_;
      unsigned idx = 0;
      std::size_t digits = 0;
      while ( pos_ < text_.size() && std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
      {
        idx = idx * 10 + static_cast<unsigned>( text_[pos_++] - '0' );
        if ( ++digits > 6 )
          break;
      }
      if ( digits == 0 )
      {
        pos_ = start;
        fail( "expected variable index after 'x'" );
      }
      if ( idx == 0 || idx > arity_ )
      {
        pos_ = start;
        fail( "variable x" + std::to_string( idx ) + " outside 1.." + std::to_string( arity_ ) );
      }
      return make_var( idx - 1 );
    }
    fail( std::string( "unexpected character '" ) + c + "'" );
  }

  std::string_view text_;
  unsigned arity_;
  std::size_t pos_ = 0;
};

inline void render_into( const FormulaNode& n, std::string& out )
{
  using K = FormulaNode::Kind;
  switch ( n.kind )
  {
  case K::constant:
    out += n.value ? '1' : '0';
    break;
  case K::variable:
    out += 'x';
    out += std::to_string( n.var + 1 );
    break;
  case K::negation:
  {
    const auto& c = n.children[0];
    out += '!';
    const bool atom = c.kind == K::variable || c.kind == K::constant || c.kind == K::negation;
    if ( !atom )
      out += '(';
    render_into( c, out );
    if ( !atom )
      out += ')';
    break;
  }
  case K::conjunction:
  {
    const bool all_literals = std::all_of( n.children.begin(), n.children.end(), []( const auto& c ) { return c.is_literal(); } );
    const char* sep = all_literals ? " " : " & ";
    bool first = true;
    for ( const auto& c : n.children )
    {
      if ( !first )
        out += sep;
      first = false;
      const bool paren = c.kind == K::disjunction;
      if ( paren )
        out += '(';
      render_into( c, out );
      if ( paren )
        out += ')';
    }
    break;
  }
  case K::disjunction:
  {
    bool first = true;
    for ( const auto& c : n.children )
    {
      if ( !first )
        out += " | ";
      first = false;
      render_into( c, out );
    }
    break;
  }
  }
}

inline TruthTable eval_node( const FormulaNode& n, unsigned arity )
{
  using K = FormulaNode::Kind;
  switch ( n.kind )
  {
  case K::constant:
    return TruthTable::constant( arity, n.value );
  case K::variable:
    return TruthTable::variable( arity, n.var );
  case K::negation:
    return ~eval_node( n.children[0], arity );
  case K::conjunction:
  {
    auto t = TruthTable::constant( arity, true );
    for ( const auto& c : n.children )
      t &= eval_node( c, arity );
    return t;
  }
  case K::disjunction:
  {
    auto t = TruthTable::constant( arity, false );
    for ( const auto& c : n.children )
      t |= eval_node( c, arity );
    return t;
  }
  }
  return TruthTable( arity );
}

inline void collect_vars( const FormulaNode& n, std::vector<unsigned>& out )
{
  if ( n.kind == FormulaNode::Kind::variable )
    out.push_back( n.var );
  for ( const auto& c : n.children )
    collect_vars( c, out );
}

} // namespace detail

inline FormulaAst parse_formula( std::string_view text, unsigned arity )
{
  detail::check_arity( arity );
  return {arity, detail::FormulaParser( text, arity ).parse()};
}

inline std::string render( const FormulaNode& n )
{
  std::string s;
  detail::render_into( n, s );
  return s;
}

inline std::string render( const FormulaAst& ast ) { return render( ast.root ); }

inline TruthTable eval_to_table( const FormulaAst& ast ) { return detail::eval_node( ast.root, ast.arity ); }

/* every variable occurs at most once */
inline bool is_read_once_formula( const FormulaAst& ast )
{
  std::vector<unsigned> vs;
  detail::collect_vars( ast.root, vs );
  std::sort( vs.begin(), vs.end() );
  return std::adjacent_find( vs.begin(), vs.end() ) == vs.end();
}

/*! \brief A constant, a literal, or a conjunction/disjunction of literals with
           at most one nested subformula (read-once) */
inline bool is_nested_formula( const FormulaAst& ast )
{
  using K = FormulaNode::Kind;
  if ( !is_read_once_formula( ast ) )
    return false;
  const FormulaNode* n = &ast.root;
  for ( ;; )
  {
    if ( n->kind == K::constant || n->is_literal() )
      return true;
    if ( n->kind != K::conjunction && n->kind != K::disjunction )
      return false;
    const FormulaNode* inner = nullptr;
    for ( const auto& c : n->children )
    {
      if ( c.is_literal() )
        continue;
      if ( inner || c.kind == K::constant )
        return false;
      inner = &c;
    }
    if ( !inner )
      return true;
    n = inner;
  }
}

/* true when the formula contains a negation */
inline bool has_negation( const FormulaNode& n )
{
  if ( n.kind == FormulaNode::Kind::negation )
    return true;
  return std::any_of( n.children.begin(), n.children.end(), []( const auto& c ) { return has_negation( c ); } );
}

/*! \brief The DNF of a positive function whose terms are its minimal ones

  Terms are ordered by ascending minimal-one index.
*/
inline FormulaAst positive_dnf( const TruthTable& f )
{
  const auto ext = extremal_sets( f );
  std::vector<FormulaNode> terms;
  for ( const auto& p : ext.minimal_ones )
  {
    std::vector<FormulaNode> lits;
    for ( unsigned i = 0; i < f.arity(); ++i )
    {
      if ( p.coordinate( i ) )
        lits.push_back( make_var( i ) );
    }
    terms.push_back( make_and( std::move( lits ) ) );
  }
  return {f.arity(), make_or( std::move( terms ) )};
}

} // namespace lrof
