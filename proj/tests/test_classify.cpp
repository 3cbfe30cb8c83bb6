#include <gtest/gtest.h>

#include <random>

#include <lrof/classify.hpp>
#include <lrof/report_json.hpp>

#include "oracles.hpp"

using namespace lrof;

namespace
{

void expect_round_trip( const ClassificationReport& r )
{
  const auto text = dump( to_json( r ) );
  const auto back = classification_from_json( Json::parse( text ) );
  EXPECT_EQ( dump( to_json( back ) ), text );
}

} // namespace

TEST( Classify, f4 )
{
  const auto r = classify( parse_table( "4:E8A8" ) );
  EXPECT_EQ( r.table, "4:E8A8" );
  EXPECT_EQ( r.arity, 4u );
  EXPECT_EQ( r.k, 4u );
  EXPECT_TRUE( r.positive );
  EXPECT_FALSE( r.canalyzing.has_value() );
  EXPECT_FALSE( r.read_once.has_value() );
  EXPECT_FALSE( r.lro.has_value() );
  ASSERT_TRUE( r.threshold.has_value() );
  EXPECT_EQ( r.threshold->to_string(), "3x1 + 2x2 + 2x3 + x4 <= 4" );
  EXPECT_EQ( r.chow, ChowStatus::chow );
  ASSERT_TRUE( r.extremal.has_value() );
  EXPECT_EQ( r.extremal->r(), 7u );
  EXPECT_EQ( r.specification_number, 5u );
  EXPECT_FALSE( r.summability.has_value() );
  EXPECT_EQ( r.inconsistency(), "" );
}

TEST( Classify, g1 )
{
  const auto r = classify( parse_table( "4:EEE0" ) );
  EXPECT_TRUE( r.positive );
  ASSERT_TRUE( r.read_once.has_value() );
  EXPECT_EQ( *r.read_once, "(x1 | x2) & (x3 | x4)" );
  EXPECT_FALSE( r.lro.has_value() );
  EXPECT_FALSE( r.threshold.has_value() );
  EXPECT_EQ( r.chow, ChowStatus::not_chow );
  EXPECT_EQ( r.chow_collision, "4:FAC8" );
  EXPECT_EQ( r.chow_parameters.to_string(), "(6,6,6,6,9)" );
  ASSERT_TRUE( r.summability.has_value() );
  EXPECT_TRUE( r.summability->is_valid_for( parse_table( "4:EEE0" ) ) );
  EXPECT_FALSE( r.specification_number.has_value() );
  EXPECT_FALSE( r.essential_points.has_value() );
}

TEST( Classify, single_variable )
{
  const auto r = classify( TruthTable::variable( 1, 0 ) );
  EXPECT_TRUE( r.positive );
  EXPECT_EQ( r.lro, "x1" );
  EXPECT_TRUE( r.threshold.has_value() );
  EXPECT_EQ( r.extremal->r(), 2u );
  EXPECT_EQ( r.specification_number, 2u );
  EXPECT_EQ( r.relevant, ( std::vector<unsigned>{1} ) );
}

TEST( Classify, non_positive_and_irrelevant_variables )
{
  const auto f = oracle::dnf( 4, {{-2, 4}} );
  const auto r = classify( f );
  EXPECT_FALSE( r.positive );
  EXPECT_FALSE( r.extremal.has_value() );
  EXPECT_EQ( r.relevant, ( std::vector<unsigned>{2, 4} ) );
  EXPECT_EQ( r.k, 2u );
  EXPECT_EQ( r.inconsistency(), "" );

  const auto x = classify( parse_table( "2:6" ) );
  EXPECT_FALSE( x.threshold.has_value() );
  EXPECT_FALSE( x.read_once.has_value() );
  EXPECT_TRUE( x.summability.has_value() );
}

TEST( Classify, inconsistency_detection )
{
  auto r = classify( parse_table( "3:E8" ) );
  EXPECT_EQ( r.inconsistency(), "" );
  auto bad = r;
  bad.chow = ChowStatus::not_chow;
  EXPECT_NE( bad.inconsistency(), "" );
  bad = r;
  bad.lro = "x1";
  EXPECT_NE( bad.inconsistency(), "" );
  bad = r;
  bad.k = 2;
  EXPECT_NE( bad.inconsistency(), "" );
  bad = r;
  bad.extremal.reset();
  EXPECT_NE( bad.inconsistency(), "" );
  bad = r;
  bad.specification_number = 3;
  EXPECT_NE( bad.inconsistency(), "" );
}

TEST( ClassifyJson, layout_of_f4 )
{
  const auto j = to_json( classify( parse_table( "4:E8A8" ) ) );
  std::vector<std::string> keys;
  for ( const auto& [key, value] : j.items() )
    keys.push_back( key );
  EXPECT_EQ( keys, ( std::vector<std::string>{"table", "arity", "relevant", "k", "positive", "canalyzing", "read_once", "lro",
                                              "threshold", "chow", "extremal", "specification_number", "essential_points",
                                              "summability"} ) );
  EXPECT_EQ( j["threshold"]["representation"]["weights"], Json::parse( "[3,2,2,1]" ) );
  EXPECT_EQ( j["threshold"]["representation"]["threshold"], 4 );
  EXPECT_EQ( j["chow"]["status"], "chow" );
  EXPECT_EQ( j["extremal"]["r"], 7 );
  EXPECT_EQ( j["extremal"]["minimal_ones"][0], Json::parse( "[1,1,0,0]" ) );
  EXPECT_EQ( j["specification_number"], 5 );
  EXPECT_TRUE( j["summability"].is_null() );
  EXPECT_EQ( j["read_once"]["holds"], false );
  EXPECT_TRUE( j["read_once"]["formula"].is_null() );
}

TEST( ClassifyJson, byte_identical_round_trip )
{
  for ( const char* t : {"4:E8A8", "4:EEE0", "2:6", "0:1", "0:0", "3:E8", "1:2", "5:EAAAAAA8"} )
    expect_round_trip( classify( parse_table( t ) ) );

  std::mt19937_64 rng( 61 );
  for ( int rep = 0; rep < 60; ++rep )
  {
    const unsigned n = rng() % 7;
    const auto f = oracle::table( n, [&]( const oracle::Coords& ) { return rng() & 1u; } );
    expect_round_trip( classify( f ) );
  }
}

TEST( ClassifyJson, decoder_rejects_tampered_documents )
{
  auto j = to_json( classify( parse_table( "4:E8A8" ) ) );
  auto a = j;
  a["threshold"]["representation"]["inequality"] = "x1 <= 0";
  EXPECT_THROW( classification_from_json( a ), std::invalid_argument );
  auto b = j;
  b["extremal"]["r"] = 6;
  EXPECT_THROW( classification_from_json( b ), std::invalid_argument );
  auto c = j;
  c["chow"]["status"] = "maybe";
  EXPECT_THROW( classification_from_json( c ), std::invalid_argument );
  auto e = j;
  e["k"] = 3;
  EXPECT_THROW( classification_from_json( e ), std::invalid_argument );
  auto d = j;
  d.erase( "k" );
  EXPECT_THROW( classification_from_json( d ), Json::exception );
}
