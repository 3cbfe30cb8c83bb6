#include <gtest/gtest.h>

#include <set>

#include <lrof/report_json.hpp>
#include <lrof/verify.hpp>

using namespace lrof;

namespace
{

VerificationReport without_time( VerificationReport r )
{
  r.duration_ms = 0;
  return r;
}

} // namespace

TEST( Harnesses, registry )
{
  std::set<std::string_view> ids;
  for ( const auto& h : harnesses() )
  {
    EXPECT_TRUE( ids.insert( h.id ).second ) << h.id;
    EXPECT_LE( h.lowest, h.default_min );
    EXPECT_LE( h.default_min, h.default_max );
    EXPECT_LE( h.default_max, h.highest );
    EXPECT_EQ( find_harness( h.id ), &h );
  }
  EXPECT_EQ( ids.size(), 14u );
  EXPECT_EQ( find_harness( "no-such-theorem" ), nullptr );
}

TEST( Verify, errors )
{
  EXPECT_THROW( verify( "no-such-theorem" ), precondition_error );
  VerifyOptions o;
  o.n_min = 5;
  o.n_max = 4;
  EXPECT_THROW( verify( "dedekind", o ), precondition_error );
  o.n_min = 0;
  o.n_max = 7;
  EXPECT_THROW( verify( "dedekind", o ), precondition_error );
  o.n_min = 3;
  o.n_max = 4;
  EXPECT_THROW( verify( "chow-collision", o ), precondition_error );
}

TEST( Verify, dedekind_report )
{
  const auto r = verify( "dedekind" );
  EXPECT_TRUE( r.passed() );
  EXPECT_EQ( r.theorem, "dedekind" );
  EXPECT_EQ( r.n_min, 0u );
  EXPECT_EQ( r.n_max, 5u );
  EXPECT_EQ( r.counterexample_count, 0u );
  EXPECT_GT( r.instances, 0u );
}

TEST( Verify, quick_runs_of_every_harness_pass )
{
  for ( const auto& h : harnesses() )
  {
    VerifyOptions o;
    o.n_min = h.lowest;
    o.n_max = std::min( h.highest, std::max( h.lowest, 4u ) );
    o.samples = 40;
    const auto r = verify( h.id, o );
    EXPECT_TRUE( r.passed() ) << h.id << ": " << ( r.counterexamples.empty() ? "" : r.counterexamples[0].detail );
    EXPECT_GT( r.instances, 0u ) << h.id;
  }
}

TEST( Verify, reports_do_not_depend_on_jobs )
{
  for ( const char* id : {"extremal-points", "lro-chow", "essential-oracles", "stetsenko"} )
  {
    VerifyOptions o;
    o.n_max = std::min( 5u, find_harness( id )->highest );
    if ( std::string_view( id ) == "essential-oracles" )
    {
      o.n_max = 6;
      o.samples = 60;
    }
    const auto one = verify( id, o );
    o.jobs = 3;
    const auto three = verify( id, o );
    EXPECT_EQ( without_time( one ), without_time( three ) ) << id;
  }
}

TEST( Verify, other_seeds_also_pass )
{
  VerifyOptions o;
  o.n_min = 5;
  o.n_max = 6;
  o.samples = 20;
  const auto a = verify( "essential-oracles", o );
  o.seed = 2;
  const auto b = verify( "essential-oracles", o );
  EXPECT_TRUE( a.passed() );
  EXPECT_TRUE( b.passed() );
}

TEST( Sink, counterexamples_are_capped_and_ordered )
{
  for ( unsigned jobs : {1u, 4u} )
  {
    VerificationReport r;
    parallel_for( 100, jobs, r, []( uint64_t i, Sink& s ) {
      s.count();
      if ( i % 2 )
        s.fail( "0:" + std::to_string( i % 2 ), "odd " + std::to_string( i ) );
    } );
    EXPECT_EQ( r.instances, 100u );
    EXPECT_EQ( r.counterexample_count, 50u );
    ASSERT_EQ( r.counterexamples.size(), max_reported );
    EXPECT_EQ( r.counterexamples.front().detail, "odd 1" );
    EXPECT_EQ( r.counterexamples.back().detail, "odd 63" );
    EXPECT_FALSE( r.passed() );
  }
}

TEST( Sink, worker_exceptions_propagate )
{
  VerificationReport r;
  EXPECT_THROW( parallel_for( 10, 2, r,
                                      []( uint64_t i, Sink& ) {
                                        if ( i == 7 )
                                          throw std::runtime_error( "boom" );
                                      } ),
                std::runtime_error );
}

TEST( VerifyJson, byte_identical_round_trip )
{
  const auto r = verify( "chow-collision" );
  const auto text = dump( to_json( r ) );
  EXPECT_EQ( dump( to_json( verification_from_json( Json::parse( text ) ) ) ), text );

  VerificationReport failing;
  failing.theorem = "dedekind";
  failing.n_max = 3;
  failing.instances = 9;
  failing.counterexample_count = 2;
  failing.counterexamples = {{"2:6", "not \"positive\""}, {"1:1", "x"}};
  failing.duration_ms = 17;
  const auto ftext = dump( to_json( failing ) );
  const auto back = verification_from_json( Json::parse( ftext ) );
  EXPECT_EQ( back, failing );
  EXPECT_EQ( dump( to_json( back ) ), ftext );
  EXPECT_EQ( Json::parse( ftext )["passed"], false );

  auto tampered = Json::parse( ftext );
  tampered["passed"] = true;
  EXPECT_THROW( verification_from_json( tampered ), std::invalid_argument );
}

TEST( VerifyJson, layout )
{
  const auto j = to_json( verify( "dedekind" ) );
  std::vector<std::string> keys;
  for ( const auto& [key, value] : j.items() )
    keys.push_back( key );
  EXPECT_EQ( keys, ( std::vector<std::string>{"theorem", "n_min", "n_max", "instances", "passed", "counterexample_count",
                                              "counterexamples", "duration_ms"} ) );
}
