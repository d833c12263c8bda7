#include <gtest/gtest.h>

#include <sstream>

#include "kwforge/report.hpp"

namespace kwforge {
namespace {

using Ints = std::vector<Integer>;

TEST(Analyze, DeterminantalExample) {
  const auto r = analyze(8, 17, {69, 70, 71});
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, (KwDWitness{2, 1}));
  EXPECT_EQ(r.pf, (Ints{60, 61, 62, 63}));
  ASSERT_TRUE(r.betti);
  EXPECT_EQ(r.betti->betas, (Ints{1, 10, 20, 15, 4}));
  EXPECT_EQ(r.type, static_cast<Integer>(r.pf.size()));
  EXPECT_EQ(r.type, r.betti->betas.back());
  ASSERT_TRUE(r.matrix);
  for (const auto& [name, ok] : r.verification) EXPECT_TRUE(ok) << name;
}

TEST(Analyze, NonDeterminantalExampleAndEcho) {
  const auto r = analyze(8, 17, {78, 60, 69}, {false, 0});
  EXPECT_FALSE(r.witness);
  EXPECT_EQ(r.pf, (Ints{43, 52, 61, 87}));
  EXPECT_FALSE(r.betti);
  EXPECT_FALSE(r.matrix);
  EXPECT_EQ(r.input_gens, (Ints{78, 60, 69}));
  EXPECT_EQ(r.semigroup.hs(), (Ints{60, 69, 78}));
}

TEST(Analyze, RejectsNonMembers) {
  try {
    analyze(8, 17, {100});
    FAIL();
  } catch (const KwError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoRepresentation);
  }
  EXPECT_THROW(analyze(8, 16, {60}), KwError);
}

TEST(Json, AnalysisRoundTripIsByteIdentical) {
  for (const auto& gens : {Ints{69, 70, 71}, Ints{60, 69, 78}, Ints{53, 62, 55}}) {
    const auto text = to_json(analyze(8, 17, gens)).dump(2);
    EXPECT_EQ(Json::parse(text).dump(2), text);
    EXPECT_EQ(text.find('.'), std::string::npos);  // integers only
  }
}

TEST(Json, AnalysisFields) {
  const auto j = to_json(analyze(8, 17, {53, 62, 55}));
  EXPECT_EQ(j["input"]["gens"], Json({53, 62, 55}));
  EXPECT_EQ(j["gens"], Json({8, 17, 53, 62, 55}));  // x-ordered echo
  EXPECT_EQ(j["xs"], Json({4, 5, 8}));
  EXPECT_EQ(j["pf"], Json({45, 47, 54, 60}));
  EXPECT_EQ(j["betti"], Json({1, 10, 20, 15, 4}));
  EXPECT_FALSE(j["window_boundary"].get<bool>());
  EXPECT_TRUE(j["kwd_witness"].is_null());
}

TEST(Json, ScanReportRoundTrip) {
  const auto text = to_json(conjecture_scan({4, 4, 9, 0})).dump(2);
  EXPECT_EQ(Json::parse(text).dump(2), text);
  const auto j = Json::parse(text);
  EXPECT_EQ(j["total_counterexamples"].get<Integer>(), static_cast<Integer>(j["counterexamples"].size()));
}

TEST(Csv, EnumerateHeaderAndRow) {
  EXPECT_EQ(enumerate_csv_header(), "p,q,n,xs,ys,hs,kwd_x,kwd_y,pf,frobenius,betti,face_sig,degenerate");
  const auto h = kw_from_generators(make_params(8, 17), {69, 70, 71});
  const auto line = to_csv(make_enumerate_row(h, true));
  std::vector<std::string> fields;
  std::stringstream in(line);
  for (std::string f; std::getline(in, f, ',');) fields.push_back(f);
  ASSERT_EQ(fields.size(), 13u);
  EXPECT_EQ(fields[0], "8");
  EXPECT_EQ(fields[2], "5");
  EXPECT_EQ(fields[5], "69;70;71");
  EXPECT_EQ(fields[6], "2");
  EXPECT_EQ(fields[7], "1");
  EXPECT_EQ(fields[8], "60;61;62;63");
  EXPECT_EQ(fields[9], "63");
  EXPECT_EQ(fields[10], "1;10;20;15;4");
  EXPECT_EQ(fields[12], "false");
}

TEST(Csv, ScanHeader) { EXPECT_EQ(scan_csv_header(), "p,q,n,xs,ys,hs,betti,conforms,degenerate"); }

TEST(Lists, FormatAndParse) {
  EXPECT_EQ(csv_list({1, 2, 3}), "1;2;3");
  EXPECT_EQ(csv_list({}), "");
  EXPECT_EQ(text_list({1, 2, 3}), "1, 2, 3");
  EXPECT_EQ(text_list({1, 2}, ","), "1,2");
  EXPECT_EQ(parse_integer_list("53,62,55"), (Ints{53, 62, 55}));
  EXPECT_EQ(parse_integer_list(" 7 , 9"), (Ints{7, 9}));
  EXPECT_THROW(parse_integer_list("1,x"), KwError);
  EXPECT_THROW(parse_integer_list("1,,2"), KwError);
  EXPECT_THROW(parse_integer_list("3.5"), KwError);
}

TEST(PosetEdges, Deterministic) {
  const auto j = poset_edges_json(apery_poset(NumericalSemigroup{8, 17, 53, 62, 55}));
  EXPECT_EQ(j["base"].get<Integer>(), 8);
  EXPECT_EQ(j["edges"].size(), 7u);
  EXPECT_EQ(j["edges"][0], Json({0, 1}));
}

}  // namespace
}  // namespace kwforge
