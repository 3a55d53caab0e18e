#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "session_gen.hpp"
#include "vnum/session.hpp"

namespace vnum {
namespace {

constexpr const char* kSample = R"(# a two-ideal family over K[x,y]/(xy)
ring R = vars x y z;
ideal B = (x*y);
ideal I = (x, z^2);
ideal J = (y, z^3);
pattern P = quotient(base=B; powers I, J);
ass of P at (2,3);
ass of P on box (1,1)..(4,4);
vnumber of P at (2,3);
vnumber of P at (2,3) local (x,z);
indeg of successive(base=B; powers I, J) at (1,1);
survey v of P on box (1,1)..(3,3);
fit v of P on box (1,1)..(5,5) alphabet [[1,2],[1,3]];
)";

ParseResult parse(const std::string& s) { return parseSession(s); }

TEST(Parser, AcceptsSample) {
  const auto r = parse(kSample);
  ASSERT_TRUE(r.ok()) << r.diagnostic->format();
  EXPECT_EQ(r.ast->statements.size(), 12u);
  const auto& cmd = std::get<Command>(r.ast->statements[8].node);
  EXPECT_EQ(cmd.kind, CommandKind::VNumber);
  ASSERT_TRUE(cmd.local);
  EXPECT_EQ(*cmd.local, (std::vector<std::string>{"x", "z"}));
  EXPECT_EQ(cmd.at, (GridPoint{2, 3}));
  const auto& ring = std::get<RingDecl>(r.ast->statements[0].node);
  EXPECT_EQ(ring.weights, (std::vector<std::int64_t>{1, 1, 1}));
}

TEST(Parser, DoubleCaretPointsAtSecondCaret) {
  const auto r = parse("ring R = vars x y;\nideal I = (x^^2);\n");
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.diagnostic->line, 2u);
  EXPECT_EQ(r.diagnostic->col, 14u);
  EXPECT_FALSE(r.diagnostic->expected.empty());
  EXPECT_EQ(r.diagnostic->format().rfind("2:14: error:", 0), 0u) << r.diagnostic->format();
}

struct BadCase {
  const char* text;
  std::size_t line, col;
  const char* fragment;
};

class ParserRejects : public ::testing::TestWithParam<BadCase> {};

TEST_P(ParserRejects, WithPosition) {
  const auto& c = GetParam();
  const auto r = parse(c.text);
  ASSERT_FALSE(r.ok()) << c.text;
  EXPECT_EQ(r.diagnostic->line, c.line) << r.diagnostic->format();
  EXPECT_EQ(r.diagnostic->col, c.col) << r.diagnostic->format();
  EXPECT_NE(r.diagnostic->message.find(c.fragment), std::string::npos) << r.diagnostic->format();
}

INSTANTIATE_TEST_SUITE_P(
    Cases, ParserRejects,
    ::testing::Values(BadCase{"ideal I = (x);", 1, 1, "ring"},
                      BadCase{"ring R = vars x y;\nideal I = (q);", 2, 12, "unknown identifier"},
                      BadCase{"ring R = vars x y;\nideal I = (x);\nideal I = (y);", 3, 7, "duplicate"},
                      BadCase{"ring R = vars x y;\nring S = vars z;", 2, 1, "ring"},
                      BadCase{"ring R = vars x y;\nideal I = (x);\nvnumber of quotient(powers I) at (1,2);", 3, 34,
                              "arity"},
                      BadCase{"ring R = vars x y;\nvnumber of Q at (1);", 2, 12, "unknown"},
                      BadCase{"ring R = vars x y weights 1;", 1, 28, "weights"},
                      BadCase{"ring R = vars x y;\nideal I = (x);\nsurvey v of quotient(powers I) on box (3)..(1);", 3,
                              39, "corner"},
                      BadCase{"ring R = vars x y;\nideal ass = (x);", 2, 7, "reserved"}));

TEST(Parser, ZeroIdealCannotBePowered) {
  const auto r = parse("ring R = vars x y;\nideal Z = (0);\nass of quotient(powers Z) at (1);");
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.diagnostic->message.find("zero"), std::string::npos) << r.diagnostic->format();
}

TEST(Parser, NeverThrowsOnArbitraryBytes) {
  for (const char* s : {"", ";;;", "ring", "ring R = vars", "\xff\xfe", "ideal I = (x^99999999999999999999);",
                        "ring R = vars x;\nass of quotient(powers (x)) at (", "#", "ring R = vars x y;\n\t\t  ;"}) {
    EXPECT_NO_THROW({
      const auto r = parse(s);
      if (!r.ok()) EXPECT_GE(r.diagnostic->line, 1u);
    });
  }
  EXPECT_TRUE(parse("").ok());
  EXPECT_TRUE(parse("# only a comment\n").ok());
}

TEST(Printer, CanonicalFormIsStable) {
  const auto first = parse(kSample);
  ASSERT_TRUE(first.ok());
  const auto text = printSession(*first.ast);
  const auto second = parse(text);
  ASSERT_TRUE(second.ok()) << second.diagnostic->format() << "\n" << text;
  EXPECT_EQ(*first.ast, *second.ast);
  EXPECT_EQ(printSession(*second.ast), text);
  EXPECT_NE(text.find("ring R = vars x y z weights 1 1 1;"), std::string::npos) << text;
}

class SessionProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(SessionProperty, PrintParseRoundTrip) {
  RandomCorpus rng(GetParam());
  const auto text = testing::randomSessionText(rng);
  const auto a = parse(text);
  ASSERT_TRUE(a.ok()) << a.diagnostic->format() << "\n" << text;
  const auto printed = printSession(*a.ast);
  const auto b = parse(printed);
  ASSERT_TRUE(b.ok()) << b.diagnostic->format() << "\n" << printed;
  EXPECT_EQ(*a.ast, *b.ast) << text << "\n----\n" << printed;
  EXPECT_EQ(printSession(*b.ast), printed);
}

TEST_P(SessionProperty, MutationsGiveDiagnosticsNotCrashes) {
  RandomCorpus rng(GetParam() + 10000);
  const auto base = testing::randomSessionText(rng);
  for (int i = 0; i < 10; ++i) {
    const auto text = testing::mutate(rng, base);
    ParseResult r;
    ASSERT_NO_THROW(r = parse(text));
    if (r.ok()) continue;
    std::size_t lines = 1;
    for (char ch : text) lines += ch == '\n';
    EXPECT_GE(r.diagnostic->line, 1u);
    EXPECT_LE(r.diagnostic->line, lines);
    EXPECT_GE(r.diagnostic->col, 1u);
    EXPECT_FALSE(r.diagnostic->message.empty());
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SessionProperty, ::testing::Range<std::uint64_t>(1, 101));

ExecResult run(const std::string& text, ExecConfig cfg = {}) {
  const auto r = parse(text);
  if (!r.ok()) throw std::runtime_error(r.diagnostic->format());
  return execute(*r.ast, cfg);
}

TEST(Exec, EmptySessionSucceedsQuietly) {
  const auto res = run("");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_TRUE(res.output.empty());
}

TEST(Exec, TextAnswers) {
  const auto res = run(kSample);
  EXPECT_EQ(res.exit_code, 0) << res.errors;
  EXPECT_NE(res.output.find("local (x,z)"), std::string::npos) << res.output;
  EXPECT_NE(res.output.find(": 6"), std::string::npos) << res.output;
}

TEST(Exec, JsonLinesParse) {
  ExecConfig cfg;
  cfg.format = OutputFormat::Json;
  const auto res = run(kSample, cfg);
  ASSERT_EQ(res.exit_code, 0) << res.errors;
  std::istringstream lines(res.output);
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    EXPECT_TRUE(j.contains("command")) << line;
    ++n;
  }
  EXPECT_EQ(n, 7u);
}

TEST(Exec, PointErrorsExitTwo) {
  const auto res = run("ring R = vars x y;\nsurvey reg of quotient(powers (x)) on box (1)..(3);");
  EXPECT_EQ(res.exit_code, 2);
  EXPECT_FALSE(res.errors.empty());
}

TEST(Exec, InvalidPatternIsFatal) {
  const auto res = run("ring R = vars x y;\nass of quotient(base=(x); powers (y); sub=(y)) at (1);\nass of "
                       "quotient(powers (y)) at (1);");
  EXPECT_EQ(res.exit_code, 1);
}

TEST(Exec, JobsDoNotChangeOutputOrArtifacts) {
  const auto root = std::filesystem::temp_directory_path() / "vnum_session_test";
  std::filesystem::remove_all(root);
  std::string outputs[2];
  for (int k = 0; k < 2; ++k) {
    ExecConfig cfg;
    cfg.jobs = k == 0 ? 1 : 8;
    cfg.out_dir = (root / std::to_string(k)).string();
    std::filesystem::create_directories(cfg.out_dir);
    cfg.format = OutputFormat::Json;
    outputs[k] = run(kSample, cfg).output;
  }
  EXPECT_EQ(outputs[0], outputs[1]);
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(root / "0")) {
    ++files;
    std::ifstream a(e.path()), b(root / "1" / e.path().filename());
    const std::string sa((std::istreambuf_iterator<char>(a)), {}), sb((std::istreambuf_iterator<char>(b)), {});
    EXPECT_EQ(sa, sb) << e.path();
  }
  EXPECT_GT(files, 0u);
  std::filesystem::remove_all(root);
}

}  // namespace
}  // namespace vnum
