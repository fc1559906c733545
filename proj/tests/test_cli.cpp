#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

const std::string data_dir = LPA_DATA_DIR;

struct Run {
  std::string out;
  int code = -1;
};

Run lpa(const std::string& args) {
  const std::string cmd = std::string(LPA_BINARY) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return data_dir + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, PairsOnLarkiIsAChain) {
  const auto r = lpa("pairs " + data("larki.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "({v},∅)\n({v},{u})\n({u,v},∅)\n({v},∅) < ({v},{u})\n({v},{u}) < ({u,v},∅)\n");
}

TEST(Cli, PairsJson) {
  const auto r = lpa("pairs " + data("larki.json") + " --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["elements"].size(), 3u);
  EXPECT_EQ(j["covers"].size(), 2u);
}

TEST(Cli, LarkiFunction) {
  const auto f = " --f " + data("larki.f.json");
  EXPECT_EQ(lpa("validate-f " + data("larki.json") + f).out, "valid\n");
  const auto in = lpa("member " + data("larki.json") + f + " --k 2 --x 'u^{v}'");
  EXPECT_EQ(in.code, 0);
  EXPECT_EQ(in.out, "2*u^{v} in A\n");
  EXPECT_EQ(lpa("member " + data("larki.json") + f + " --k 1 --x 'u^{v}'").out, "1*u^{v} not in A\n");
  EXPECT_EQ(lpa("classify " + data("larki.json") + f).out, "GeneralGraded\n");
}

TEST(Cli, ToeplitzQuotients) {
  const auto r1 = lpa("quotient " + data("toeplitz.json") + " --f " + data("toeplitz.f.case1.json") +
                      " --symbol n=5");
  EXPECT_EQ(r1.code, 0);
  EXPECT_EQ(r1.out, "L_Z(T)/A ≅ Z_n[x,x^-1]\n");
  const auto r2 = lpa("quotient " + data("toeplitz.json") + " --f " + data("toeplitz.f.case2.json") +
                      " --symbol n=5");
  EXPECT_EQ(r2.out, "L_Z(T)/A ≅ L_{Z_n}(T)\n");
  EXPECT_EQ(lpa("quotient " + data("toeplitz.json") + " --f " + data("toeplitz.f.case1.json")).out,
            "L_Z(T)/A ≅ Z_5[x,x^-1]\n");
}

TEST(Cli, BrokenVertexQuotients) {
  const std::array<std::string, 3> expected{"L_Z(E)/A ≅ L_{Z_5}(T)\n", "L_Z(E)/A ≅ Z_5[x,x^-1]\n",
                                            "L_Z(E)/A ≅ L_{Z_5}(E)\n"};
  for (int i = 0; i < 3; ++i) {
    const auto r = lpa("quotient " + data("larki.json") + " --f " +
                       data("larki.f.case" + std::to_string(i + 1) + ".json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, expected[i]);
  }
}

TEST(Cli, QuotientOfGeneralGradedIsEpimorphismOnly) {
  const auto r = lpa("quotient " + data("larki.json") + " --f " + data("larki.f.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("epimorphism only"), std::string::npos);
}

TEST(Cli, Decompose) {
  const auto phi = " --phi " + data("ex418.phi.json");
  const auto r = lpa("decompose " + data("ex418.json") + phi + " --symbol p=2 --symbol q=3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "M_3(Z_p) (+) M_3(Z_q) (+) M_2(Z_pq)\n");
  EXPECT_EQ(lpa("decompose " + data("ex418.json") + phi).out, "M_3(Z_2) (+) M_3(Z_3) (+) M_2(Z_6)\n");
  const auto j = nlohmann::json::parse(lpa("decompose " + data("ex418.json") + phi + " --format json").out);
  EXPECT_EQ(j["claim"], "porcupine-decomposition");
}

TEST(Cli, DecomposeNeedsRowFinite) {
  const auto r = lpa("decompose " + data("larki.json") + " --phi " + data("ex418.phi.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("row-finite"), std::string::npos);
}

TEST(Cli, ConditionK) {
  EXPECT_EQ(lpa("check-k " + data("toeplitz.json")).out,
            "Condition (K): false; all ideals graded: false\n");
  EXPECT_EQ(lpa("check-k " + data("ex32.json")).out, "Condition (K): true; all ideals graded: true\n");
}

TEST(Cli, InfinitePorcupine) {
  const auto r = lpa("porcupine " + data("toeplitz.json") + " --X v --depth 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("w^{ccce}"), std::string::npos);
  EXPECT_EQ(r.out.find("w^{cccce}"), std::string::npos);
  EXPECT_NE(r.out.find("infinite: true\ndepth: 4\n"), std::string::npos);
  const auto env = lpa("porcupine " + data("toeplitz.json") + " --X v --format json");
  const auto j = nlohmann::json::parse(env.out);
  EXPECT_EQ(j["infinite"], true);
  EXPECT_EQ(j["depth"], 6);
}

TEST(Cli, DepthFromEnvironment) {
  const auto r = lpa("porcupine " + data("toeplitz.json") + " --X v --format json").out;
  const std::string cmd = "LPA_DEPTH=2 " + std::string(LPA_BINARY) + " porcupine " +
                          data("toeplitz.json") + " --X v --format json";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_TRUE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  EXPECT_EQ(nlohmann::json::parse(out)["depth"], 2);
  EXPECT_NE(nlohmann::json::parse(r)["depth"], 2);
}

TEST(Cli, CrossCheck) {
  const auto r = lpa("cross-check " + data("toeplitz.json") + " --f " + data("toeplitz.f.case2.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("consistent"), std::string::npos);
}

TEST(Cli, MalformedInputExitsTwo) {
  const auto bad = temp_file("lpa_cli_bad.json", "{ not json");
  EXPECT_EQ(lpa("pairs " + bad).code, 2);
  const auto missing_field = temp_file("lpa_cli_field.json", R"({"edges":[]})");
  EXPECT_EQ(lpa("pairs " + missing_field).code, 2);
  EXPECT_EQ(lpa("pairs " + data("missing.json")).code, 2);
  EXPECT_EQ(lpa("no-such-command").code, 2);
  EXPECT_EQ(lpa("").code, 2);
}

TEST(Cli, PartialFunctionExitsOne) {
  const auto partial = temp_file("lpa_cli_partial.json",
                                 R"([{"pair":{"H":["v"],"S":[]},"ideal":{"ring":"Z","gen":1}}])");
  const auto r = lpa("validate-f " + data("larki.json") + " --f " + partial);
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, InvalidFunctionExitsOne) {
  const auto bad = temp_file("lpa_cli_invalid.json", R"([
      {"pair":{"H":["v"],"S":[]},"ideal":{"ring":"Z","gen":0}},
      {"pair":{"H":["v"],"S":["u"]},"ideal":{"ring":"Z","gen":2}},
      {"pair":{"H":["u","v"],"S":[]},"ideal":{"ring":"Z","gen":0}}])");
  EXPECT_EQ(lpa("validate-f " + data("larki.json") + " --f " + bad).code, 1);
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::string args :
       {"pairs " + data("ex418.json") + " --format json", "lattice " + data("ex418.json"),
        "decompose " + data("ex418.json") + " --phi " + data("ex418.phi.json") + " --format json",
        "porcupine " + data("ex418.json") + " --X v2,v3 --format dot", std::string("generate --seed 9 --infinite")}) {
    const auto a = lpa(args), b = lpa(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, GeneratedGraphIsReadable) {
  const auto g = lpa("generate --seed 4 --vertices 5 --format json");
  ASSERT_EQ(g.code, 0);
  const auto path = temp_file("lpa_cli_gen.json", g.out);
  EXPECT_EQ(lpa("lattice " + path).code, 0);
}
