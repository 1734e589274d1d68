#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "isocert/catalog.hpp"
#include "isocert/certifier.hpp"
#include "isocert/errors.hpp"
#include "isocert/perm.hpp"
#include "isocert/perm_group.hpp"

using namespace isocert;

namespace {

Permutation perm(const std::string& text, int degree) {
  return Permutation::parse_cycles(text, degree);
}

// replaces one exact line fragment of a serialized certificate
std::string swap_line(const std::string& text, const std::string& from, const std::string& to) {
  const std::size_t pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  std::string out = text;
  out.replace(pos, from.size(), to);
  return out;
}

}  // namespace

TEST_CASE("the trivial group earns the rank-one verdict with a fixed rendering") {
  const PermutationGroup triv = PermutationGroup::trivial(1);
  const Certificate cert = certify(triv);
  CHECK(cert.verdict == Verdict::RankOne);
  CHECK(cert.rank == 0);
  CHECK(cert.generators.empty());
  const std::string expected =
      "isocert-v1\n"
      "degree: 1\n"
      "order: 1\n"
      "k: 1\n"
      "rank: 0\n"
      "verdict: RankOne\n"
      "note: rank 0 is at most one; the rank-two pipeline does not apply\n";
  CHECK(serialize_certificate(cert) == expected);
  CHECK(verify_certificate(cert, triv));
  CHECK(verify_certificate(parse_certificate(expected), triv));
}

TEST_CASE("cyclic and dihedral groups stop at the rank gate") {
  const Certificate c6 = certify(catalog_group("Cn:6"));
  CHECK(c6.verdict == Verdict::RankOne);
  CHECK(c6.rank == 1);
  CHECK(c6.rank_per_prime == std::map<std::uint64_t, int>{{2, 1}, {3, 1}});
  CHECK(verify_certificate(c6, catalog_group("Cn:6")));

  const Certificate s3 = certify(catalog_group("D2n:3"));
  CHECK(s3.verdict == Verdict::RankOne);
  CHECK(s3.rank == 1);
}

TEST_CASE("elementary abelian rank three is out of scope") {
  const PermutationGroup cube = PermutationGroup::from_generators(
      6, {perm("(1,2)", 6), perm("(3,4)", 6), perm("(5,6)", 6)});
  const Certificate cert = certify(cube);
  CHECK(cert.verdict == Verdict::RankTooHigh);
  CHECK(cert.rank == 3);
  CHECK(cert.qd.empty());
  CHECK(verify_certificate(cert, cube));
  const std::string text = serialize_certificate(cert);
  CHECK(serialize_certificate(parse_certificate(text)) == text);
  CHECK(verify_certificate(parse_certificate(text), cube));
}

TEST_CASE("the alternating group on four points is certified end to end") {
  const PermutationGroup a4 = catalog_group("A4");
  CertifyOptions options;
  options.label = "A4";
  const Certificate cert = certify(a4, options);
  CHECK(cert.verdict == Verdict::Certified);
  CHECK(cert.rank == 2);
  CHECK(cert.k == 1);
  CHECK(cert.family_dimension == 3);
  CHECK(cert.sphere_dimension == 5);
  CHECK(cert.flag_compatible);
  CHECK(cert.flag_rank_one_isotropy);
  CHECK(cert.flag_euler);
  CHECK(cert.flag_empty_certified);

  CHECK(cert.searches.at(2).bound == 4);
  CHECK(cert.searches.at(2).found);
  CHECK(cert.searches.at(3).bound == 3);
  CHECK(cert.searches.at(3).found);
  CHECK(cert.effective.at(2).dimension == 3);
  CHECK(cert.effective.at(2).multiplicities == std::vector<std::uint64_t>{0, 1, 1, 1});
  CHECK(cert.effective.at(3).dimension == 1);
  CHECK(cert.effective.at(3).multiplicities == std::vector<std::uint64_t>{0, 0, 1});
  CHECK(cert.family.at(2).multiplicities == std::vector<std::uint64_t>{0, 1, 1, 1});
  CHECK(cert.family.at(3).multiplicities == std::vector<std::uint64_t>{0, 0, 3});

  // one record per conjugacy class of prime-power subgroups, spheres where
  // the fixed dimension is positive
  REQUIRE(cert.subgroups.size() == 4);
  CHECK(cert.subgroups[0].order == 1);
  CHECK(cert.subgroups[0].sphere_dim == 5);
  CHECK(cert.subgroups[1].order == 2);
  CHECK(cert.subgroups[1].sphere_dim == 1);
  CHECK(cert.subgroups[2].order == 3);
  CHECK_FALSE(cert.subgroups[2].sphere_dim.has_value());
  CHECK(cert.subgroups[3].order == 4);
  CHECK(cert.subgroups[3].rank == 2);
  CHECK_FALSE(cert.subgroups[3].sphere_dim.has_value());

  CHECK(verify_certificate(cert, a4));
}

TEST_CASE("serialization is canonical and reproducible") {
  const PermutationGroup a4 = catalog_group("A4");
  const std::string first = serialize_certificate(certify(a4));
  for (int run = 0; run < 2; ++run) CHECK(serialize_certificate(certify(a4)) == first);

  const Certificate parsed = parse_certificate(first);
  CHECK(serialize_certificate(parsed) == first);
  CHECK(verify_certificate(parsed, a4));

  CHECK(first.find("verdict: Certified\n") != std::string::npos);
  CHECK(first.find("family.dimension: 3\n") != std::string::npos);
  CHECK(first.find("sphere-dimension: 5\n") != std::string::npos);
  CHECK(first.find("subgroups: 4\n") != std::string::npos);
  CHECK(first.find("search[2].bound: 4\n") != std::string::npos);
  CHECK(first.find("effective[3].multiplicities: 0,0,1\n") != std::string::npos);
  CHECK(first.find("family[3].multiplicities: 0,0,3\n") != std::string::npos);
  CHECK(first.find("flags.empty-certified: true\n") != std::string::npos);
}

TEST_CASE("the Qd(3) group is reported as involved in itself") {
  const PermutationGroup qd3 = catalog_group("Qd3");
  const Certificate cert = certify(qd3);
  CHECK(cert.verdict == Verdict::NotQdFree);
  CHECK(cert.note == "Qd(3) is involved in a section of the group");
  REQUIRE(cert.qd.size() == 1);
  CHECK(cert.qd[0].prime == 3);
  CHECK(cert.qd[0].status == "involved");
  CHECK(cert.searches.empty());
  CHECK(verify_certificate(cert, qd3));

  const std::string text = serialize_certificate(cert);
  CHECK(serialize_certificate(parse_certificate(text)) == text);
  CHECK(verify_certificate(parse_certificate(text), qd3));
}

TEST_CASE("a tight dimension bound ends in an inconclusive search") {
  const PermutationGroup a4 = catalog_group("A4");
  CertifyOptions options;
  options.dimension_bounds[2] = 2;
  const Certificate cert = certify(a4, options);
  CHECK(cert.verdict == Verdict::SearchInconclusive);
  CHECK(cert.note == "no 2-effective character of dimension at most 2");
  CHECK(cert.searches.at(2).bound == 2);
  CHECK_FALSE(cert.searches.at(2).found);
  CHECK(cert.searches.at(3).found);
  CHECK(cert.effective.count(2) == 0);
  CHECK(cert.effective.at(3).dimension == 1);
  CHECK(cert.family_dimension == 0);
  CHECK(cert.subgroups.empty());
  CHECK(verify_certificate(cert, a4));

  const std::string text = serialize_certificate(cert);
  CHECK(serialize_certificate(parse_certificate(text)) == text);
  CHECK(verify_certificate(parse_certificate(text), a4));
}

TEST_CASE("tampered certificates fail verification") {
  const PermutationGroup a4 = catalog_group("A4");
  const std::string text = serialize_certificate(certify(a4));

  // a flipped character value no longer matches the stored decomposition
  CHECK_FALSE(verify_certificate(
      parse_certificate(swap_line(text, "effective[2].values: 3; -1; -1; -1",
                                  "effective[2].values: 3; -1; -1; 1")),
      a4));
  // an inflated total dimension disagrees with the recomputed model
  CHECK_FALSE(verify_certificate(
      parse_certificate(swap_line(text, "sphere-dimension: 5", "sphere-dimension: 7")), a4));
  // certified verdicts require every flag to hold
  CHECK_FALSE(verify_certificate(
      parse_certificate(swap_line(text, "flags.euler: true", "flags.euler: false")), a4));
  // a sphere entry cannot be claimed away
  CHECK_FALSE(verify_certificate(
      parse_certificate(swap_line(text, "subgroup[1].entry: S1", "subgroup[1].entry: empty")),
      a4));
  // the recorded rank is recomputed
  CHECK_FALSE(verify_certificate(
      parse_certificate(swap_line(text, "rank: 2", "rank: 3")), a4));
  // the verdict must fit the recorded stages
  CHECK_FALSE(verify_certificate(
      parse_certificate(swap_line(text, "verdict: Certified", "verdict: RankOne")), a4));
}

TEST_CASE("verification rejects certificates for a different group") {
  const Certificate cert = certify(catalog_group("A4"));
  CHECK_THROWS_AS((void)verify_certificate(cert, catalog_group("S4")), std::invalid_argument);
  // a different generating set of the same group is fine
  const PermutationGroup other =
      PermutationGroup::from_generators(4, {perm("(1,2,3)", 4), perm("(1,2)(3,4)", 4)});
  CHECK(verify_certificate(cert, other));
}

TEST_CASE("malformed certificate text is rejected") {
  CHECK_THROWS_AS((void)parse_certificate(""), ParseError);
  CHECK_THROWS_AS((void)parse_certificate("bogus\n"), ParseError);
  CHECK_THROWS_AS((void)parse_certificate("isocert-v1\ndegree: 4\n"), ParseError);
  CHECK_THROWS_AS((void)parse_certificate("isocert-v1\nno separator\n"), ParseError);
  CHECK_THROWS_AS((void)parse_certificate("isocert-v1\nwhatever: 3\n"), ParseError);
  CHECK_THROWS_AS((void)parse_certificate("isocert-v1\ngenerator: (1,2)\n"), ParseError);
  const std::string base =
      "isocert-v1\ndegree: 1\norder: 1\nk: 1\nrank: 0\n";
  CHECK_THROWS_AS((void)parse_certificate(base + "verdict: Sideways\n"), ParseError);
  CHECK_THROWS_AS((void)parse_certificate(base + "verdict: RankOne\nqd[3].k: ()\n"), ParseError);
  CHECK_THROWS_AS(
      (void)parse_certificate(base + "verdict: RankOne\nsubgroup[0].order: 1\n"), ParseError);
}

TEST_CASE("certificates survive the trip through a file") {
  const PermutationGroup a4 = catalog_group("A4");
  const Certificate cert = certify(a4);
  const std::string path = "certifier_roundtrip.isocert";
  {
    std::ofstream out(path, std::ios::binary);
    out << serialize_certificate(cert);
  }
  const Certificate loaded = load_certificate(path);
  CHECK(serialize_certificate(loaded) == serialize_certificate(cert));
  CHECK(verify_certificate(loaded, a4));
  std::remove(path.c_str());
  CHECK_THROWS_AS((void)load_certificate("certifier_missing.isocert"), ParseError);
}

TEST_CASE("the join multiplier scales the certified sphere") {
  const PermutationGroup a4 = catalog_group("A4");
  CertifyOptions options;
  options.k = 2;
  const Certificate cert = certify(a4, options);
  CHECK(cert.verdict == Verdict::Certified);
  CHECK(cert.sphere_dimension == 11);
  CHECK(cert.subgroups[1].sphere_dim == 3);
  CHECK(verify_certificate(cert, a4));

  CertifyOptions zero;
  zero.k = 0;
  CHECK_THROWS_AS((void)certify(a4, zero), std::invalid_argument);
}

TEST_CASE("scale limits interrupt certification up front") {
  CertifyOptions tight;
  tight.limits.max_order = 50;
  CHECK_THROWS_WITH_AS((void)certify(catalog_group("A5"), tight),
                       "certify: group order 60 exceeds the limit 50", ScaleLimitError);
}

TEST_CASE("the remaining catalog regulars certify with their known dimensions") {
  const PermutationGroup s4 = catalog_group("S4");
  const Certificate s4_cert = certify(s4);
  CHECK(s4_cert.verdict == Verdict::Certified);
  CHECK(s4_cert.family_dimension == 6);
  CHECK(s4_cert.sphere_dimension == 11);
  CHECK(verify_certificate(s4_cert, s4));

  // quaternion Sylow 2 and cyclic Sylow 3 put this group below the rank gate
  const PermutationGroup sl23 = catalog_group("SL2_3");
  const Certificate sl_cert = certify(sl23);
  CHECK(sl_cert.verdict == Verdict::RankOne);
  CHECK(sl_cert.rank == 1);
  CHECK(sl_cert.family_dimension == 0);
  CHECK(verify_certificate(sl_cert, sl23));

  const PermutationGroup a5 = catalog_group("A5");
  const Certificate a5_cert = certify(a5);
  CHECK(a5_cert.verdict == Verdict::Certified);
  CHECK(a5_cert.family_dimension == 6);
  CHECK(a5_cert.sphere_dimension == 11);
  CHECK(verify_certificate(a5_cert, a5));
}
