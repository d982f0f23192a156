#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <rootrel/group.hpp>
#include <rootrel/rational.hpp>

namespace testsupport {

inline std::string data_path(const std::string& name) {
  return std::string(ROOTREL_TEST_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Regular permutation realizations of the groups the library classifies.
// Their correctness is not assumed: group_test checks that close_generators
// accepts each one and that classify() recovers the intended name.
struct NamedGroup {
  std::string name;
  int n;
  std::vector<rootrel::group::Permutation> gens;
};

inline std::vector<NamedGroup> sample_groups() {
  using rootrel::group::Permutation;
  std::vector<NamedGroup> out;
  for (int n = 2; n <= 8; ++n) {
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    out.push_back({"C" + std::to_string(n), n, {Permutation(cyc)}});
  }
  out.push_back({"C2xC2", 4,
                 {Permutation({1, 0, 3, 2}), Permutation({2, 3, 0, 1})}});
  out.push_back({"C2xC4", 8,
                 {Permutation({4, 5, 6, 7, 0, 1, 2, 3}),
                  Permutation({1, 2, 3, 0, 5, 6, 7, 4})}});
  // Left translations of S3 and D8 on themselves, copied from the
  // automorphism groups of x^6+3 and x^8+4x^6+2x^4+28x^2+1.
  out.push_back({"S3", 6,
                 {Permutation({4, 2, 5, 0, 3, 1}),
                  Permutation({5, 3, 4, 1, 2, 0})}});
  out.push_back({"D8", 8,
                 {Permutation({4, 5, 0, 1, 6, 7, 2, 3}),
                  Permutation({7, 6, 3, 2, 5, 4, 1, 0})}});
  return out;
}

inline rootrel::group::Relabeling canonical_group(const NamedGroup& ng) {
  return rootrel::group::relabel_group(
      rootrel::group::close_generators(ng.gens, ng.n));
}

inline long rand_long(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline rootrel::algebra::Rational rand_rational(std::mt19937_64& rng,
                                                long span = 20,
                                                long maxden = 12) {
  return rootrel::algebra::make_rational(rand_long(rng, -span, span),
                                         rand_long(rng, 1, maxden));
}

}  // namespace testsupport
