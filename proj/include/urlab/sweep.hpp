#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "urlab/rational.hpp"
#include "urlab/representation.hpp"
#include "urlab/sampler.hpp"

namespace urlab {

using Triple = std::array<std::size_t, 3>;

/// Triples with a+b = n+1, c <= a or c+b = n+1, a <= c; sorted, each listed once. Needs n >= 2.
std::vector<Triple> enumerate_triples(std::size_t n);

/// (n,1,n), (n-1,2,n-1), (n,1,n-1), (n-1,1,n).
bool in_faithful_set(std::size_t n, const Triple& t);

/// Integer entries in [-5, 5] with nonzero corners M_{a,1}, N_{b,1}.
RepParams sample_params(std::size_t n, const Triple& t, const Rational& alpha, const Rational& lambda,
                        Sampler& sampler);

struct SweepConfig {
  std::size_t n_min = 2;
  std::size_t n_max = 6;
  std::vector<Rational> alphas{Rational(0), Rational(1), Rational(-1, 2)};
  std::vector<Rational> lambdas{Rational(1), Rational(2), Rational(-1, 3)};
  std::size_t samples_per_cell = 5;
  std::uint64_t seed = kDefaultSeed;
  std::size_t threads = 0;  // 0 = hardware concurrency
};

struct SweepRecord {
  std::string n;
  std::string key;  // "(a,b,c)" or "(d1,d2,d3,d4)"
  std::string expected;
  std::string observed;
  std::size_t samples = 0;
  bool pass = true;
};

struct Counterexample {
  std::string fingerprint;
  std::string detail;
};

struct SweepReport {
  std::string kind;
  std::string label = "supporting evidence";
  std::string key_header = "(a,b,c)";
  std::vector<SweepRecord> records;
  std::vector<Counterexample> counterexamples;
  std::vector<std::pair<std::string, std::string>> stats;
  bool pass() const { return counterexamples.empty(); }
};

/// One build_R instance of the grid with everything the criteria look at.
struct GridInstance {
  RepParams params;
  bool verified = false;
  bool uniserial = false;
  std::size_t length = 0;
  bool faithful = false;
  bool expected_faithful = false;
  std::string error;  // exception text, if analysis threw
};

/// Every n in range, every triple, every (alpha, lambda), samples_per_cell seeded (M, N).
std::vector<GridInstance> grid_scan(const SweepConfig& cfg);

/// Faithful flag against membership in the faithful set, aggregated per (n, triple).
SweepReport faithful_sweep(const SweepConfig& cfg);
SweepReport faithful_report(const std::vector<GridInstance>& grid);

struct RoundtripConfig {
  std::size_t trials = 50;
  std::size_t n_min = 2;
  std::size_t n_max = 5;
  std::vector<Rational> alphas{Rational(0), Rational(1), Rational(-1, 2)};
  std::vector<Rational> lambdas{Rational(1), Rational(2), Rational(-1, 3)};
  std::uint64_t seed = kDefaultSeed;
};

/// Per trial: normalize(conjugate(R, T)) recovers the normalized parameters, for T a random
/// invertible matrix commuting with R(x) and, via standardize, for a random invertible T.
/// When the cell has free entries, a second normalized tuple differing in one of them must not
/// be isomorphic to the first; stats count certified versus sampled negatives.
SweepReport classification_roundtrip(const RoundtripConfig& cfg);

/// reduccion_scan over all (d_1..d_4) with d_i <= dmax; the all-(1,4)-zero verdict must hold
/// exactly on (1,1,1,1).
SweepReport length_bound_scan(std::size_t dmax, const std::vector<Rational>& lambdas, std::size_t samples,
                              std::uint64_t seed = kDefaultSeed, const Rational& alpha = Rational(0));

}  // namespace urlab
