#include "urlab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "urlab/analysis.hpp"
#include "urlab/errors.hpp"
#include "urlab/phi.hpp"

namespace urlab {

std::vector<Triple> enumerate_triples(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("enumerate_triples needs n >= 2");
  }
  std::vector<Triple> out;
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t b = 1; b <= n; ++b) {
      for (std::size_t c = 1; c <= n; ++c) {
        if ((a + b == n + 1 && c <= a) || (c + b == n + 1 && a <= c)) {
          out.push_back({a, b, c});
        }
      }
    }
  }
  return out;
}

bool in_faithful_set(std::size_t n, const Triple& t) {
  const std::array<Triple, 4> set{{{n, 1, n}, {n - 1, 2, n - 1}, {n, 1, n - 1}, {n - 1, 1, n}}};
  return std::find(set.begin(), set.end(), t) != set.end();
}

RepParams sample_params(std::size_t n, const Triple& t, const Rational& alpha, const Rational& lambda,
                        Sampler& sampler) {
  RepParams p;
  p.n = n;
  p.lambda = lambda;
  p.alpha = alpha;
  p.a = t[0];
  p.b = t[1];
  p.c = t[2];
  p.M = Matrix(p.a, p.b);
  p.N = Matrix(p.b, p.c);
  for (std::size_t i = 0; i < p.a; ++i) {
    for (std::size_t j = 0; j < p.b; ++j) {
      p.M(i, j) = sampler.integer(-5, 5);
    }
  }
  for (std::size_t i = 0; i < p.b; ++i) {
    for (std::size_t j = 0; j < p.c; ++j) {
      p.N(i, j) = sampler.integer(-5, 5);
    }
  }
  p.M(p.a - 1, 0) = sampler.nonzero_integer(-5, 5);
  p.N(p.b - 1, 0) = sampler.nonzero_integer(-5, 5);
  p.validate();
  return p;
}

namespace {

std::string triple_str(const Triple& t) {
  std::ostringstream os;
  os << "(" << t[0] << "," << t[1] << "," << t[2] << ")";
  return os.str();
}

/// Runs task(i) for i in [0, count) on a small pool; results land by index.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& task) {
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = std::min(threads, count);
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) {
          task(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
}

long key_of(const Rational& q) {
  return static_cast<long>(mpz_get_si(q.numerator().get_mpz_t()) * 1000 + mpz_get_si(q.denominator().get_mpz_t()));
}

}  // namespace

std::vector<GridInstance> grid_scan(const SweepConfig& cfg) {
  std::vector<GridInstance> out;
  for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
    for (const auto& t : enumerate_triples(n)) {
      for (const auto& lambda : cfg.lambdas) {
        for (const auto& alpha : cfg.alphas) {
          for (std::size_t s = 0; s < cfg.samples_per_cell; ++s) {
            Sampler sampler(cfg.seed, {long(n), long(t[0]), long(t[1]), long(t[2]), key_of(lambda), key_of(alpha),
                                       long(s)});
            GridInstance g;
            g.params = sample_params(n, t, alpha, lambda, sampler);
            g.expected_faithful = in_faithful_set(n, t);
            out.push_back(std::move(g));
          }
        }
      }
    }
  }
  parallel_for(out.size(), cfg.threads, [&](std::size_t i) {
    GridInstance& g = out[i];
    try {
      const Representation rep = build_R(g.params);
      g.verified = rep.verified;
      const AnalysisReport r = kernel_and_flags(rep);
      g.uniserial = r.uniserial;
      g.length = r.length;
      g.faithful = r.faithful;
    } catch (const std::exception& e) {
      g.error = e.what();
    }
  });
  return out;
}

SweepReport faithful_report(const std::vector<GridInstance>& grid) {
  SweepReport report;
  report.kind = "faithful-sweep";
  std::map<std::pair<std::size_t, Triple>, SweepRecord> cells;
  std::map<std::pair<std::size_t, Triple>, std::pair<std::size_t, std::size_t>> seen;  // (faithful, not)
  for (const auto& g : grid) {
    const auto key = std::make_pair(g.params.n, Triple{g.params.a, g.params.b, g.params.c});
    auto& rec = cells[key];
    rec.n = std::to_string(g.params.n);
    rec.key = triple_str(key.second);
    rec.expected = g.expected_faithful ? "faithful" : "not faithful";
    ++rec.samples;
    auto& counts = seen[key];
    (g.faithful ? counts.first : counts.second) += 1;
    const bool ok = g.error.empty() && g.faithful == g.expected_faithful;
    if (!ok) {
      rec.pass = false;
      report.counterexamples.push_back(
          {g.params.fingerprint(), g.error.empty() ? (g.faithful ? "observed faithful" : "observed not faithful")
                                                   : "error: " + g.error});
    }
  }
  for (auto& [key, rec] : cells) {
    const auto [yes, no] = seen[key];
    rec.observed = no == 0 ? "faithful" : yes == 0 ? "not faithful" : "mixed";
    report.records.push_back(rec);
  }
  report.stats.emplace_back("instances", std::to_string(grid.size()));
  return report;
}

SweepReport faithful_sweep(const SweepConfig& cfg) { return faithful_report(grid_scan(cfg)); }

namespace {

Matrix random_toeplitz_block(std::size_t p, Sampler& s) {
  Matrix t(p, p);
  std::vector<Rational> coeff(p);
  coeff[0] = s.nonzero_integer(-3, 3);
  for (std::size_t k = 1; k < p; ++k) {
    coeff[k] = s.integer(-3, 3);
  }
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i; j < p; ++j) {
      t(i, j) = coeff[j - i];
    }
  }
  return t;
}

Matrix random_invertible(std::size_t d, Sampler& s) {
  for (;;) {
    Matrix t(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        t(i, j) = s.integer(-3, 3);
      }
    }
    if (!determinant(t).is_zero()) {
      return t;
    }
  }
}

/// Positions of M and N that normalization leaves free.
std::vector<std::pair<bool, std::pair<std::size_t, std::size_t>>> free_entries(const RepParams& p) {
  std::vector<std::pair<bool, std::pair<std::size_t, std::size_t>>> out;
  for (std::size_t i = 0; i + 1 < p.a; ++i) {
    for (std::size_t j = 1; j < p.b; ++j) {
      out.push_back({true, {i, j}});
    }
  }
  for (std::size_t i = 0; i + 1 < p.b; ++i) {
    for (std::size_t j = 0; j < p.c; ++j) {
      out.push_back({false, {i, j}});
    }
  }
  return out;
}

}  // namespace

SweepReport classification_roundtrip(const RoundtripConfig& cfg) {
  SweepReport report;
  report.kind = "classification-roundtrip";
  std::size_t recovered = 0;
  std::size_t pairs = 0;
  std::size_t certified = 0;
  std::size_t sampled = 0;
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Sampler s(cfg.seed, {0x5251, long(trial)});
    const std::size_t n = static_cast<std::size_t>(s.integer(long(cfg.n_min), long(cfg.n_max)));
    const auto triples = enumerate_triples(n);
    const Triple t = triples[static_cast<std::size_t>(s.integer(0, long(triples.size()) - 1))];
    const Rational alpha = cfg.alphas[static_cast<std::size_t>(s.integer(0, long(cfg.alphas.size()) - 1))];
    const Rational lambda = cfg.lambdas[static_cast<std::size_t>(s.integer(0, long(cfg.lambdas.size()) - 1))];
    if (lambda.is_zero()) {
      throw std::invalid_argument("classification_roundtrip needs lambda != 0");
    }
    const RepParams target = normalize_params(sample_params(n, t, alpha, lambda, s)).first;
    const Representation rep = build_R(target);

    SweepRecord rec;
    rec.n = std::to_string(n);
    rec.key = triple_str(t);
    rec.expected = "recovered";
    rec.samples = 1;
    std::string observed = "recovered";
    try {
      std::vector<Matrix> blocks{random_toeplitz_block(t[0], s), random_toeplitz_block(t[1], s),
                                 random_toeplitz_block(t[2], s)};
      const Representation moved = conjugate(rep, direct_sum(blocks));
      const auto back = normalize(moved).rep.params;
      if (!back || *back != target) {
        observed = "block conjugation not recovered";
      }
      const Representation scrambled = conjugate(rep, random_invertible(rep.dim(), s));
      const auto back2 = normalize(standardize(scrambled)).rep.params;
      if (observed == "recovered" && (!back2 || *back2 != target)) {
        observed = "general conjugation not recovered";
      }
    } catch (const std::exception& e) {
      observed = std::string("error: ") + e.what();
    }
    if (observed == "recovered") {
      ++recovered;
    } else {
      report.counterexamples.push_back({target.fingerprint(), observed});
    }

    const auto free = free_entries(target);
    if (!free.empty()) {
      RepParams other = target;
      const auto& [in_m, pos] = free[static_cast<std::size_t>(s.integer(0, long(free.size()) - 1))];
      Matrix& target_mat = in_m ? other.M : other.N;
      target_mat(pos.first, pos.second) += s.nonzero_integer(-3, 3);
      ++pairs;
      const IsomorphismResult iso = isomorphism_search(rep, build_R(other), cfg.seed + trial);
      if (iso.intertwiner) {
        report.counterexamples.push_back({target.fingerprint(), "isomorphic to " + other.fingerprint()});
        observed += ", pair isomorphic";
      } else if (iso.certified_negative) {
        ++certified;
        observed += ", pair certified non-isomorphic";
      } else {
        ++sampled;
        observed += ", pair sampled non-isomorphic";
      }
      rec.expected += ", pair non-isomorphic";
    }
    rec.observed = observed;
    rec.pass = observed.find("error") == std::string::npos && observed.find("not recovered") == std::string::npos &&
               observed.find("pair isomorphic") == std::string::npos;
    report.records.push_back(std::move(rec));
  }
  report.stats.emplace_back("trials", std::to_string(cfg.trials));
  report.stats.emplace_back("recovered", std::to_string(recovered));
  report.stats.emplace_back("pairs", std::to_string(pairs));
  report.stats.emplace_back("certified_negative", std::to_string(certified));
  report.stats.emplace_back("sampled_negative", std::to_string(sampled));
  return report;
}

SweepReport length_bound_scan(std::size_t dmax, const std::vector<Rational>& lambdas, std::size_t samples,
                              std::uint64_t seed, const Rational& alpha) {
  SweepReport report;
  report.kind = "length-bound-scan";
  report.key_header = "(d1,d2,d3,d4)";
  std::vector<std::array<std::size_t, 4>> tuples;
  for (std::size_t d1 = 1; d1 <= dmax; ++d1) {
    for (std::size_t d2 = 1; d2 <= dmax; ++d2) {
      for (std::size_t d3 = 1; d3 <= dmax; ++d3) {
        for (std::size_t d4 = 1; d4 <= dmax; ++d4) {
          tuples.push_back({d1, d2, d3, d4});
        }
      }
    }
  }
  std::vector<SweepRecord> records(tuples.size());
  std::vector<std::vector<Counterexample>> bad(tuples.size());
  parallel_for(tuples.size(), 0, [&](std::size_t idx) {
    const auto& d = tuples[idx];
    const bool expected = d == std::array<std::size_t, 4>{1, 1, 1, 1};
    std::ostringstream key;
    key << "(" << d[0] << "," << d[1] << "," << d[2] << "," << d[3] << ")";
    SweepRecord rec{"-", key.str(), expected ? "all zero" : "nonzero", "", 0, true};
    std::size_t zero = 0;
    for (const auto& lambda : lambdas) {
      for (std::size_t s = 0; s < samples; ++s) {
        Sampler sampler(seed, {long(d[0]), long(d[1]), long(d[2]), long(d[3]), key_of(lambda), long(s)});
        const ReduccionInstance inst = make_reduccion_instance({d.begin(), d.end()}, lambda, alpha, sampler);
        const ReduccionResult r = reduccion_scan(inst);
        ++rec.samples;
        zero += r.all_14_blocks_zero ? 1 : 0;
        if (r.all_14_blocks_zero != expected) {
          std::ostringstream fp;
          fp << key.str() << " lambda=" << lambda << " sample=" << s;
          bad[idx].push_back({fp.str(), r.all_14_blocks_zero ? "closure has zero (1,4) blocks" : "nonzero (1,4) block"});
        }
      }
    }
    rec.observed = zero == rec.samples ? "all zero" : zero == 0 ? "nonzero" : "mixed";
    rec.pass = bad[idx].empty();
    records[idx] = std::move(rec);
  });
  report.records = std::move(records);
  for (auto& b : bad) {
    report.counterexamples.insert(report.counterexamples.end(), b.begin(), b.end());
  }
  report.stats.emplace_back("dmax", std::to_string(dmax));
  return report;
}

}  // namespace urlab
