// Acceptance suite: one line per criterion, nonzero exit when any
// criterion fails. argv[1] must point at the CLI binary (the last
// criterion drives it end to end).

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "saddlecalc/analysis.hpp"
#include "saddlecalc/document.hpp"
#include "saddlecalc/saddle.hpp"
#include "saddlecalc/sampling.hpp"

using namespace saddlecalc;

namespace {

struct Criterion {
  int id;
  std::string summary;
  std::function<bool(std::string*)> run;
};

// Criterion-1 corpus: seeds 0..99, dimension cycling 1..5, up to 10
// generators per part, coordinates in [-5, 5].
DCPair corpus_pair(uint64_t seed) {
  const int n = 1 + static_cast<int>(seed % 5);
  return random_dc(seed, n, 10, 10, 5.0);
}

std::vector<Vector> corpus_samples(uint64_t seed, int dim, int count) {
  return sample_sphere({dim, count, 1000 + seed, SphereScheme::kUniformRandom});
}

ApproximationFamilies families_of(const SaddleFamily& F) {
  std::vector<MaxOfLinear> upper;
  for (int i = 0; i < F.rows(); ++i) upper.emplace_back(F.row_points(i));
  std::vector<MinOfLinear> lower;
  for (int s = 0; s < F.cols(); ++s) lower.emplace_back(F.col_points(s));
  return ApproximationFamilies(std::move(upper), std::move(lower));
}

bool criterion1(std::string* detail) {
  double worst = 0.0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const DCPair p = corpus_pair(seed);
    const SaddleFamily F = from_dc(p);
    for (const Vector& x : corpus_samples(seed, p.dim(), 2000)) {
      const double vi = eval_infsup(F, x);
      const double vs = eval_supinf(F, x);
      const double vd = eval_dc(p, x);
      worst = std::max({worst, std::abs(vi - vs), std::abs(vi - vd)});
    }
  }
  std::ostringstream os;
  os << "max deviation " << worst << " over 100 pairs x 2000 samples";
  *detail = os.str();
  return worst <= 1e-10;
}

bool criterion2(std::string* detail) {
  double worst = 0.0;
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const DCPair p = corpus_pair(seed);
    const ApproximationFamilies fams = families_of(from_dc(p));
    const SaddleFamily F = build_from_approximations(fams);
    if (!validate_sandwich(F, fams)) {
      *detail = "sandwich violated at seed " + std::to_string(seed);
      return false;
    }
    for (const Vector& x : corpus_samples(seed, p.dim(), 2000)) {
      const double want = eval_dc(p, x);
      worst = std::max({worst, std::abs(eval_infsup(F, x) - want),
                        std::abs(eval_supinf(F, x) - want)});
    }
  }
  std::ostringstream os;
  os << "sandwich held, max evaluation deviation " << worst
     << " over 50 family pairs";
  *detail = os.str();
  return worst <= 1e-9;
}

bool criterion3(std::string* detail) {
  double worst = 0.0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const DCPair p = corpus_pair(seed);
    const DCPair back = saddle_to_dc(from_dc(p));
    for (const Vector& x :
         sample_sphere({p.dim(), 500, 2000 + seed, SphereScheme::kUniformRandom})) {
      worst = std::max(worst, std::abs(eval_dc(back, x) - eval_dc(p, x)));
    }
  }
  std::ostringstream os;
  os << "max round-trip deviation " << worst << " over 100 pairs x 500 points";
  *detail = os.str();
  return worst <= 1e-9;
}

bool criterion4(std::string* detail) {
  const SaddleFamily F(
      1, 2, 2,
      {Vector({1.0}), Vector({-1.0}), Vector({-1.0}), Vector({1.0})});
  const SaddleReport r =
      verify_saddle(F, {1, 64, 0, SphereScheme::kUniformRandom});
  std::ostringstream os;
  os << "max_gap " << r.max_gap << " at witness " << to_string(r.witness);
  *detail = os.str();
  return !r.is_saddle && std::abs(r.max_gap - 2.0) <= 1e-12 &&
         std::abs(std::abs(r.witness[0]) - 1.0) <= 1e-12;
}

bool criterion5(std::string* detail) {
  for (uint64_t k = 0; k < 50; ++k) {
    const int n = 2 + static_cast<int>(k % 2);
    const DCPair p = random_dc(500 + k, n, 6, 6, 5.0);
    const SaddleFamily F = from_dc(p);
    const SphereSampler cover{n, 3600, k,
                              n == 2 ? SphereScheme::kAngularGrid
                                     : SphereScheme::kLowDiscrepancy};
    const FamilyExtrema ex = brute_force_extrema(F, cover);

    const SignDecision nn = check_nonnegative(F);
    if (ex.min_value < -1e-6 && nn.holds) {
      *detail = "nonnegative=yes but oracle min " + std::to_string(ex.min_value) +
                " at case " + std::to_string(k);
      return false;
    }
    if (nn.holds && ex.min_value < -1e-7) {
      *detail = "oracle min below -1e-7 after yes at case " + std::to_string(k);
      return false;
    }
    const SignDecision np = check_nonpositive(F);
    if (ex.max_value > 1e-6 && np.holds) {
      *detail = "nonpositive=yes but oracle max " + std::to_string(ex.max_value) +
                " at case " + std::to_string(k);
      return false;
    }
    if (np.holds && ex.max_value > 1e-7) {
      *detail = "oracle max above 1e-7 after yes at case " + std::to_string(k);
      return false;
    }
  }
  *detail = "sign tests agree with the 3600-sample oracle on 50 families";
  return true;
}

bool criterion6(std::string* detail) {
  // Random 2d grids with small coordinates (the 3600-point angular grid
  // then resolves every kink of the envelope to better than 1e-3), kept
  // when at least one row hull clearly excludes the origin.
  int accepted = 0;
  double worst = 0.0;
  uint64_t seed = 3000;
  while (accepted < 25) {
    SplitMix64 rng(seed++);
    const int rows = 1 + static_cast<int>(rng.next() % 4);
    const int cols = 1 + static_cast<int>(rng.next() % 4);
    std::vector<Vector> entries;
    for (int i = 0; i < rows * cols; ++i) {
      entries.push_back(Vector({rng.next_symmetric(0.35), rng.next_symmetric(0.35)}));
    }
    const SaddleFamily F(2, rows, cols, std::move(entries));
    bool clear_row = false;
    for (int i = 0; i < rows; ++i) {
      if (nearest_point_origin(F.row_points(i)).distance > 0.05) {
        clear_row = true;
        break;
      }
    }
    if (!clear_row) continue;
    ++accepted;

    const DirectionReport r = steepest_descent(F);
    if (r.approximate) {
      *detail = "unexpected sampled fallback at seed " + std::to_string(seed - 1);
      return false;
    }
    const FamilyExtrema ex =
        brute_force_extrema(F, {2, 3600, 0, SphereScheme::kAngularGrid});
    const double dev = std::abs(r.value - ex.min_value);
    worst = std::max(worst, dev);
    if (dev > 1e-3 || eval_infsup(F, r.direction) > ex.min_value + 1e-3) {
      *detail = "descent deviates by " + std::to_string(dev) + " at seed " +
                std::to_string(seed - 1);
      return false;
    }
  }
  std::ostringstream os;
  os << "25 descent reports within " << worst << " of the dense search";
  *detail = os.str();
  return true;
}

bool criterion7(std::string* detail) {
  double worst = -1e300;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const DCPair p = corpus_pair(seed);
    const SaddleFamily F = from_dc(p);
    const double m = lipschitz_constant(F).value;
    for (const Vector& x : corpus_samples(seed, p.dim(), 500)) {
      worst = std::max(worst, std::abs(eval_infsup(F, x)) - m * norm(x));
    }
  }
  std::ostringstream os;
  os << "max |p(x)| - M|x| = " << worst;
  *detail = os.str();
  return worst <= 1e-12;
}

bool criterion8(std::string* detail) {
  double worst_min = 0.0;
  double worst_red = 0.0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const DCPair p = corpus_pair(seed);
    const MaxOfLinear plus_red(minimal_generators(p.plus().generators()));
    const MaxOfLinear minus_red(minimal_generators(p.minus().generators()));
    const SaddleFamily F = from_dc(p);
    const SaddleFamily R = reduce(F);
    for (const Vector& x : corpus_samples(seed, p.dim(), 500)) {
      worst_min = std::max(
          {worst_min,
           std::abs(eval_sublinear(p.plus(), x) - eval_sublinear(plus_red, x)),
           std::abs(eval_sublinear(p.minus(), x) - eval_sublinear(minus_red, x))});
      worst_red = std::max({worst_red,
                            std::abs(eval_infsup(F, x) - eval_infsup(R, x)),
                            std::abs(eval_supinf(F, x) - eval_supinf(R, x))});
    }
  }
  std::ostringstream os;
  os << "generator reduction deviation " << worst_min
     << ", family reduction deviation " << worst_red;
  *detail = os.str();
  return worst_min <= 1e-12 && worst_red <= 1e-7;
}

int run_cli(const std::string& command) {
  const int status = std::system(command.c_str());
  if (status < 0) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool criterion9(const std::string& cli, std::string* detail) {
  // Round trips for 20 generated documents of each kind.
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 1 + static_cast<int>(seed % 5);
    const DCPair p = random_dc(seed, n, 6, 6, 5.0);
    const Document dc_doc = make_dc_document(
        p, "case-" + std::to_string(seed), "generated \"round trip\" fixture");
    if (parse_document(serialize_document(dc_doc)) != dc_doc) {
      *detail = "dc round trip failed at seed " + std::to_string(seed);
      return false;
    }
    const SaddleFamily F = from_dc(p);
    const Document sd = make_saddle_document(F);
    if (parse_document(serialize_document(sd)) != sd) {
      *detail = "saddle round trip failed at seed " + std::to_string(seed);
      return false;
    }
    const Document fd = make_families_document(families_of(F));
    if (parse_document(serialize_document(fd)) != fd) {
      *detail = "families round trip failed at seed " + std::to_string(seed);
      return false;
    }
  }

  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() /
      ("saddlecalc-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path dc_file = dir / "abs.dc.json";
  const fs::path saddle_file = dir / "abs.saddle.json";
  const fs::path bad_file = dir / "counterexample.saddle.json";
  const fs::path broken_file = dir / "broken.json";

  {
    std::ofstream out(dc_file);
    out << serialize_document(make_dc_document(
        DCPair(MaxOfLinear(PointSet({Vector({1.0}), Vector({-1.0})})),
               MaxOfLinear(PointSet({Vector({0.0})}))),
        "abs"));
  }
  {
    std::ofstream out(bad_file);
    out << serialize_document(make_saddle_document(SaddleFamily(
        1, 2, 2,
        {Vector({1.0}), Vector({-1.0}), Vector({-1.0}), Vector({1.0})})));
  }
  {
    std::ofstream out(broken_file);
    out << "{ this is not json\n";
  }

  bool ok = true;
  std::string why;
  const std::string q = "\"";
  if (run_cli(q + cli + q + " build-saddle " + dc_file.string() + " -o " +
              saddle_file.string()) != 0) {
    ok = false;
    why = "build-saddle on a dc input did not exit 0";
  }
  if (ok && run_cli(q + cli + q + " verify " + saddle_file.string() +
                    " > /dev/null") != 0) {
    ok = false;
    why = "verify on the built saddle did not exit 0";
  }
  if (ok && run_cli(q + cli + q + " verify " + bad_file.string() +
                    " > /dev/null") != 1) {
    ok = false;
    why = "verify on the counterexample did not exit 1";
  }
  if (ok && run_cli(q + cli + q + " info " + broken_file.string() +
                    " 2> /dev/null") != 2) {
    ok = false;
    why = "info on a broken file did not exit 2";
  }
  if (ok) {
    // A sign-indefinite function refutes both sign tests: exit 1.
    const fs::path valley_dc = dir / "halfvalley.dc.json";
    const fs::path valley_saddle = dir / "halfvalley.saddle.json";
    {
      std::ofstream out(valley_dc);
      out << serialize_document(make_dc_document(DCPair(
          MaxOfLinear(PointSet({Vector({1.0, 0.0}), Vector({-1.0, 0.0})})),
          MaxOfLinear(PointSet({Vector({0.0, 0.5}), Vector({0.0, -0.5})})))));
    }
    if (run_cli(q + cli + q + " build-saddle " + valley_dc.string() + " -o " +
                valley_saddle.string()) != 0 ||
        run_cli(q + cli + q + " sign " + valley_saddle.string() +
                " > /dev/null") != 1) {
      ok = false;
      why = "sign on an indefinite function did not exit 1";
    }
    const fs::path eval_out = dir / "eval.txt";
    if (ok && (run_cli(q + cli + q + " eval --at 0,0 " + valley_saddle.string() +
                       " > " + eval_out.string()) != 0 ||
               slurp(eval_out).find("infsup: 0\n") == std::string::npos)) {
      ok = false;
      why = "eval --at 0,0 did not report 0";
    }
  }
  if (ok) {
    // Identical invocations produce byte-identical reports.
    const fs::path out1 = dir / "report1.txt";
    const fs::path out2 = dir / "report2.txt";
    run_cli(q + cli + q + " verify --json " + saddle_file.string() + " > " +
            out1.string());
    run_cli(q + cli + q + " verify --json " + saddle_file.string() + " > " +
            out2.string());
    if (slurp(out1) != slurp(out2) || slurp(out1).empty()) {
      ok = false;
      why = "verify reports are not byte-identical across invocations";
    }
  }
  fs::remove_all(dir);
  *detail = ok ? "round trips and CLI pipeline exit codes all check out" : why;
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-saddlecalc-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];

  const std::vector<Criterion> criteria = {
      {1, "difference construction realizes both orders", criterion1},
      {2, "separation construction sandwiches and matches", criterion2},
      {3, "leave-one-out decomposition round trip", criterion3},
      {4, "non-saddle grid detected with exact gap 2", criterion4},
      {5, "sign tests agree with the dense oracle", criterion5},
      {6, "steepest descent matches dense angular search", criterion6},
      {7, "entry-norm bound dominates the function", criterion7},
      {8, "reductions preserve sampled evaluations", criterion8},
      {9, "document round trips and CLI pipeline",
       [&cli](std::string* d) { return criterion9(cli, d); }},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool pass = false;
    try {
      pass = c.run(&detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %d (%s): %s\n", pass ? "PASS" : "FAIL", c.id,
                c.summary.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  if (failures == 0) {
    std::printf("all %zu criteria passed\n", criteria.size());
  } else {
    std::printf("%d criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
