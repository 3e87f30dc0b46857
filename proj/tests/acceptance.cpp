// Acceptance gate. Prints one PASS/FAIL line per criterion.
// Usage: acceptance [--criterion N]

#include "cobweb/cli.hpp"
#include "cobweb/cobweb_poset.hpp"
#include "cobweb/diagonal.hpp"
#include "cobweb/dobinski.hpp"
#include "cobweb/fnomial.hpp"
#include "cobweb/json_io.hpp"
#include "cobweb/layer_grid.hpp"
#include "cobweb/sequence.hpp"
#include "cobweb/tiling.hpp"

#include "oracles.hpp"
#include "tiling_cases.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

using namespace cobweb;

namespace {

// Pinned limits.
constexpr double kLimitMatrix = 1.0;       // criterion 1, seconds
constexpr double kLimitMobius = 10.0;      // criterion 2
constexpr double kLimitFactorial = 30.0;   // criterion 3
constexpr double kLimitFalling = 5.0;      // criterion 4
constexpr double kLimitGridChains = 10.0;  // criterion 8
constexpr double kLimitTiling = 60.0;      // criterion 10, per instance
constexpr double kLimitDobinski = 1.0;     // criterion 11
constexpr double kDobinskiTolerance = 1e-9;
constexpr std::size_t kMobiusVertexCap = 200;
constexpr std::uint64_t kEnumerationCap = 200'000;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void check_time(Outcome& o, const Stopwatch& w, double limit, const std::string& what) {
  if (w.seconds() >= limit) {
    std::ostringstream ss;
    ss << what << " took " << w.seconds() << " s, limit " << limit << " s";
    o.fail(ss.str());
  }
}

std::vector<std::vector<std::string>> matrix_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> row;
    std::string cell;
    while (ls >> cell) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::uint64_t> level_sizes(const CobwebPoset& p) {
  std::vector<std::uint64_t> s;
  for (std::size_t l = 0; l <= p.max_level(); ++l) s.push_back(p.level_size(l));
  return s;
}

Outcome criterion_1() {
  Outcome o;
  const Stopwatch w;
  std::ostringstream out, err;
  const int status = run_cli({"zeta", "fib", "--levels", "6", "--size", "16"}, out, err);
  check_time(o, w, kLimitMatrix, "zeta");
  if (status != kExitOk) {
    o.fail("cli exit " + std::to_string(status) + ": " + err.str());
    return o;
  }
  std::ifstream in(COBWEB_FIXTURE_DIR "/zeta_fib_16_reference.txt");
  std::stringstream ref;
  ref << in.rdbuf();
  const auto got = matrix_rows(out.str());
  const auto want = matrix_rows(ref.str());
  if (got.size() != 16 || want.size() != 16) {
    o.fail("expected 16 rows, got " + std::to_string(got.size()) + " and reference " +
           std::to_string(want.size()));
    return o;
  }
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j)
      if (got[i].at(j) != want[i].at(j)) {
        o.fail("cell (" + std::to_string(i) + "," + std::to_string(j) + ") computed " +
               got[i][j] + ", reference " + want[i][j]);
      }
  if (o.pass) o.detail = "256 cells identical";
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const Stopwatch w;
  std::size_t checked = 0;
  for (const auto& seq : Sequence::builtins()) {
    // Largest truncation with at most kMobiusVertexCap vertices.
    std::size_t levels = 0;
    BigInt count = 1;
    while (true) {
      BigInt next = count + seq.value(levels + 1);
      if (next > kMobiusVertexCap) break;
      count = next;
      ++levels;
    }
    const CobwebPoset p = CobwebPoset::build(seq, levels);
    const IncidenceMatrix z = zeta_matrix(p, kMobiusVertexCap);
    const IncidenceMatrix mu = mobius_matrix(p, kMobiusVertexCap);
    const std::size_t size = z.order.size();
    if (!(z.entries * mu.entries == SquareMatrix::identity(size)))
      o.fail(seq.name() + ": zeta * mu != I at " + std::to_string(size) + " vertices");
    ++checked;
  }
  check_time(o, w, kLimitMobius, "all sequences");
  if (o.pass) o.detail = std::to_string(checked) + " sequences, zeta * mu = I exactly";
  return o;
}

Outcome criterion_3() {
  Outcome o;
  const Stopwatch w;
  for (const char* spec : {"nat", "fib", "const:1", "gauss:2"}) {
    const Sequence seq = Sequence::parse(spec);
    const FNomialTable table(seq, 7);
    const CobwebPoset p = CobwebPoset::build(seq, 7);
    const oracle::HasseGraph g(level_sizes(p));
    for (std::size_t n = 0; n <= 7; ++n) {
      const BigInt dfs = g.count_chains(0, n);
      MaxChainCursor cursor(p, 0, n, std::numeric_limits<std::uint64_t>::max());
      LevelChain chain;
      std::uint64_t listed = 0;
      while (cursor.next(chain)) ++listed;
      if (dfs != table.f_factorial(n) || BigInt(listed) != table.f_factorial(n))
        o.fail(std::string(spec) + " n=" + std::to_string(n) + ": dfs " + dfs.str() +
               ", enumerated " + std::to_string(listed) + ", n_F! " +
               table.f_factorial(n).str());
    }
  }
  check_time(o, w, kLimitFactorial, "chain enumeration");
  if (o.pass) o.detail = "DFS and enumeration equal n_F! for 4 sequences, n <= 7";
  return o;
}

Outcome criterion_4() {
  Outcome o;
  const Stopwatch w;
  std::size_t pairs = 0, enumerated = 0;
  std::string used;
  for (const auto& seq : Sequence::builtins()) {
    if (!check_cobweb_admissible(seq, 20).admissible()) continue;
    used += (used.empty() ? "" : ",") + seq.name();
    const FNomialTable t(seq, 20);
    const CobwebPoset p = CobwebPoset::build(seq, 20);
    for (std::size_t n = 0; n <= 20; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        const std::size_t m = n - k;
        const BigInt falling = t.falling(n, m);
        if (t.fnomial_integer(n, k) * t.f_factorial(m) != falling)
          o.fail(seq.name() + ": identity fails at n=" + std::to_string(n) + " k=" +
                 std::to_string(k));
        // Chains through levels k+1..n.
        if (m > 0) {
          const BigInt chains = count_max_chains(p, k + 1, n);
          if (chains <= kEnumerationCap) {
            if (BigInt(enumerate_max_chains(p, k + 1, n, kEnumerationCap).size()) != falling)
              o.fail(seq.name() + ": enumerated chains differ at n=" + std::to_string(n) +
                     " k=" + std::to_string(k));
            ++enumerated;
          } else if (chains != falling) {
            o.fail(seq.name() + ": chain count differs at n=" + std::to_string(n) + " k=" +
                   std::to_string(k));
          }
        }
        ++pairs;
      }
  }
  check_time(o, w, kLimitFalling, "all pairs");
  if (o.pass)
    o.detail = std::to_string(pairs) + " pairs on " + used + "; " + std::to_string(enumerated) +
               " layers enumerated, the rest counted";
  return o;
}

Outcome criterion_5() {
  Outcome o;
  for (const char* spec : {"nat", "fib", "gauss:2", "gauss:3", "const:1", "const:2", "const:3",
                           "const:7", "const:12"}) {
    const auto v = check_cobweb_admissible(Sequence::parse(spec), 20);
    if (!v.admissible()) o.fail(std::string(spec) + " reported not admissible");
  }
  const auto v = check_cobweb_admissible(Sequence::parse("list:[2,3,4,5]"), 4);
  if (v.admissible()) {
    o.fail("list:[2,3,4,5] reported admissible");
  } else {
    const auto& f = *v.first_failure;
    if (f.n != 2 || f.k != 1 || f.numerator != 3 || f.denominator != 2)
      o.fail("list:[2,3,4,5] first failure (" + std::to_string(f.n) + "," + std::to_string(f.k) +
             ") = " + f.numerator.str() + "/" + f.denominator.str());
  }
  if (o.pass) o.detail = "built-ins admissible to N=20; list:[2,3,4,5] fails at (2,1) = 3/2";
  return o;
}

Outcome criterion_6() {
  Outcome o;
  if (!check_gcd_morphic(Sequence::fibonacci(), 30).morphic())
    o.fail("fib reported not GCD-morphic up to 30");
  const auto v = check_gcd_morphic(Sequence::parse("list:[2,3,4]"), 3);
  const std::pair<std::size_t, std::size_t> target{3, 2};
  if (v.morphic()) {
    o.fail("list:[2,3,4] reported GCD-morphic");
  } else if (std::find(v.failing_pairs.begin(), v.failing_pairs.end(), target) ==
             v.failing_pairs.end()) {
    o.fail("(3,2) not among the failing pairs");
  }
  if (o.pass) {
    const auto& f = *v.first_failure;
    o.detail = "fib morphic to 30; list:[2,3,4] fails at (3,2), gcd(4,3)=1 vs F_1=2 "
               "(first failure in row-major order: (" +
               std::to_string(f.n) + "," + std::to_string(f.m) + "))";
  }
  return o;
}

Outcome criterion_7() {
  Outcome o;
  for (std::size_t n = 0; n <= 12; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      const BigInt brute = oracle::grid_elements(k, n).size();
      const BigInt formula = BigInt(n - k) * (k + 1) + BigInt(k * (k + 1) / 2);
      const BigInt size = grid_size(k, n);
      BigInt whitney = 0;
      for (const auto& w : whitney_rows(k, n).second_kind) whitney += w;
      if (size != brute || size != formula || whitney != size || bell_like(k, n) != size)
        o.fail("k=" + std::to_string(k) + " n=" + std::to_string(n) + ": size " + size.str() +
               ", brute " + brute.str() + ", formula " + formula.str() + ", whitney sum " +
               whitney.str());
    }
  if (o.pass) o.detail = "91 grids: size, formula, brute force and whitney sum agree";
  return o;
}

Outcome criterion_8() {
  Outcome o;
  const Stopwatch w;
  const std::vector<int> catalan{1, 2, 5, 14, 42};
  for (std::size_t n = 2; n <= 6; ++n) {
    const BigInt brute = oracle::grid_maximal_chains(n, n);
    if (brute != catalan[n - 2] || count_grid_max_chains(n, n) != brute)
      o.fail("diagonal n=" + std::to_string(n) + ": " + brute.str());
  }
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      const BigInt brute = oracle::grid_maximal_chains(k, n);
      const BigInt ballot = ballot_number(std::min(k, n - 1), n - 1);
      if (brute != ballot || count_grid_max_chains(k, n) != brute)
        o.fail("k=" + std::to_string(k) + " n=" + std::to_string(n) + ": brute " + brute.str() +
               ", ballot " + ballot.str());
    }
  std::ifstream readme(COBWEB_SOURCE_DIR "/README.md");
  std::stringstream text;
  text << readme.rdbuf();
  if (text.str().find("Maximal chains of the layer grid") == std::string::npos)
    o.fail("README does not document the chain-count closed form");
  check_time(o, w, kLimitGridChains, "grid chains");
  if (o.pass) o.detail = "Catalan 1,2,5,14,42 on the diagonal; ballot numbers for k <= n <= 10";
  return o;
}

Outcome criterion_9() {
  Outcome o;
  const auto bells = diagonal_bell_sequence(Sequence::natural(), 25);
  for (std::size_t n = 0; n <= 25; ++n)
    if (bells[n] != oracle::fib(n + 1))
      o.fail("B_" + std::to_string(n) + "(nat) = " + bells[n].str());
  const Sequence fib = Sequence::fibonacci();
  for (std::size_t n = 0; n <= 15; ++n)
    for (std::size_t k = 0; 2 * k <= n; ++k) {
      const auto r = oracle::fnomial_rational(oracle::fib, n - k, k);
      if (denominator(r) != 1 || diagonal_whitney(n, k, fib) != numerator(r))
        o.fail("whitney(" + std::to_string(n) + "," + std::to_string(k) + ",fib)");
    }
  if (o.pass) o.detail = "B_n(nat) = Fib(n+1) for n <= 25; fib whitney numbers for n <= 15";
  return o;
}

Outcome criterion_10() {
  Outcome o;
  std::size_t instances = 0;
  double slowest = 0;
  for (const auto& c : tiling_cases()) {
    const Stopwatch w;
    const std::string label = c.sequence + " k=" + std::to_string(c.k) + " n=" + std::to_string(c.n);
    std::ifstream in(std::string(COBWEB_FIXTURE_DIR "/tiling/") + fixture_name(c));
    if (!in) {
      o.fail(label + ": missing fixture");
      continue;
    }
    const Json fx = Json::parse(in);
    const TilingInstance inst = TilingInstance::build(Sequence::parse(c.sequence), c.k, c.n);
    const PartitionResult serial = exists_partition(inst, {1});
    const PartitionResult parallel = exists_partition(inst, {4});
    const PartitionCount count_serial = count_partitions(inst, 0, {1});
    const PartitionCount count_parallel = count_partitions(inst, 0, {4});
    if (serial.verdict != Verdict::Yes || !serial.witness) o.fail(label + ": no partition found");
    for (const auto* r : {&serial, &parallel})
      if (r->witness && !verify_partition(inst, *r->witness)) o.fail(label + ": witness rejected");
    if (serial.verdict != parallel.verdict || serial.witness != parallel.witness)
      o.fail(label + ": serial and parallel disagree");
    if (count_serial.count != count_parallel.count || count_serial.inconclusive)
      o.fail(label + ": counts disagree");
    const auto stamped = fx.at("all").at("partitions").get<std::uint64_t>();
    if (count_serial.count != stamped)
      o.fail(label + ": count " + std::to_string(count_serial.count) + ", fixture " +
             std::to_string(stamped));
    check_time(o, w, kLimitTiling, label);
    slowest = std::max(slowest, w.seconds());
    ++instances;
  }
  if (o.pass) {
    std::ostringstream ss;
    ss << instances << " instances partitioned and verified, serial = parallel, slowest "
       << slowest << " s";
    o.detail = ss.str();
  }
  return o;
}

Outcome criterion_11() {
  Outcome o;
  const Stopwatch w;
  BigFloat worst = 0;
  for (std::size_t n = 0; n <= 15; ++n) {
    const DobinskiResult d = bell_dobinski(n, kDobinskiTolerance);
    const BigFloat exact(bell_exact(n));
    const BigFloat rel = abs(d.value - exact) / exact;
    worst = std::max(worst, rel);
    if (rel > BigFloat(kDobinskiTolerance))
      o.fail("n=" + std::to_string(n) + " relative error " + rel.str(3, std::ios_base::scientific));
  }
  check_time(o, w, kLimitDobinski, "dobinski");
  if (o.pass) o.detail = "worst relative error " + worst.str(3, std::ios_base::scientific);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{
      criterion_1, criterion_2, criterion_3, criterion_4,  criterion_5, criterion_6,
      criterion_7, criterion_8, criterion_9, criterion_10, criterion_11};

  std::size_t only = 0;
  if (argc == 3 && std::string(argv[1]) == "--criterion") {
    only = std::stoul(argv[2]);
    if (only < 1 || only > criteria.size()) {
      std::cerr << "criterion must be 1.." << criteria.size() << '\n';
      return 2;
    }
  } else if (argc != 1) {
    std::cerr << "usage: acceptance [--criterion N]\n";
    return 2;
  }

  int failures = 0;
  for (std::size_t i = 1; i <= criteria.size(); ++i) {
    if (only && i != only) continue;
    Outcome o;
    const Stopwatch w;
    try {
      o = criteria[i - 1]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i << ": " << o.detail << " ["
              << std::fixed << std::setprecision(3) << w.seconds() << " s]" << std::defaultfloat
              << '\n';
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
