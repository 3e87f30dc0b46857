#include "cobweb/cli.hpp"

#include "cobweb/cobweb_poset.hpp"
#include "cobweb/diagonal.hpp"
#include "cobweb/dobinski.hpp"
#include "cobweb/errors.hpp"
#include "cobweb/fnomial.hpp"
#include "cobweb/json_io.hpp"
#include "cobweb/layer_grid.hpp"
#include "cobweb/sequence.hpp"
#include "cobweb/tiling.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ios>
#include <ostream>

namespace cobweb {

namespace {

struct Request {
  std::string format = "text";
  std::string seq;
  std::size_t n = 0, k = 0;
  std::size_t max = 0;
  std::size_t levels = 0;
  std::size_t size = 0;
  std::size_t from = 0, to = 0;
  std::size_t length = 0;
  bool enumerate = false;
  bool whitney = false, bell = false, maxchains = false;
  bool triangle = false;
  bool count = false, witness = false, canonical = false, candidates = false;
  std::string sigma = "all";
  unsigned jobs = 1;
  std::uint64_t cap = 0;
  std::uint64_t budget = 0;
  std::uint64_t max_universe = TilingBudget{}.max_universe;
  std::uint64_t max_blocks = TilingBudget{}.max_blocks;
  std::string verify_file;
  double dobinski_tol = 0;
};

std::uint64_t default_budget(std::uint64_t fallback) {
  const char* env = std::getenv(kBudgetEnv);
  if (!env || !*env) return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw CLI::ValidationError(std::string(kBudgetEnv) + " must be a nonnegative integer, got '" +
                               env + "'");
  }
}

void print_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

Json base_doc(const char* command) {
  Json doc;
  doc["command"] = command;
  return doc;
}

std::string chain_text(const LevelChain& chain, std::size_t from) {
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) s += ' ';
    s += to_string(Vertex{chain[i], from + i});
  }
  return s;
}

int cmd_fnomial(const Request& r, std::ostream& out) {
  const FNomialTable table(Sequence::parse(r.seq), r.n);
  const BigInt value = table.fnomial_integer(r.n, r.k);
  if (r.format == "json") {
    Json doc = base_doc("fnomial");
    doc["sequence"] = r.seq;
    doc["n"] = r.n;
    doc["k"] = r.k;
    doc["value"] = to_json(value);
    print_json(out, doc);
  } else {
    out << value << '\n';
  }
  return kExitOk;
}

int cmd_admissible(const Request& r, std::ostream& out) {
  const Sequence seq = Sequence::parse(r.seq);
  const AdmissibilityVerdict v = check_cobweb_admissible(seq, r.max);
  if (r.format == "json") {
    Json doc = base_doc("admissible");
    doc["sequence"] = seq.name();
    doc["bound"] = v.bound;
    doc["admissible"] = v.admissible();
    doc["admissible_up_to"] = v.admissible_up_to;
    if (v.first_failure) {
      doc["first_failure"] = {{"n", v.first_failure->n},
                              {"k", v.first_failure->k},
                              {"numerator", to_json(v.first_failure->numerator)},
                              {"denominator", to_json(v.first_failure->denominator)}};
    } else {
      doc["first_failure"] = nullptr;
    }
    print_json(out, doc);
  } else if (v.admissible()) {
    out << "yes: admissible for 0 <= k <= n <= " << v.bound << '\n';
  } else {
    const auto& f = *v.first_failure;
    out << "no: (" << f.n << " " << f.k << ")_F = " << f.numerator << "/" << f.denominator
        << "; admissible up to " << v.admissible_up_to << '\n';
  }
  return kExitOk;
}

int cmd_gcdmorphic(const Request& r, std::ostream& out) {
  const Sequence seq = Sequence::parse(r.seq);
  if (r.max < 1) throw CLI::ValidationError("--max must be at least 1");
  const GcdVerdict v = check_gcd_morphic(seq, r.max);
  if (r.format == "json") {
    Json doc = base_doc("gcdmorphic");
    doc["sequence"] = seq.name();
    doc["bound"] = v.bound;
    doc["morphic"] = v.morphic();
    doc["morphic_up_to"] = v.morphic_up_to;
    if (v.first_failure) {
      doc["first_failure"] = {{"n", v.first_failure->n},
                              {"m", v.first_failure->m},
                              {"gcd", to_json(v.first_failure->gcd_of_values)},
                              {"value_at_gcd", to_json(v.first_failure->value_at_gcd)}};
    } else {
      doc["first_failure"] = nullptr;
    }
    doc["failing_pairs"] = v.failing_pairs;
    print_json(out, doc);
  } else if (v.morphic()) {
    out << "yes: GCD(F_n,F_m) = F_GCD(n,m) for 1 <= m <= n <= " << v.bound << '\n';
  } else {
    const auto& f = *v.first_failure;
    out << "no: GCD(F_" << f.n << ",F_" << f.m << ") = " << f.gcd_of_values << " but F_gcd = "
        << f.value_at_gcd << "; " << v.failing_pairs.size() << " failing pair(s)\n";
  }
  return kExitOk;
}

int cmd_matrix(const Request& r, std::ostream& out, bool mobius) {
  const CobwebPoset poset = CobwebPoset::build(Sequence::parse(r.seq), r.levels);
  const IncidenceMatrix m = mobius ? mobius_matrix(poset) : zeta_matrix(poset);
  if (r.size > m.order.size())
    throw Error("--size " + std::to_string(r.size) + " exceeds the " +
                std::to_string(m.order.size()) + " vertices of this poset");
  if (r.format == "json") {
    Json doc = base_doc(mobius ? "mobius" : "zeta");
    doc["sequence"] = poset.sequence().name();
    doc["levels"] = r.levels;
    const Json body = matrix_json(m, r.size);
    doc["order"] = body["order"];
    doc["matrix"] = body["matrix"];
    print_json(out, doc);
  } else {
    write_matrix(out, m, r.size);
  }
  return kExitOk;
}

int cmd_chains(const Request& r, std::ostream& out) {
  const CobwebPoset poset = CobwebPoset::build(Sequence::parse(r.seq), r.to);
  const BigInt count = count_max_chains(poset, r.from, r.to);
  std::vector<LevelChain> chains;
  if (r.enumerate)
    chains = enumerate_max_chains(poset, r.from, r.to, default_budget(kDefaultEnumerationBudget));
  std::optional<BigInt> of_length;
  if (r.length) of_length = count_chains_of_length(poset, r.length);

  if (r.format == "json") {
    Json doc = base_doc("chains");
    doc["sequence"] = poset.sequence().name();
    doc["from"] = r.from;
    doc["to"] = r.to;
    doc["count"] = to_json(count);
    if (r.enumerate) doc["chains"] = chains;
    if (of_length) doc["chains_of_length"] = {{"t", r.length}, {"count", to_json(*of_length)}};
    print_json(out, doc);
  } else {
    out << count << '\n';
    for (const auto& c : chains) out << chain_text(c, r.from) << '\n';
    if (of_length) out << "chains with " << r.length << " elements: " << *of_length << '\n';
  }
  return kExitOk;
}

int cmd_grid(const Request& r, std::ostream& out) {
  const LayerGridPoset grid(r.k, r.n);
  const bool json = r.format == "json";
  Json doc = base_doc("grid");
  doc["k"] = r.k;
  doc["n"] = r.n;

  if (r.bell) {
    const BigInt b = bell_like(r.k, r.n);
    if (!json) out << b << '\n';
    doc["bell"] = to_json(b);
  }
  if (r.maxchains) {
    const BigInt d = count_grid_max_chains(r.k, r.n);
    if (!json) out << d << '\n';
    doc["max_chains"] = to_json(d);
  }
  if (r.whitney) {
    const WhitneyRows rows = whitney_rows(r.k, r.n);
    if (!json) {
      out << "# rank second_kind first_kind\n";
      for (std::size_t i = 0; i < rows.second_kind.size(); ++i)
        out << i << ' ' << rows.second_kind[i] << ' ' << rows.first_kind[i] << '\n';
    }
    doc["whitney_second"] = to_json(rows.second_kind);
    doc["whitney_first"] = to_json(rows.first_kind);
  }
  if (!r.bell && !r.maxchains && !r.whitney) {
    const BigInt size = grid_size(r.k, r.n);
    if (!json) {
      out << size << '\n';
      for (const auto& p : grid.elements())
        out << "(" << p.l << "," << p.m << ") rank " << LayerGridPoset::rank(p) << '\n';
    }
    doc["size"] = to_json(size);
    Json elements = Json::array();
    for (const auto& p : grid.elements()) elements.push_back({p.l, p.m});
    doc["elements"] = std::move(elements);
  }
  if (json) print_json(out, doc);
  return kExitOk;
}

int cmd_diagonal(const Request& r, std::ostream& out) {
  const Sequence seq = Sequence::parse(r.seq);
  const std::vector<BigInt> bells = diagonal_bell_sequence(seq, r.n);
  std::vector<std::vector<BigInt>> triangle;
  if (r.triangle) triangle = diagonal_whitney_triangle(seq, r.n);
  if (r.format == "json") {
    Json doc = base_doc("diagonal");
    doc["sequence"] = seq.name();
    doc["n"] = r.n;
    doc["bell"] = to_json(bells);
    if (r.triangle) {
      Json rows = Json::array();
      for (const auto& row : triangle) rows.push_back(to_json(row));
      doc["triangle"] = std::move(rows);
    }
    print_json(out, doc);
  } else if (r.triangle) {
    out << "# n: S(n,0,F) S(n,1,F) ...\n";
    for (std::size_t n = 0; n < triangle.size(); ++n) {
      out << n << ':';
      for (const auto& v : triangle[n]) out << ' ' << v;
      out << '\n';
    }
  } else {
    for (std::size_t n = 0; n < bells.size(); ++n) out << n << ' ' << bells[n] << '\n';
  }
  return kExitOk;
}

int cmd_tile(const Request& r, std::ostream& out, std::ostream& err) {
  const Sequence seq = Sequence::parse(r.seq);
  const TilingInstance inst = TilingInstance::build(seq, r.k, r.n, parse_sigma_policy(r.sigma),
                                                    {r.max_universe, r.max_blocks});
  const SolveOptions opts{r.jobs, r.budget, r.canonical};
  const bool json = r.format == "json";
  Json doc = base_doc("tile");
  doc["sequence"] = seq.name();
  doc["k"] = r.k;
  doc["n"] = r.n;
  doc["sigma"] = r.sigma;
  doc["universe"] = inst.universe().size();
  doc["blocks"] = inst.blocks().size();
  doc["block_chain_count"] = inst.block_chain_count();
  int status = kExitOk;

  if (!r.verify_file.empty()) {
    std::ifstream in(r.verify_file);
    if (!in) throw Error("cannot open witness file '" + r.verify_file + "'");
    Json file;
    try {
      file = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw ParseError("witness file is not valid JSON: " + std::string(e.what()));
    }
    const bool ok = verify_partition(inst, witness_from_json(file));
    doc["verified"] = ok;
    if (!json) out << (ok ? "valid" : "invalid") << '\n';
  } else if (r.count) {
    const PartitionCount c = count_partitions(inst, r.cap, opts);
    const char* kind = c.inconclusive ? "inconclusive" : c.at_least ? "at_least" : "exact";
    doc["count"] = std::to_string(c.count);
    doc["count_status"] = kind;
    if (!json) {
      if (c.inconclusive)
        out << "inconclusive: at least " << c.count << '\n';
      else if (c.at_least)
        out << ">=" << c.count << '\n';
      else
        out << c.count << '\n';
    }
    if (c.inconclusive) status = kExitInconclusive;
  } else {
    const PartitionResult p = exists_partition(inst, opts);
    doc["verdict"] = to_string(p.verdict);
    if (!json) out << to_string(p.verdict) << '\n';
    if (r.witness && p.witness) {
      doc["chains"] = inst.universe();
      doc["witness"] = witness_json(inst, *p.witness);
      if (!json) {
        for (auto id : *p.witness) {
          const Block& b = inst.blocks()[id];
          out << "block " << id << " root " << to_string(Vertex{b.root, inst.k()}) << " sizes";
          for (auto s : b.sizes) out << ' ' << s;
          out << " chains";
          for (auto c : b.chains) out << ' ' << c;
          out << '\n';
        }
      }
    }
    if (p.verdict == Verdict::Inconclusive) {
      err << "search budget exhausted before a verdict\n";
      status = kExitInconclusive;
    }
  }
  if (r.candidates) {
    const Json full = tiling_instance_json(inst, true);
    doc["chains"] = full["chains"];
    doc["candidates"] = full["blocks"];
  }
  if (json) print_json(out, doc);
  return status;
}

int cmd_bell_classic(const Request& r, std::ostream& out) {
  const BigInt exact = bell_exact(r.n);
  const bool json = r.format == "json";
  Json doc = base_doc("bell-classic");
  doc["n"] = r.n;
  doc["bell"] = to_json(exact);
  if (!json) out << exact << '\n';
  if (r.dobinski_tol > 0) {
    const DobinskiResult d = bell_dobinski(r.n, r.dobinski_tol);
    const BigFloat rel = boost::multiprecision::abs(d.value - BigFloat(exact)) / BigFloat(exact);
    const std::string approx = d.value.str(30, std::ios_base::fixed);
    const std::string rel_text = rel.str(3, std::ios_base::scientific);
    doc["dobinski"] = {{"approximation", approx},
                       {"relative_error", rel_text},
                       {"terms", d.terms},
                       {"tolerance", r.dobinski_tol}};
    if (!json) out << "dobinski " << approx << " relative_error " << rel_text << " terms "
                   << d.terms << '\n';
  }
  if (json) print_json(out, doc);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combinatorics of cobweb posets", "cobweb"};
  app.require_subcommand(1);
  app.fallthrough();  // accept --format after the subcommand
  Request r;
  app.add_option("--format", r.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* fn = app.add_subcommand("fnomial", "F-nomial coefficient (n k)_F");
  fn->add_option("seq", r.seq, "Sequence spec")->required();
  fn->add_option("n", r.n)->required();
  fn->add_option("k", r.k)->required();

  auto* adm = app.add_subcommand("admissible", "Bounded cobweb-admissibility check");
  adm->add_option("seq", r.seq, "Sequence spec")->required();
  adm->add_option("--max", r.max, "Check 0 <= k <= n <= N")->required();

  auto* gcd = app.add_subcommand("gcdmorphic", "Bounded GCD-morphism check");
  gcd->add_option("seq", r.seq, "Sequence spec")->required();
  gcd->add_option("--max", r.max, "Check 1 <= m <= n <= N")->required();

  auto* zeta = app.add_subcommand("zeta", "Incidence matrix zeta of P_L");
  zeta->add_option("seq", r.seq, "Sequence spec")->required();
  zeta->add_option("--levels", r.levels, "Truncation level L")->required();
  zeta->add_option("--size", r.size, "Print only the leading S x S block");

  auto* mob = app.add_subcommand("mobius", "Moebius matrix mu = zeta^-1 of P_L");
  mob->add_option("seq", r.seq, "Sequence spec")->required();
  mob->add_option("--levels", r.levels, "Truncation level L")->required();
  mob->add_option("--size", r.size, "Print only the leading S x S block");

  auto* ch = app.add_subcommand("chains", "Saturated chains between two levels");
  ch->add_option("seq", r.seq, "Sequence spec")->required();
  ch->add_option("--from", r.from, "Lowest level k")->required();
  ch->add_option("--to", r.to, "Highest level n")->required();
  ch->add_flag("--enumerate", r.enumerate, "List every chain");
  ch->add_option("--length", r.length, "Also count all chains with t elements in P_n");

  auto* grid = app.add_subcommand("grid", "Layer poset P_{k,n}");
  grid->add_option("k", r.k)->required();
  grid->add_option("n", r.n)->required();
  grid->add_flag("--whitney", r.whitney, "Whitney numbers of both kinds by rank");
  grid->add_flag("--bell", r.bell, "Bell-like number");
  grid->add_flag("--maxchains", r.maxchains, "Number of maximal chains");

  auto* diag = app.add_subcommand("diagonal", "Poset P(n,F): Bell-like numbers B_0..B_N");
  diag->add_option("seq", r.seq, "Sequence spec")->required();
  diag->add_option("--n", r.n, "Largest n")->required();
  diag->add_flag("--triangle", r.triangle, "Print the Whitney triangle S(n,k,F)");

  auto* tile = app.add_subcommand("tile", "Partition a layer into sigma P_m blocks");
  tile->add_option("seq", r.seq, "Sequence spec")->required();
  tile->add_option("k", r.k)->required();
  tile->add_option("n", r.n)->required();
  auto* count_flag = tile->add_flag("--count", r.count, "Count partitions");
  tile->add_flag("--witness", r.witness, "Print a witness partition")->excludes(count_flag);
  tile->add_option("--sigma", r.sigma, "Block arrangements")
      ->check(CLI::IsMember({"all", "identity"}))
      ->capture_default_str();
  tile->add_option("--jobs", r.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  tile->add_option("--cap", r.cap, "Stop counting at this many partitions (0: no cap)");
  tile->add_option("--budget", r.budget, "Search nodes per top-level branch (0: unlimited)");
  tile->add_option("--max-universe", r.max_universe, "Largest universe to enumerate");
  tile->add_option("--max-blocks", r.max_blocks, "Largest candidate block count");
  tile->add_flag("--canonical", r.canonical, "Report the lexicographically least witness");
  tile->add_flag("--candidates", r.candidates, "Include the universe and all candidate blocks");
  tile->add_option("--verify", r.verify_file, "Verify a witness JSON file instead of solving");

  auto* bc = app.add_subcommand("bell-classic", "Bell number B_n via Stirling numbers");
  bc->add_option("n", r.n)->required();
  bc->add_option("--dobinski", r.dobinski_tol, "Also sum the Dobinski series to this tolerance")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> argv_storage{"cobweb"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    r.budget = default_budget(SolveOptions{}.node_budget_per_branch);
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (fn->parsed()) return cmd_fnomial(r, out);
    if (adm->parsed()) return cmd_admissible(r, out);
    if (gcd->parsed()) return cmd_gcdmorphic(r, out);
    if (zeta->parsed()) return cmd_matrix(r, out, false);
    if (mob->parsed()) return cmd_matrix(r, out, true);
    if (ch->parsed()) return cmd_chains(r, out);
    if (grid->parsed()) return cmd_grid(r, out);
    if (diag->parsed()) return cmd_diagonal(r, out);
    if (tile->parsed()) return cmd_tile(r, out, err);
    if (bc->parsed()) return cmd_bell_classic(r, out);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kExitInconclusive;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace cobweb
