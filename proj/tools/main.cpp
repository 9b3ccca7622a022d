#include <holo/guess.hpp>
#include <holo/modint.hpp>
#include <holo/tspp.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

using namespace holo;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* kUsage = R"(usage: holo <subcommand> [flags]

subcommands:
  enumerate   --n <n>                   count the symmetric partitions in [0,n]^3
  det         --n-max <m>               determinant vs squared product formula
  identities  --n-max <m>               the cofactor identity suite, one CHECK per line
  guess       --table <path> [--shape I=..,K=..[,T=..]] [--primes p,..]
                                        fit recurrences to a data table
  groebner    --in <ops> --vars <v,..>  left basis of the generated ideal
  closure     --kind substitute|sum|apply --in <desc> [--in2 <desc>] [--op <text>]
              [--c <k>] --vars <v,..>   closure properties on descriptions
  telescope   --summand pascal|weighted|ones [--shape I=..,K=..,T=..]
                                        creative-telescoping certificate
  prove       [--summand pascal] [--n-max <m>] [--cap-seconds <s>] [--cap-bytes <b>]
                                        the end-to-end proof pipeline

common flags: --out <path>  --threads <k>  --primes <p,..>  --cap-seconds <s>  --cap-bytes <b>

exit codes: 0 success/proved, 1 a check failed, 2 usage error, 3 caps exceeded
)";

struct Args {
  std::string subcommand;
  std::map<std::string, std::string> flags;

  bool has(const std::string& k) const { return flags.count(k) != 0; }
  std::string get(const std::string& k, const std::string& dflt = "") const {
    auto it = flags.find(k);
    return it == flags.end() ? dflt : it->second;
  }
  long get_long(const std::string& k, long dflt) const {
    if (!has(k)) return dflt;
    try {
      std::size_t pos = 0;
      long v = std::stol(flags.at(k), &pos);
      if (pos != flags.at(k).size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw UsageError("flag --" + k + " needs an integer, got '" + flags.at(k) + "'");
    }
  }
  double get_double(const std::string& k, double dflt) const {
    if (!has(k)) return dflt;
    try {
      return std::stod(flags.at(k));
    } catch (const std::exception&) {
      throw UsageError("flag --" + k + " needs a number, got '" + flags.at(k) + "'");
    }
  }
  std::string require(const std::string& k) const {
    if (!has(k)) throw UsageError("missing required flag --" + k);
    return flags.at(k);
  }
};

const std::map<std::string, bool>& known_flags() {
  // flag -> takes a value
  static std::map<std::string, bool> f = {
      {"n", true},       {"n-max", true},       {"shape", true},  {"primes", true},
      {"cap-seconds", true}, {"cap-bytes", true}, {"table", true}, {"out", true},
      {"threads", true}, {"in", true},          {"in2", true},    {"op", true},
      {"c", true},       {"vars", true},        {"kind", true},   {"summand", true},
  };
  return f;
}

Args parse_args(int argc, char** argv) {
  Args a;
  if (argc < 2) throw UsageError("no subcommand given");
  a.subcommand = argv[1];
  for (int i = 2; i < argc; ++i) {
    std::string t = argv[i];
    if (t.rfind("--", 0) != 0) throw UsageError("unexpected argument '" + t + "'");
    std::string key = t.substr(2);
    auto it = known_flags().find(key);
    if (it == known_flags().end()) throw UsageError("unknown flag '" + t + "'");
    if (++i >= argc) throw UsageError("flag '" + t + "' needs a value");
    if (!a.flags.emplace(key, argv[i]).second)
      throw UsageError("flag '" + t + "' given twice");
  }
  return a;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<std::uint64_t> parse_primes(const std::string& s) {
  std::vector<std::uint64_t> out;
  for (const auto& p : split(s, ',')) {
    try {
      out.push_back(std::stoull(p));
    } catch (const std::exception&) {
      throw UsageError("bad prime '" + p + "' in --primes");
    }
  }
  if (out.empty()) throw UsageError("--primes needs at least one prime");
  return out;
}

// "I=1,K=1,T=0"; T is optional and defaults to I
AnsatzShape parse_shape(const std::string& s) {
  long I = -1, K = -1, T = -1;
  for (const auto& part : split(s, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError("bad --shape component '" + part + "'");
    std::string key = part.substr(0, eq);
    long v;
    try {
      v = std::stol(part.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("bad --shape value in '" + part + "'");
    }
    if (key == "I") I = v;
    else if (key == "K") K = v;
    else if (key == "T") T = v;
    else throw UsageError("unknown --shape key '" + key + "'");
  }
  if (I < 1 || K < 0) throw UsageError("--shape needs I>=1 and K>=0");
  return AnsatzShape::triangle(static_cast<int>(I), static_cast<int>(K),
                               static_cast<int>(T < 0 ? I : T));
}

OreAlgebra algebra_from(const std::string& vars_csv) {
  auto vars = split(vars_csv, ',');
  if (vars.empty()) throw UsageError("--vars needs at least one variable");
  return OreAlgebra{vars};
}

int hardware_threads() {
  unsigned k = std::thread::hardware_concurrency();
  return k == 0 ? 1 : static_cast<int>(k);
}

void parallel_for(long items, int threads, const std::function<void(long)>& fn) {
  if (threads <= 1 || items <= 1) {
    for (long x = 0; x < items; ++x) fn(x);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<long> next{0};
  for (int w = 0; w < std::min<long>(threads, items); ++w)
    pool.emplace_back([&] {
      for (long x = next.fetch_add(1); x < items; x = next.fetch_add(1)) fn(x);
    });
  for (auto& t : pool) t.join();
}

// table record format: indices then value per line; arity inferred from the
// first data line
SequenceTable read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open table file '" + path + "'");
  std::string line;
  std::streampos start = in.tellg();
  int arity = -1;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string tok;
    int fields = 0;
    while (row >> tok) ++fields;
    if (fields == 0) continue;
    if (fields < 2) throw std::runtime_error("table file: need indices and a value per line");
    arity = fields - 1;
    break;
  }
  if (arity < 1) throw std::runtime_error("table file: no data lines");
  in.clear();
  in.seekg(start);
  return SequenceTable::read(in, arity);
}

DFiniteDescription read_description_file(const std::string& path, const OreAlgebra& alg) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open description file '" + path + "'");
  return read_description(in, alg);
}

DFiniteDescription builtin_summand(const std::string& name) {
  OreAlgebra jn{{"j", "n"}};
  std::vector<std::string> gens;
  SequenceTable t(2);
  if (name == "pascal" || name == "weighted") {
    bool w = name == "weighted";
    gens = {w ? "(j+1)*Sj - 2*(n-j)" : "(j+1)*Sj - (n-j)", "(n+1-j)*Sn - (n+1)"};
    for (long n = 0; n <= 30; ++n)
      for (long j = 0; j <= 30; ++j)
        t.set({j, n}, Rat(binomial(n, j)) * (w ? rat_pow(Rat(2), j) : Rat(1)));
  } else if (name == "ones") {
    gens = {"Sj - 1", "Sn - 1"};
    for (long n = 0; n <= 30; ++n)
      for (long j = 0; j <= 30; ++j) t.set({j, n}, 1);
  } else {
    throw UsageError("unknown --summand '" + name + "' (pascal, weighted, ones)");
  }
  std::vector<OreOperator> ops;
  for (const auto& g : gens) ops.push_back(parse_operator(g, jn));
  return make_description(left_groebner_basis(std::move(ops), TermOrder{}), t);
}

int cmd_enumerate(const Args& a, std::ostream& out) {
  long n = a.get_long("n", -1);
  if (n < 0) throw UsageError("enumerate needs --n <nonnegative>");
  if (n > 6) throw CapExceeded("enumerate: n > 6 is past the practical brute-force cap");
  out << count_tspp_bruteforce(static_cast<int>(n)).get_str() << '\n';
  return 0;
}

int cmd_det(const Args& a, std::ostream& out, int threads) {
  long m = a.get_long("n-max", -1);
  if (m < 1) throw UsageError("det needs --n-max <positive>");
  std::vector<std::string> lines(m);
  std::atomic<bool> all_ok{true};
  parallel_for(m, threads, [&](long x) {
    int n = static_cast<int>(x + 1);
    Rat d = okada_det(n), v = holo::nice(n);
    bool ok = d == v * v;
    if (!ok) all_ok = false;
    lines[x] = std::to_string(n) + " " + rat_str(d) + " " + rat_str(v * v) +
               (ok ? " OK" : " FAIL");
  });
  for (const auto& l : lines) out << l << '\n';
  return all_ok ? 0 : 1;
}

int cmd_identities(const Args& a, std::ostream& out, int threads) {
  long m = a.get_long("n-max", -1);
  if (m < 1) throw UsageError("identities needs --n-max <positive>");
  auto rep = verify_identities(static_cast<int>(m), threads);
  rep.render(out);
  return rep.any_fail() ? 1 : 0;
}

int cmd_guess(const Args& a, std::ostream& out) {
  auto table = read_table_file(a.require("table"));
  OreAlgebra alg = table.arity() == 1 ? OreAlgebra{{"n"}}
                                      : algebra_from(a.get("vars", table.arity() == 2 ? "j,n" : ""));
  if (static_cast<int>(alg.arity()) != table.arity())
    throw UsageError("--vars count must match the table arity");
  long order = 1, deg = 1;
  if (a.has("shape")) {
    AnsatzShape sh = parse_shape(a.get("shape"));
    order = sh.order;
    deg = sh.jdeg;
  }
  std::vector<ShiftMonomial> structure;
  std::function<void(ShiftMonomial&, std::size_t, long)> rec = [&](ShiftMonomial& m,
                                                                   std::size_t i, long rest) {
    if (i == alg.arity()) {
      structure.push_back(m);
      return;
    }
    for (long e = 0; e <= rest; ++e) {
      m[i] = static_cast<int>(e);
      rec(m, i + 1, rest - e);
    }
    m[i] = 0;
  };
  ShiftMonomial m(alg.arity(), 0);
  rec(m, 0, order);
  GuessProblem gp{alg, table, structure, static_cast<int>(deg)};
  auto ops = a.has("primes") ? guess_recurrences_modular(gp, parse_primes(a.get("primes")))
                             : guess_recurrences(gp);
  for (const auto& o : ops) out << o.str() << '\n';
  if (ops.empty()) out << "# no recurrence of this shape fits the table\n";
  return 0;
}

int cmd_groebner(const Args& a, std::ostream& out) {
  OreAlgebra alg = algebra_from(a.get("vars", "n"));
  std::ifstream in(a.require("in"));
  if (!in) throw UsageError("cannot open operator file '" + a.get("in") + "'");
  auto ops = parse_operator_list(in, alg);
  if (ops.empty()) throw UsageError("operator file is empty");
  auto G = left_groebner_basis(std::move(ops), TermOrder{});
  write_basis(out, G);
  auto st = staircase(G);
  if (st.dfinite)
    out << "# standard monomials: " << st.under_the_stairs.size() << '\n';
  else
    out << "# staircase is not finite\n";
  return 0;
}

int cmd_closure(const Args& a, std::ostream& out) {
  OreAlgebra alg = algebra_from(a.get("vars", "n"));
  std::string kind = a.require("kind");
  auto D = read_description_file(a.require("in"), alg);
  DFiniteDescription result;
  if (kind == "substitute") {
    result = closure_substitute(D, a.get_long("c", 0));
  } else if (kind == "sum") {
    auto E = read_description_file(a.require("in2"), alg);
    result = closure_sum(D, E);
  } else if (kind == "apply") {
    result = closure_apply_operator(D, parse_operator(a.require("op"), alg));
  } else {
    throw UsageError("unknown --kind '" + kind + "' (substitute, sum, apply)");
  }
  write_description(out, result);
  return 0;
}

int cmd_telescope(const Args& a, std::ostream& out) {
  auto D = builtin_summand(a.get("summand", "pascal"));
  std::optional<AnsatzShape> start;
  if (a.has("shape")) start = parse_shape(a.get("shape"));
  // the given shape seeds the schedule; the search may widen it
  auto cert = telescope_search(D, start ? std::max(start->order + 2, 3) : 3,
                               start ? &*start : nullptr);
  if (!cert)
    throw CapExceeded("telescope: no certificate within the shape schedule");
  write_certificate(out, *cert);
  if (!verify_telescoper(*cert, D)) return 1;
  return 0;
}

int cmd_prove(const Args& a, std::ostream& out) {
  PipelineConfig cfg;
  cfg.scale = a.has("summand") ? PipelineScale::toy : PipelineScale::full;
  if (a.has("summand") && a.get("summand") != "pascal")
    throw UsageError("prove --summand supports only the toy summand 'pascal'");
  cfg.table_size = static_cast<int>(a.get_long("n-max", cfg.scale == PipelineScale::toy ? 12 : 16));
  cfg.cap_seconds = a.get_double("cap-seconds", 60.0);
  cfg.cap_bytes = static_cast<std::size_t>(a.get_long("cap-bytes", 256L << 20));
  auto rep = run_proof_pipeline(cfg);
  rep.render(out);
  out << "VERDICT " << rep.verdict() << '\n';
  if (rep.any_fail()) return 1;
  if (rep.any_skipped()) return 3;
  return 0;
}

int dispatch(int argc, char** argv) {
  Args a = parse_args(argc, argv);
  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (a.has("out")) {
    file_out.open(a.get("out"));
    if (!file_out) throw UsageError("cannot open output file '" + a.get("out") + "'");
    out = &file_out;
  }
  int threads = static_cast<int>(a.get_long("threads", hardware_threads()));
  if (threads < 1) throw UsageError("--threads must be positive");

  if (a.subcommand == "enumerate") return cmd_enumerate(a, *out);
  if (a.subcommand == "det") return cmd_det(a, *out, threads);
  if (a.subcommand == "identities") return cmd_identities(a, *out, threads);
  if (a.subcommand == "guess") return cmd_guess(a, *out);
  if (a.subcommand == "groebner") return cmd_groebner(a, *out);
  if (a.subcommand == "closure") return cmd_closure(a, *out);
  if (a.subcommand == "telescope") return cmd_telescope(a, *out);
  if (a.subcommand == "prove") return cmd_prove(a, *out);
  throw UsageError("unknown subcommand '" + a.subcommand + "'");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kUsage;
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    // file syntax errors carry line/column from the parser
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
