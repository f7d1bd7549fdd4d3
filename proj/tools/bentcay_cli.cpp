// Command-line front end for the bentcay library.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "bentcay/archive.hpp"
#include "bentcay/catalog.hpp"
#include "bentcay/codes.hpp"
#include "bentcay/equivalence.hpp"
#include "bentcay/errors.hpp"
#include "bentcay/ingest.hpp"
#include "bentcay/quadratic.hpp"
#include "bentcay/sequences.hpp"

namespace {

using namespace bentcay;

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerify = 4;

struct FunctionInput {
  std::string anf;
  int dim = 0;
  std::string name;

  void attach(CLI::App* cmd) {
    cmd->add_option("--anf", anf, "ANF text, e.g. \"x0*x1 + x2*x3\"");
    cmd->add_option("--dim", dim, "Number of variables");
    cmd->add_option("--name", name, "Catalog name such as f6_2 or cast128_1_0");
  }

  BooleanFunction load() const {
    if (!name.empty()) return named_function(name);
    if (anf.empty() || dim <= 0) throw CLI::ValidationError("give --name, or --anf together with --dim");
    return parse_anf(anf, dim);
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << data;
}

std::string srg_text(const std::optional<SrgParams>& p) {
  if (!p) return "not strongly regular";
  return "(" + std::to_string(p->v) + ", " + std::to_string(p->k) + ", " + std::to_string(p->lambda) + ", " +
         std::to_string(p->mu) + ")";
}

bool report(const std::string& label, bool ok) {
  std::cout << (ok ? "PASS " : "FAIL ") << label << '\n';
  return ok;
}

std::vector<std::string> representatives(int dim) {
  std::vector<std::string> names;
  for (const auto& entry : catalog()) {
    if (entry.n == dim && entry.name.rfind("f", 0) == 0) names.push_back(entry.name);
  }
  if (names.empty()) throw RangeError("no representatives in dimension " + std::to_string(dim));
  return names;
}

bool verify_quadratic(int m, bool full) {
  bool ok = true;
  if (m <= 3 || full) {
    ok = report("quadratic classes m=" + std::to_string(m), verify_quadratic_theorem(m));
  } else {
    std::cout << "SKIP quadratic classes m=" << m << " (full classification; pass --full)\n";
  }
  std::mt19937_64 rng(7);
  const BooleanFunction q = canonical_quadratic(m);
  bool q0 = true;
  bool q1 = true;
  std::vector<Point> odd;
  for (Point c = 0; c < q.size(); ++c) {
    if (q(c)) {
      odd.push_back(c);
    } else {
      const auto w = gl_witness_q0(m, c);
      q0 = q0 && validate_witness(m, w.a, 0, c, rng) && (w.a * w.a == BitMatrix::identity(w.a.rows()));
    }
  }
  for (Point c : odd) {
    for (Point c2 : odd) q1 = q1 && validate_witness(m, gl_witness_q1(m, c, c2), c, c2, rng);
  }
  ok &= report("q(c)=0 witnesses m=" + std::to_string(m), q0);
  ok &= report("q(c)=1 witnesses m=" + std::to_string(m), q1);
  return ok;
}

bool verify_dillon_schatz(int dim) {
  bool ok = true;
  for (const auto& name : representatives(dim)) {
    const BooleanFunction f = named_function(name);
    ok &= report("weight class matrix = Dillon-Schatz matrix for " + name,
                 weight_class_matrix(f) == dillon_schatz_matrix(f));
  }
  return ok;
}

bool verify_r_graph(int dim, int members) {
  bool ok = true;
  std::mt19937_64 rng(11);
  for (const auto& name : representatives(dim)) {
    const BooleanFunction f = named_function(name);
    std::uniform_int_distribution<Point> pick(0, static_cast<Point>(f.size() - 1));
    bool all = true;
    for (int i = 0; i <= members; ++i) {
      const BooleanFunction g = i == 0 ? f : et_member(f, pick(rng), pick(rng));
      const bool wc = weight_class(g) != 0;
      const BooleanFunction target = dual(g).plus_constant(wc);
      all = all && is_isomorphic(graph_R(g), cayley_graph(target));
    }
    ok &= report("R(f) isomorphic to Cay(dual + wc) for " + name + " and " + std::to_string(members) + " members", all);
  }
  return ok;
}

bool verify_sdp(int dim) {
  bool ok = true;
  for (const auto& name : representatives(dim)) {
    const BooleanFunction f = named_function(name);
    ok &= report("symmetric difference property for " + name, has_sdp_property(sdp_design(f)));
    ok &= report("design rows are the minimum-weight words for " + name, min_weight_rows_check(f));
  }
  return ok;
}

bool verify_sigma_tau(int m) {
  const BooleanFunction s = sigma(m);
  const BooleanFunction t = tau(m);
  const std::size_t v = std::size_t{1} << (2 * m);
  const std::size_t k = (v >> 1) - (std::size_t{1} << (m - 1));
  const std::size_t l = (v >> 2) - (std::size_t{1} << (m - 1));
  const SrgParams expected{v, k, l, l};
  bool ok = true;
  const auto ps = srg_params(cayley_graph(s));
  const auto pt = srg_params(cayley_graph(t));
  ok &= report("sigma_" + std::to_string(m) + " parameters " + srg_text(ps), ps == expected);
  ok &= report("tau_" + std::to_string(m) + " parameters " + srg_text(pt), pt == expected);
  const bool same = is_extended_cayley_equivalent(s, t);
  ok &= report(std::string("sigma_") + std::to_string(m) + (m <= 3 ? " equivalent to " : " inequivalent to ") + "tau_" +
                   std::to_string(m),
               same == (m <= 3));
  return ok;
}

bool verify_cast128(const std::string& path) {
  const Cast128Sboxes boxes = parse_cast128_sboxes(read_file(path));
  std::size_t bent = 0;
  std::size_t degree4 = 0;
  for (int box = 1; box <= 8; ++box) {
    for (int bit = 0; bit < 32; ++bit) {
      const BooleanFunction f = sbox_bit_function(boxes, box, bit);
      bent += is_bent(f) ? 1 : 0;
      degree4 += degree(f) == 4 ? 1 : 0;
    }
  }
  bool ok = report(std::to_string(bent) + "/256 bent", bent == 256);
  ok &= report(std::to_string(degree4) + "/256 of degree 4", degree4 == 256);
  ok &= report("box 1 bit 0 ANF matches cast128_1_0",
               render_anf(sbox_bit_function(boxes, 1, 0)) == named("cast128_1_0").anf);
  return ok;
}

int run(int argc, char** argv) {
  CLI::App app{"Extended Cayley classification of bent Boolean functions"};
  app.require_subcommand(1);

  FunctionInput input;
  unsigned workers = 1;
  std::string out_path;
  std::string csv_path;
  auto* classify = app.add_subcommand("classify", "Classify the extended translation class of a bent function");
  input.attach(classify);
  classify->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1U, 256U));
  classify->add_option("--out", out_path, "Archive file to write");
  classify->add_option("--csv", csv_path, "CSV summary file to write");

  std::string archive_path;
  std::string matrix_name;
  auto* plot = app.add_subcommand("plot", "Write a class index matrix as a PGM image");
  plot->add_option("--archive", archive_path)->required();
  plot->add_option("--matrix", matrix_name)->required()->check(CLI::IsMember({"bent", "dual", "wc"}));
  plot->add_option("--out", out_path)->required();

  auto* bent_check = app.add_subcommand("bent-check", "Report bentness and weight class");
  input.attach(bent_check);
  auto* dual_cmd = app.add_subcommand("dual", "Print the ANF of the dual bent function");
  input.attach(dual_cmd);
  auto* wht = app.add_subcommand("wht", "Print the Walsh-Hadamard spectrum");
  input.attach(wht);

  std::string table_bits;
  auto* anf_cmd = app.add_subcommand("anf", "Print ANF, degree and weight");
  input.attach(anf_cmd);
  anf_cmd->add_option("--table", table_bits, "Truth table as a 0/1 string in index order");

  auto* code = app.add_subcommand("code", "Describe the linear code of the support");
  input.attach(code);
  auto* srg = app.add_subcommand("srg", "Strongly regular parameters of Cay(f + f(0))");
  input.attach(srg);
  auto* clique = app.add_subcommand("clique-poly", "Clique polynomial of Cay(f + f(0))");
  input.attach(clique);
  auto* rank = app.add_subcommand("rank2", "2-rank of Cay(f + f(0))");
  input.attach(rank);

  std::string sequence_kind;
  int sequence_m = 1;
  auto* sequence = app.add_subcommand("sequence", "Print sigma_m or tau_m");
  sequence->add_option("kind", sequence_kind)->required()->check(CLI::IsMember({"sigma", "tau"}));
  sequence->add_option("m", sequence_m)->required()->check(CLI::Range(1, 12));

  std::string cast_file;
  bool check_bent = false;
  int box = 0;
  int bit = 0;
  auto* cast = app.add_subcommand("cast128", "Inspect CAST-128 S-box bit functions");
  cast->add_option("--file", cast_file)->required();
  cast->add_flag("--check-bent", check_bent, "Check all 256 bit functions for bentness");
  cast->add_option("--box", box, "S-box 1..8");
  cast->add_option("--bit", bit, "Bit 0..31");

  std::string suite;
  int verify_m = 0;
  int verify_dim = 0;
  int members = 5;
  bool full = false;
  auto* verify = app.add_subcommand("verify", "Run a theorem check suite");
  verify->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"quadratic", "dillon-schatz", "r-graph", "sdp", "sigma-tau", "cast128"}));
  verify->add_option("--m", verify_m, "Half dimension for quadratic and sigma-tau (default 3)");
  verify->add_option("--dim", verify_dim, "Largest dimension for dillon-schatz, r-graph and sdp (default 6)");
  verify->add_option("--members", members, "Random extended translation members per representative");
  verify->add_flag("--full", full, "Also classify when m > 3 (slow)");
  verify->add_option("--file", cast_file, "CAST-128 S-box text for the cast128 suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (classify->parsed()) {
      const BooleanFunction f = input.load();
      const Classification cl = classify_et_class(f, workers);
      const auto classes = bent_class_descriptors(cl);
      std::cout << "anf: " << cl.anf << '\n';
      std::cout << "bent classes: " << classes.size() << ", graphs including duals: " << cl.graphs.size()
                << (is_prolific(cl) ? ", prolific" : "") << '\n';
      std::cout << summary_table(classes);
      const auto dual_only = dual_only_class_descriptors(cl);
      if (!dual_only.empty()) {
        std::cout << "classes reached only by duals:\n" << summary_table(dual_only);
      }
      if (!out_path.empty()) save_archive(cl, out_path);
      if (!csv_path.empty()) write_file(csv_path, summary_csv(classes));
    } else if (plot->parsed()) {
      const Classification cl = load_archive(archive_path);
      const IndexMatrix& m = matrix_name == "bent" ? cl.bent_index : matrix_name == "dual" ? cl.dual_index : cl.wc_matrix;
      write_file(out_path, pgm_image(m));
    } else if (bent_check->parsed()) {
      const BooleanFunction f = input.load();
      if (is_bent(f)) {
        std::cout << "bent, weight " << f.weight() << ", weight class " << weight_class(f) << '\n';
      } else {
        std::cout << "not bent\n";
      }
    } else if (dual_cmd->parsed()) {
      std::cout << render_anf(dual(input.load())) << '\n';
    } else if (wht->parsed()) {
      const auto spectrum = walsh_hadamard(input.load());
      for (std::size_t i = 0; i < spectrum.values.size(); ++i) std::cout << (i ? " " : "") << spectrum.values[i];
      std::cout << '\n';
    } else if (anf_cmd->parsed()) {
      BooleanFunction f;
      if (!table_bits.empty()) {
        std::vector<int> values;
        for (char ch : table_bits) {
          if (ch != '0' && ch != '1') throw ParseError("truth table must be a 0/1 string", 1, values.size() + 1);
          values.push_back(ch - '0');
        }
        int n = 0;
        while ((std::size_t{1} << n) < values.size()) ++n;
        if ((std::size_t{1} << n) != values.size() || n == 0) {
          throw CLI::ValidationError("truth table length must be a power of two");
        }
        f = BooleanFunction::from_values(n, values);
      } else {
        f = input.load();
      }
      std::cout << render_anf(f) << '\n' << "degree " << degree(f) << ", weight " << f.weight() << '\n';
    } else if (code->parsed()) {
      const BinaryLinearCode c = code_of(input.load());
      const auto distribution = weight_distribution(c);
      std::cout << "length " << c.length << ", dimension " << c.dimension << ", minimum distance "
                << minimum_distance(distribution) << ", " << (is_projective(c) ? "projective" : "not projective")
                << '\n';
      for (const auto& [w, count] : distribution) std::cout << "weight " << w << ": " << count << '\n';
    } else if (srg->parsed() || clique->parsed() || rank->parsed()) {
      const BooleanFunction f = input.load();
      const DenseGraph g = cayley_graph(f.plus_constant(f(0)));
      if (srg->parsed()) std::cout << srg_text(srg_params(g)) << '\n';
      if (clique->parsed()) std::cout << clique_polynomial(g).to_string() << '\n';
      if (rank->parsed()) std::cout << rank2(g) << '\n';
    } else if (sequence->parsed()) {
      const BooleanFunction f = sequence_kind == "sigma" ? sigma(sequence_m) : tau(sequence_m);
      std::cout << render_anf(f) << '\n';
    } else if (cast->parsed()) {
      const Cast128Sboxes boxes = parse_cast128_sboxes(read_file(cast_file));
      if (check_bent) {
        std::size_t bent = 0;
        for (int b = 1; b <= 8; ++b) {
          for (int k = 0; k < 32; ++k) bent += is_bent(sbox_bit_function(boxes, b, k)) ? 1 : 0;
        }
        std::cout << bent << "/256 bent\n";
        if (bent != 256) return kExitVerify;
      }
      if (box != 0) std::cout << render_anf(sbox_bit_function(boxes, box, bit)) << '\n';
    } else if (verify->parsed()) {
      bool ok = false;
      if (suite == "quadratic") {
        ok = verify_quadratic(verify_m > 0 ? verify_m : 3, full);
      } else if (suite == "dillon-schatz") {
        ok = verify_dillon_schatz(verify_dim > 0 ? verify_dim : 6);
      } else if (suite == "r-graph") {
        ok = verify_r_graph(verify_dim > 0 ? verify_dim : 6, members);
      } else if (suite == "sdp") {
        ok = verify_sdp(verify_dim > 0 ? verify_dim : 6);
      } else if (suite == "sigma-tau") {
        ok = verify_sigma_tau(verify_m > 0 ? verify_m : 3);
      } else {
        if (cast_file.empty()) throw CLI::ValidationError("the cast128 suite needs --file");
        ok = verify_cast128(cast_file);
      }
      return ok ? 0 : kExitVerify;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const VariableOutOfRange& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const MalformedGraph6& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
