// Command-line front end: build, verify, excise, sweep, export.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <thread>

#include <CLI11.hpp>

#include "sidon_c4/sidon_c4.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr std::uint64_t kMaxSafeQ = 1024;

struct Flags {
  std::uint64_t q = 0;
  std::uint64_t q_min = 3;
  std::uint64_t q_max = 31;
  std::uint64_t generator_index = 0;
  std::string export_path;
  std::string out_path;
  std::string what = "graph";
  bool unsafe_large = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned hardware_threads() { return std::max(1U, std::thread::hardware_concurrency()); }

void check_q(const Flags& f) {
  if (!sidon_c4::is_odd_prime_power(f.q) || f.q < 3) throw sidon_c4::NotOddPrimePower(f.q);
  if (f.q > kMaxSafeQ && !f.unsafe_large) {
    throw UsageError("q > " + std::to_string(kMaxSafeQ) + " requires --unsafe-large");
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw UsageError("cannot open " + path + " for writing");
  return os;
}

int cmd_build(const Flags& f) {
  check_q(f);
  const auto ctx = sidon_c4::make_field(f.q, f.generator_index);
  const auto A = sidon_c4::build_bose_chowla(ctx);
  std::cout << "field:   GF(" << ctx.p << "^" << ctx.degree() << "), q = " << ctx.q << '\n'
            << "modulus: " << sidon_c4::format_polynomial(ctx.modulus) << '\n'
            << "theta:   " << sidon_c4::to_string(ctx.theta) << '\n'
            << "|A| = " << A.size() << ", t = " << A.t_even << '\n'
            << "A = {";
  for (std::size_t i = 0; i < A.elements.size(); ++i) {
    std::cout << (i ? "," : "") << A.elements[i];
  }
  std::cout << "}\n";
  if (!f.out_path.empty()) {
    auto os = open_output(f.out_path);
    sidon_c4::write_sidon_set(os, A);
  }
  return kOk;
}

int cmd_verify(const Flags& f) {
  check_q(f);
  namespace oracle = sidon_c4::oracle;
  const auto ctx = sidon_c4::make_field(f.q, f.generator_index);
  const auto A = sidon_c4::build_bose_chowla(ctx);
  const auto G = sidon_c4::build_graph(A);
  bool ok = true;
  const auto line = [&](const std::string& name, bool passed, const std::string& detail) {
    std::cout << (passed ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    ok = ok && passed;
  };

  line("sidon", sidon_c4::verify_sidon(A), "all q(q+1)/2 sums distinct mod n");
  try {
    const auto D = sidon_c4::difference_set(A);
    line("difference set", true, "|A - A| = " + std::to_string(D.size()));
  } catch (const sidon_c4::LemmaViolation& ex) {
    line("difference set", false, ex.what());
  }
  const auto census = oracle::count_c4_census(G.adjacency(), hardware_threads());
  line("c4-free", census.cycles == 0,
       std::to_string(census.cycles) + " 4-cycles, " + std::to_string(census.work) + " wedges");
  const auto max_abs = sidon_c4::max_absolute_adjacency(G);
  line("at most two", max_abs <= 2, "max absolute neighbors " + std::to_string(max_abs));
  try {
    const auto pairs = sidon_c4::absolute_pairs(G);
    line("pairing", pairs.size() == A.t_even, std::to_string(pairs.size()) + " antipodal pairs");
  } catch (const sidon_c4::PairingViolation& ex) {
    line("pairing", false, ex.what());
  }
  for (const auto& r : {oracle::scan_pair_dichotomy(G), oracle::scan_triple_lemma(A)}) {
    line(r.name, r.passed,
         r.passed ? std::to_string(r.work) + " comparisons" : sidon_c4::describe_witness(r));
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_excise(const Flags& f) {
  check_q(f);
  const auto r = sidon_c4::certify(f.q, {f.generator_index, hardware_threads(), 31});
  sidon_c4::write_text_report(std::cout, r);
  if (!f.export_path.empty()) {
    const auto ctx = sidon_c4::make_field(f.q, f.generator_index);
    const auto G = sidon_c4::build_graph(sidon_c4::build_bose_chowla(ctx));
    const auto plan = sidon_c4::build_plan(G);
    auto os = open_output(f.export_path);
    sidon_c4::write_edge_list(os, f.q, G.adjacency(), sidon_c4::removal_mask(G, plan));
  }
  return r.ok() ? kOk : kVerifyFailed;
}

int cmd_sweep(const Flags& f) {
  if (f.q_min < 3 || f.q_min > f.q_max) {
    throw UsageError("need 3 <= q-min <= q-max, got " + std::to_string(f.q_min) + ".." +
                     std::to_string(f.q_max));
  }
  if (f.q_max > kMaxSafeQ && !f.unsafe_large) {
    throw UsageError("q-max > " + std::to_string(kMaxSafeQ) + " requires --unsafe-large");
  }
  if (f.out_path.empty()) throw UsageError("sweep requires --out PATH");

  const auto rows = sidon_c4::run_sweep(f.q_min, f.q_max, {f.generator_index, 1, 31},
                                        hardware_threads());
  std::size_t failures = 0;
  for (const auto& r : rows) {
    if (!r.ok()) {
      ++failures;
      for (const auto& msg : r.failures) std::cerr << "q = " << r.q << ": " << msg << '\n';
    }
  }
  try {
    auto os = open_output(f.out_path);
    sidon_c4::write_csv(os, rows);
    os.close();
    if (!os) throw std::runtime_error("write to " + f.out_path + " failed");
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(f.out_path, ec);
    throw;
  }
  std::cout << "rows " << rows.size() << ", oracle failures " << failures << '\n';
  return failures == 0 ? kOk : kVerifyFailed;
}

int cmd_export(const Flags& f) {
  check_q(f);
  if (f.out_path.empty()) throw UsageError("export requires --out PATH");
  const auto ctx = sidon_c4::make_field(f.q, f.generator_index);
  const auto A = sidon_c4::build_bose_chowla(ctx);
  auto os = open_output(f.out_path);
  if (f.what == "sidon") {
    sidon_c4::write_sidon_set(os, A);
  } else {
    sidon_c4::write_edge_list(os, f.q, sidon_c4::build_graph(A).adjacency());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"C4-free graphs from Bose-Chowla Sidon sets"};
  app.require_subcommand(1);
  Flags f;

  auto* build = app.add_subcommand("build", "Construct A(q, theta) and print it");
  build->add_option("--q", f.q, "Odd prime power")->required();
  build->add_option("--out", f.out_path, "Also write A, one residue per line");

  auto* verify = app.add_subcommand("verify", "Run every oracle on G_{q,theta}");
  verify->add_option("--q", f.q, "Odd prime power")->required();

  auto* excise = app.add_subcommand("excise", "Delete q+1 vertices and certify the result");
  excise->add_option("--q", f.q, "Odd prime power")->required();
  excise->add_option("--export", f.export_path, "Write the excised graph as an edge list");

  auto* sweep = app.add_subcommand("sweep", "Certify every odd prime power in a range to CSV");
  sweep->add_option("--q-min", f.q_min, "Smallest q")->required();
  sweep->add_option("--q-max", f.q_max, "Largest q")->required();
  sweep->add_option("--out", f.out_path, "CSV output path")->required();

  auto* exp = app.add_subcommand("export", "Write G_{q,theta} or A(q, theta) to a file");
  exp->add_option("--q", f.q, "Odd prime power")->required();
  exp->add_option("--out", f.out_path, "Output path")->required();
  exp->add_option("--what", f.what, "graph (edge list) or sidon (residues)")
      ->check(CLI::IsMember({"graph", "sidon"}));

  for (auto* sub : {build, verify, excise, sweep, exp}) {
    sub->add_option("--generator-index", f.generator_index,
                    "Use the n-th generator of GF(q^2)* (0 = first)");
    sub->add_flag("--unsafe-large", f.unsafe_large, "Allow q > 1024");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (build->parsed()) return cmd_build(f);
    if (verify->parsed()) return cmd_verify(f);
    if (excise->parsed()) return cmd_excise(f);
    if (exp->parsed()) return cmd_export(f);
    return cmd_sweep(f);
  } catch (const sidon_c4::NotOddPrimePower& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const sidon_c4::error& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
}
