#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "porthos/family_io.hpp"
#include "porthos/groups.hpp"
#include "porthos/harness.hpp"
#include "porthos/noncrossing.hpp"

using nlohmann::json;
using namespace porthos;

namespace {

// 0 = pass, 1 = mathematical violation, 2 = usage/config, 3 = numerical/guard
enum ExitCode { kPass = 0, kViolation = 1, kUsage = 2, kNumerical = 3 };

std::string blocks_string(const SetPartition& pi) {
  std::string s;
  for (const auto& block : pi.blocks()) {
    s += s.empty() ? "{" : "|{";
    for (std::size_t i = 0; i < block.size(); ++i)
      s += (i ? "," : "") + std::to_string(block[i]);
    s += "}";
  }
  return s;
}

int cmd_mobius(int n, const std::string& format) {
  json rows = json::array();
  BigInt total = 0;
  for (const auto& pi : enumerate_partitions(n)) {
    const BigInt mu = mobius_closed_form(pi);
    total += abs(mu);
    rows.push_back(json{{"partition", blocks_string(pi)}, {"blocks", pi.block_count()},
                        {"mu", mu.str()}});
  }
  const bool ok = total == factorial(static_cast<unsigned>(n));
  if (format == "csv") {
    std::cout << "partition,blocks,mu\n";
    for (const auto& r : rows)
      std::cout << '"' << r.at("partition").get<std::string>() << "\","
                << r.at("blocks").get<int>() << ',' << r.at("mu").get<std::string>() << '\n';
    std::cout << "# sum_abs_mu=" << total.str() << " n!=" << factorial(static_cast<unsigned>(n)).str()
              << " check=" << (ok ? "pass" : "FAIL") << '\n';
  } else {
    std::cout << json{{"n", n}, {"table", rows}, {"sum_abs_mu", total.str()},
                      {"factorial", factorial(static_cast<unsigned>(n)).str()},
                      {"check", ok}}.dump(2)
              << '\n';
  }
  return ok ? kPass : kViolation;
}

int cmd_expand(int p, bool commutative, const std::string& format) {
  if (commutative) {
    const auto coeffs = commutative_coefficients(p);
    if (format == "csv") {
      std::cout << "type,coefficient\n";
      for (const auto& [type, c] : coeffs) {
        std::string key;
        for (int s : type) key += (key.empty() ? "" : "+") + std::to_string(s);
        std::cout << key << ',' << c.str() << '\n';
      }
    } else {
      json rows = json::array();
      for (const auto& [type, c] : coeffs)
        rows.push_back(json{{"type", type}, {"coefficient", c.str()}});
      std::cout << json{{"p", p}, {"commutative", true}, {"coefficients", rows}}.dump(2) << '\n';
    }
    return kPass;
  }
  const ExpansionIdentity identity = build_identity(p);
  if (format == "csv") {
    std::cout << "partition,mu\n";
    for (const auto& [pi, mu] : identity.terms)
      std::cout << '"' << blocks_string(pi) << "\"," << mu.str() << '\n';
  } else {
    json rows = json::array();
    for (const auto& [pi, mu] : identity.terms)
      rows.push_back(json{{"partition", blocks_string(pi)}, {"mu", mu.str()}});
    std::cout << json{{"p", p}, {"terms", rows}}.dump(2) << '\n';
  }
  return kPass;
}

int cmd_check_orthogonal(const std::string& path, int p, double tol) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open family file: " + path);
  json j;
  in >> j;
  const TracialFamily fam = load_family(j);
  const auto r = is_p_orthogonal(fam, p, tol);
  json result{{"p", p}, {"tol", tol}, {"index_count", fam.size()}, {"dim", fam.dim},
              {"orthogonal", r.orthogonal}};
  if (r.witness) result["witness"] = *r.witness;
  std::cout << result.dump(2) << '\n';
  return r.orthogonal ? kPass : kViolation;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

// free words: slash-separated, lowercase letter = generator, uppercase = its
// inverse, e.g. "ab/aB/ba"
std::vector<GroupElement> parse_set(const std::string& group, const std::string& set) {
  std::vector<GroupElement> out;
  if (group == "z" || group.rfind("zmod:", 0) == 0) {
    long long modulus = 0;
    if (group != "z") {
      modulus = std::stoll(group.substr(5));
      if (modulus < 1) throw std::invalid_argument("zmod modulus must be positive");
    }
    for (const auto& tok : split(set, ',')) {
      const long long v = std::stoll(tok);
      out.push_back(group == "z" ? GroupElement::integer(v) : GroupElement::mod(v, modulus));
    }
  } else if (group == "free") {
    for (const auto& tok : split(set, '/')) {
      FreeWord w;
      for (char c : tok) {
        if (c >= 'a' && c <= 'z')
          w.letters.emplace_back(c - 'a', 1);
        else if (c >= 'A' && c <= 'Z')
          w.letters.emplace_back(c - 'A', -1);
        else
          throw std::invalid_argument(std::string("bad free-word character: ") + c);
      }
      out.push_back(GroupElement::word(std::move(w)));
    }
  } else {
    throw std::invalid_argument("unknown group: " + group + " (expected z, zmod:N, or free)");
  }
  if (out.empty()) throw std::invalid_argument("empty element set");
  return out;
}

std::string element_string(const GroupElement& e) {
  if (e.is_integer()) return std::to_string(e.integer_value());
  if (e.is_mod()) return std::to_string(e.mod_value().value);
  std::string s;
  for (const auto& [g, exp] : e.word_value().letters)
    s += static_cast<char>((exp > 0 ? 'a' : 'A') + g);
  return s.empty() ? "e" : s;
}

int cmd_check_dissociate(const std::string& group, const std::string& set, int p, int nq) {
  const std::vector<GroupElement> elements = parse_set(group, set);
  if (nq > 0) {
    const NqResult r = count_Nq(elements, nq);
    json result{{"group", group}, {"q", nq}, {"N_q", r.n_q}};
    if (r.argmax_t) result["argmax"] = element_string(*r.argmax_t);
    std::cout << result.dump(2) << '\n';
    return kPass;
  }
  const DissociateResult r = is_p_dissociate(elements, p);
  json result{{"group", group}, {"p", p}, {"dissociate", r.dissociate}};
  if (r.witness) {
    json w = json::array();
    for (const auto& e : *r.witness) w.push_back(element_string(e));
    result["witness"] = w;
  }
  std::cout << result.dump(2) << '\n';
  return r.dissociate ? kPass : kViolation;
}

int cmd_verify(const SuiteConfig& cfg, const std::string& out_path) {
  const VerificationReport report = run_suite(cfg);
  const json j = report.to_json(true);
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << j.dump(2) << '\n';
    std::size_t passed = 0;
    for (const auto& r : report.records) passed += r.pass;
    std::cout << "suite " << report.suite << ": " << passed << "/" << report.records.size()
              << " records pass, aggregate " << (report.aggregate_pass ? "PASS" : "FAIL")
              << ", report written to " << out_path << '\n';
  }
  return report.aggregate_pass ? kPass : kViolation;
}

int cmd_noncrossing(int q, const std::string& format) {
  const auto perms = enumerate_Snc(q);
  const BigInt cat = catalan(q);
  const bool ok = BigInt(static_cast<unsigned long long>(perms.size())) == cat;
  if (format == "csv") {
    std::cout << "permutation,pairs\n";
    for (const auto& perm : perms) {
      std::string ps, pairs;
      for (int v : perm.images) ps += (ps.empty() ? "" : " ") + std::to_string(v);
      for (const auto& [a, b] : pair_partition_of_permutation(perm).pairs)
        pairs += (pairs.empty() ? "" : " ") + std::to_string(a) + "-" + std::to_string(b);
      std::cout << '"' << ps << "\",\"" << pairs << "\"\n";
    }
    std::cout << "# count=" << perms.size() << " catalan=" << cat.str()
              << " check=" << (ok ? "pass" : "FAIL") << '\n';
  } else {
    json rows = json::array();
    for (const auto& perm : perms) {
      json pairs = json::array();
      for (const auto& [a, b] : pair_partition_of_permutation(perm).pairs)
        pairs.push_back(json::array({a, b}));
      rows.push_back(json{{"images", perm.images}, {"pairs", pairs}});
    }
    std::cout << json{{"q", q}, {"count", perms.size()}, {"catalan", cat.str()},
                      {"check", ok}, {"permutations", rows}}.dump(2)
              << '\n';
  }
  return ok ? kPass : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partition-lattice expansions and p-orthogonality checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto* mobius = app.add_subcommand("mobius", "Mobius table of the partition lattice");
  int mobius_n = 5;
  std::string mobius_format = "json";
  mobius->add_option("--n", mobius_n, "lattice size")->required();
  mobius->add_option("--format", mobius_format)->check(CLI::IsMember({"json", "csv"}));

  auto* expand = app.add_subcommand("expand", "expansion identity for (sum d)^p");
  int expand_p = 4;
  bool expand_comm = false;
  std::string expand_format = "json";
  expand->add_option("--p", expand_p)->required();
  expand->add_flag("--commutative", expand_comm, "commutative power-sum coefficients");
  expand->add_option("--format", expand_format)->check(CLI::IsMember({"json", "csv"}));

  auto* ortho = app.add_subcommand("check-orthogonal", "p-orthogonality of a matrix family");
  std::string ortho_file;
  int ortho_p = 4;
  double ortho_tol = 1e-10;
  ortho->add_option("--family", ortho_file, "family JSON file")->required();
  ortho->add_option("--p", ortho_p);
  ortho->add_option("--tol", ortho_tol);

  auto* diss = app.add_subcommand("check-dissociate", "p-dissociateness of a group subset");
  std::string diss_group = "z", diss_set;
  int diss_p = 4, diss_nq = 0;
  diss->add_option("--group", diss_group, "z, zmod:N, or free");
  diss->add_option("--set", diss_set, "comma-separated (slash-separated words for free)")
      ->required();
  diss->add_option("--p", diss_p);
  diss->add_option("--nq", diss_nq, "report N_q multiplicity instead");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  SuiteConfig cfg;
  std::string verify_out, verify_config;
  auto* opt_suite = verify->add_option("--suite", cfg.suite)
                        ->check(CLI::IsMember({"all", "lattice", "expansion", "martingale", "spin",
                                               "fourier", "dissociate", "noncrossing", "sublemma",
                                               "theorem41", "tensor"}));
  auto* opt_p = verify->add_option("--p", cfg.p);
  auto* opt_seed = verify->add_option("--seed", cfg.seed);
  auto* opt_trials = verify->add_option("--trials", cfg.trials);
  auto* opt_out = verify->add_option("--out", verify_out, "report file (stdout if omitted)");
  verify->add_option("--config", verify_config, "JSON config; flags win");

  auto* ncr = app.add_subcommand("noncrossing", "non-crossing permutations S^nc_q");
  int ncr_q = 4;
  std::string ncr_format = "json";
  ncr->add_option("--q", ncr_q)->required();
  ncr->add_option("--format", ncr_format)->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (mobius->parsed()) return cmd_mobius(mobius_n, mobius_format);
    if (expand->parsed()) return cmd_expand(expand_p, expand_comm, expand_format);
    if (ortho->parsed()) return cmd_check_orthogonal(ortho_file, ortho_p, ortho_tol);
    if (diss->parsed()) return cmd_check_dissociate(diss_group, diss_set, diss_p, diss_nq);
    if (verify->parsed()) {
      if (!verify_config.empty()) {
        std::ifstream in(verify_config);
        if (!in) throw std::invalid_argument("cannot open config file: " + verify_config);
        json j;
        in >> j;
        if (!opt_suite->count() && j.contains("suite")) cfg.suite = j.at("suite").get<std::string>();
        if (!opt_p->count() && j.contains("p")) cfg.p = j.at("p").get<int>();
        if (!opt_seed->count() && j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
        if (!opt_trials->count() && j.contains("trials")) cfg.trials = j.at("trials").get<int>();
        if (!opt_out->count() && j.contains("out")) verify_out = j.at("out").get<std::string>();
      }
      return cmd_verify(cfg, verify_out);
    }
    if (ncr->parsed()) return cmd_noncrossing(ncr_q, ncr_format);
  } catch (const size_error& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return kNumerical;
  } catch (const numerical_error& e) {
    std::cerr << "numerical: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
