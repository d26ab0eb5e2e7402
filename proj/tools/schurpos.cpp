// Command-line front end: coefficient queries, products, dealing operations,
// verification sweeps, posets and the determinant experiments.
//
// Exit codes: 0 success / property confirmed, 1 refutation or negative
// result, 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schurpos/algebra.hpp"
#include "schurpos/jacobi_trudi.hpp"
#include "schurpos/poset.hpp"
#include "schurpos/tilde.hpp"
#include "schurpos/verify.hpp"

namespace {

using namespace schurpos;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;

json filling_rows_json(const LRFilling& f) {
  json rows = json::array();
  for (const auto& row : f.rows) rows.push_back(row);
  return rows;
}

void print_filling(const LRFilling& f) {
  for (int r = f.shape.outer.length() - 1; r >= 0; --r) {
    std::string line;
    for (int j = 0; j < f.shape.inner.part(r); ++j) line += ". ";
    for (int x : f.rows[static_cast<std::size_t>(r)])
      line += std::to_string(x) + " ";
    std::cout << "  " << line << "\n";
  }
}

int cmd_lrcoef(const std::string& outer, const std::string& inner,
               const std::string& content, bool list_fillings, bool as_json) {
  Partition theta = parse_partition(outer);
  Partition mu = parse_partition(inner);
  Partition nu = parse_partition(content);
  coeff_t c = lr_coefficient(theta, mu, nu);
  std::vector<LRFilling> fillings;
  if (list_fillings && c > 0)
    fillings = enumerate_lr_fillings(SkewShape(theta, mu), nu);
  if (as_json) {
    json out{{"coefficient", c}};
    if (list_fillings) {
      out["fillings"] = json::array();
      for (const auto& f : fillings) out["fillings"].push_back(filling_rows_json(f));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "coefficient: " << c << "\n";
    if (list_fillings) {
      int i = 0;
      for (const auto& f : fillings) {
        std::cout << "filling " << ++i << " (reading word ";
        for (int x : reading_word(f)) std::cout << x << (x > 9 ? "," : "");
        std::cout << "):\n";
        print_filling(f);
      }
    }
  }
  return kExitOk;
}

int cmd_product(const std::string& a, const std::string& b, bool as_json) {
  SkewShape sa = parse_skew(a), sb = parse_skew(b);
  SchurVector prod = multiply_skew(sa, sb);
  if (as_json) {
    json out = json::array();
    for (const auto& [p, c] : prod.terms())
      out.push_back({{"partition", p.parts()}, {"coeff", c}});
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << to_string(prod) << "\n";
  }
  return kExitOk;
}

std::vector<Partition> parse_partition_list(const std::string& text) {
  std::vector<Partition> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(';', pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(parse_partition(
        std::string_view(text).substr(pos, next - pos)));
    pos = next + 1;
    if (next == text.size()) break;
  }
  return out;
}

int cmd_tilde(const std::string& mu_s, const std::string& nu_s, bool skew,
              const std::string& alpha_s, const std::string& beta_s, int m,
              const std::string& parts_s, bool as_json) {
  json out;
  if (m > 0) {
    std::vector<Partition> tuple = parse_partition_list(parts_s);
    std::vector<Partition> dealt = tilde_m(tuple, m);
    if (as_json) {
      out["input"] = json::array();
      for (const auto& p : tuple) out["input"].push_back(p.parts());
      out["output"] = json::array();
      for (const auto& p : dealt) out["output"].push_back(p.parts());
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "input: ";
      for (const auto& p : tuple) std::cout << "(" << p << ") ";
      std::cout << "\noutput: ";
      for (const auto& p : dealt) std::cout << "(" << p << ") ";
      std::cout << "\n";
    }
    return kExitOk;
  }
  if (skew) {
    SkewPair p{SkewShape(parse_partition(mu_s), parse_partition(alpha_s)),
               SkewShape(parse_partition(nu_s), parse_partition(beta_s))};
    SkewPair q = skew_tilde(p);
    if (as_json) {
      out = {{"input", {to_string(p.first), to_string(p.second)}},
             {"output", {to_string(q.first), to_string(q.second)}}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "input: (" << p.first << " | " << p.second << ")\n"
                << "output: (" << q.first << " | " << q.second << ")\n";
    }
    return kExitOk;
  }
  Partition mu = parse_partition(mu_s), nu = parse_partition(nu_s);
  auto [lambda, rho] = tilde_pair(mu, nu);
  if (as_json) {
    out = {{"input", {mu.parts(), nu.parts()}},
           {"output", {lambda.parts(), rho.parts()}}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "input: (" << mu << " | " << nu << ")\n"
              << "output: (" << lambda << " | " << rho << ")\n";
  }
  return kExitOk;
}

int finish_sweep(const SweepReport& rep, double elapsed, bool as_json) {
  if (as_json) {
    json j = report_to_json(rep);
    j["elapsed_seconds"] = elapsed;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rep.command << ": bound " << rep.bound << ", "
              << rep.items << " comparisons, " << rep.fixed_points
              << " dealt fixed points skipped, " << elapsed << "s\n";
    if (rep.ok()) {
      std::cout << "no counterexamples\n";
    } else {
      std::cout << rep.counterexamples.size() << " counterexample(s):\n";
      for (const auto& c : rep.counterexamples) std::cout << "  " << c << "\n";
    }
  }
  return rep.ok() ? kExitOk : kExitRefuted;
}

int cmd_poset_output(const Poset& poset, const std::string& dot_path,
                     const std::string& json_path) {
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) fail(errc::bad_input, "cannot write " + dot_path);
    out << export_dot(poset);
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) fail(errc::bad_input, "cannot write " + json_path);
    out << export_json(poset);
  }
  std::cout << "elements: " << poset.size()
            << ", strict relations: " << poset.relation_count()
            << ", covers: " << poset.covers().size() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the Schur basis: LR coefficients, "
               "products, part-dealing operations, positivity posets and "
               "Jacobi-Trudi experiments"};
  app.require_subcommand(1);
  int max_weight = 0;
  app.add_option("--max-weight", max_weight,
                 "raise the partition weight cap (default 64)");

  // lrcoef
  std::string outer, inner, content;
  bool list_fillings = false, as_json = false;
  auto* lrcoef = app.add_subcommand("lrcoef", "Littlewood-Richardson coefficient");
  lrcoef->add_option("--outer", outer)->required();
  lrcoef->add_option("--inner", inner);
  lrcoef->add_option("--content", content)->required();
  lrcoef->add_flag("--list-fillings", list_fillings);
  lrcoef->add_flag("--json", as_json);

  // product
  std::string shape_a, shape_b;
  bool product_json = false;
  auto* product = app.add_subcommand("product", "product of two (skew) Schur functions");
  product->add_option("--a", shape_a, "shape, e.g. 3,2 or 3,2/1")->required();
  product->add_option("--b", shape_b)->required();
  product->add_flag("--json", product_json);

  // tilde
  std::string mu_s, nu_s, alpha_s, beta_s, parts_s;
  bool tilde_skew = false, tilde_json = false;
  int tilde_m_arg = 0;
  auto* tilde = app.add_subcommand("tilde", "part-dealing operation");
  tilde->add_option("--mu", mu_s);
  tilde->add_option("--nu", nu_s);
  tilde->add_flag("--skew", tilde_skew, "deal skew shapes mu/alpha, nu/beta");
  tilde->add_option("--alpha", alpha_s);
  tilde->add_option("--beta", beta_s);
  tilde->add_option("--m", tilde_m_arg, "deal an m-tuple given via --parts");
  tilde->add_option("--parts", parts_s, "semicolon-separated partitions");
  tilde->add_flag("--json", tilde_json);

  // verify
  auto* verify = app.add_subcommand("verify", "exhaustive conjecture sweeps");
  verify->require_subcommand(1);
  SweepOptions sweep;
  sweep.workers = static_cast<int>(std::thread::hardware_concurrency());
  if (sweep.workers < 1) sweep.workers = 1;
  bool verify_json = false, verify_progress = false, skew_all = false;
  auto add_sweep_options = [&](CLI::App* cmd, bool needs_bound = true) {
    auto* b = cmd->add_option("--bound", sweep.bound, "max total weight");
    if (needs_bound) b->required();
    cmd->add_option("--workers", sweep.workers);
    cmd->add_option("--checkpoint", sweep.checkpoint_path, "checkpoint file");
    cmd->add_flag("--resume", sweep.resume, "resume from the checkpoint file");
    cmd->add_option("--block", sweep.block_size, "items per checkpoint block");
    cmd->add_flag("--json", verify_json);
    cmd->add_flag("--progress", verify_progress, "progress on stderr");
  };
  auto* v_fflp = verify->add_subcommand(
      "fflp", "dealt-pair positivity over all pairs (Fomin-Fulton-Li-Poon)");
  add_sweep_options(v_fflp);
  auto* v_skew = verify->add_subcommand("skew", "skew-shape dealing positivity");
  add_sweep_options(v_skew);
  v_skew->add_flag("--all", skew_all,
                   "every description with outer weight <= bound, not just "
                   "minimal pairs");
  auto* v_mtilde = verify->add_subcommand("mtilde", "m-tuple dealing positivity");
  add_sweep_options(v_mtilde);
  v_mtilde->add_option("--m", sweep.m, "tuple size")->required();
  auto* v_stem = verify->add_subcommand(
      "stembridge", "multiplicity-free classification against brute force");
  add_sweep_options(v_stem);

  // poset
  auto* poset = app.add_subcommand("poset", "Schur-positivity posets");
  poset->require_subcommand(1);
  int pn_n = 0, pn_max = 12;
  std::string dot_path, json_path, gamma_s, gamma2_s, mode = "iso";
  bool check_max = false;
  auto* p_pn = poset->add_subcommand("pn", "poset of all pairs of total weight n");
  p_pn->add_option("--n", pn_n)->required();
  p_pn->add_option("--max-n", pn_max, "safety bound");
  p_pn->add_option("--dot", dot_path, "write DOT file");
  p_pn->add_option("--json", json_path, "write JSON file");
  auto* p_deal = poset->add_subcommand("dealings", "poset of dealings of gamma");
  p_deal->add_option("--gamma", gamma_s)->required();
  p_deal->add_option("--dot", dot_path);
  p_deal->add_option("--json", json_path);
  p_deal->add_flag("--check-max",
                   check_max, "verify the unique maximum is the dealt pair");
  auto* p_cmp = poset->add_subcommand("compare", "compare two dealing posets");
  p_cmp->add_option("--gamma1", gamma_s)->required();
  p_cmp->add_option("--gamma2", gamma2_s)->required();
  p_cmp->add_option("--mode", mode)->check(CLI::IsMember({"iso", "weak-subposet"}));

  // exploded-jt
  std::string ejt_mu;
  int ejt_k = 2, ejt_p = 0;
  bool ejt_check = false, ejt_json = false;
  auto* ejt = app.add_subcommand("exploded-jt",
                                 "determinant with rectangle Schur entries");
  ejt->add_option("--mu", ejt_mu)->required();
  ejt->add_option("--k", ejt_k, "rectangle height")->required();
  ejt->add_option("--p", ejt_p, "matrix size (default l(mu))");
  ejt->add_flag("--check-positive", ejt_check);
  ejt->add_flag("--json", ejt_json);

  // plucker-demo
  int pl_p = 4;
  std::string pl_c = "1,3";
  auto* plucker = app.add_subcommand("plucker-demo",
                                     "print the terms of one Pluecker relation");
  plucker->add_option("--p", pl_p)->required();
  plucker->add_option("--c", pl_c, "swap positions, e.g. 1,3")->required();

  try {
    app.parse(argc, argv);
    if (max_weight > 0) config::partition_sum_limit().store(max_weight);

    if (*lrcoef) return cmd_lrcoef(outer, inner, content, list_fillings, as_json);
    if (*product) return cmd_product(shape_a, shape_b, product_json);
    if (*tilde)
      return cmd_tilde(mu_s, nu_s, tilde_skew, alpha_s, beta_s, tilde_m_arg,
                       parts_s, tilde_json);

    if (*verify) {
      if (verify_progress)
        sweep.progress = [](long long done, long long total) {
          std::cerr << "\r" << done << "/" << total << std::flush;
          if (done == total) std::cerr << "\n";
        };
      sweep.minimal_only = !skew_all;
      auto t0 = std::chrono::steady_clock::now();
      SweepReport rep;
      if (*v_fflp) rep = verify_fflp(sweep);
      else if (*v_skew) rep = verify_skew(sweep);
      else if (*v_mtilde) rep = verify_mtilde(sweep);
      else rep = verify_stembridge(sweep);
      double elapsed = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - t0).count();
      return finish_sweep(rep, elapsed, verify_json);
    }

    if (*poset) {
      if (*p_pn) return cmd_poset_output(build_pn(pn_n, pn_max), dot_path, json_path);
      if (*p_deal) {
        Partition gamma = parse_partition(gamma_s);
        Poset pg = build_dealings(gamma);
        int rc = cmd_poset_output(pg, dot_path, json_path);
        if (check_max) {
          auto mx = maximum_element(pg);
          auto [lambda, rho] = tilde_pair(gamma, Partition{});
          PairElement dealt = PairElement::of(lambda, rho);
          if (mx && *mx == dealt) {
            std::cout << "unique maximum is the dealt pair (" << mx->first
                      << " | " << mx->second << ")\n";
          } else {
            std::cout << "maximum check FAILED: "
                      << (mx ? "maximum is not the dealt pair"
                             : "no unique maximum") << "\n";
            return kExitRefuted;
          }
        }
        return rc;
      }
      // compare
      Partition g1 = parse_partition(gamma_s), g2 = parse_partition(gamma2_s);
      Poset a = build_dealings(g1), b = build_dealings(g2);
      if (mode == "iso") {
        bool iso = is_isomorphic(a, b);
        std::cout << (iso ? "posets are isomorphic"
                          : "posets differ (no isomorphism)") << "\n";
        return iso ? kExitOk : kExitRefuted;
      }
      bool weak = is_weak_subposet(a, b, canonical_dealing_map(g1, g2));
      std::cout << (weak ? "weak subposet: every relation carries over"
                         : "weak subposet check failed") << "\n";
      return weak ? kExitOk : kExitRefuted;
    }

    if (*ejt) {
      Partition mu = parse_partition(ejt_mu);
      int p = ejt_p > 0 ? ejt_p : mu.length();
      SchurVector det = exploded_jt(mu, ejt_k, p);
      bool positive = is_schur_positive(det);
      if (ejt_json) {
        json terms = json::array();
        for (const auto& [t, c] : det.terms())
          terms.push_back({{"partition", t.parts()}, {"coeff", c}});
        std::cout << json{{"positive", positive}, {"terms", terms}}.dump(2)
                  << "\n";
      } else if (!ejt_check) {
        std::cout << to_string(det) << "\n";
      }
      if (ejt_check) {
        if (positive) {
          std::cout << "Schur-positive (" << det.term_count() << " terms)\n";
        } else {
          for (const auto& [t, c] : det.terms())
            if (c < 0) {
              std::cout << "NOT Schur-positive: coefficient of s[" << t
                        << "] is " << c << "\n";
              break;
            }
          return kExitRefuted;
        }
      }
      return kExitOk;
    }

    if (*plucker) {
      std::vector<int> c;
      for (const std::string& tok : CLI::detail::split(pl_c, ','))
        c.push_back(std::stoi(tok));
      auto render = [&](const MinorSelection& sel) {
        std::string s = "[";
        for (std::size_t i = 0; i < sel.size(); ++i) {
          int row = sel[i] + 1;
          if (2 * pl_p > 9 && i) s += ",";
          s += std::to_string(row);
        }
        return s + "]";
      };
      bool first = true;
      std::string lhs;
      MinorSelection a(static_cast<std::size_t>(pl_p)),
          b(static_cast<std::size_t>(pl_p));
      std::iota(a.begin(), a.end(), 0);
      std::iota(b.begin(), b.end(), pl_p);
      std::cout << render(a) << render(b) << " =";
      for (const auto& [ta, tb] : plucker_terms(pl_p, c)) {
        std::cout << (first ? " " : " + ") << render(ta) << render(tb);
        first = false;
      }
      std::cout << "\n";
      return kExitOk;
    }
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
