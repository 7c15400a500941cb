// Command-line front end: emits the c_n / tau_n / eps-scan tables and the
// analytic constants as CSV or Markdown, and evaluates f_n pointwise by the
// Taylor, oracle, or certified-majorant path.
//
// Exit codes: 0 ok, 1 argument or domain error, 2 tau divergence,
// 3 tail validation failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sievekernel/sievekernel.hpp"

namespace sk = sievekernel;

namespace {

struct CliOverrides {
  std::optional<int> m;
  std::optional<int> n_max;
  std::optional<std::string> eps;
  std::optional<double> inflation;
  std::optional<int> order;
  std::optional<std::string> format;
  std::string out_path;
  std::string config_path;
};

sk::RunConfig resolve_config(const CliOverrides& ov) {
  sk::RunConfig cfg;
  std::string path = ov.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("SIEVEKERNEL_CONFIG")) path = env;
  }
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    cfg = sk::RunConfig::parse(buf.str());
  }
  if (ov.m) cfg.m = *ov.m;
  if (ov.n_max) cfg.n_max = *ov.n_max;
  if (ov.eps) cfg.eps = sk::Rational::parse(*ov.eps);
  if (ov.inflation) cfg.inflation = *ov.inflation;
  if (ov.order) cfg.taylor_order = *ov.order;
  if (ov.format) cfg.output_format = sk::output_format_from(*ov.format);
  cfg.validate();
  return cfg;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << text;
}

sk::TableArtifact cmd_table_cn(const sk::RunConfig& cfg) {
  const sk::CnTable cn = sk::build_cn_table(cfg.n_max, cfg.m, cfg.inflation);
  sk::TableArtifact art;
  art.kind = "cn";
  art.columns = {"n", "c_n", "c_n_rounded_up_2dp"};
  for (int n = 2; n <= cfg.n_max; ++n)
    art.rows.push_back({std::to_string(n), sk::format_full(cn.at(n)),
                        sk::format_fixed2(sk::round_up_2dp(cn.at(n)))});
  art.add_provenance(cfg);
  return art;
}

sk::TableArtifact cmd_table_tau(const sk::RunConfig& cfg) {
  const sk::CnTable cn = sk::build_cn_table(cfg.n_max, cfg.m, cfg.inflation);
  const sk::TauSequence tau = sk::tau_sequence(cfg.eps, cn, cfg.n_max);
  sk::TableArtifact art;
  art.kind = "tau";
  art.columns = {"n", "tau_n", "tau_n_band"};
  for (int n = 1; n <= tau.size(); ++n)
    art.rows.push_back({std::to_string(n), sk::format_full(tau.at(n)),
                        sk::format_band(tau.at(n))});
  art.add_provenance(cfg);
  return art;
}

std::vector<sk::Rational> parse_eps_list(const std::string& text) {
  std::vector<sk::Rational> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const long lo = std::stol(text.substr(0, dots));
    const long hi = std::stol(text.substr(dots + 2));
    if (lo < 1 || hi < lo)
      throw std::invalid_argument("eps-list: bad range '" + text + "'");
    for (long q = lo; q <= hi; ++q) out.emplace_back(1, q);
    return out;
  }
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (item.find('/') != std::string::npos)
      out.push_back(sk::Rational::parse(item));
    else
      out.emplace_back(1, std::stol(item));
  }
  if (out.empty()) throw std::invalid_argument("eps-list: empty list");
  return out;
}

sk::TableArtifact cmd_eps_scan(const sk::RunConfig& cfg,
                               const std::string& eps_list) {
  const sk::CnTable cn = sk::build_cn_table(cfg.n_max, cfg.m, cfg.inflation);
  const auto rows = sk::eps_scan(parse_eps_list(eps_list), cn);
  sk::TableArtifact art;
  art.kind = "eps_scan";
  art.columns = {"inv_eps", "f1", "F1", "f1_rounded", "F1_rounded", "converged"};
  for (const auto& r : rows) {
    const std::string inv =
        (r.eps.num == 1) ? std::to_string(r.eps.den)
                         : (r.eps.den == 1 ? ("1/" + std::to_string(r.eps.num))
                                           : (std::to_string(r.eps.den) + "/" +
                                              std::to_string(r.eps.num)));
    if (!r.converged) {
      art.rows.push_back({inv, "", "", "", "", "divergent"});
      continue;
    }
    art.rows.push_back(
        {inv, sk::format_full(r.f1), sk::format_full(r.F1),
         std::to_string(static_cast<long long>(std::ceil(r.f1 - 1e-9))),
         std::to_string(static_cast<long long>(std::ceil(r.F1 - 1e-9))),
         "yes"});
  }
  art.add_provenance(cfg);
  return art;
}

sk::TableArtifact cmd_constants(const sk::RunConfig& cfg) {
  const sk::AnalyticConstants c = sk::constants();
  sk::TableArtifact art;
  art.kind = "constants";
  art.columns = {"name", "value", "display"};
  auto put = [&](const std::string& name, double v, const std::string& disp) {
    art.rows.push_back({name, sk::format_full(v), disp});
  };
  put("alpha", c.alpha, sk::format_fixed2(c.alpha));
  put("gamma_computed", c.gamma, sk::format_fixed2(c.gamma));
  put("gamma_ceiling", sk::kGammaCeiling, "0.9214");
  put("H2", std::exp(-2.0) + c.H3, "");
  put("H3", c.H3, "");
  const sk::Rational thr = sk::convergence_threshold();
  put("threshold_inv_eps", static_cast<double>(thr.den), std::to_string(thr.den));
  put("threshold_strict_inv_eps",
      static_cast<double>(sk::strict_convergence_threshold_q()),
      std::to_string(sk::strict_convergence_threshold_q()));
  const sk::Rational up = sk::jr_published_constant(sk::Parity::upper, cfg.eps);
  const sk::Rational lo = sk::jr_published_constant(sk::Parity::lower, cfg.eps);
  put("jr_upper", up.value(), up.str());
  put("jr_lower", lo.value(), lo.str());
  put("eps", cfg.eps.value(), cfg.eps.str());
  art.add_provenance(cfg);
  return art;
}

int cmd_eval(const sk::RunConfig& cfg, int n, double s,
             const std::string& method) {
  double value = 0.0;
  if (method == "taylor") {
    const sk::TaylorFamily fam =
        sk::build_family(std::max(n, 1), cfg.taylor_order);
    value = fam.eval(n, s);
  } else if (method == "oracle") {
    sk::OracleCache cache(cfg.oracle_tol, std::max(cfg.oracle_tol, 1e-7));
    value = cache.fn(n, s);
  } else if (method == "majorant") {
    if (!(s >= 1.0)) throw std::domain_error("eval: require s >= 1");
    if (n % 2 == 0 && s < 2.0)
      throw std::domain_error("eval: even n needs s >= 2");
    if (s >= n + 2.0) {
      value = 0.0;
    } else if (n == 1) {
      value = sk::eval_f1(s);
    } else if (n == 2) {
      value = sk::eval_f2(s);
    } else {
      sk::GridMajorant prev, cur;
      for (int level = 3; level <= n; ++level) {
        cur = sk::build_majorant(level, level == 3 ? nullptr : &prev, cfg.m,
                                 cfg.inflation);
        prev = std::move(cur);
      }
      const sk::GridMajorant& maj = prev;
      if (s < maj.start) {
        // odd n below 3: s f_n(s) is constant there, bound by U[0]
        value = maj.values[0] / s;
      } else {
        int j = static_cast<int>(std::floor((s - maj.start) / maj.step()));
        j = std::min(j, maj.top());
        value = maj.values[j] / maj.grid_s(j);
      }
    }
  } else {
    throw std::invalid_argument("eval: method must be taylor|oracle|majorant");
  }
  std::cout << "f_" << n << "(" << sk::format_full(s)
            << ") = " << sk::format_full(value) << "\n";
  std::cout << "method = " << method << "\n";
  if (method == "taylor") std::cout << "order = " << cfg.taylor_order << "\n";
  if (method == "majorant")
    std::cout << "m = " << cfg.m
              << "\ninflation = " << sk::format_full(cfg.inflation) << "\n";
  if (method == "oracle")
    std::cout << "tol = " << sk::format_full(cfg.oracle_tol) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear-sieve constants toolkit"};
  app.require_subcommand(1);

  CliOverrides ov;
  app.add_option("--config", ov.config_path,
                 "config file (flat key = value); SIEVEKERNEL_CONFIG is the default");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--m", ov.m, "grid density (even, >= 100)");
    sub->add_option("--n-max", ov.n_max, "largest level n");
    sub->add_option("--eps", ov.eps, "sieve parameter as a rational p/q");
    sub->add_option("--inflation", ov.inflation, "per-step upper-bound slack");
    sub->add_option("--order", ov.order, "Taylor truncation order");
    sub->add_option("--format", ov.format, "csv or markdown");
    sub->add_option("--out", ov.out_path, "write output to a file");
  };

  CLI::App* table = app.add_subcommand("table", "emit a table");
  table->require_subcommand(1);
  CLI::App* table_cn = table->add_subcommand("cn", "certified c_n bounds");
  CLI::App* table_tau = table->add_subcommand("tau", "tau_n over n");
  CLI::App* table_scan = table->add_subcommand("eps-scan", "F_1/f_1 over eps");
  std::string eps_list;
  table_scan->add_option("--eps-list", eps_list,
                         "inverse-eps values: '63..249' or '80,99,143'")
      ->required();
  add_common(table_cn);
  add_common(table_tau);
  add_common(table_scan);

  CLI::App* eval = app.add_subcommand("eval", "evaluate f_n(s)");
  int eval_n = 0;
  double eval_s = 0.0;
  std::string eval_method = "taylor";
  eval->add_option("--n", eval_n, "level")->required();
  eval->add_option("--s", eval_s, "argument")->required();
  eval->add_option("--method", eval_method, "taylor | oracle | majorant");
  add_common(eval);

  CLI::App* consts = app.add_subcommand("constants", "alpha, gamma, thresholds, JR corrections");
  add_common(consts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const sk::RunConfig cfg = resolve_config(ov);
    sk::TableArtifact art;
    if (table_cn->parsed()) art = cmd_table_cn(cfg);
    else if (table_tau->parsed()) art = cmd_table_tau(cfg);
    else if (table_scan->parsed()) art = cmd_eps_scan(cfg, eps_list);
    else if (consts->parsed()) art = cmd_constants(cfg);
    else if (eval->parsed()) return cmd_eval(cfg, eval_n, eval_s, eval_method);
    write_output(art.render(cfg.output_format), ov.out_path);
    return 0;
  } catch (const sk::divergence_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sk::tail_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
