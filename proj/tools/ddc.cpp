// Command-line front end: certificate checking, critical peaks, certificate
// search and ARS decreasingness.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ddc/ars.hpp"
#include "ddc/certificate.hpp"
#include "ddc/prover.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ddc::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_check(const std::string& trs_path, const std::string& cert_path) {
  const ddc::Trs R = ddc::parse_trs(slurp(trs_path));
  const ddc::Certificate c = ddc::parse_certificate(slurp(cert_path));
  const ddc::Verdict v = ddc::check(R, c);
  std::cout << v.to_string() << '\n';
  return v.exit_code();
}

int run_cps(const std::string& trs_path) {
  const ddc::Trs R = ddc::parse_trs(slurp(trs_path));
  const auto cps = ddc::critical_peaks(R);
  for (std::size_t k = 0; k < cps.size(); ++k) {
    std::cout << k + 1 << ": " << cps[k].to_string()
              << (cps[k].trivial() ? "  (trivial)" : "") << '\n';
  }
  return 0;
}

int run_prove(const std::string& trs_path, const ddc::ProverConfig& cfg) {
  const ddc::Trs R = ddc::parse_trs(slurp(trs_path));
  auto cert = ddc::prove(R, cfg);
  if (!cert) {
    std::cerr << "no certificate found\n";
    return 1;
  }
  std::cout << ddc::serialize_certificate(*cert) << '\n';
  return 0;
}

int run_ars(const std::string& path, std::size_t maxlen) {
  const ddc::ars::ArsInput in = ddc::ars::parse_ars(slurp(path));
  if (auto bad = ddc::ars::validate(in.orders, in.ars.labels())) {
    std::cout << "invalid orders: " << bad->to_string() << '\n';
    return 2;
  }
  const auto report = ddc::ars::check_eld(in.ars, in.orders, maxlen);
  for (const auto& pk : report.peaks) {
    std::cout << pk.left.target << " <-" << pk.left.label << "- "
              << pk.left.source << " -" << pk.right.label << "-> "
              << pk.right.target << ": ";
    if (!pk.witness) {
      std::cout << "no witness\n";
      continue;
    }
    std::cout << pk.left.target;
    for (const auto& st : *pk.witness) {
      std::cout << (st.dir == ddc::Direction::Forward ? " -" : " <-") << st.label
                << (st.dir == ddc::Direction::Forward ? "-> " : "- ") << st.to;
    }
    std::cout << '\n';
  }
  const bool conf = ddc::ars::confluent_bruteforce(in.ars);
  std::cout << "extended locally decreasing: " << (report.ok ? "yes" : "no")
            << "\nconfluent: " << (conf ? "yes" : "no") << '\n';
  return report.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decreasing-diagrams confluence certificates"};
  app.require_subcommand(1);

  std::string trs_path, cert_path, ars_path;

  auto* check = app.add_subcommand("check", "check a certificate");
  check->add_option("trs", trs_path)->required();
  check->add_option("cert", cert_path)->required();

  auto* cps = app.add_subcommand("cps", "list critical peaks");
  cps->add_option("trs", trs_path)->required();

  ddc::ProverConfig cfg;
  std::string mode = "valley";
  auto* prove = app.add_subcommand("prove", "search for a certificate");
  prove->add_option("trs", trs_path)->required();
  prove->add_option("--depth", cfg.join_depth, "join length bound")
      ->capture_default_str();
  prove->add_option("--max-label", cfg.max_label, "largest rule label")
      ->capture_default_str();
  prove->add_option("--coeff-bound", cfg.coeff_bound,
                    "interpretation coefficient bound")
      ->capture_default_str();
  prove->add_option("--mode", mode, "non-linear target mode")
      ->check(CLI::IsMember({"valley", "conv"}))
      ->capture_default_str();

  std::size_t maxlen = ddc::ars::kDefaultMaxLen;
  auto* ars = app.add_subcommand("ars", "abstract rewrite systems");
  ars->require_subcommand(1);
  auto* ars_check = ars->add_subcommand("check", "check decreasingness");
  ars_check->add_option("arsfile", ars_path)->required();
  ars_check->add_option("--maxlen", maxlen, "segment length bound")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return run_check(trs_path, cert_path);
    if (*cps) return run_cps(trs_path);
    if (*prove) {
      cfg.mode = mode == "conv" ? ddc::ProverConfig::Target::Conv
                                : ddc::ProverConfig::Target::Valley;
      return run_prove(trs_path, cfg);
    }
    if (*ars_check) return run_ars(ars_path, maxlen);
  } catch (const ddc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const ddc::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 2;
}
