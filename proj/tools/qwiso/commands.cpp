#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "qwiso/error.hpp"
#include "qwiso/fourier.hpp"
#include "qwiso/json.hpp"
#include "qwiso/parallel.hpp"
#include "qwiso/walk.hpp"

namespace qwiso::cli {

using json = nlohmann::ordered_json;

namespace {

std::string join_elements(const ConnectionSet& s, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < s.elements().size(); ++i) {
    if (i) out += sep;
    out += std::to_string(s.elements()[i]);
  }
  return out;
}

std::string params_string(const SrgParameters& p) {
  return fmt::format("({},{},{},{})", p.n, p.k, p.lambda, p.mu);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ConnectionSet load_set(const std::string& path) {
  try {
    return parse_connection_set(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

}  // namespace

void validate_tolerance(double value, const char* name) {
  if (!(value > 0.0 && value <= 1e-2)) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("{} must be positive and at most 1e-2, got {}", name, value));
  }
}

std::optional<double> eigen_tolerance_from_env() {
  const char* raw = std::getenv("QWISO_TOL_EIG");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end == raw || *end != '\0') {
    throw Error(ErrorCode::kInvalidArgument, std::string("QWISO_TOL_EIG is not a number: ") + raw);
  }
  validate_tolerance(value, "QWISO_TOL_EIG");
  return value;
}

double round6(double x) {
  const double r = std::round(x * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;  // no "-0.000000"
}

VerifyRow cmd_verify(int p, const Tolerances& tol) {
  const CirculantGraph g(paley_connection_set(p));
  const auto params = srg_parameters(g);
  if (!params) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("Paley({}) failed the SRG identity", p));
  }
  const BlockDecomposition d = block_decompose(walk_operator(g));

  std::vector<double> c(p, 1.0);
  parallel_for(static_cast<std::size_t>(p - 1),
               [&](std::size_t i) { c[i + 1] = recover_c(d.blocks[i + 1], tol.eig); });

  std::vector<double> distinct(c.begin() + 1, c.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end(),
                             [](double a, double b) { return std::abs(a - b) <= 1e-6; }),
                 distinct.end());
  if (distinct.size() != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("expected two restricted values of c, found {}", distinct.size()));
  }

  VerifyRow row;
  row.p = p;
  row.params = *params;
  row.k = g.degree();
  row.c_low = distinct[0];
  row.c_high = distinct[1];
  row.off_diagonal_residual = d.off_diagonal_residual;
  try {
    row.recovered = recover_connection_set(c, p, g.degree()).recovered_set == g.connection_set();
  } catch (const Error&) {
    row.recovered = false;
  }
  return row;
}

std::vector<Table2Row> cmd_table2(int p, const Tolerances& tol) {
  const CirculantGraph g(paley_connection_set(p));
  const int k = g.degree();
  const BlockDecomposition d = block_decompose(walk_operator(g));
  std::vector<Table2Row> rows(p);
  parallel_for(static_cast<std::size_t>(p), [&](std::size_t idx) {
    const int j = static_cast<int>(idx);
    Table2Row& row = rows[idx];
    row.j = j;
    row.direct = fourier_coefficient(g.connection_set(), j).value / k;
    // The j = 0 block has no eigenvalue off +-1; A-hat(0) = k forces c_0 = 1.
    row.recovered = j == 0 ? 1.0 : recover_c(d.blocks[idx], tol.eig);
    row.abs_diff = std::abs(row.direct - row.recovered);
  });
  return rows;
}

RecoveryReport cmd_recover(const ConnectionSet& s, const Tolerances& tol) {
  return full_pipeline_from_spectra(CirculantGraph(s), tol.eig);
}

IsoVerdict cmd_isotest(const ConnectionSet& a, const ConnectionSet& b, const Tolerances& tol) {
  return decide_isomorphism(CirculantGraph(a), CirculantGraph(b), tol.poly);
}

bool ScanReport::srg_disagreement() const {
  return std::any_of(anomalies.begin(), anomalies.end(), [](const ScanAnomaly& a) { return a.both_srg; });
}

ScanReport cmd_scan(int p, int k, const Tolerances& tol) {
  const PrimeModulus modulus(p);
  if (k < 2 || k % 2 != 0 || k > p - 1) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("k must be even with 2 <= k <= {}, got {}", p - 1, k));
  }
  const std::uint64_t count = count_symmetric_connection_sets(p, k);
  if (count > kMaxScanSets) {
    throw Error(ErrorCode::kTooManySets,
                fmt::format("{} symmetric sets of size {} over Z_{} exceeds {}", count, k, p, kMaxScanSets));
  }
  std::vector<ConnectionSet> sets = symmetric_connection_sets(p, k);

  std::vector<std::optional<Polynomial>> chi(sets.size());
  std::vector<std::optional<SrgParameters>> srg(sets.size());
  parallel_for(sets.size(), [&](std::size_t i) {
    const CirculantGraph g(sets[i]);
    chi[i] = walk_char_poly(g);
    srg[i] = srg_parameters(g);
  });

  ScanReport report;
  report.p = p;
  report.k = k;

  std::vector<std::size_t> group_rep;
  std::vector<std::size_t> class_rep;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    ScanEntry entry{sets[i], srg[i], -1, -1};
    for (std::size_t g = 0; g < group_rep.size() && entry.group < 0; ++g) {
      if (relative_coefficient_distance(*chi[group_rep[g]], *chi[i]) <= tol.poly) {
        entry.group = static_cast<int>(g);
      }
    }
    if (entry.group < 0) {
      entry.group = static_cast<int>(group_rep.size());
      group_rep.push_back(i);
    }
    for (std::size_t c = 0; c < class_rep.size() && entry.turner_class < 0; ++c) {
      if (turner_isomorphic(sets[class_rep[c]], sets[i])) entry.turner_class = static_cast<int>(c);
    }
    if (entry.turner_class < 0) {
      entry.turner_class = static_cast<int>(class_rep.size());
      class_rep.push_back(i);
    }
    report.entries.push_back(std::move(entry));
  }
  report.group_count = static_cast<int>(group_rep.size());
  report.turner_class_count = static_cast<int>(class_rep.size());

  for (std::size_t a = 0; a < report.entries.size(); ++a) {
    for (std::size_t b = a + 1; b < report.entries.size(); ++b) {
      const ScanEntry& x = report.entries[a];
      const ScanEntry& y = report.entries[b];
      const bool same_chi = x.group == y.group;
      const bool iso = x.turner_class == y.turner_class;
      if (same_chi == iso) continue;
      report.anomalies.push_back({static_cast<int>(a), static_cast<int>(b), x.srg && y.srg,
                                  same_chi ? "same_chi_not_isomorphic" : "isomorphic_different_chi"});
    }
  }
  return report;
}

json verify_json(const VerifyRow& row) {
  return json{{"p", row.p},
              {"params", to_json(row.params)},
              {"k", row.k},
              {"c", json::array({round6(row.c_low), round6(row.c_high)})},
              {"residual", row.off_diagonal_residual},
              {"recovered", row.recovered}};
}

std::string format_verify(const VerifyRow& row, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return verify_json(row).dump(2) + "\n";
    case OutputFormat::kCsv:
      return fmt::format("p,params,k,c1,c2,off_diag_norm,s_recovered\n{},\"{}\",{},{:.6f},{:.6f},{:.1e},{}\n",
                         row.p, params_string(row.params), row.k, round6(row.c_low), round6(row.c_high),
                         row.off_diagonal_residual, row.recovered ? "true" : "false");
    case OutputFormat::kPlain:
      return fmt::format("p={} params={} k={} c1={:.6f} c2={:.6f} off_diag_norm={:.1e} S_recovered={}\n", row.p,
                         params_string(row.params), row.k, round6(row.c_low), round6(row.c_high),
                         row.off_diagonal_residual, row.recovered ? "yes" : "no");
  }
  return {};
}

std::string format_table2(std::span<const Table2Row> rows, OutputFormat format) {
  std::string out;
  switch (format) {
    case OutputFormat::kJson: {
      json arr = json::array();
      for (const auto& r : rows) {
        arr.push_back({{"j", r.j},
                       {"direct", round6(r.direct)},
                       {"recovered", round6(r.recovered)},
                       {"abs_diff", r.abs_diff}});
      }
      return arr.dump(2) + "\n";
    }
    case OutputFormat::kCsv:
      out = "j,direct,recovered,abs_diff\n";
      for (const auto& r : rows) {
        out += fmt::format("{},{:.6f},{:.6f},{:.1e}\n", r.j, round6(r.direct), round6(r.recovered), r.abs_diff);
      }
      return out;
    case OutputFormat::kPlain:
      out = fmt::format("{:>4}  {:>10}  {:>10}  {:>9}\n", "j", "direct", "recovered", "abs_diff");
      for (const auto& r : rows) {
        out += fmt::format("{:>4}  {:>10.6f}  {:>10.6f}  {:>9.1e}\n", r.j, round6(r.direct), round6(r.recovered),
                           r.abs_diff);
      }
      return out;
  }
  return out;
}

std::string format_recovery(const RecoveryReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: {
      json j = to_json(report);
      json c = json::array();
      for (double v : report.c_values) c.push_back(round6(v));
      j["c_values"] = c;
      return j.dump(2) + "\n";
    }
    case OutputFormat::kCsv: {
      std::string out = "j,c\n";
      for (std::size_t j = 0; j < report.c_values.size(); ++j) {
        out += fmt::format("{},{:.6f}\n", j, round6(report.c_values[j]));
      }
      return out;
    }
    case OutputFormat::kPlain:
      return fmt::format("p={} k={} recovered S={{{}}} max_rounding_residual={:.1e}\n", report.p, report.k,
                         join_elements(report.recovered_set, ","), report.max_rounding_residual);
  }
  return {};
}

std::string format_verdict(const IsoVerdict& v, OutputFormat format) {
  const std::string witness = v.witness_multiplier ? std::to_string(*v.witness_multiplier) : "";
  switch (format) {
    case OutputFormat::kJson:
      return to_json(v).dump(2) + "\n";
    case OutputFormat::kCsv:
      return fmt::format("isomorphic,witness_multiplier,spectral_equal,method_agreement\n{},{},{},{}\n",
                         v.isomorphic, witness, v.spectral_equal, v.method_agreement);
    case OutputFormat::kPlain:
      return fmt::format("isomorphic={} witness_multiplier={} spectral_equal={} method_agreement={}\n",
                         v.isomorphic, witness.empty() ? "none" : witness, v.spectral_equal,
                         v.method_agreement);
  }
  return {};
}

json scan_json(const ScanReport& report) {
  json sets = json::array();
  for (const auto& e : report.entries) {
    sets.push_back({{"elements", e.set.elements()},
                    {"srg", e.srg ? to_json(*e.srg) : json(nullptr)},
                    {"group", e.group},
                    {"turner_class", e.turner_class}});
  }
  json anomalies = json::array();
  for (const auto& a : report.anomalies) {
    anomalies.push_back({{"first", a.first}, {"second", a.second}, {"both_srg", a.both_srg}, {"kind", a.kind}});
  }
  return json{{"p", report.p},
              {"k", report.k},
              {"total_sets", report.entries.size()},
              {"chi_groups", report.group_count},
              {"turner_classes", report.turner_class_count},
              {"sets", sets},
              {"anomalies", anomalies}};
}

std::string format_scan(const ScanReport& report, OutputFormat format) {
  std::string out;
  switch (format) {
    case OutputFormat::kJson:
      return scan_json(report).dump(2) + "\n";
    case OutputFormat::kCsv:
      out = "index,elements,srg,group,turner_class\n";
      for (std::size_t i = 0; i < report.entries.size(); ++i) {
        const auto& e = report.entries[i];
        out += fmt::format("{},{},{},{},{}\n", i, join_elements(e.set, " "),
                           e.srg ? params_string(*e.srg) : "", e.group, e.turner_class);
      }
      return out;
    case OutputFormat::kPlain:
      out = fmt::format("p={} k={} sets={} chi_groups={} turner_classes={} anomalies={}\n", report.p, report.k,
                        report.entries.size(), report.group_count, report.turner_class_count,
                        report.anomalies.size());
      for (std::size_t i = 0; i < report.entries.size(); ++i) {
        const auto& e = report.entries[i];
        out += fmt::format("  {:>5}  {{{}}}  group={} class={}{}\n", i, join_elements(e.set, ","), e.group,
                           e.turner_class, e.srg ? " srg" + params_string(*e.srg) : "");
      }
      for (const auto& a : report.anomalies) {
        out += fmt::format("  anomaly {} {} {}{}\n", a.kind, a.first, a.second, a.both_srg ? " (srg)" : "");
      }
      return out;
  }
  return out;
}

std::string format_connection_set(const ConnectionSet& s, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return to_json(s).dump() + "\n";
    case OutputFormat::kCsv:
      return "p,elements\n" + fmt::format("{},{}\n", s.p(), join_elements(s, " "));
    case OutputFormat::kPlain:
      return fmt::format("Z_{} {{{}}}\n", s.p(), join_elements(s, ","));
  }
  return {};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coined quantum walk spectra of prime-order circulant graphs"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format_name = "json";
  std::optional<double> tol_eig;
  std::optional<double> tol_poly;
  const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::kJson}, {"csv", OutputFormat::kCsv}, {"plain", OutputFormat::kPlain}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
    sub->add_option("--out", config.output_path, "Write the report to this path");
    sub->add_option("--tol-eig", tol_eig, "Eigenvalue classification tolerance");
    sub->add_option("--tol-poly", tol_poly, "Relative tolerance for polynomial comparison");
  };

  auto* paley = app.add_subcommand("paley", "Emit the Paley connection set as JSON");
  paley->add_option("--p", config.p, "Prime p = 1 (mod 4)")->required();
  add_common(paley);

  auto* verify = app.add_subcommand("verify", "Block decomposition, spectral c values and recovery for Paley(p)");
  verify->add_option("--p", config.p, "Prime p = 1 (mod 4)")->required();
  add_common(verify);

  auto* table2 = app.add_subcommand("table2", "Per-frequency direct and recovered c_j for Paley(p)");
  table2->add_option("--p", config.p, "Prime p = 1 (mod 4)")->required();
  add_common(table2);

  auto* recover = app.add_subcommand("recover", "Reconstruct a connection set from its walk spectrum");
  auto* recover_p = recover->add_option("--p", config.p, "Use Paley(p)");
  auto* recover_set = recover->add_option("--set", config.set_path, "ConnectionSet JSON file");
  recover_p->excludes(recover_set);
  add_common(recover);

  auto* isotest = app.add_subcommand("isotest", "Decide isomorphism by chi_q and by Turner multipliers");
  isotest->add_option("--a", config.set_a, "First ConnectionSet JSON file")->required();
  isotest->add_option("--b", config.set_b, "Second ConnectionSet JSON file")->required();
  add_common(isotest);

  auto* scan = app.add_subcommand("scan", "Group all symmetric size-k sets over Z_p by chi_q");
  scan->add_option("--p", config.p, "Prime modulus")->required();
  scan->add_option("--k", config.k, "Even degree")->required();
  add_common(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    config.format = formats.at(format_name);
    if (auto env = eigen_tolerance_from_env()) config.tolerances.eig = *env;
    if (tol_eig) {
      validate_tolerance(*tol_eig, "--tol-eig");
      config.tolerances.eig = *tol_eig;
    }
    if (tol_poly) {
      validate_tolerance(*tol_poly, "--tol-poly");
      config.tolerances.poly = *tol_poly;
    }

    std::string report;
    int code = kExitOk;
    if (*paley) {
      report = format_connection_set(paley_connection_set(config.p), config.format);
    } else if (*verify) {
      report = format_verify(cmd_verify(config.p, config.tolerances), config.format);
    } else if (*table2) {
      const auto rows = cmd_table2(config.p, config.tolerances);
      report = format_table2(rows, config.format);
    } else if (*recover) {
      if (recover_p->count() == 0 && recover_set->count() == 0) {
        throw Error(ErrorCode::kInvalidArgument, "recover needs --p or --set");
      }
      const ConnectionSet s =
          recover_set->count() ? load_set(config.set_path) : paley_connection_set(config.p);
      report = format_recovery(cmd_recover(s, config.tolerances), config.format);
    } else if (*isotest) {
      const IsoVerdict v = cmd_isotest(load_set(config.set_a), load_set(config.set_b), config.tolerances);
      report = format_verdict(v, config.format);
      if (!v.method_agreement) code = kExitDisagreement;
    } else if (*scan) {
      const ScanReport r = cmd_scan(config.p, config.k, config.tolerances);
      report = format_scan(r, config.format);
      if (r.srg_disagreement()) code = kExitDisagreement;
    }

    if (config.output_path) {
      std::ofstream file(*config.output_path);
      if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write " + *config.output_path);
      file << report;
    } else {
      out << report;
    }
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace qwiso::cli
