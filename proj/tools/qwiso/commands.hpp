#pragma once

// Report builders behind the qwiso subcommands. Each cmd_* computes a report
// value; format_* renders it. run() is the whole CLI minus process plumbing.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qwiso/modp.hpp"
#include "qwiso/recovery.hpp"
#include "qwiso/spectral.hpp"

namespace qwiso::cli {

enum class OutputFormat { kJson, kCsv, kPlain };

enum class Command { kPaley, kVerify, kTable2, kRecover, kIsoTest, kScan };

struct Tolerances {
  double eig = kDefaultEigenTolerance;
  double poly = kPolynomialRelativeTolerance;
};

// Overrides must be positive and at most 1e-2; throws kInvalidArgument.
void validate_tolerance(double value, const char* name);

// Eigenvalue tolerance from QWISO_TOL_EIG, if set and valid.
std::optional<double> eigen_tolerance_from_env();

struct RunConfig {
  Command command = Command::kVerify;
  int p = 0;
  int k = 0;
  std::string set_a;
  std::string set_b;
  std::string set_path;
  Tolerances tolerances;
  OutputFormat format = OutputFormat::kJson;
  std::optional<std::string> output_path;
};

// One row of the Paley verification table.
struct VerifyRow {
  int p = 0;
  SrgParameters params;
  int k = 0;
  double c_low = 0.0;   // the two distinct spectral c_j, j != 0
  double c_high = 0.0;
  double off_diagonal_residual = 0.0;
  bool recovered = false;
};

VerifyRow cmd_verify(int p, const Tolerances& tol = {});

struct Table2Row {
  int j = 0;
  double direct = 0.0;     // A-hat(j) / k from the connection set
  double recovered = 0.0;  // from the block spectrum; 1 for the degenerate j = 0 block
  double abs_diff = 0.0;
};

std::vector<Table2Row> cmd_table2(int p, const Tolerances& tol = {});

RecoveryReport cmd_recover(const ConnectionSet& s, const Tolerances& tol = {});

IsoVerdict cmd_isotest(const ConnectionSet& a, const ConnectionSet& b, const Tolerances& tol = {});

inline constexpr std::uint64_t kMaxScanSets = 100000;

struct ScanEntry {
  ConnectionSet set;
  std::optional<SrgParameters> srg;
  int group = 0;          // chi_q class
  int turner_class = 0;   // multiplier orbit
};

struct ScanAnomaly {
  int first = 0;
  int second = 0;
  bool both_srg = false;
  std::string kind;  // "same_chi_not_isomorphic" or "isomorphic_different_chi"
};

struct ScanReport {
  int p = 0;
  int k = 0;
  std::vector<ScanEntry> entries;  // sorted by set
  int group_count = 0;
  int turner_class_count = 0;
  std::vector<ScanAnomaly> anomalies;

  bool srg_disagreement() const;
};

// Throws kInvalidArgument for impossible k, kTooManySets above kMaxScanSets.
ScanReport cmd_scan(int p, int k, const Tolerances& tol = {});

double round6(double x);

std::string format_verify(const VerifyRow& row, OutputFormat format);
std::string format_table2(std::span<const Table2Row> rows, OutputFormat format);
std::string format_recovery(const RecoveryReport& report, OutputFormat format);
std::string format_verdict(const IsoVerdict& verdict, OutputFormat format);
std::string format_scan(const ScanReport& report, OutputFormat format);
std::string format_connection_set(const ConnectionSet& s, OutputFormat format);

nlohmann::ordered_json verify_json(const VerifyRow& row);
nlohmann::ordered_json scan_json(const ScanReport& report);

// Exit codes: 0 success or agreement, 1 usage or construction error,
// 2 disagreement between the isomorphism routes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitDisagreement = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qwiso::cli
