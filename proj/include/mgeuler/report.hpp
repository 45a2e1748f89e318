#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "mgeuler/pipeline.hpp"

namespace mgeuler {

enum class ScalarKind {
  full,       // e(MG_{g,n})
  invariant,  // e(MG_{g,n}^{S_n})
};

// eMGgn.tsv, eMGgn-odd.tsv, eMGgn-modSn.tsv, eMGgn-modSn-odd.tsv
std::string scalar_file_name(OrientationSign sign, ScalarKind kind);
// eMGgn-equiv.tsv, eMGgn-equiv-odd.tsv
std::string equivariant_file_name(OrientationSign sign);

// Corner cell "n\g", columns g = 1..chi, rows n = 0..chi. Cells outside the
// table are empty.
std::string render_scalar_table(const EulerTable& table, OrientationSign sign, ScalarKind kind);

// Header "g\tn\tpolynomial", one row per (g, n) ordered by g then n.
std::string render_equivariant_table(const EulerTable& table, OrientationSign sign);

// Throws std::runtime_error naming the path on failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);

// Writes the scalar (or equivariant) files for every sign of the table and
// returns their paths.
std::vector<std::filesystem::path> write_scalar_tables(const EulerTable& table,
                                                       const std::filesystem::path& out_dir);
std::vector<std::filesystem::path> write_equivariant_tables(const EulerTable& table,
                                                            const std::filesystem::path& out_dir);

// Known limits of e(MG_{g,n}^{S_n}) as n grows, for g = 1..13.
const std::vector<long>& stable_invariant_values();

struct CheckOptions {
  int max_complexity = 5;    // oracle comparisons for 3g-3+n <= this
  int stable_max_genus = 5;  // stability and parity for 2 <= g <= this, g <= n <= g+3
};

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckLine> lines;
  bool ok() const;
  void print(std::ostream& os) const;
};

CheckReport run_checks(const CheckOptions& options);

}  // namespace mgeuler
