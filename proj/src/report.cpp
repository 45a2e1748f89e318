#include "mgeuler/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mgeuler/graph_oracle.hpp"
#include "mgeuler/symmetric.hpp"

namespace mgeuler {

std::string scalar_file_name(OrientationSign sign, ScalarKind kind) {
  std::string name = "eMGgn";
  if (kind == ScalarKind::invariant) name += "-modSn";
  if (sign == OrientationSign::minus) name += "-odd";
  return name + ".tsv";
}

std::string equivariant_file_name(OrientationSign sign) {
  return sign == OrientationSign::plus ? "eMGgn-equiv.tsv" : "eMGgn-equiv-odd.tsv";
}

std::string render_scalar_table(const EulerTable& table, OrientationSign sign, ScalarKind kind) {
  std::ostringstream os;
  os << "n\\g";
  for (int g = 1; g <= table.chi; ++g) os << '\t' << g;
  os << '\n';
  for (int n = 0; n <= table.chi; ++n) {
    os << n;
    for (int g = 1; g <= table.chi; ++g) {
      os << '\t';
      auto it = table.scalars.find({sign, g, n});
      if (it == table.scalars.end()) continue;
      os << (kind == ScalarKind::full ? it->second.full : it->second.invariant).get_str();
    }
    os << '\n';
  }
  return os.str();
}

std::string render_equivariant_table(const EulerTable& table, OrientationSign sign) {
  std::ostringstream os;
  os << "g\tn\tpolynomial\n";
  for (const auto& [key, poly] : table.schur) {
    if (key.sign != sign) continue;
    os << key.g << '\t' << key.n << '\t' << render_schur(poly) << '\n';
  }
  return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

namespace {

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create directory " + dir.string() + ": " + ec.message());
}

}  // namespace

std::vector<std::filesystem::path> write_scalar_tables(const EulerTable& table,
                                                       const std::filesystem::path& out_dir) {
  ensure_dir(out_dir);
  std::vector<std::filesystem::path> written;
  for (OrientationSign sign : table.signs) {
    for (ScalarKind kind : {ScalarKind::full, ScalarKind::invariant}) {
      auto path = out_dir / scalar_file_name(sign, kind);
      write_text_file(path, render_scalar_table(table, sign, kind));
      written.push_back(path);
    }
  }
  return written;
}

std::vector<std::filesystem::path> write_equivariant_tables(const EulerTable& table,
                                                            const std::filesystem::path& out_dir) {
  ensure_dir(out_dir);
  std::vector<std::filesystem::path> written;
  for (OrientationSign sign : table.signs) {
    auto path = out_dir / equivariant_file_name(sign);
    write_text_file(path, render_equivariant_table(table, sign));
    written.push_back(path);
  }
  return written;
}

const std::vector<long>& stable_invariant_values() {
  static const std::vector<long> values{1, 1, 2, 1, 2, 3, 11, 0, 18, -7, 71, -102, 295};
  return values;
}

bool CheckReport::ok() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

void CheckReport::print(std::ostream& os) const {
  for (const auto& l : lines) {
    os << (l.pass ? "PASS " : "FAIL ") << l.name;
    if (!l.detail.empty()) os << "  " << l.detail;
    os << '\n';
  }
}

CheckReport run_checks(const CheckOptions& options) {
  if (options.max_complexity < 0) throw std::invalid_argument("run_checks: max_complexity must be >= 0");
  if (options.stable_max_genus > static_cast<int>(stable_invariant_values().size())) {
    throw std::invalid_argument("run_checks: no stable value known beyond g=" +
                                std::to_string(stable_invariant_values().size()));
  }
  std::vector<std::pair<int, int>> oracle_pairs;
  for (int g = 1; 3 * g - 3 <= options.max_complexity; ++g) {
    for (int n = 0; 3 * g - 3 + n <= options.max_complexity; ++n) {
      if (2 * g - 2 + n > 0) oracle_pairs.emplace_back(g, n);
    }
  }
  int chi = 2;
  for (auto [g, n] : oracle_pairs) chi = std::max({chi, g, n});
  if (options.stable_max_genus >= 2) chi = std::max(chi, options.stable_max_genus + 3);

  PipelineConfig config;
  config.chi = chi;
  const EulerTable table = run(config);

  CheckReport report;
  for (OrientationSign sign : {OrientationSign::plus, OrientationSign::minus}) {
    for (auto [g, n] : oracle_pairs) {
      const SymPoly oracle = equiv_euler_oracle(sign, g, n);
      const SymPoly& pipe = table.equivariant.at({sign, g, n});
      CheckLine line;
      line.name = std::string("oracle ") + to_string(sign) + " g=" + std::to_string(g) +
                  " n=" + std::to_string(n);
      line.pass = oracle == pipe;
      line.detail = line.pass ? render_schur(to_schur(pipe))
                              : "oracle " + oracle.to_string() + " vs pipeline " + pipe.to_string();
      report.lines.push_back(std::move(line));
    }
  }
  for (int g = 2; g <= options.stable_max_genus; ++g) {
    const long expected = stable_invariant_values()[static_cast<std::size_t>(g - 1)];
    for (int n = g; n <= g + 3; ++n) {
      const Integer even = table.scalars.at({OrientationSign::plus, g, n}).invariant;
      const Integer odd = table.scalars.at({OrientationSign::minus, g, n}).invariant;
      const std::string at = " g=" + std::to_string(g) + " n=" + std::to_string(n);
      report.lines.push_back({"stability" + at, even == expected,
                              "got " + even.get_str() + ", stable value " + std::to_string(expected)});
      const Integer twisted = g % 2 == 0 ? odd : Integer(-odd);
      report.lines.push_back({"parity" + at, even == twisted,
                              "even " + even.get_str() + ", odd " + odd.get_str()});
    }
  }
  return report;
}

}  // namespace mgeuler
