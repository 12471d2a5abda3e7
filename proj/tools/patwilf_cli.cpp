// Command line front end: exhaustive counting, series expansion and the
// cross-validation channels, all driven by the formula registry.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "patwilf/enumerate.hpp"
#include "patwilf/gentree.hpp"
#include "patwilf/gf.hpp"
#include "patwilf/perm.hpp"
#include "patwilf/recurrence.hpp"
#include "patwilf/series.hpp"
#include "patwilf/verify.hpp"

namespace {

using namespace patwilf;

int env_order() {
  if (const char* e = std::getenv("PATWILF_ORDER")) {
    try {
      const int v = std::stoi(e);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid PATWILF_ORDER=" << e << "\n";
  }
  return kDefaultOrder;
}

PatternTriple resolve_triple(const Registry& reg, int case_id, const std::string& triple_text) {
  if (!triple_text.empty()) return PatternTriple::parse(triple_text);
  if (case_id > 0) return reg.case_entry(case_id).triple;
  throw InputError("need --case or --triple");
}

void print_series(const LaurentSeries& s, int upto) {
  for (int n = s.valuation(); n < std::min(upto, s.order()); ++n)
    std::cout << n << " " << s.coeff_or_zero(n).str() << "\n";
}

int write_report(const std::string& path, const std::vector<VerificationRecord>& recs) {
  if (!path.empty()) {
    std::ofstream os(path);
    if (!os) {
      std::cerr << "cannot open report file " << path << "\n";
      return 1;
    }
    write_report_jsonl(os, recs);
  }
  const int bad = print_summary(std::cout, recs);
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pattern-avoidance enumeration and verification"};
  app.require_subcommand(1);

  std::string registry_path = default_registry_path();
  app.add_option("--registry", registry_path, "formula registry file")
      ->envname("PATWILF_REGISTRY");

  int case_id = 0;
  std::string triple_text;
  int n = 8;
  int order = env_order();
  std::string report_path;
  std::string expr_text;
  std::string channels = "series,tree,recurrence,refined";
  bool full = false;
  bool unsafe_n = false;

  auto* count = app.add_subcommand("count", "exhaustive avoider counts for n = 0..N");
  count->add_option("--case", case_id, "registry case id");
  count->add_option("--triple", triple_text, "patterns, e.g. 1324,2341,3142");
  count->add_option("-n,--n", n, "largest length to count");
  count->add_flag("--force", unsafe_n, "allow n beyond the built-in cap");

  auto* series = app.add_subcommand("series", "expand a registry case or an expression");
  series->add_option("--case", case_id, "registry case id");
  series->add_option("--expr", expr_text, "formula to expand instead of a case");
  series->add_option("--order", order, "truncation order (exclusive)");

  auto* verify = app.add_subcommand("verify", "cross-validate one case");
  verify->add_option("--case", case_id, "registry case id")->required();
  verify->add_option("-n,--n", n, "largest length to check");
  verify->add_option("--channels", channels, "comma list from series,tree,recurrence,refined");
  verify->add_option("--report", report_path, "write JSON lines here");

  auto* verify_all_cmd = app.add_subcommand("verify-all", "cross-validate every case");
  verify_all_cmd->add_option("-n,--n", n, "largest length to check");
  verify_all_cmd->add_option("--channels", channels, "comma list from series,tree,recurrence,refined");
  verify_all_cmd->add_option("--report", report_path, "write JSON lines here");

  auto* symmetry = app.add_subcommand("symmetry", "reverse/complement/inverse orbit of a triple");
  symmetry->add_option("--case", case_id, "registry case id");
  symmetry->add_option("--triple", triple_text, "patterns, e.g. 1324,2341,3142");

  auto* tree = app.add_subcommand("tree", "succession-rule level census (cases 69 and 88)");
  tree->add_option("--case", case_id, "69 or 88")->required();
  tree->add_option("-n,--n", n, "deepest level");
  tree->add_flag("--full", full, "print the per-label census, not just totals");

  auto* recurrence = app.add_subcommand("recurrence", "first-letter table (cases 231 and 241)");
  recurrence->add_option("--case", case_id, "231 or 241")->required();
  recurrence->add_option("-n,--n", n, "largest row");
  recurrence->add_flag("--full", full, "print the a and b tables, not just row sums");

  CLI11_PARSE(app, argc, argv);

  try {
    const Registry reg = Registry::load(registry_path);

    if (count->parsed()) {
      const PatternTriple t = resolve_triple(reg, case_id, triple_text);
      if (n > kEnumerateCap && !unsafe_n)
        throw CapacityError("n=" + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(kEnumerateCap) + "; pass --force to override");
      const auto seq = count_sequence(n, t);
      for (int i = 0; i <= n; ++i)
        std::cout << i << " " << seq.counts[static_cast<size_t>(i)].str() << "\n";
      return 0;
    }

    if (series->parsed()) {
      GfPtr e;
      if (!expr_text.empty()) e = parse_gf(expr_text);
      else if (case_id > 0) e = reg.case_entry(case_id).formula;
      else throw InputError("need --case or --expr");
      print_series(eval_gf(e, order), order);
      return 0;
    }

    if (verify->parsed() || verify_all_cmd->parsed()) {
      VerifyOptions opt;
      opt.n_max = n;
      opt.series = channels.find("series") != std::string::npos;
      opt.tree = channels.find("tree") != std::string::npos;
      opt.recurrence = channels.find("recurrence") != std::string::npos;
      opt.refined = channels.find("refined") != std::string::npos;
      opt.series_order = order;
      const auto recs = verify->parsed() ? verify_case(reg, case_id, opt)
                                         : verify_all(reg, opt);
      return write_report(report_path, recs);
    }

    if (symmetry->parsed()) {
      const PatternTriple t = resolve_triple(reg, case_id, triple_text);
      for (const auto& m : symmetry_class(t)) std::cout << m.str() << "\n";
      return 0;
    }

    if (tree->parsed()) {
      if (case_id != 69 && case_id != 88) throw InputError("tree rules exist for cases 69 and 88");
      const RuleSystem rs = case_id == 69 ? rules_case69() : rules_case88();
      if (full) {
        const auto census = level_census(rs, n);
        for (size_t i = 0; i < census.size(); ++i) {
          std::cout << "level " << rs.root_level + static_cast<int>(i) << ":";
          for (const auto& [label, mult] : census[i])
            std::cout << " (" << label.k << "," << label.t << ")x" << mult.str();
          std::cout << "\n";
        }
      } else {
        const auto totals = level_counts(rs, n);
        for (size_t i = 0; i < totals.size(); ++i)
          std::cout << rs.root_level + static_cast<int>(i) << " " << totals[i].str() << "\n";
      }
      return 0;
    }

    if (recurrence->parsed()) {
      if (case_id != 231 && case_id != 241)
        throw InputError("recurrence tables exist for cases 231 and 241");
      const RecurrenceTable tab = case_id == 231 ? table_case231(n) : table_case241(n);
      if (full) {
        for (int row = 1; row <= tab.n_max; ++row) {
          std::cout << "a(" << row << ";j):";
          for (int j = 1; j <= row; ++j)
            std::cout << " " << tab.a[static_cast<size_t>(row)][static_cast<size_t>(j)].str();
          std::cout << "\n";
        }
        for (int row = 1; row <= tab.n_max; ++row) {
          std::cout << "b(" << row << ";j):";
          for (int j = 1; j <= row; ++j)
            std::cout << " " << tab.b[static_cast<size_t>(row)][static_cast<size_t>(j)].str();
          std::cout << "\n";
        }
      }
      for (int row = 1; row <= tab.n_max; ++row)
        std::cout << row << " " << tab.row_sums[static_cast<size_t>(row)].str() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
