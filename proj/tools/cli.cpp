#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kempner/asymptotics.hpp"
#include "kempner/errors.hpp"
#include "kempner/fischer.hpp"
#include "kempner/kempner.hpp"
#include "kempner/moments.hpp"
#include "kempner/oracle.hpp"
#include "kempner/ratfun.hpp"
#include "kempner/verify.hpp"

namespace kempner::cli {

namespace {

using Json = nlohmann::ordered_json;

const char* const kTableRowLabels[] = {
    "b log(b)",
    "b log(b) - c1/b",
    "b log(b) - c1/b - c2/b^2",
    "b log(b) - c1/b - c2/b^2 - c3/b^3",
    "K",
};

struct Options {
  long base = 10;
  int prec = 9;
  int count = 10;
  int m = 4;
  int order = 3;
  int terms = 10;
  int levels = 4;
  std::vector<long> bases;
  bool json = false;
  bool exact = false;
  bool quick = false;
};

void emit(std::ostream& out, const Json& record) { out << record.dump() << '\n'; }

int cmd_sum(const Options& o, std::ostream& out) {
  const KempnerResult r = kempner_sum(o.base, o.prec);
  if (o.json) {
    Json rec;
    rec["command"] = "sum";
    rec["inputs"] = {{"base", o.base}, {"prec", o.prec}};
    rec["value"] = r.value.to_string();
    rec["precision"] = r.precision;
    rec["truncation_order"] = r.truncation_order;
    rec["tail_bound"] = r.tail_bound.to_string();
    emit(out, rec);
  } else {
    out << r.value.to_string() << '\n';
  }
  return kSuccess;
}

int cmd_table(const Options& o, std::ostream& out) {
  if (o.bases.empty()) throw DomainError("--bases needs at least one base");
  // cells[row][column]
  std::vector<std::vector<std::string>> cells(5);
  std::vector<std::string> tails;
  for (const long b : o.bases) {
    const ExpansionTerms terms = expansion_terms(b, o.prec + 5);
    for (int k = 0; k <= 3; ++k) cells[static_cast<std::size_t>(k)].push_back(terms.partial(k).rescaled(o.prec).to_string());
    const KempnerResult r = kempner_sum(b, o.prec);
    cells[4].push_back(r.value.to_string());
    tails.push_back(r.tail_bound.to_string());
  }

  if (o.json) {
    for (std::size_t c = 0; c < o.bases.size(); ++c) {
      Json rec;
      rec["command"] = "table";
      rec["inputs"] = {{"base", o.bases[c]}, {"prec", o.prec}};
      Json values;
      for (std::size_t row = 0; row < 5; ++row) values[kTableRowLabels[row]] = cells[row][c];
      rec["values"] = values;
      rec["precision"] = o.prec;
      rec["tail_bound"] = tails[c];
      emit(out, rec);
    }
    return kSuccess;
  }

  std::size_t label_width = 0;
  for (const char* label : kTableRowLabels) label_width = std::max(label_width, std::string(label).size());
  std::vector<std::size_t> widths;
  for (std::size_t c = 0; c < o.bases.size(); ++c) {
    std::size_t w = ("b=" + std::to_string(o.bases[c])).size();
    for (const auto& row : cells) w = std::max(w, row[c].size());
    widths.push_back(w);
  }
  auto pad_left = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  out << std::string(label_width, ' ');
  for (std::size_t c = 0; c < o.bases.size(); ++c) out << "  " << pad_left("b=" + std::to_string(o.bases[c]), widths[c]);
  out << '\n';
  for (std::size_t row = 0; row < 5; ++row) {
    const std::string label = kTableRowLabels[row];
    out << label << std::string(label_width - label.size(), ' ');
    for (std::size_t c = 0; c < o.bases.size(); ++c) out << "  " << pad_left(cells[row][c], widths[c]);
    out << '\n';
  }
  return kSuccess;
}

int cmd_moments(const Options& o, std::ostream& out) {
  const MomentTable table = compute_moments(o.base, o.count);
  std::vector<std::string> values;
  for (const auto& v : table.values()) values.push_back(o.exact ? to_string(v) : to_decimal(v, o.prec).to_string());
  if (o.json) {
    Json rec;
    rec["command"] = "moments";
    rec["inputs"] = {{"base", o.base}, {"count", o.count}, {"exact", o.exact}};
    rec["values"] = values;
    rec["precision"] = o.exact ? Json(nullptr) : Json(o.prec);
    emit(out, rec);
  } else {
    for (std::size_t m = 0; m < values.size(); ++m) out << "v_" << m << " = " << values[m] << '\n';
  }
  return kSuccess;
}

int cmd_ratfun(const Options& o, std::ostream& out) {
  const auto coeffs = taylor(o.m, o.order);
  std::vector<std::string> values;
  for (const auto& c : coeffs) values.push_back(to_string(c));
  if (o.json) {
    Json rec;
    rec["command"] = "ratfun";
    rec["inputs"] = {{"m", o.m}, {"order", o.order}};
    rec["values"] = values;
    rec["residue"] = to_string(residue_at_zero(o.m));
    emit(out, rec);
  } else {
    out << "w_" << o.m << " = ";
    for (std::size_t k = 0; k < values.size(); ++k) {
      out << (k ? " + " : "") << "(" << values[k] << ")";
      if (k) out << " c^" << k;
    }
    out << " + O(c^" << values.size() << ")\n";
  }
  return kSuccess;
}

int cmd_fischer(const Options& o, std::ostream& out) {
  const FischerTable table = fischer_betas(o.terms);
  const DecimalValue sum = fischer_sum(o.prec);
  std::vector<std::string> betas;
  for (const auto& b : table.betas) betas.push_back(to_string(b));
  if (o.json) {
    Json rec;
    rec["command"] = "fischer";
    rec["inputs"] = {{"prec", o.prec}, {"terms", o.terms}};
    rec["betas"] = betas;
    rec["value"] = sum.to_string();
    rec["precision"] = o.prec;
    rec["series_terms"] = fischer_terms(o.prec);
    emit(out, rec);
  } else {
    for (std::size_t m = 0; m < betas.size(); ++m) out << "beta_" << m << " = " << betas[m] << '\n';
    out << "sum = " << sum.to_string() << '\n';
  }
  return kSuccess;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const auto levels = enumerate_levels(o.base, o.levels);
  for (const auto& level : levels) {
    const std::string partial = to_decimal(level.cumulative, o.prec).to_string();
    std::string upper = "n/a";
    if (o.base >= 3) upper = to_decimal(bracket_upper(o.base, level.level, level.cumulative), o.prec).to_string();
    if (o.json) {
      Json rec;
      rec["command"] = "oracle";
      rec["inputs"] = {{"base", o.base}, {"level", level.level}};
      rec["count"] = level.count;
      rec["value"] = partial;
      rec["upper"] = upper;
      rec["precision"] = o.prec;
      emit(out, rec);
    } else {
      out << "level " << level.level << "  count " << level.count << "  lower " << partial << "  upper " << upper
          << '\n';
    }
  }
  return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto results = run_verification(o.quick);
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed ? 1 : 0;
    if (o.json) {
      Json rec;
      rec["command"] = "verify";
      rec["property"] = r.name;
      rec["passed"] = r.passed;
      rec["detail"] = r.detail;
      emit(out, rec);
    } else {
      out << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.detail.empty()) out << "  " << r.detail;
      out << '\n';
    }
  }
  if (!o.json) out << passed << "/" << results.size() << " properties passed\n";
  return passed == results.size() ? kSuccess : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kempner sums K(b, b-1) by the moment series, with independent cross-checks", "kempner"};
  app.require_subcommand(1);
  Options o;

  auto* sum = app.add_subcommand("sum", "K(b, b-1) to P decimal digits");
  sum->add_option("--base", o.base, "base b >= 2")->required();
  sum->add_option("--prec", o.prec, "digits after the point")->required();

  auto* table = app.add_subcommand("table", "expansion rows and exact K for several bases");
  table->add_option("--bases", o.bases, "comma-separated bases")->required()->delimiter(',');
  table->add_option("--prec", o.prec, "digits after the point")->required();

  auto* moments = app.add_subcommand("moments", "moments v_0..v_M");
  moments->add_option("--base", o.base, "base b >= 2")->required();
  moments->add_option("--count", o.count, "largest order M")->required();
  moments->add_flag("--exact", o.exact, "print exact rationals");
  moments->add_option("--prec", o.prec, "digits for decimal output")->capture_default_str();

  auto* ratfun = app.add_subcommand("ratfun", "Taylor coefficients of w_m at c = 0");
  ratfun->add_option("--m", o.m, "moment index")->required();
  ratfun->add_option("--order", o.order, "highest power of c")->required();

  auto* fischer = app.add_subcommand("fischer", "Fischer coefficients and series for K(10, 9)");
  fischer->add_option("--prec", o.prec, "digits after the point")->required();
  fischer->add_option("--terms", o.terms, "print beta_0..beta_M")->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force partial sums and brackets");
  oracle->add_option("--base", o.base, "base b >= 2")->required();
  oracle->add_option("--levels", o.levels, "digit levels to enumerate")->required();
  oracle->add_option("--prec", o.prec, "digits for decimal output")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_flag("--quick", o.quick, "smaller grids");

  for (auto* sub : {sum, table, moments, ratfun, fischer, oracle, verify}) {
    sub->add_flag("--json", o.json, "one JSON record per line");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*sum) return cmd_sum(o, out);
    if (*table) return cmd_table(o, out);
    if (*moments) return cmd_moments(o, out);
    if (*ratfun) return cmd_ratfun(o, out);
    if (*fischer) return cmd_fischer(o, out);
    if (*oracle) return cmd_oracle(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const InvariantViolation& e) {
    err << "internal assertion: " << e.what() << '\n';
    return kInternal;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace kempner::cli
