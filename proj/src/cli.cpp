#include "dedesum/cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "dedesum/abelian.hpp"
#include "dedesum/errors.hpp"
#include "dedesum/verify.hpp"

namespace dedesum::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

ordered_json envelope(const std::string& command) {
  ordered_json j;
  j["command"] = command;
  return j;
}

void emit(ordered_json j, std::ostream& out) {
  j["version"] = kVersion;
  out << j.dump(2) << "\n";
}

// value of chi(n) in the "zeta_r^t" notation used by the character table
std::string rotation_string(const DirichletCharacter& chi, long long n) {
  auto t = chi.rotation(n);
  if (!t) return "0";
  if (*t == 0) return "1";
  std::string s = "zeta_" + std::to_string(chi.order());
  if (*t != 1) s += "^" + std::to_string(*t);
  return s;
}

int cmd_sum(long long c, long long d, const std::string& oracle, bool json,
            std::ostream& out) {
  Rational exact = dedekind_sum(c, d);
  std::optional<Rational> sawtooth;
  std::optional<double> cotangent;
  bool agree = true;
  double tol = static_cast<double>(d) * std::pow(2.0, -40);
  if (oracle == "sawtooth") {
    sawtooth = dedekind_sum_sawtooth(c, d);
    agree = *sawtooth == exact;
  } else if (oracle == "cotangent") {
    cotangent = dedekind_sum_cotangent(c, d);
    agree = std::abs(*cotangent - exact.to_double()) < tol;
  }

  if (json) {
    ordered_json j = envelope("sum");
    j["inputs"] = {{"c", c}, {"d", d}};
    j["exact"] = exact.str();
    if (sawtooth)
      j["oracle"] = {{"name", "sawtooth"}, {"value", sawtooth->str()}, {"agree", agree}};
    if (cotangent)
      j["oracle"] = {{"name", "cotangent"},
                     {"value", *cotangent},
                     {"tolerance", tol},
                     {"agree", agree}};
    emit(std::move(j), out);
  } else {
    out << exact.str() << "\n";
    if (sawtooth)
      out << "sawtooth: " << sawtooth->str() << (agree ? " (agree)" : " (MISMATCH)") << "\n";
    if (cotangent)
      out << "cotangent: " << format_double(*cotangent)
          << (agree ? " (agree)" : " (MISMATCH)") << "\n";
  }
  if (!agree) throw InternalInconsistency("dedekind sum oracle disagrees");
  return 0;
}

int cmd_chars(long long f, bool odd_only, bool json, std::ostream& out) {
  auto chars = all_characters(f);
  auto group = chars.front().group_ptr();

  if (json) {
    ordered_json j = envelope("chars");
    j["inputs"] = {{"f", f}, {"odd_only", odd_only}};
    ordered_json comps = ordered_json::array();
    for (const auto& comp : group->components())
      comps.push_back({{"generator", comp.generator}, {"order", comp.order}});
    j["unit_group"] = std::move(comps);
    ordered_json arr = ordered_json::array();
    for (const auto& chi : chars) {
      if (odd_only && !chi.is_odd()) continue;
      ordered_json c;
      c["exponents"] = chi.exponents();
      c["order"] = chi.order();
      c["parity"] = chi.is_odd() ? "odd" : "even";
      c["conductor"] = chi.conductor();
      c["primitive"] = chi.is_primitive();
      ordered_json values = ordered_json::array();
      for (long long n = 1; n < std::max<long long>(f, 2); ++n)
        values.push_back(rotation_string(chi, n));
      c["values"] = std::move(values);
      arr.push_back(std::move(c));
    }
    j["characters"] = std::move(arr);
    emit(std::move(j), out);
    return 0;
  }

  out << "f=" << f << " phi=" << group->phi() << " generators:";
  for (const auto& comp : group->components())
    out << " (" << comp.generator << ": order " << comp.order << ")";
  out << "\n";
  for (const auto& chi : chars) {
    if (odd_only && !chi.is_odd()) continue;
    out << "exponents=[";
    for (size_t i = 0; i < chi.exponents().size(); ++i)
      out << (i ? "," : "") << chi.exponents()[i];
    out << "] order=" << chi.order() << " parity=" << (chi.is_odd() ? "odd" : "even")
        << " conductor=" << chi.conductor()
        << (chi.is_primitive() ? " primitive" : "") << " values:";
    for (long long n = 1; n < std::max<long long>(f, 2); ++n)
      out << " " << rotation_string(chi, n);
    out << "\n";
  }
  return 0;
}

int cmd_classnum(long long D, const std::string& oracle, bool json, std::ostream& out) {
  Oracle which = Oracle::none;
  if (oracle == "forms") which = Oracle::forms;
  else if (oracle == "analytic") which = Oracle::analytic;
  else if (oracle == "all") which = Oracle::all;
  ClassNumberReport report = class_number(D, which);

  if (json) {
    ordered_json j = envelope("classnum");
    j["inputs"] = {{"D", D}, {"oracle", oracle.empty() ? "none" : oracle}};
    j["h"] = report.h;
    j["w"] = report.w;
    j["method"] = "formula";
    j["exact_sum"] = report.exact_sum.str();
    if (report.forms_h) j["forms_oracle"] = *report.forms_h;
    if (report.analytic_h) {
      j["analytic_oracle"] = *report.analytic_h;
      j["analytic_tolerance"] = 1e-6;
    }
    j["oracles_agree"] = report.oracles_agree;
    emit(std::move(j), out);
  } else {
    out << "D = " << D << "\n";
    out << "h = " << report.h << "\n";
    out << "exact_sum = " << report.exact_sum.str() << "\n";
    if (report.forms_h) out << "forms_oracle = " << *report.forms_h << "\n";
    if (report.analytic_h)
      out << "analytic_oracle = " << format_double(*report.analytic_h) << "\n";
    if (report.forms_h || report.analytic_h)
      out << "oracles_agree = " << (report.oracles_agree ? "true" : "false") << "\n";
  }
  if (!report.oracles_agree)
    throw InternalInconsistency("class number oracles disagree");
  return 0;
}

int cmd_relclassnum(std::optional<long long> cyclotomic, long long modulus,
                    const std::vector<std::vector<long long>>& char_specs,
                    std::optional<int> hasse_q, bool json, std::ostream& out) {
  AbelianField field;
  if (cyclotomic) {
    field = cyclotomic_field(*cyclotomic);
    if (hasse_q) {
      field.hasse_q = *hasse_q;
      field.hasse_provenance = "user-supplied";
    }
  } else {
    if (modulus < 1 || char_specs.empty())
      throw std::domain_error("relclassnum needs --cyclotomic or --modulus with --char");
    auto group = unit_group(modulus);
    std::vector<DirichletCharacter> gens;
    for (const auto& exps : char_specs) gens.emplace_back(group, exps);
    field = field_from_characters(modulus, std::move(gens), hasse_q);
  }
  RelativeClassNumberReport report = relative_class_number(field);

  if (json) {
    ordered_json j = envelope("relclassnum");
    if (cyclotomic)
      j["inputs"] = {{"cyclotomic", *cyclotomic}};
    else
      j["inputs"] = {{"modulus", modulus}, {"generators", char_specs}};
    j["h_minus"] = report.h_minus;
    j["degree"] = field.degree;
    j["w"] = report.w;
    j["hasse_q"] = report.hasse_q;
    j["hasse_provenance"] = field.hasse_provenance;
    ordered_json arr = ordered_json::array();
    for (const auto& c : report.contributions)
      arr.push_back({{"conductor", c.conductor},
                     {"order", c.order},
                     {"kind", c.conjugate_pair ? "conjugate-pair" : "real"},
                     {"exact", c.exact}});
    j["contributions"] = std::move(arr);
    j["exact_value"] = report.exact_value.str();
    j["float_check"] = report.float_check;
    emit(std::move(j), out);
  } else {
    out << "h_minus = " << report.h_minus << "\n";
    out << "degree = " << field.degree << "  w = " << report.w << "  Q = "
        << report.hasse_q << " (" << field.hasse_provenance << ")\n";
    out << "factors:\n";
    for (const auto& c : report.contributions)
      out << "  conductor " << c.conductor << " order " << c.order << " "
          << (c.conjugate_pair ? "conjugate-pair" : "real") << " value " << c.exact
          << "\n";
    out << "float_check = " << format_double(report.float_check) << "\n";
  }
  return 0;
}

struct SweepRow {
  long long D = 0;
  long long h = 0;
  std::string exact_sum;
  long long forms = 0;
  double analytic = 0.0;
  bool agree = false;
};

int cmd_sweep(long long max_d, int jobs, const std::string& csv_path, bool json,
              std::ostream& out) {
  if (max_d < 3) throw std::domain_error("sweep: --max-d must be >= 3");
  if (jobs < 1) throw std::domain_error("sweep: --jobs must be >= 1");
  std::vector<long long> ds;
  for (long long D = 3; D <= max_d; ++D)
    if (is_fundamental_discriminant(D)) ds.push_back(D);

  std::vector<SweepRow> rows(ds.size());
  std::atomic<size_t> next{0};
  std::exception_ptr worker_error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= ds.size()) return;
        ClassNumberReport r = class_number(ds[i], Oracle::all);
        rows[i] = {r.D, r.h, r.exact_sum.str(), *r.forms_h, *r.analytic_h,
                   r.oracles_agree};
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!worker_error) worker_error = std::current_exception();
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (worker_error) std::rethrow_exception(worker_error);

  auto write_csv = [&](std::ostream& os) {
    os << "D,h,exact_sum,forms_oracle,analytic_oracle,agree\n";
    for (const auto& r : rows)
      os << r.D << "," << r.h << "," << r.exact_sum << "," << r.forms << ","
         << format_double(r.analytic) << "," << (r.agree ? "true" : "false") << "\n";
  };
  if (!csv_path.empty()) {
    std::ofstream file(csv_path);
    if (!file) throw std::domain_error("sweep: cannot open " + csv_path);
    write_csv(file);
  }
  if (json) {
    ordered_json j = envelope("sweep");
    j["inputs"] = {{"max_d", max_d}, {"jobs", jobs}};
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows)
      arr.push_back({{"D", r.D},
                     {"h", r.h},
                     {"exact_sum", r.exact_sum},
                     {"forms_oracle", r.forms},
                     {"analytic_oracle", r.analytic},
                     {"agree", r.agree}});
    j["rows"] = std::move(arr);
    emit(std::move(j), out);
  } else if (csv_path.empty()) {
    write_csv(out);
  }
  for (const auto& r : rows)
    if (!r.agree) throw InternalInconsistency("sweep found an oracle disagreement");
  return 0;
}

int cmd_verify(const std::string& suite, long long max_d, long long max_f,
               long long max_p, long long samples, std::uint64_t seed, double tol,
               bool json, std::ostream& out, std::ostream& err) {
  std::vector<verify::Result> results;
  auto run_suite = [&](const std::string& name) {
    if (name == "reciprocity")
      results.push_back(verify::reciprocity(max_d ? max_d : 2000, samples, seed));
    else if (name == "vanishing")
      results.push_back(verify::vanishing(max_f));
    else if (name == "oracles")
      results.push_back(verify::oracle_equivalence(max_d ? max_d : 200));
    else if (name == "parity")
      results.push_back(verify::parity(max_p));
    else if (name == "l1sq")
      results.push_back(verify::l1sq_agreement(max_f, tol));
    else
      return false;
    return true;
  };
  if (suite == "all") {
    for (const char* name : {"reciprocity", "vanishing", "oracles", "parity", "l1sq"})
      run_suite(name);
  } else if (!run_suite(suite)) {
    err << "unknown suite \"" << suite
        << "\" (expected reciprocity|vanishing|oracles|parity|l1sq|all)\n";
    return 1;
  }

  bool all_ok = true;
  if (json) {
    ordered_json j = envelope("verify");
    j["inputs"] = {{"suite", suite}};
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
      arr.push_back({{"suite", r.suite},
                     {"checks", r.checks},
                     {"violations", r.violations},
                     {"first_counterexample", r.first_counterexample}});
      all_ok = all_ok && r.ok();
    }
    j["results"] = std::move(arr);
    emit(std::move(j), out);
  } else {
    for (const auto& r : results) {
      out << (r.ok() ? "[ok]   " : "[FAIL] ") << r.suite << ": " << r.checks
          << " checks, " << r.violations << " violations\n";
      if (!r.ok()) out << "       first counterexample: " << r.first_counterexample << "\n";
      all_ok = all_ok && r.ok();
    }
  }
  return all_ok ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Dedekind sums, Dirichlet L-values at s=1, and class numbers"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // sum
  long long sum_c = 0, sum_d = 1;
  std::string sum_oracle;
  bool sum_json = false;
  auto* sum = app.add_subcommand("sum", "Dedekind sum s(c,d)");
  sum->add_option("c", sum_c, "numerator argument")->required();
  sum->add_option("d", sum_d, "modulus, d >= 1")->required();
  sum->add_option("--oracle", sum_oracle, "cross-check: sawtooth|cotangent")
      ->check(CLI::IsMember({"sawtooth", "cotangent"}));
  sum->add_flag("--json", sum_json, "JSON output");

  // chars
  long long chars_f = 1;
  bool chars_odd = false, chars_json = false;
  auto* chars = app.add_subcommand("chars", "Dirichlet character table mod f");
  chars->add_option("f", chars_f, "modulus")->required()->check(CLI::PositiveNumber);
  chars->add_flag("--odd-only", chars_odd, "only odd characters");
  chars->add_flag("--json", chars_json, "JSON output");

  // classnum
  long long cn_D = 0;
  std::string cn_oracle;
  bool cn_json = false;
  auto* cn = app.add_subcommand("classnum", "class number of Q(sqrt(-D))");
  cn->add_option("D", cn_D, "positive D with -D a fundamental discriminant")->required();
  cn->add_option("--oracle", cn_oracle, "cross-check: forms|analytic|all")
      ->check(CLI::IsMember({"forms", "analytic", "all"}));
  cn->add_flag("--json", cn_json, "JSON output");

  // relclassnum
  std::optional<long long> rel_cyclotomic;
  long long rel_modulus = 0;
  std::vector<std::vector<long long>> rel_chars;
  std::optional<int> rel_q;
  bool rel_json = false;
  auto* rel = app.add_subcommand("relclassnum",
                                 "relative class number of an imaginary abelian field");
  auto* rel_cyc_opt = rel->add_option("--cyclotomic", rel_cyclotomic, "full field Q(zeta_n)");
  auto* rel_mod_opt =
      rel->add_option("--modulus", rel_modulus, "common modulus of the generators");
  rel->add_option("--char", rel_chars,
                  "generator character as comma-separated exponents (repeatable)")
      ->delimiter(',');
  rel->add_option("--hasse-q", rel_q, "explicit Hasse unit index")
      ->check(CLI::IsMember({1, 2}));
  rel->add_flag("--json", rel_json, "JSON output");
  rel_cyc_opt->excludes(rel_mod_opt);

  // sweep
  long long sweep_max = 10'000;
  int sweep_jobs = 1;
  std::string sweep_csv;
  bool sweep_json = false;
  auto* sweep = app.add_subcommand("sweep", "class numbers for all fundamental -D");
  sweep->add_option("--max-d", sweep_max, "largest D (default 10000)");
  sweep->add_option("--jobs", sweep_jobs, "worker threads");
  sweep->add_option("--csv", sweep_csv, "write CSV to this path");
  sweep->add_flag("--json", sweep_json, "JSON output");

  // verify
  std::string verify_suite;
  long long verify_max_d = 0, verify_max_f = 100, verify_max_p = 5000;
  long long verify_samples = 10'000;
  std::uint64_t verify_seed = 0x5eed;
  double verify_tol = 1e-8;
  bool verify_json = false;
  auto* ver = app.add_subcommand("verify", "run a named property suite");
  ver->add_option("suite", verify_suite,
                  "reciprocity|vanishing|oracles|parity|l1sq|all")
      ->required();
  ver->add_option("--max-d", verify_max_d, "pair bound (reciprocity: 2000, oracles: 200)");
  ver->add_option("--max-f", verify_max_f, "modulus bound (default 100)");
  ver->add_option("--max-p", verify_max_p, "prime bound (default 5000)");
  ver->add_option("--samples", verify_samples, "random pairs for reciprocity");
  ver->add_option("--seed", verify_seed, "RNG seed");
  ver->add_option("--tol", verify_tol, "float tolerance (default 1e-8)");
  ver->add_flag("--json", verify_json, "JSON output");

  std::vector<const char*> argv;
  argv.push_back("dedesum");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (sum->parsed()) return cmd_sum(sum_c, sum_d, sum_oracle, sum_json, out);
    if (chars->parsed()) return cmd_chars(chars_f, chars_odd, chars_json, out);
    if (cn->parsed()) return cmd_classnum(cn_D, cn_oracle, cn_json, out);
    if (rel->parsed())
      return cmd_relclassnum(rel_cyclotomic, rel_modulus, rel_chars, rel_q, rel_json, out);
    if (sweep->parsed())
      return cmd_sweep(sweep_max, sweep_jobs, sweep_csv, sweep_json, out);
    if (ver->parsed())
      return cmd_verify(verify_suite, verify_max_d, verify_max_f, verify_max_p,
                        verify_samples, verify_seed, verify_tol, verify_json, out, err);
    return 1;
  } catch (const CLI::ParseError& e) {
    // usage problems all exit 1; --help/--version exit 0
    return app.exit(e, out, err) == 0 ? 0 : 1;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return 2;
  } catch (const NotRational& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return 2;
  } catch (const UndeterminedUnitIndex& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dedesum::cli
