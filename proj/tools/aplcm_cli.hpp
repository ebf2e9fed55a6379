#pragma once

#include <aplcm/aplcm.hpp>

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace aplcm::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

using json = nlohmann::ordered_json;

namespace detail {

// Raised for argument combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string dec(std::uint64_t v) { return std::to_string(v); }

inline json factors_json(const FactoredInteger& f) {
  json out = json::object();
  for (const auto& [p, e] : f.factors()) out[dec(p)] = dec(e);
  return out;
}

struct Range {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
};

// "4" or "1..6".
inline Range parse_range(const std::string& s) {
  auto number = [&](const std::string& part) {
    try {
      const Natural v = Natural::parse(part);
      if (!v.fits_u64()) throw UsageError("--n value out of range: " + part);
      return v.to_u64();
    } catch (const FormatError&) {
      throw UsageError("--n expects N or A..B with decimal integers, got '" + s + "'");
    }
  };
  Range r;
  if (const auto dots = s.find(".."); dots != std::string::npos) {
    r.first = number(s.substr(0, dots));
    r.last = number(s.substr(dots + 2));
  } else {
    r.first = r.last = number(s);
  }
  if (r.first == 0) throw UsageError("--n must be >= 1");
  if (r.last < r.first) throw UsageError("--n range is empty: " + s);
  return r;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  [[nodiscard]] std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
};

inline void emit_json(std::ostream& out, const std::string& command, json inputs, json result, const Timer& timer) {
  json doc;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["result"] = std::move(result);
  doc["elapsed_ms"] = timer.ms();
  out << doc.dump() << '\n';
}

inline json progression_inputs(std::uint64_t k, std::uint64_t a, std::uint64_t b) {
  return json{{"k", dec(k)}, {"a", dec(a)}, {"b", dec(b)}};
}

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using detail::dec;
  CLI::App app{"Exact lcm and smallest periods for windows of arithmetic progressions", "aplcm"};
  app.require_subcommand(1);

  std::uint64_t k = 0, a = 1, b = 0, p = 0, k_max = 0;
  std::string n_spec, method, table_path, format = "tsv", suite, budget_spec = "default";
  bool want_json = false, want_verify = false;
  unsigned jobs = 1;
  std::function<int()> action;

  auto add_prog = [&](CLI::App* sub) {
    sub->add_option("--a", a, "common difference (>= 1)")->check(CLI::PositiveNumber);
    sub->add_option("--b", b, "offset (>= 0)");
  };

  auto* period_cmd = app.add_subcommand("period", "closed-form smallest period");
  period_cmd->add_option("--k", k, "window has k+1 terms")->required();
  add_prog(period_cmd);
  period_cmd->add_flag("--verify", want_verify, "confirm with the exhaustive oracle");
  period_cmd->add_flag("--json", want_json);

  auto* g_cmd = app.add_subcommand("g", "evaluate g (or its p-adic valuation) on a range of n");
  g_cmd->add_option("--k", k)->required();
  add_prog(g_cmd);
  g_cmd->add_option("--n", n_spec, "N or A..B")->required();
  g_cmd->add_option("--p", p, "report v_p(g) instead of g");
  g_cmd->add_flag("--json", want_json);

  auto* lcm_cmd = app.add_subcommand("lcm", "lcm of the window at n");
  lcm_cmd->add_option("--k", k)->required();
  add_prog(lcm_cmd);
  lcm_cmd->add_option("--n", n_spec)->required();
  lcm_cmd->add_option("--method", method)->check(CLI::IsMember({"direct", "period"}));
  lcm_cmd->add_option("--table", table_path, "period table file to load, or to create if missing");
  lcm_cmd->add_flag("--json", want_json);

  auto* witness_cmd = app.add_subcommand("witness", "index where shifting by p^(e-1) changes v_p(g)");
  witness_cmd->add_option("--k", k)->required();
  add_prog(witness_cmd);
  witness_cmd->add_option("--p", p)->required();
  witness_cmd->add_flag("--json", want_json);

  auto* table_cmd = app.add_subcommand("table", "k, L_k, delta, period for k = 0..k-max");
  table_cmd->add_option("--k-max", k_max)->required();
  add_prog(table_cmd);
  table_cmd->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));
  table_cmd->add_flag("--json", want_json, "same as --format json");

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("suite", suite, "suite name or 'all'")->required();
  verify_cmd->add_option("--budget", budget_spec, "'default' or an operation count");
  verify_cmd->add_option("--jobs", jobs)->check(CLI::Range(1U, 256U));
  verify_cmd->add_flag("--json", want_json);

  const detail::Timer timer;

  period_cmd->callback([&] {
    action = [&] {
      const Progression prog(a, b);
      PeriodReport r = smallest_period(prog, k);
      bool agrees = true;
      if (want_verify) {
        r.oracle_value = smallest_period_oracle(prog, k, WorkBudget::from_env());
        agrees = *r.oracle_value == r.closed_form.value();
      }
      const FactoredInteger lk = L(k);
      if (want_json) {
        json removed = json::array();
        for (const auto& [q, e] : r.removed_primes) removed.push_back({{"prime", dec(q)}, {"exponent", dec(e)}});
        json per_prime = json::object();
        for (const auto& [q, v] : r.per_prime) per_prime[dec(q)] = v.to_string();
        json result{{"period", r.closed_form.value().to_string()},
                    {"factorization", detail::factors_json(r.closed_form)},
                    {"L_k", lk.value().to_string()},
                    {"a_reduced", dec(r.a_reduced)},
                    {"delta", r.delta.to_string()},
                    {"delta_prime", r.delta_prime ? json(dec(*r.delta_prime)) : json(nullptr)},
                    {"removed_primes", removed},
                    {"per_prime", per_prime}};
        if (r.oracle_value) result["oracle"] = {{"value", r.oracle_value->to_string()}, {"agrees", agrees}};
        detail::emit_json(out, "period", detail::progression_inputs(k, a, b), result, timer);
      } else {
        out << "period = " << r.closed_form.value() << " = " << r.closed_form.to_string() << '\n';
        out << "L_k = " << lk.value() << " = " << lk.to_string() << '\n';
        out << "a_reduced = " << r.a_reduced << " (d = " << prog.d() << ")\n";
        out << "delta = " << r.delta;
        if (r.delta_prime) out << " (p = " << *r.delta_prime << ")";
        out << '\n' << "removed primes:";
        if (r.removed_primes.empty()) out << " none";
        for (const auto& [q, e] : r.removed_primes) out << ' ' << q << '^' << e;
        out << '\n';
        if (r.oracle_value) out << "oracle = " << *r.oracle_value << (agrees ? " (agrees)" : " (DISAGREES)") << '\n';
      }
      return agrees ? kOk : kCheckFailed;
    };
  });

  g_cmd->callback([&] {
    action = [&] {
      const Progression prog(a, b);
      const auto range = detail::parse_range(n_spec);
      const bool valuation = g_cmd->count("--p") > 0;
      if (valuation && !prog.is_reduced()) {
        throw detail::UsageError("--p requires a reduced progression; gcd(a,b) = " + dec(prog.d()));
      }
      if (valuation && !is_prime(p)) throw detail::UsageError("--p " + dec(p) + " is not prime");
      json values = json::array();
      for (std::uint64_t n = range.first;; ++n) {
        const Window w(n, k);
        const std::string v = valuation ? dec(gp_direct(p, prog, w)) : g(prog, w).to_string();
        if (want_json) {
          values.push_back(v);
        } else {
          out << v << '\n';
        }
        if (n == range.last) break;
      }
      if (want_json) {
        json inputs = detail::progression_inputs(k, a, b);
        inputs["n"] = n_spec;
        if (valuation) inputs["p"] = dec(p);
        detail::emit_json(out, "g", inputs, values, timer);
      }
      return kOk;
    };
  });

  lcm_cmd->callback([&] {
    action = [&] {
      const Progression prog(a, b);
      const auto range = detail::parse_range(n_spec);
      if (range.first != range.last) throw detail::UsageError("lcm takes a single --n");
      const std::uint64_t n = range.first;
      const bool run_direct = method.empty() || method == "direct";
      const bool run_period = method.empty() || method == "period" || !table_path.empty();

      std::optional<Natural> direct, via_period;
      std::optional<std::uint64_t> period;
      if (run_direct) direct = lcm_many(window_terms(prog, Window(n, k)));
      if (run_period) {
        std::optional<PeriodTable> table;
        if (!table_path.empty() && std::filesystem::exists(table_path)) {
          table = load_period_table(table_path);
          const auto expected = smallest_period(prog, k).closed_form.value();
          if (table->progression() != prog || table->k() != k || Natural(table->period()) != expected) {
            throw detail::UsageError("table '" + table_path + "' does not match a=" + dec(a) + " b=" + dec(b) +
                                     " k=" + dec(k) + " period=" + expected.to_string());
          }
        } else {
          table = build_period_table(prog, k, WorkBudget::from_env());
          if (!table_path.empty()) save_period_table(table_path, *table);
        }
        period = table->period();
        via_period = fast_lcm(*table, n);
      }
      const bool agree = !(direct && via_period) || *direct == *via_period;
      const Natural& shown = direct ? *direct : *via_period;
      if (want_json) {
        json inputs = detail::progression_inputs(k, a, b);
        inputs["n"] = dec(n);
        inputs["method"] = method.empty() ? "both" : method;
        json result{{"lcm", shown.to_string()}, {"agree", agree}};
        if (direct) result["direct"] = direct->to_string();
        if (via_period) result["period_method"] = via_period->to_string();
        if (period) result["period"] = dec(*period);
        detail::emit_json(out, "lcm", inputs, result, timer);
      } else {
        out << shown << '\n';
        if (!agree) err << "method disagreement: direct " << *direct << " vs period " << *via_period << '\n';
      }
      return agree ? kOk : kCheckFailed;
    };
  });

  witness_cmd->callback([&] {
    action = [&] {
      const Progression prog(a, b);
      const Witness w = nonperiod_witness(p, prog, k);
      if (want_json) {
        json inputs = detail::progression_inputs(k, a, b);
        inputs["p"] = dec(p);
        detail::emit_json(out, "witness", inputs,
                          json{{"n0", dec(w.n0)},
                               {"shift", dec(w.shift)},
                               {"value_at_n0", dec(w.value_at_n0)},
                               {"value_at_shifted", dec(w.value_at_shifted)}},
                          timer);
      } else {
        out << "n0=" << w.n0 << " shift=" << w.shift << " values " << w.value_at_n0 << " vs " << w.value_at_shifted
            << '\n';
      }
      return kOk;
    };
  });

  table_cmd->callback([&] {
    action = [&] {
      const Progression prog(a, b);
      const bool as_json = want_json || format == "json";
      json rows = json::array();
      if (!as_json) out << "k\tL_k\tdelta\tperiod\n";
      for (std::uint64_t kk = 0; kk <= k_max; ++kk) {
        const PeriodReport r = smallest_period(prog, kk);
        const std::string lk = L(kk).value().to_string();
        if (as_json) {
          rows.push_back({{"k", dec(kk)},
                          {"L_k", lk},
                          {"delta", r.delta.to_string()},
                          {"period", r.closed_form.value().to_string()}});
        } else {
          out << kk << '\t' << lk << '\t' << r.delta << '\t' << r.closed_form.value() << '\n';
        }
      }
      if (as_json) {
        detail::emit_json(out, "table", json{{"k_max", dec(k_max)}, {"a", dec(a)}, {"b", dec(b)}}, rows, timer);
      }
      return kOk;
    };
  });

  verify_cmd->callback([&] {
    action = [&] {
      std::vector<std::pair<std::string, verify::SuiteFn>> selected;
      if (suite == "all") {
        selected = verify::suites();
      } else if (auto f = verify::find_suite(suite)) {
        selected.emplace_back(suite, *f);
      } else {
        std::string names;
        for (const auto& [name, fn] : verify::suites()) names += " " + name;
        throw detail::UsageError("unknown suite '" + suite + "'; known:" + names + " all");
      }
      verify::SuiteOptions opt;
      if (budget_spec != "default") opt.budget.ops = WorkBudget::parse(budget_spec);
      opt.jobs = jobs;

      bool passed = true;
      json reports = json::array();
      for (const auto& [name, fn] : selected) {
        const auto rep = fn(opt);
        passed = passed && rep.passed();
        if (want_json) {
          json failures = json::array();
          for (const auto& f : rep.failures) {
            failures.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
          }
          reports.push_back({{"suite", rep.suite},
                             {"passed", rep.passed()},
                             {"cases_run", rep.cases_run},
                             {"failures", failures},
                             {"elapsed", rep.elapsed_seconds}});
        } else {
          out << (rep.passed() ? "PASS " : "FAIL ") << rep.suite << " cases=" << rep.cases_run
              << " failures=" << rep.failures.size() << " elapsed=" << rep.elapsed_seconds << "s\n";
          constexpr std::size_t kShown = 20;
          for (std::size_t i = 0; i < std::min(kShown, rep.failures.size()); ++i) {
            const auto& f = rep.failures[i];
            out << "  " << f.input << ": expected " << f.expected << ", got " << f.actual << '\n';
          }
          if (rep.failures.size() > kShown) out << "  ... " << rep.failures.size() - kShown << " more\n";
        }
      }
      if (want_json) {
        detail::emit_json(out, "verify",
                          json{{"suite", suite}, {"budget", dec(opt.budget.ops)}, {"jobs", dec(jobs)}},
                          json{{"passed", passed}, {"reports", reports}}, timer);
      }
      return passed ? kOk : kCheckFailed;
    };
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << " (raise APLCM_BUDGET to allow it)\n";
    return kUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace aplcm::cli
