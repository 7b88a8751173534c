#include "signedperm/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "signedperm/bijections.hpp"
#include "signedperm/genfun.hpp"
#include "signedperm/recurrences.hpp"

namespace signedperm {
namespace {

using nlohmann::json;

/// Runtime knobs shared by the subcommands.  Defaults keep every run
/// reproducible: a fixed sampling seed and a deterministic shard merge.
struct Config {
  unsigned long long max_enumeration = 0;  // 0: use enumeration_limit()
  unsigned long long rng_seed = 20240811ULL;
  int parallelism = 1;  // worker count for the bijection sweep, 0 = auto
};

unsigned long long effective_limit(const Config& cfg) {
  return cfg.max_enumeration == 0 ? enumeration_limit() : cfg.max_enumeration;
}

Order to_order(const std::string& name) {
  return name == "r" ? Order::R : Order::Natural;
}

/// Upper end of a default check range [lo, def_hi]; a user --max-n clamps the
/// default but never below lo (<= 0 means "keep the default").
int clamp_hi(int def_hi, int lo, int max_n) {
  if (max_n <= 0) return def_hi;
  return std::max(lo, std::min(def_hi, max_n));
}

std::string aligned_rows(const std::vector<std::vector<long long>>& rows) {
  size_t width = 1;
  for (const auto& row : rows) {
    for (long long v : row) width = std::max(width, std::to_string(v).size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j > 0) os << ' ';
      os << std::setw(static_cast<int>(width)) << row[j];
    }
    os << '\n';
  }
  return os.str();
}

json rec_json(const RecurrenceReport& r) {
  return json{{"id", r.id},          {"order", order_name(r.order)},
              {"n_min", r.n_min},    {"n_max", r.n_max},
              {"ok", r.ok},          {"witness", r.witness}};
}

json run_rec_b(const Config& cfg, int max_n, bool& ok) {
  json arr = json::array();
  for (Order order : {Order::Natural, Order::R}) {
    const RecurrenceReport r = check_two_sided_recurrence(
        order, 2, clamp_hi(6, 2, max_n), effective_limit(cfg));
    ok = ok && r.ok;
    arr.push_back(rec_json(r));
  }
  return arr;
}

json run_rec_i(const Config& cfg, int max_n, bool& ok) {
  json arr = json::array();
  for (Order order : {Order::Natural, Order::R}) {
    const RecurrenceReport r = check_involution_recurrence(
        order, 3, clamp_hi(9, 3, max_n), effective_limit(cfg));
    ok = ok && r.ok;
    arr.push_back(rec_json(r));
  }
  return arr;
}

json run_rec_j(const Config& cfg, int max_n, bool& ok) {
  json arr = json::array();
  const int hi = clamp_hi(10, 4, max_n) / 2 * 2;  // even sizes only
  for (Order order : {Order::Natural, Order::R}) {
    const RecurrenceReport r =
        check_fpf_recurrence(order, 4, hi, effective_limit(cfg));
    ok = ok && r.ok;
    arr.push_back(rec_json(r));
  }
  return arr;
}

json run_pde(const Config& cfg, int max_n, bool& ok) {
  const RecurrenceReport r = check_differential_recurrence(
      2, clamp_hi(6, 2, max_n), effective_limit(cfg));
  ok = ok && r.ok;
  return json::array({rec_json(r)});
}

/// Closed-form vs brute-force insertion-type counts: exhaustive for small n,
/// seeded random sampling beyond that.
json run_dtypes_sweep(const Config& cfg, int max_n, bool& ok) {
  std::string witness;
  long long checked = 0;
  const auto check_one = [&](const SignedPermutation& pi) {
    for (Order order : {Order::Natural, Order::R}) {
      for (int sign : {+1, -1}) {
        const TypeCounts brute =
            count_insertion_types(pi, sign, order, CountMethod::BruteForce);
        const TypeCounts closed =
            count_insertion_types(pi, sign, order, CountMethod::ClosedForm);
        ++checked;
        if (!(brute == closed) && witness.empty()) {
          witness = "pi=" + pi.str() + " order=" + order_name(order) +
                    " sign=" + (sign > 0 ? "+" : "-");
        }
      }
    }
  };
  const int ex_hi = max_n <= 0 ? 4 : std::min(4, std::max(1, max_n));
  for (int n = 1; n <= ex_hi; ++n) {
    for (const auto& pi :
         enumerate_family(n, PermClass::All, effective_limit(cfg))) {
      check_one(pi);
    }
  }
  const int rand_hi = max_n <= 0 ? 8 : std::min(8, max_n);
  const int samples = 1000;
  std::mt19937_64 rng(cfg.rng_seed);
  for (int n = 5; n <= rand_hi; ++n) {
    for (int rep = 0; rep < samples; ++rep) {
      check_one(random_signed_permutation(n, rng));
    }
  }
  ok = ok && witness.empty();
  return json{{"id", "dtypes"},
              {"exhaustive_max_n", ex_hi},
              {"random_max_n", std::max(rand_hi, 4)},
              {"samples_per_n", samples},
              {"seed", cfg.rng_seed},
              {"checked", checked},
              {"ok", witness.empty()},
              {"witness", witness}};
}

/// Closed path-count formulas vs boundary classification, all eight families.
json run_paths_sweep(const Config& cfg, int max_n, bool& ok) {
  std::string witness;
  long long checked = 0;
  const int hi = clamp_hi(5, 0, max_n);
  for (int n = 0; n <= hi; ++n) {
    for (const auto& pi :
         enumerate_family(n, PermClass::All, effective_limit(cfg))) {
      for (Order order : {Order::Natural, Order::R}) {
        for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
          for (int value : {0, 1}) {
            for (int sign : {+1, -1}) {
              const PathFamily family{axis, value, sign};
              const long long formula =
                  count_paths(pi, order, family, PathCountMethod::Formula);
              const long long boundary =
                  count_paths(pi, order, family, PathCountMethod::Boundary);
              ++checked;
              if (formula != boundary && witness.empty()) {
                witness = "pi=" + pi.str() + " order=" + order_name(order) +
                          " axis=" + (axis == Axis::Horizontal ? "h" : "v") +
                          " value=" + std::to_string(value) +
                          " sign=" + (sign > 0 ? "+" : "-");
              }
            }
          }
        }
      }
    }
  }
  ok = ok && witness.empty();
  return json{{"id", "paths"},   {"max_n", hi},
              {"checked", checked}, {"ok", witness.empty()},
              {"witness", witness}};
}

json run_bijection_sweep(const Config& cfg, int max_n, bool& ok) {
  json arr = json::array();
  const auto run = [&](BijectionFamily family, int n) {
    for (Order order : {Order::Natural, Order::R}) {
      const auto t0 = std::chrono::steady_clock::now();
      const BijectionReport r = verify_bijection(
          family, order, n, effective_limit(cfg), cfg.parallelism);
      const double wall_ms =
          std::chrono::duration<double, std::milli>(
              std::chrono::steady_clock::now() - t0)
              .count();
      ok = ok && r.ok;
      arr.push_back(json{{"family", family_name(r.family)},
                         {"order", order_name(r.order)},
                         {"n", r.n},
                         {"ok", r.ok},
                         {"sources", r.sources},
                         {"targets", r.targets},
                         {"class_counts", r.class_counts},
                         {"failures", r.ok ? json::array()
                                           : json::array({r.witness})},
                         {"wall_ms", wall_ms}});
    }
  };
  for (int n = 1; n <= clamp_hi(5, 1, max_n); ++n) {
    run(BijectionFamily::TwoSided, n);
  }
  for (int n = 1; n <= clamp_hi(6, 1, max_n); ++n) {
    run(BijectionFamily::Involution, n);
  }
  for (int n = 2; n <= clamp_hi(6, 2, max_n); n += 2) {
    run(BijectionFamily::FpfInvolution, n);
  }
  return arr;
}

/// Natural vs r order: identical two-sided triangles and involution vectors,
/// different fixed-point-free vectors already at size 2.
json run_equidist(const Config& cfg, int max_n, bool& ok) {
  const unsigned long long limit = effective_limit(cfg);
  std::string witness;
  for (int n = 1; n <= clamp_hi(6, 1, max_n); ++n) {
    if (two_sided_triangle(n, Order::Natural, limit).cell !=
            two_sided_triangle(n, Order::R, limit).cell &&
        witness.empty()) {
      witness = "two-sided triangle differs at n=" + std::to_string(n);
    }
  }
  for (int n = 1; n <= clamp_hi(8, 1, max_n); ++n) {
    if (descent_vector(n, PermClass::Involution, Order::Natural, limit) !=
            descent_vector(n, PermClass::Involution, Order::R, limit) &&
        witness.empty()) {
      witness = "involution vector differs at n=" + std::to_string(n);
    }
  }
  const auto fpf_nat =
      descent_vector(2, PermClass::FpfInvolution, Order::Natural, limit);
  const auto fpf_r =
      descent_vector(2, PermClass::FpfInvolution, Order::R, limit);
  if ((fpf_nat != std::vector<long long>{0, 2, 0} ||
       fpf_r != std::vector<long long>{0, 1, 1}) &&
      witness.empty()) {
    witness = "fixed-point-free witness at size 2 not reproduced";
  }
  ok = ok && witness.empty();
  return json{{"id", "equidist"},
              {"ok", witness.empty()},
              {"witness", witness},
              {"fpf_natural_size2", fpf_nat},
              {"fpf_r_size2", fpf_r}};
}

json run_genfun(SeriesIdentity id, int max_x, int max_t,
                unsigned long long limit, bool& ok) {
  const TruncSeries lhs = lhs_series(id, max_x, max_t, limit);
  const TruncSeries rhs = rhs_series(id, max_x, max_t);
  const auto mismatch = compare_series(lhs, rhs);
  json coeffs = json::array();
  for (int a = 0; a <= max_x; ++a) {
    json row = json::array();
    for (int b = 0; b <= max_t; ++b) row.push_back(lhs.coeff(a, b).str());
    coeffs.push_back(std::move(row));
  }
  json j{{"family", id == SeriesIdentity::Involution ? "iub" : "jub"},
         {"max_x", max_x},
         {"max_t", max_t},
         {"equal", !mismatch.has_value()},
         {"lhs_coefficients", coeffs}};
  if (mismatch) {
    j["mismatch"] = json{{"x_power", mismatch->a},
                         {"t_power", mismatch->b},
                         {"lhs", mismatch->lhs.str()},
                         {"rhs", mismatch->rhs.str()}};
  } else {
    j["mismatch"] = nullptr;
  }
  ok = ok && !mismatch.has_value();
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Signed-permutation descent statistics toolkit"};
  app.require_subcommand(1);

  Config cfg;
  int rc = 0;

  const auto order_choice =
      CLI::IsMember({"natural", "r"}, CLI::ignore_case);
  const auto format_choice =
      CLI::IsMember({"json", "csv", "text"}, CLI::ignore_case);

  std::string perm_text;
  std::string order_str = "natural";
  std::string format = "text";
  int n_value = 0;
  bool fpf = false;
  int max_n = 0;
  int max_x = 6;
  int max_t = 6;
  std::string genfun_family = "iub";

  // --- stats ---------------------------------------------------------------
  auto* stats = app.add_subcommand(
      "stats", "Descent statistics of one signed permutation (JSON)");
  stats->add_option("--perm", perm_text, "window, e.g. \"3,-2,-5,1,-4\"")
      ->required();
  stats->add_option("--order", order_str, "comparison order")
      ->check(order_choice);
  stats->callback([&] {
    const SignedPermutation pi = SignedPermutation::parse(perm_text);
    const Order order = to_order(order_str);
    const json j{{"n", pi.size()},
                 {"window", pi.window()},
                 {"order", order_name(order)},
                 {"des", des(pi, order)},
                 {"ides", ides(pi, order)},
                 {"negatives", pi.negative_count()},
                 {"descent_set", descent_set(pi, order)},
                 {"inverse", pi.inverse().window()},
                 {"involution", pi.is_involution()},
                 {"fpf_involution", pi.is_fpf_involution()}};
    out << j.dump(2) << '\n';
  });

  // --- triangle --------------------------------------------------------------
  auto* triangle = app.add_subcommand(
      "triangle", "Joint (des, ides) distribution over all of B_n");
  triangle->add_option("--n", n_value, "size n")->required()
      ->check(CLI::NonNegativeNumber);
  triangle->add_option("--order", order_str, "comparison order")
      ->check(order_choice);
  triangle->add_option("--format", format, "output format")
      ->check(format_choice);
  triangle->add_option("--max-enum", cfg.max_enumeration,
                       "enumeration budget override");
  triangle->callback([&] {
    const Triangle t =
        two_sided_triangle(n_value, to_order(order_str), effective_limit(cfg));
    if (format == "csv") {
      out << triangle_csv(t);
    } else if (format == "json") {
      out << triangle_json(t) << '\n';
    } else {
      out << aligned_rows(t.cell);
    }
  });

  // --- involutions -----------------------------------------------------------
  auto* involutions = app.add_subcommand(
      "involutions", "Descent vector over (fixed-point-free) involutions");
  involutions->add_option("--n", n_value, "size n")->required()
      ->check(CLI::NonNegativeNumber);
  involutions->add_flag("--fpf", fpf, "restrict to fixed-point-free ones");
  involutions->add_option("--order", order_str, "comparison order")
      ->check(order_choice);
  involutions->add_option("--format", format, "output format")
      ->check(format_choice);
  involutions->add_option("--max-enum", cfg.max_enumeration,
                          "enumeration budget override");
  involutions->callback([&] {
    const PermClass family =
        fpf ? PermClass::FpfInvolution : PermClass::Involution;
    const std::vector<long long> vec = descent_vector(
        n_value, family, to_order(order_str), effective_limit(cfg));
    if (format == "csv") {
      out << "k,count\n";
      for (size_t k = 0; k < vec.size(); ++k) {
        out << k << ',' << vec[k] << '\n';
      }
    } else if (format == "json") {
      const json j{{"n", n_value},
                   {"order", order_name(to_order(order_str))},
                   {"family", fpf ? "fpf-involution" : "involution"},
                   {"counts", vec}};
      out << j.dump() << '\n';
    } else {
      for (size_t k = 0; k < vec.size(); ++k) {
        if (k > 0) out << ' ';
        out << vec[k];
      }
      out << '\n';
    }
  });

  // --- trace -----------------------------------------------------------------
  auto* trace = app.add_subcommand(
      "trace", "ASCII board plus every grid path, one row,col point per line");
  trace->add_option("--perm", perm_text, "window, e.g. \"2,1,-3\"")
      ->required();
  trace->add_option("--order", order_str, "comparison order")
      ->check(order_choice);
  trace->callback([&] {
    const SignedPermutation pi = SignedPermutation::parse(perm_text);
    const Order order = to_order(order_str);
    out << render_board(pi) << '\n';
    for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
      for (int value : {0, 1}) {
        for (int sign : {+1, -1}) {
          const PathFamily family{axis, value, sign};
          for (int start = 1; start <= pi.size() + 1; ++start) {
            const int row = axis == Axis::Horizontal ? start : 1;
            const int col = axis == Axis::Horizontal ? 1 : start;
            const InsertionType type =
                insertion_type(pi, row, col, sign, order);
            const int shift =
                axis == Axis::Horizontal ? type.des_shift : type.ides_shift;
            if (shift != value) continue;
            out << '\n'
                << '[' << value << (axis == Axis::Horizontal ? 'h' : 'v')
                << (sign > 0 ? '+' : '-') << "] start=" << start << '\n';
            for (const GridPoint& p : trace_path(pi, order, family, start)) {
              out << p.row << ',' << p.col << '\n';
            }
          }
        }
      }
    }
  });

  // --- dtypes ----------------------------------------------------------------
  auto* dtypes = app.add_subcommand(
      "dtypes", "Insertion type of every grid point, both signs");
  dtypes->add_option("--perm", perm_text, "window, e.g. \"2,-4,3,-1,5\"")
      ->required();
  dtypes->add_option("--order", order_str, "comparison order")
      ->check(order_choice);
  dtypes->add_option("--format", format, "output format")
      ->check(format_choice);
  dtypes->callback([&] {
    const SignedPermutation pi = SignedPermutation::parse(perm_text);
    const Order order = to_order(order_str);
    const int n = pi.size();
    std::vector<std::array<int, 6>> table;
    for (int r = 1; r <= n + 1; ++r) {
      for (int c = 1; c <= n + 1; ++c) {
        const InsertionType plus = insertion_type(pi, r, c, +1, order);
        const InsertionType minus = insertion_type(pi, r, c, -1, order);
        table.push_back({r, c, plus.des_shift, plus.ides_shift,
                         minus.des_shift, minus.ides_shift});
      }
    }
    const TypeCounts plus =
        count_insertion_types(pi, +1, order, CountMethod::ClosedForm);
    const TypeCounts minus =
        count_insertion_types(pi, -1, order, CountMethod::ClosedForm);
    const auto summary = [](const TypeCounts& t) {
      std::ostringstream os;
      os << "(0,0)=" << t.at(0, 0) << " (1,0)=" << t.at(1, 0)
         << " (0,1)=" << t.at(0, 1) << " (1,1)=" << t.at(1, 1);
      return os.str();
    };
    if (format == "json") {
      json points = json::array();
      for (const auto& row : table) {
        points.push_back(json{{"row", row[0]},
                              {"col", row[1]},
                              {"plus", {row[2], row[3]}},
                              {"minus", {row[4], row[5]}}});
      }
      const auto counts_json = [](const TypeCounts& t) {
        return json{{"00", t.at(0, 0)},
                    {"10", t.at(1, 0)},
                    {"01", t.at(0, 1)},
                    {"11", t.at(1, 1)}};
      };
      const json j{{"n", n},
                   {"order", order_name(order)},
                   {"window", pi.window()},
                   {"points", points},
                   {"plus_counts", counts_json(plus)},
                   {"minus_counts", counts_json(minus)}};
      out << j.dump(2) << '\n';
    } else if (format == "csv") {
      out << "row,col,plus_des,plus_ides,minus_des,minus_ides\n";
      for (const auto& row : table) {
        out << row[0] << ',' << row[1] << ',' << row[2] << ',' << row[3]
            << ',' << row[4] << ',' << row[5] << '\n';
      }
    } else {
      out << "row col +des +ides -des -ides\n";
      for (const auto& row : table) {
        out << std::setw(3) << row[0] << ' ' << std::setw(3) << row[1] << ' '
            << std::setw(4) << row[2] << ' ' << std::setw(5) << row[3] << ' '
            << std::setw(4) << row[4] << ' ' << std::setw(5) << row[5]
            << '\n';
      }
      out << "plus:  " << summary(plus) << '\n';
      out << "minus: " << summary(minus) << '\n';
    }
  });

  // --- verify ----------------------------------------------------------------
  auto* verify = app.add_subcommand(
      "verify", "Check the identities against brute-force enumeration");
  verify->require_subcommand(1);
  const auto add_verify_opts = [&](CLI::App* sub) {
    sub->add_option("--max-n", max_n, "clamp the default size ranges");
    sub->add_option("--max-enum", cfg.max_enumeration,
                    "enumeration budget override");
    sub->add_option("--seed", cfg.rng_seed, "sampling seed");
    sub->add_option("--jobs", cfg.parallelism, "worker threads (0 = auto)");
    return sub;
  };
  const auto bind_verify =
      [&](CLI::App* sub, json (*fn)(const Config&, int, bool&)) {
        add_verify_opts(sub);
        sub->callback([&, fn] {
          bool ok = true;
          const json report = fn(cfg, max_n, ok);
          out << report.dump(2) << '\n';
          rc = ok ? 0 : 1;
        });
      };
  bind_verify(verify->add_subcommand(
                  "rec-b", "two-sided triangle recurrence, both orders"),
              &run_rec_b);
  bind_verify(verify->add_subcommand(
                  "rec-i", "involution vector recurrence, both orders"),
              &run_rec_i);
  bind_verify(verify->add_subcommand(
                  "rec-j", "fixed-point-free vector recurrences"),
              &run_rec_j);
  bind_verify(verify->add_subcommand(
                  "pde", "differential recurrence for the joint polynomial"),
              &run_pde);
  bind_verify(verify->add_subcommand(
                  "dtypes", "closed-form insertion-type counts vs brute force"),
              &run_dtypes_sweep);
  bind_verify(verify->add_subcommand(
                  "paths", "path-count formulas vs boundary classification"),
              &run_paths_sweep);
  bind_verify(verify->add_subcommand(
                  "bijection", "round trips of the three marked bijections"),
              &run_bijection_sweep);
  bind_verify(verify->add_subcommand(
                  "equidist", "order equidistribution and the fpf witness"),
              &run_equidist);
  auto* verify_all =
      add_verify_opts(verify->add_subcommand("all", "every check above"));
  verify_all->callback([&] {
    bool ok = true;
    json report;
    report["rec-b"] = run_rec_b(cfg, max_n, ok);
    report["rec-i"] = run_rec_i(cfg, max_n, ok);
    report["rec-j"] = run_rec_j(cfg, max_n, ok);
    report["pde"] = run_pde(cfg, max_n, ok);
    report["dtypes"] = run_dtypes_sweep(cfg, max_n, ok);
    report["paths"] = run_paths_sweep(cfg, max_n, ok);
    report["bijection"] = run_bijection_sweep(cfg, max_n, ok);
    report["equidist"] = run_equidist(cfg, max_n, ok);
    const int gmax = max_n <= 0 ? 6 : std::min(6, max_n);
    report["genfun"] = json::array(
        {run_genfun(SeriesIdentity::Involution, gmax, 6,
                    effective_limit(cfg), ok),
         run_genfun(SeriesIdentity::FpfInvolution, gmax, 6,
                    effective_limit(cfg), ok)});
    report["ok"] = ok;
    out << report.dump(2) << '\n';
    rc = ok ? 0 : 1;
  });

  // --- genfun ----------------------------------------------------------------
  auto* genfun = app.add_subcommand(
      "genfun", "Compare a descent generating identity coefficient-wise");
  genfun->add_option("--family", genfun_family,
                     "iub (involutions) or jub (fixed-point-free)")
      ->check(CLI::IsMember({"iub", "jub"}, CLI::ignore_case));
  genfun->add_option("--max-x", max_x, "x truncation degree")
      ->check(CLI::NonNegativeNumber);
  genfun->add_option("--max-t", max_t, "t truncation degree")
      ->check(CLI::NonNegativeNumber);
  genfun->add_option("--max-enum", cfg.max_enumeration,
                     "enumeration budget override");
  genfun->callback([&] {
    bool ok = true;
    const SeriesIdentity id = genfun_family == "jub"
                                  ? SeriesIdentity::FpfInvolution
                                  : SeriesIdentity::Involution;
    const json report =
        run_genfun(id, max_x, max_t, effective_limit(cfg), ok);
    out << report.dump(2) << '\n';
    rc = ok ? 0 : 1;
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}

}  // namespace signedperm
