// Command-line front end: dimension tables, oracle runs, verification suites
// and bracket normalization.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dncohom/cohomology.hpp"
#include "dncohom/forms.hpp"
#include "dncohom/pva.hpp"
#include "dncohom/theta.hpp"
#include "dncohom/varcalc.hpp"

using namespace dncohom;
using json = nlohmann::ordered_json;

namespace {

enum ExitCode { kOk = 0, kMismatch = 1, kInvalid = 2, kUnstable = 3 };

struct Range {
  int lo = 0;
  int hi = 0;
};

// Accepts "a..b" or a single integer.
Range parse_range(const std::string& s, const char* flag) {
  Range r;
  try {
    const auto dots = s.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
    } else {
      const auto a = s.substr(0, dots), b = s.substr(dots + 2);
      r.lo = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(s);
      r.hi = std::stoi(b, &used);
      if (used != b.size()) throw std::invalid_argument(s);
    }
  } catch (const std::logic_error&) {
    throw CLI::ValidationError(flag, "expected an integer or a range a..b, got '" + s + "'");
  }
  if (r.lo < 0 || r.hi < r.lo) throw CLI::ValidationError(flag, "range '" + s + "' is empty or negative");
  return r;
}

struct Entry {
  int p, d;
  std::int64_t dim;
  std::string method;
};

struct Options {
  int D = 2;
  std::string p = "0..3";
  std::string d = "0..4";
  int u_max = 2;
  std::string format = "table";
  std::uint64_t seed = 20240517;
  std::string out;
  std::string suite;
  std::vector<std::string> c;
};

std::string render_dims(int D, const std::vector<Entry>& entries, const Range& pr, const Range& dr, const std::string& format) {
  std::ostringstream os;
  auto find = [&](int p, int d) -> const Entry& {
    return *std::find_if(entries.begin(), entries.end(), [&](const Entry& e) { return e.p == p && e.d == d; });
  };
  if (format == "json") {
    json j;
    j["D"] = D;
    j["entries"] = json::array();
    for (const auto& e : entries) j["entries"].push_back({{"p", e.p}, {"d", e.d}, {"dim", e.dim}, {"method", e.method}});
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    os << "p";
    for (int d = dr.lo; d <= dr.hi; ++d) os << ",d=" << d;
    os << "\n";
    for (int p = pr.lo; p <= pr.hi; ++p) {
      os << p;
      for (int d = dr.lo; d <= dr.hi; ++d) os << "," << find(p, d).dim;
      os << "\n";
    }
  } else {
    std::size_t width = 3;
    for (const auto& e : entries) width = std::max(width, std::to_string(e.dim).size() + 1);
    os << "D = " << D << "\n" << std::setw(4) << "p\\d";
    for (int d = dr.lo; d <= dr.hi; ++d) os << std::setw(static_cast<int>(width)) << d;
    os << "\n";
    for (int p = pr.lo; p <= pr.hi; ++p) {
      os << std::setw(4) << p;
      for (int d = dr.lo; d <= dr.hi; ++d) os << std::setw(static_cast<int>(width)) << find(p, d).dim;
      os << "\n";
    }
  }
  return os.str();
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw CLI::ValidationError("--out", "cannot open " + o.out);
  f << text;
}

void check_D(int D) {
  if (D < 1 || D > static_cast<int>(kMaxIndexDim)) throw CLI::ValidationError("--D", "must lie in 1.." + std::to_string(kMaxIndexDim));
}

int run_dims(const Options& o, bool theta) {
  check_D(o.D);
  const auto pr = parse_range(o.p, "--p"), dr = parse_range(o.d, "--d");
  std::vector<Entry> entries;
  DimTable table;
  table.D = o.D;
  for (int p = pr.lo; p <= pr.hi; ++p)
    for (int d = dr.lo; d <= dr.hi; ++d) {
      if (theta) {
        entries.push_back({p, d, h_theta_dim(o.D, p, d), std::string(to_string(DimMethod::rank))});
        continue;
      }
      table.record(p, d, poisson_dim(o.D, p, d), DimMethod::rank);
      if (o.D >= 2)
        if (const auto c = corollary_dim(o.D, p, d)) table.record(p, d, *c, DimMethod::closed_form);
      const auto& e = table.entries.at({p, d});
      entries.push_back({p, d, e.dim, std::string(to_string(e.method))});
    }
  emit(o, render_dims(o.D, entries, pr, dr, o.format));
  return kOk;
}

int run_oracle(const Options& o) {
  check_D(o.D);
  if (o.u_max < 0) throw CLI::ValidationError("--u-max", "must be >= 0");
  const auto pr = parse_range(o.p, "--p"), dr = parse_range(o.d, "--d");
  std::vector<Entry> entries;
  for (int p = pr.lo; p <= pr.hi; ++p)
    for (int d = dr.lo; d <= dr.hi; ++d)
      entries.push_back({p, d, brute_cohomology(o.D, p, d, o.u_max), std::string(to_string(DimMethod::oracle))});
  emit(o, render_dims(o.D, entries, pr, dr, o.format));
  return kOk;
}

// Verification report: one line (or JSON entry) per check.
class Report {
 public:
  void add(const std::string& name, bool ok, const std::string& detail = "") { rows_.push_back({name, ok, detail}); }
  bool ok() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.ok; });
  }
  std::string render(const std::string& suite, const std::string& format) const {
    std::ostringstream os;
    if (format == "json") {
      json j;
      j["suite"] = suite;
      j["passed"] = ok();
      j["checks"] = json::array();
      for (const auto& r : rows_) j["checks"].push_back({{"name", r.name}, {"pass", r.ok}, {"detail", r.detail}});
      os << j.dump(2) << "\n";
    } else if (format == "csv") {
      os << "check,result\n";
      for (const auto& r : rows_) os << r.name << "," << (r.ok ? "pass" : "fail") << "\n";
    } else {
      for (const auto& r : rows_) {
        os << (r.ok ? "PASS " : "FAIL ") << r.name;
        if (!r.ok && !r.detail.empty()) os << "  (" << r.detail << ")";
        os << "\n";
      }
      const auto passed = std::count_if(rows_.begin(), rows_.end(), [](const Row& r) { return r.ok; });
      os << suite << ": " << passed << "/" << rows_.size() << " checks passed\n";
    }
    return os.str();
  }

 private:
  struct Row {
    std::string name;
    bool ok;
    std::string detail;
  };
  std::vector<Row> rows_;
};

void compare(Report& r, const std::string& name, std::int64_t got, std::int64_t want) {
  r.add(name, got == want, "got " + std::to_string(got) + ", expected " + std::to_string(want));
}

std::string cell(int D, int p, int d) {
  return "D=" + std::to_string(D) + " p=" + std::to_string(p) + " d=" + std::to_string(d);
}

void suite_golden_tables(Report& r) {
  struct Rows {
    int D;
    std::vector<std::int64_t> h2, h3;
  };
  const std::vector<Rows> tables{
      {2, {0, 1, 0, 2, 0, 2, 1, 2, 1}, {0, 0, 0, 1, 0, 1, 2, 1, 2}},
      {3, {0, 2, 1, 8, 3, 16, 13, 26, 26}, {0, 0, 1, 4, 6, 14, 29, 36, 72}},
      {4, {0, 3, 3, 20, 15, 66, 73}, {0, 0, 3, 11, 30, 75, 183}},
  };
  for (const auto& t : tables)
    for (std::size_t d = 0; d < t.h2.size(); ++d) {
      const int di = static_cast<int>(d);
      compare(r, "table " + cell(t.D, 2, di), poisson_dim(t.D, 2, di), t.h2[d]);
      compare(r, "table " + cell(t.D, 3, di), poisson_dim(t.D, 3, di), t.h3[d]);
    }
}

void suite_closed_forms(Report& r) {
  for (int p = 0; p <= 6; ++p)
    for (int d = 0; d <= 20; ++d) {
      const auto h = h_theta_dim(2, p, d);
      compare(r, "partition difference " + cell(2, p, d), h_theta_partition_difference_d2(p, d), h);
      if (p == 2 || p == 3) compare(r, "case formula " + cell(2, p, d), h_theta_closed_forms_d2(p, d), h);
    }
  for (int d = 3; d <= 30; ++d) compare(r, "H^2 closed form d=" + std::to_string(d), h2_closed_form_d2(d), poisson_dim(2, 2, d));
}

SuperDiffPolynomial random_poly(std::mt19937_64& rng, int D, int p, int d) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  SuperDiffPolynomial f(D);
  for (int k = 0; k < 4; ++k) {
    const auto mons = enumerate_monomials(D, p, d, p + static_cast<int>(rng() % 3));
    if (!mons.empty()) f.add_term(mons[rng() % mons.size()], coeff(rng));
  }
  return f;
}

void suite_identities(Report& r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int k = 0; k < 25; ++k) {
    const int D = 1 + static_cast<int>(rng() % 3);
    const auto f = random_poly(rng, D, static_cast<int>(rng() % 3), static_cast<int>(rng() % 3));
    const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(D));
    const std::string tag = " #" + std::to_string(k);
    r.add("Delta^2 = 0" + tag, delta_op(delta_op(f)).is_zero(), f.to_string());
    r.add("[Delta, d_x] = 0" + tag, delta_op(d_x(i, f)) == d_x(i, delta_op(f)), f.to_string());
    r.add("var_der_u d_x = 0" + tag, var_der_u(d_x(i, f)).is_zero(), f.to_string());
    r.add("var_der_theta d_x = 0" + tag, var_der_theta(d_x(i, f)).is_zero(), f.to_string());
  }
  for (int D = 1; D <= 3; ++D) r.add("[P, P] = 0, D=" + std::to_string(D), schouten(standard_bivector(D), standard_bivector(D)).is_zero());
}

void suite_homotopy(Report& r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int a = 2; a <= 3; ++a)
    for (int p = 1; p <= 2; ++p)
      for (int i = 0; i < a; ++i)
        for (int k = 0; k < 3; ++k) {
          const int D = a + static_cast<int>(rng() % 2);
          FormElement w(D, a);
          for (int t = 0; t < 3; ++t) {
            std::vector<int> axes;
            for (int j = 1; j <= a; ++j) axes.push_back(j);
            std::shuffle(axes.begin(), axes.end(), rng);
            axes.resize(static_cast<std::size_t>(i));
            w.add(axes, random_poly(rng, D, p, static_cast<int>(rng() % 3)));
          }
          auto lhs = homotopy_h(d_H(w), p, i + 1);
          if (i > 0) lhs += d_H(homotopy_h(w, p, i));
          const std::string name = "contraction a=" + std::to_string(a) + " D=" + std::to_string(D) + " p=" + std::to_string(p) +
                                   " i=" + std::to_string(i) + " #" + std::to_string(k);
          r.add(name, lhs == w, w.to_string());
          r.add("d_H^2 = 0, " + name.substr(12), d_H(d_H(w)).is_zero());
        }
}

void suite_pva(Report& r) {
  for (int D = 1; D <= 4; ++D)
    for (int d = 0; d <= 2; ++d) compare(r, "solve_h1 " + cell(D, 1, d), solve_h1(D, d, 2), poisson_dim(D, 1, d));
  for (int d = 0; d <= 3; ++d) compare(r, "solve_h2 " + cell(2, 2, d), solve_h2(2, d, 2), poisson_dim(2, 2, d));
  for (int d = 0; d <= 2; ++d) compare(r, "solve_h2 " + cell(3, 2, d), solve_h2(3, d, 2), poisson_dim(3, 2, d));
}

void suite_oracle(Report& r, int u_max) {
  for (int p = 0; p <= 2; ++p)
    for (int d = 0; d <= 3; ++d)
      compare(r, "oracle " + cell(2, p, d) + " u_max=" + std::to_string(u_max), brute_cohomology(2, p, d, u_max), poisson_dim(2, p, d));
}

int run_verify(const Options& o) {
  Report r;
  if (o.suite == "paper-tables") suite_golden_tables(r);
  else if (o.suite == "closed-forms") suite_closed_forms(r);
  else if (o.suite == "identities") suite_identities(r, o.seed);
  else if (o.suite == "homotopy") suite_homotopy(r, o.seed);
  else if (o.suite == "pva") suite_pva(r);
  else if (o.suite == "oracle") suite_oracle(r, o.u_max);
  emit(o, r.render(o.suite, o.format));
  return r.ok() ? kOk : kMismatch;
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw CLI::ValidationError("--c", "not a rational number: '" + s + "'");
  q.canonicalize();
  return q;
}

int run_normalize(const Options& o) {
  std::vector<Rational> c;
  for (const auto& s : o.c) c.push_back(parse_rational(s));
  NormalizationMatrix J;
  try {
    J = normalize_bracket(BracketSpec(c));
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--c", e.what());
  }
  std::ostringstream os;
  if (o.format == "json") {
    json j;
    j["D"] = c.size();
    j["c"] = json::array();
    for (const auto& x : c) j["c"].push_back(x.get_str());
    j["J"] = json::array();
    for (const auto& row : J.J) {
      json jr = json::array();
      for (const auto& x : row) jr.push_back(x.get_str());
      j["J"].push_back(jr);
    }
    os << j.dump(2) << "\n";
  } else {
    const char* sep = o.format == "csv" ? "," : " ";
    for (const auto& row : J.J) {
      for (std::size_t k = 0; k < row.size(); ++k) os << (k ? sep : "") << row[k].get_str();
      os << "\n";
    }
  }
  emit(o, os.str());
  return kOk;
}

void add_common(CLI::App* cmd, Options& o, bool window) {
  cmd->add_option("--D", o.D, "Number of independent variables")->capture_default_str();
  if (window) {
    cmd->add_option("--p", o.p, "Super degree window, a..b")->capture_default_str();
    cmd->add_option("--d", o.d, "Standard degree window, a..b")->capture_default_str();
  }
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}))->capture_default_str();
  cmd->add_option("--out", o.out, "Write the output to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poisson cohomology of scalar multidimensional first-order brackets"};
  app.require_subcommand(1);
  Options o;

  auto* dims = app.add_subcommand("dims", "dim H^p_d of the flat bracket over a (p, d) window");
  add_common(dims, o, true);
  auto* theta = app.add_subcommand("theta-dims", "dim of the quotient H^p_d(D) of Theta over a (p, d) window");
  add_common(theta, o, true);
  auto* oracle = app.add_subcommand("oracle", "Brute-force cohomology of d = [P, .] on local multivectors");
  add_common(oracle, o, true);
  oracle->add_option("--u-max", o.u_max, "Extra weight above p kept in the truncation")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"paper-tables", "closed-forms", "identities", "homotopy", "pva", "oracle"}));
  verify->add_option("--seed", o.seed, "Seed for the randomized suites")->capture_default_str();
  verify->add_option("--u-max", o.u_max, "Truncation for the oracle suite")->capture_default_str();
  verify->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}))->capture_default_str();
  verify->add_option("--out", o.out, "Write the report to this file");
  auto* normalize = app.add_subcommand("normalize", "Unimodular J with J c = xi_D for a bracket sum_i c_i d_i");
  normalize->add_option("--c", o.c, "Coefficients c_1 .. c_D (integers or fractions a/b)")->required()->delimiter(',');
  normalize->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}))->capture_default_str();
  normalize->add_option("--out", o.out, "Write the output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (*dims) return run_dims(o, false);
    if (*theta) return run_dims(o, true);
    if (*oracle) return run_oracle(o);
    if (*verify) return run_verify(o);
    if (*normalize) return run_normalize(o);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const TruncationUnstable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnstable;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
