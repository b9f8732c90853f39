// kpoly command-line front end.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kpoly/kpoly.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kCounterexample = 2, kInvariant = 3 };

struct Options {
  std::string family;
  std::string left;
  std::string right;
  std::string a;
  std::string b;
  std::string basis;
  std::string target;
  std::string variant = "lascoux";
  std::string conjecture;
  std::string filter;
  std::string out;
  std::optional<long long> beta;
  std::optional<std::size_t> n;
  std::optional<unsigned> jobs;
  bool json = false;
  bool highest = false;
  int max_weight = 4;
  std::size_t max_len = 3;
  std::size_t max_zeros = 3;
  int verify_weight = 6;
  std::size_t verify_len = 4;
};

class Output {
 public:
  explicit Output(std::string const& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) {
        throw std::invalid_argument("cannot open " + path);
      }
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

kpoly::BetaPolynomial family_polynomial(Options const& o) {
  auto const f = kpoly::parse_family(o.family);
  auto const a = kpoly::parse_composition(o.a);
  if (o.n) {
    if (kpoly::k_theoretic(f) == kpoly::Family::quasi_grothendieck) {
      auto p = kpoly::quasi_grothendieck_poly(a, *o.n);
      return kpoly::is_cohomological(f) ? p.specialize_beta(0) : p;
    }
    if (kpoly::k_theoretic(f) == kpoly::Family::symmetric_grothendieck) {
      auto p = kpoly::symmetric_grothendieck_poly(a, *o.n);
      return kpoly::is_cohomological(f) ? p.specialize_beta(0) : p;
    }
    throw std::invalid_argument("--n applies only to quasi-/symmetric Grothendieck families");
  }
  return kpoly::family_poly(f, a);
}

int run_compute(Options const& o, std::ostream& out) {
  auto p = family_polynomial(o);
  if (o.beta) {
    p = p.specialize_beta(kpoly::Integer(*o.beta));
  }
  if (o.json) {
    auto j = p.to_json();
    j["family"] = o.family;
    j["index"] = kpoly::parse_composition(o.a).vec();
    j["beta"] = o.beta ? nlohmann::json(*o.beta) : nlohmann::json(nullptr);
    out << j.dump() << '\n';
  } else {
    out << p.to_text() << '\n';
  }
  return kOk;
}

int run_expand(Options const& o, std::ostream& out) {
  Options src = o;
  src.family = o.target;
  auto const e = kpoly::expand_in_basis(family_polynomial(src), kpoly::parse_family(o.basis));
  if (o.json) {
    out << e.to_json().dump() << '\n';
  } else {
    out << e.to_text() << '\n';
  }
  return kOk;
}

int run_product(Options const& o, std::ostream& out) {
  auto const e = kpoly::product_expansion(
      kpoly::parse_family(o.left), kpoly::parse_composition(o.a),
      kpoly::parse_family(o.right), kpoly::parse_composition(o.b),
      kpoly::parse_family(o.basis));
  bool const positive = kpoly::is_positive(e);
  if (o.json) {
    auto j = e.to_json();
    j["positive"] = positive;
    out << j.dump() << '\n';
  } else {
    out << e.to_text() << '\n' << "positive: " << (positive ? "yes" : "no") << '\n';
  }
  return kOk;
}

int run_fillings(Options const& o, std::ostream& out) {
  auto const a = kpoly::parse_composition(o.a);
  auto const v = kpoly::parse_variant(o.variant);
  std::vector<kpoly::SetValuedFilling> fs;
  if (o.highest) {
    kpoly::HighestMode mode;
    if (v == kpoly::FillingVariant::atom) {
      mode = kpoly::HighestMode::meson;
    } else if (v == kpoly::FillingVariant::quasi) {
      mode = kpoly::HighestMode::quasi_yamanouchi;
    } else {
      throw std::invalid_argument("--highest needs --variant atom or quasi");
    }
    fs = kpoly::highest_fillings(a, mode);
  } else {
    fs = kpoly::enumerate_fillings(a, v);
  }
  if (o.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto const& F : fs) {
      auto j = F.to_json();
      j["weight"] = F.weight().vec();
      j["excess"] = F.excess();
      arr.push_back(std::move(j));
    }
    out << nlohmann::json{{"variant", o.variant},
                          {"index", a.vec()},
                          {"highest", o.highest},
                          {"count", fs.size()},
                          {"fillings", std::move(arr)}}
               .dump()
        << '\n';
  } else {
    for (auto const& F : fs) {
      out << F.to_text() << "weight " << F.weight().to_string() << ", excess "
          << F.excess() << "\n\n";
    }
    out << fs.size() << " fillings\n";
  }
  return kOk;
}

int run_scan(Options const& o, std::ostream& out) {
  auto const kind = kpoly::parse_conjecture(o.conjecture);
  unsigned const jobs = kpoly::resolve_jobs(o.jobs);
  std::cerr << "scan " << kpoly::to_string(kind) << " with " << jobs << " workers\n";
  auto const report =
      kpoly::conjecture_scan(kind, {o.max_weight, o.max_len, o.max_zeros}, jobs);
  report.write_jsonl(out);
  std::cerr << report.records.size() << " points, " << report.failures << " failures, "
            << report.errors << " errors\n";
  if (report.errors) return kInvariant;
  return report.failures ? kCounterexample : kOk;
}

int run_verify(Options const& o, std::ostream& out) {
  unsigned const jobs = kpoly::resolve_jobs(o.jobs);
  std::cerr << "verify with " << jobs << " workers\n";
  auto const report = kpoly::verify_identities(o.verify_weight, o.verify_len, jobs, o.filter);
  if (o.json) {
    out << report.to_json().dump() << '\n';
  } else {
    for (auto const& r : report.results) {
      out << (r.failed ? "FAIL " : "ok   ") << r.name << "  " << r.passed << " passed, "
          << r.failed << " failed";
      for (auto const& f : r.failures) out << "  [" << f << "]";
      out << '\n';
    }
    out << report.grid_size << " compositions\n";
  }
  return report.ok() ? kOk : kInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial families indexed by weak compositions"};
  app.require_subcommand(1, 1);
  Options o;

  auto* compute = app.add_subcommand("compute", "Monomial expansion of a family member");
  compute->add_option("--family", o.family, "Family name")->required();
  compute->add_option("--a", o.a, "Index, e.g. 0,2,0,1")->required();
  compute->add_option("--beta", o.beta, "Specialize beta to this integer");
  compute->add_option("--n", o.n, "Variable count for quasi-/symmetric Grothendieck");
  compute->add_flag("--json", o.json);

  auto* expand = app.add_subcommand("expand", "Expand a family member in a basis");
  expand->add_option("--target", o.target, "Family to expand")->required();
  expand->add_option("--a", o.a, "Index")->required();
  expand->add_option("--basis", o.basis, "Basis family")->required();
  expand->add_option("--n", o.n, "Variable count for quasi-/symmetric Grothendieck");
  expand->add_flag("--json", o.json);

  auto* product = app.add_subcommand("product", "Expand a product of two family members");
  product->add_option("--left", o.left, "First factor family")->required();
  product->add_option("--a", o.a, "First index")->required();
  product->add_option("--right", o.right, "Second factor family")->required();
  product->add_option("--b", o.b, "Second index")->required();
  product->add_option("--basis", o.basis, "Basis family")->required();
  product->add_flag("--json", o.json);

  auto* fillings = app.add_subcommand("fillings", "List set-valued skyline fillings");
  fillings->add_option("--variant", o.variant, "atom, quasi, key or lascoux");
  fillings->add_option("--a", o.a, "Index")->required();
  fillings->add_flag("--highest", o.highest, "Only meson-highest / quasiYamanouchi");
  fillings->add_flag("--json", o.json);

  auto* scan = app.add_subcommand("scan", "Check a conjecture over a bounded grid");
  scan->add_option("--conjecture", o.conjecture, "euler, kaon-product or lascoux-product")
      ->required();
  scan->add_option("--max-weight", o.max_weight);
  scan->add_option("--max-len", o.max_len);
  scan->add_option("--max-zeros", o.max_zeros);
  scan->add_option("--jobs", o.jobs);

  auto* verify = app.add_subcommand("verify", "Run the identity suite over a bounded grid");
  verify->add_option("--max-weight", o.verify_weight);
  verify->add_option("--max-len", o.verify_len);
  verify->add_option("--filter", o.filter, "Only identities whose name contains this");
  verify->add_option("--jobs", o.jobs);
  verify->add_flag("--json", o.json);

  for (auto* sub : {compute, expand, product, fillings, scan, verify}) {
    sub->add_option("--out", o.out, "Write results to this file");
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Output output(o.out);
    std::ostream& out = output.stream();
    if (compute->parsed()) return run_compute(o, out);
    if (expand->parsed()) return run_expand(o, out);
    if (product->parsed()) return run_product(o, out);
    if (fillings->parsed()) return run_fillings(o, out);
    if (scan->parsed()) return run_scan(o, out);
    if (verify->parsed()) return run_verify(o, out);
  } catch (kpoly::ExpansionError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvariant;
  } catch (std::invalid_argument const& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvariant;
  }
  return kUsage;
}
