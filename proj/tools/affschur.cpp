// affschur: command-line front end. Reads JSON (inline or from a file),
// writes JSON (default) or a text rendering to stdout.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "affschur/coproduct.hpp"
#include "affschur/errors.hpp"
#include "affschur/oracle.hpp"
#include "affschur/schur.hpp"
#include "affschur/stab.hpp"
#include "affschur/suites.hpp"
#include "affschur/vz.hpp"
#include "affschur/vz_checks.hpp"
#include "json_io.hpp"

using namespace affschur;
using io::json;

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kUsage = 2, kSchema = 3, kDomain = 4, kTriangularity = 5, kOracle = 6 };

struct Output {
  json result;
  std::string text;
  bool ok = true;
};

struct Options {
  std::string format = "json";
  int workers = 1;
  int n = 2;
  long r = 2;
  long band = 3;
  long bound = 3;
  long samples = 100;
  long width = 5;
  long max_t = 3;
  long max_alpha = 3;
  std::uint64_t seed = 1;
  std::optional<long> a_min, a_max;
  std::vector<std::string> inputs;
  std::string matrix, weight, monomial;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code(const std::string& code) {
  if (code == "schema_error" || code == "parse_error") return kSchema;
  if (code == "domain_error") return kDomain;
  if (code == "triangularity_violation") return kTriangularity;
  if (code == "oracle_inconsistency") return kOracle;
  return kCheckFailed;
}

int emit_error(const std::string& code, const std::string& message, int status) {
  const json j = {{"schema_version", io::kSchemaVersion}, {"error", {{"code", code}, {"message", message}}}};
  std::cout << j.dump(2) << '\n';
  return status;
}

int workers_from_env() {
  const char* s = std::getenv("AFFSCHUR_WORKERS");
  if (s == nullptr || *s == '\0') return 1;
  char* end = nullptr;
  const long w = std::strtol(s, &end, 10);
  if (*end != '\0' || w < 1) throw UsageError("AFFSCHUR_WORKERS must be a positive integer");
  return static_cast<int>(w);
}

void require_n(int n) {
  if (n < 2) throw UsageError("n must be at least 2");
}

void require_inputs(const Options& o, std::size_t k) {
  if (o.inputs.size() != k) throw UsageError("expected " + std::to_string(k) + " JSON input(s)");
}

void same_n(int a, int b) {
  if (a != b) throw SchemaError("inputs have different n (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
}

template <class T>
T checked_n(T x) {
  if (x.n() < 2) throw SchemaError("n must be at least 2");
  return x;
}

PeriodicMatrix matrix_arg(const std::string& s) {
  if (s.empty()) throw UsageError("--matrix is required");
  return checked_n(io::matrix_from(io::load(s)));
}

Weight weight_arg(const std::string& s, int n) {
  if (s.empty()) return Weight::zero(n);
  return io::weight_from(io::load(s), n);
}

Output element(const json& j, const std::string& text) { return {j, text, true}; }

Output suite(const SuiteResult& r, const std::string& repro) {
  std::ostringstream t;
  t << r.name << ": " << (r.ok() ? "PASS" : "FAIL") << " (" << r.passed() << "/" << r.checked() << ")\n";
  for (const auto& [k, v] : r.stats) t << "  " << k << " = " << v << '\n';
  for (const auto& p : r.parts) {
    t << "  " << p.name << ": " << p.passed << "/" << p.checked << '\n';
    for (std::size_t k = 0; k < p.failures.size() && k < 10; ++k) t << "    " << p.failures[k] << '\n';
  }
  t << "  repro: " << repro << '\n';
  return {io::to_json(r, repro), t.str(), r.ok()};
}

json oracle_row(const PeriodicMatrix& b, const PeriodicMatrix& a, const SchurElement& p) {
  json prod = json::array();
  for (const auto& [x, c] : p.terms()) prod.push_back({{"basis", io::to_json(x)}, {"coeff", io::to_json(c)}});
  return {{"lhs", io::to_json(b)}, {"rhs", io::to_json(a)}, {"product", prod}};
}

}  // namespace

int main(int argc, char** argv) {
  std::string repro = "affschur";
  for (int k = 1; k < argc; ++k) repro += std::string(" ") + argv[k];

  CLI::App app{"Exact arithmetic for affine Schur algebras at v = 1"};
  app.require_subcommand(1);
  Options o;
  std::optional<int> workers;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--workers", workers, "Worker threads (default: AFFSCHUR_WORKERS or 1)")->check(CLI::PositiveNumber);

  std::function<Output()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<Output()> f) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->callback([&action, f] { action = f; });
    return c;
  };
  auto inputs = [&](CLI::App* c) { c->add_option("inputs", o.inputs, "JSON documents, inline or file paths"); };
  auto nopt = [&](CLI::App* c) { c->add_option("--n", o.n, "Period n >= 2"); };

  // schur
  CLI::App* schur = app.add_subcommand("schur", "Affine Schur algebra S(n, r)")->require_subcommand(1);
  inputs(leaf(schur, "mul", "Product of two SchurElements", [&] {
    require_inputs(o, 2);
    const SchurElement x = checked_n(io::schur_from(io::load(o.inputs[0])));
    const SchurElement y = checked_n(io::schur_from(io::load(o.inputs[1])));
    same_n(x.n(), y.n());
    if (x.r() != y.r()) throw SchemaError("inputs have different r");
    const SchurElement p = mul(x, y);
    return element(io::to_json(p), p.str());
  }));
  for (const char* name : {"brace", "bracket", "tri-basis"}) {
    const std::string cmd = name;
    CLI::App* c = leaf(schur, cmd, "A{lambda, r}, A[j, r] or the triangular basis element", [&, cmd] {
      const PeriodicMatrix a = matrix_arg(o.matrix);
      const Weight w = weight_arg(o.weight, a.n());
      if (o.r < 0) throw UsageError("r must be >= 0");
      const SchurElement x = cmd == "brace" ? brace_r(a, w, o.r) : cmd == "bracket" ? bracket_r(a, w, o.r)
                                                                                    : triangular_basis(a, w, o.r);
      return element(io::to_json(x), x.str());
    });
    c->add_option("--matrix", o.matrix, "Periodic matrix JSON")->required();
    c->add_option(cmd == "bracket" ? "--j" : "--lambda", o.weight, "Weight JSON array");
    c->add_option("--r", o.r, "r")->required();
  }
  {
    CLI::App* c = leaf(schur, "verify-oracle", "mul against oracle_mul on all basis pairs", [&] {
      require_n(o.n);
      return suite(suite_oracle(o.n, o.r, o.band, o.workers), repro);
    });
    nopt(c);
    c->add_option("--r", o.r);
    c->add_option("--band", o.band);
  }

  // oracle
  CLI::App* oracle = app.add_subcommand("oracle", "Double-coset oracle")->require_subcommand(1);
  inputs(leaf(oracle, "mul", "[B][A] by counting double cosets", [&] {
    require_inputs(o, 2);
    const PeriodicMatrix b = checked_n(io::matrix_from(io::load(o.inputs[0])));
    const PeriodicMatrix a = checked_n(io::matrix_from(io::load(o.inputs[1])));
    same_n(b.n(), a.n());
    const SchurElement p = oracle_mul(b, a);
    return element(oracle_row(b, a, p), p.str());
  }));
  {
    CLI::App* c = leaf(oracle, "table", "All structure constants for S(n, r) within a band", [&] {
      require_n(o.n);
      const auto basis = enumerate_theta(o.n, o.r, o.band);
      json rows = json::array();
      std::ostringstream t;
      for (const auto& b : basis)
        for (const auto& a : basis) {
          if (co(b) != ro(a)) continue;
          const SchurElement p = oracle_mul(b, a);
          rows.push_back(oracle_row(b, a, p));
          t << b.str() << " * " << a.str() << " = " << p.str() << '\n';
        }
      return element({{"n", o.n}, {"r", o.r}, {"band", o.band}, {"rows", rows}}, t.str());
    });
    nopt(c);
    c->add_option("--r", o.r);
    c->add_option("--band", o.band);
  }

  // stab
  CLI::App* stab = app.add_subcommand("stab", "Stabilized algebra over integer-valued polynomials")->require_subcommand(1);
  inputs(leaf(stab, "mul", "Product of two KElements", [&] {
    require_inputs(o, 2);
    const KElement x = checked_n(io::k_from(io::load(o.inputs[0])));
    const KElement y = checked_n(io::k_from(io::load(o.inputs[1])));
    same_n(x.n(), y.n());
    const KElement p = kmul(x, y);
    return element(io::to_json(p), p.str());
  }));
  {
    CLI::App* c = leaf(stab, "verify", "Compare kmul([B],[A]) with [B+aI][A+aI] over a window of a", [&] {
      require_inputs(o, 2);
      const PeriodicMatrix b = checked_n(io::matrix_from(io::load(o.inputs[0])));
      const PeriodicMatrix a = checked_n(io::matrix_from(io::load(o.inputs[1])));
      same_n(b.n(), a.n());
      const long lo = o.a_min ? *o.a_min : default_a_min(b, a);
      const long hi = o.a_max ? *o.a_max : lo + 4;
      if (lo > hi) throw UsageError("a_min must be <= a_max");
      const StabilizationReport rep = verify_stabilization(b, a, lo, hi);
      std::ostringstream t;
      t << "a in [" << lo << ", " << hi << "]: " << (rep.all_match ? "PASS" : "FAIL") << ", " << rep.terms.size()
        << " terms, " << rep.fit_failures << " fit failures\n";
      for (const auto& term : rep.terms)
        t << "  " << term.matrix.str() << ": " << term.symbolic.str() << (term.match ? "" : "  MISMATCH") << '\n';
      return Output{io::to_json(rep), t.str(), rep.all_match};
    });
    inputs(c);
    c->add_option("--amin", o.a_min);
    c->add_option("--amax", o.a_max);
  }
  inputs(leaf(stab, "specialize", "Specialize a KElement at x = 0", [&] {
    require_inputs(o, 1);
    const KZeroElement z = specialize_x0(checked_n(io::k_from(io::load(o.inputs[0]))));
    std::ostringstream t;
    for (const auto& [a, c] : z.terms()) t << c << " " << a.str() << '\n';
    return element(io::to_json(z), t.str());
  }));

  // v
  CLI::App* v = app.add_subcommand("v", "The algebra V over Z")->require_subcommand(1);
  inputs(leaf(v, "mul", "Product of two VElements", [&] {
    require_inputs(o, 2);
    const VElement x = checked_n(io::v_from(io::load(o.inputs[0])));
    const VElement y = checked_n(io::v_from(io::load(o.inputs[1])));
    same_n(x.n(), y.n());
    const VElement p = vmul(x, y);
    return element(io::to_json(p), p.str());
  }));
  inputs(leaf(v, "rewrite", "Express A<lambda> through monomials in the generators", [&] {
    require_inputs(o, 1);
    const VElement x = checked_n(io::v_from(io::load(o.inputs[0])));
    if (x.terms().size() != 1 || x.terms().begin()->second != 1) throw SchemaError("rewrite takes a single basis symbol");
    VAlgebra alg(x.n());
    json words = json::array();
    std::ostringstream t;
    for (const auto& [w, c] : alg.rewrite(x.terms().begin()->first)) {
      words.push_back({{"word", io::to_json(w)}, {"coeff", io::to_json(c)}});
      t << c << " " << word_str(w) << '\n';
    }
    return element({{"n", x.n()}, {"monomials", words}}, t.str());
  }));
  {
    CLI::App* c = leaf(v, "zeta", "Image in S(n, r)", [&] {
      require_inputs(o, 1);
      if (o.r < 0) throw UsageError("r must be >= 0");
      const SchurElement s = zeta_r(checked_n(io::v_from(io::load(o.inputs[0]))), o.r);
      return element(io::to_json(s), s.str());
    });
    inputs(c);
    c->add_option("--r", o.r)->required();
  }
  {
    CLI::App* c = leaf(v, "xi", "Image of a PBW monomial", [&] {
      const PBWMonomial m = io::pbw_from(io::load(o.monomial));
      if (m.n < 2) throw SchemaError("n must be at least 2");
      const VElement x = xi_pbw(m);
      return element({{"monomial", io::to_json(m)}, {"image", io::to_json(x)}}, x.str());
    });
    c->add_option("--monomial", o.monomial, "PBWMonomial JSON")->required();
  }
  {
    CLI::App* c = leaf(v, "relations", "Loop-algebra relations on a window", [&] {
      require_n(o.n);
      return suite(suite_relations(o.n, o.bound), repro);
    });
    nopt(c);
    c->add_option("--bound", o.bound);
  }
  {
    CLI::App* c = leaf(v, "surjectivity", "Unitriangular preimages of the basis of S(n, r)", [&] {
      require_n(o.n);
      return suite(suite_surjectivity(o.n, o.r, o.band), repro);
    });
    nopt(c);
    c->add_option("--r", o.r);
    c->add_option("--band", o.band);
  }
  inputs(leaf(v, "coproduct", "Coproduct of a VElement", [&] {
    require_inputs(o, 1);
    const VElement x = checked_n(io::v_from(io::load(o.inputs[0])));
    VAlgebra alg(x.n());
    const Tensor2 t = coproduct_element(alg, x);
    return element(io::to_json(t), t.str());
  }));

  // verify
  CLI::App* verify = app.add_subcommand("verify", "Verification suites")->require_subcommand(1);
  {
    CLI::App* c = leaf(verify, "oracle", "mul against oracle_mul", [&] {
      require_n(o.n);
      return suite(suite_oracle(o.n, o.r, o.band, o.workers), repro);
    });
    nopt(c);
    c->add_option("--r", o.r);
    c->add_option("--band", o.band);
  }
  {
    CLI::App* c = leaf(verify, "stabilization", "Seeded stabilization checks", [&] {
      require_n(o.n);
      return suite(suite_stabilization(o.n, o.samples, o.band, o.bound, o.width, o.seed), repro);
    });
    nopt(c);
    c->add_option("--samples", o.samples);
    c->add_option("--band", o.band);
    c->add_option("--bound", o.bound, "Largest entry of sampled matrices");
    c->add_option("--width", o.width, "Number of shifts a compared");
    c->add_option("--seed", o.seed);
  }
  {
    CLI::App* c = leaf(verify, "relations", "Loop-algebra relations", [&] {
      require_n(o.n);
      return suite(suite_relations(o.n, o.bound), repro);
    });
    nopt(c);
    c->add_option("--bound", o.bound);
  }
  {
    CLI::App* c = leaf(verify, "surjectivity", "Unitriangular preimages", [&] {
      require_n(o.n);
      return suite(suite_surjectivity(o.n, o.r, o.band), repro);
    });
    nopt(c);
    c->add_option("--r", o.r);
    c->add_option("--band", o.band);
  }
  {
    CLI::App* c = leaf(verify, "properties", "Seeded algebraic property checks", [&] {
      return suite(suite_properties(o.samples, o.seed), repro);
    });
    c->add_option("--samples", o.samples);
    c->add_option("--seed", o.seed);
  }
  {
    CLI::App* c = leaf(verify, "triangular", "Triangular basis against the oracle", [&] {
      require_n(o.n);
      return suite(suite_triangular(o.n, o.r, o.band), repro);
    });
    nopt(c);
    c->add_option("--r", o.r);
    c->add_option("--band", o.band);
  }
  {
    CLI::App* c = leaf(verify, "coproduct", "Coproduct and counit laws", [&] {
      require_n(o.n);
      return suite(suite_coproduct(o.n, o.max_t, o.max_alpha), repro);
    });
    nopt(c);
    c->add_option("--max-t", o.max_t);
    c->add_option("--max-alpha", o.max_alpha);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error("usage_error", e.what(), kUsage);
  }

  try {
    o.workers = workers ? *workers : workers_from_env();
    const Output out = action();
    if (o.format == "text") {
      std::cout << out.text;
      if (!out.text.empty() && out.text.back() != '\n') std::cout << '\n';
    } else {
      json j = {{"schema_version", io::kSchemaVersion}, {"ok", out.ok}, {"result", out.result}};
      std::cout << j.dump(2) << '\n';
    }
    return out.ok ? kPass : kCheckFailed;
  } catch (const UsageError& e) {
    return emit_error("usage_error", e.what(), kUsage);
  } catch (const AlgebraError& e) {
    return emit_error(e.code(), e.what(), exit_code(e.code()));
  } catch (const nlohmann::json::exception& e) {
    return emit_error("schema_error", e.what(), kSchema);
  }
}
