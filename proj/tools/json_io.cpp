#include "json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "affschur/errors.hpp"

namespace affschur::io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw SchemaError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

long as_long(const json& j, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  return j.get<long>();
}

int size_from(const json& j) {
  const long n = as_long(field(j, "n"), "n");
  if (n < 1) throw SchemaError("n must be positive");
  return static_cast<int>(n);
}

json terms_array() { return json::array(); }

}  // namespace

json to_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json to_json(const Rational& x) {
  if (x.get_den() == 1) return to_json(Integer(x.get_num()));
  return json(x.get_str());
}

json to_json(const Weight& w) { return json(w.coords()); }

json to_json(const PeriodicMatrix& m) {
  json e = json::array();
  for (const auto& x : m.entries()) e.push_back({x.row, x.col, x.value});
  return {{"n", m.n()}, {"entries", e}};
}

json to_json(const IntValuedPoly& p) {
  json c = json::object();
  for (const auto& [k, v] : p.coeffs()) c[std::to_string(k)] = to_json(v);
  return {{"binom_coeffs", c}};
}

json to_json(const SchurElement& x) {
  json t = terms_array();
  for (const auto& [a, c] : x.terms()) t.push_back({{"matrix", to_json(a)}, {"coeff", to_json(c)}});
  return {{"n", x.n()}, {"r", x.r()}, {"terms", t}};
}

json to_json(const KElement& x) {
  json t = terms_array();
  for (const auto& [a, c] : x.terms()) t.push_back({{"matrix", to_json(a)}, {"coeff", to_json(c)}});
  return {{"n", x.n()}, {"terms", t}};
}

json to_json(const KZeroElement& x) {
  json t = terms_array();
  for (const auto& [a, c] : x.terms()) t.push_back({{"matrix", to_json(a)}, {"coeff", to_json(c)}});
  return {{"n", x.n()}, {"terms", t}};
}

json to_json(const VElement& x) {
  json t = terms_array();
  for (const auto& [k, c] : x.terms())
    t.push_back({{"matrix", to_json(k.matrix)}, {"lambda", to_json(k.lambda)}, {"coeff", to_json(c)}});
  return {{"n", x.n()}, {"terms", t}};
}

json to_json(const QVElement& x) {
  json t = terms_array();
  for (const auto& [k, c] : x.terms())
    t.push_back({{"matrix", to_json(k.matrix)}, {"j", to_json(k.lambda)}, {"coeff", to_json(c)}});
  return {{"n", x.n()}, {"terms", t}};
}

json to_json(const Generator& g) {
  const char* kind = g.kind == Generator::Kind::E ? "E" : g.kind == Generator::Kind::F ? "F" : "zero";
  return {{"kind", kind}, {"weight", to_json(g.weight)}};
}

json to_json(const Word& w) {
  json a = json::array();
  for (const auto& g : w) a.push_back(to_json(g));
  return a;
}

json to_json(const Tensor2& t) {
  json a = terms_array();
  for (const auto& [k, c] : t.terms())
    a.push_back({{"left", {{"matrix", to_json(k.first.matrix)}, {"lambda", to_json(k.first.lambda)}}},
                 {"right", {{"matrix", to_json(k.second.matrix)}, {"lambda", to_json(k.second.lambda)}}},
                 {"coeff", to_json(c)}});
  return {{"n", t.n()}, {"terms", a}};
}

json to_json(const PBWMonomial& m) {
  auto part = [](const std::map<std::pair<long, long>, long>& p) {
    json a = json::array();
    for (const auto& [ij, e] : p) a.push_back({ij.first, ij.second, e});
    return a;
  };
  return {{"n", m.n}, {"upper", part(m.upper)}, {"diag", to_json(m.diag)}, {"lower", part(m.lower)}};
}

json to_json(const StabilizationReport& r) {
  json terms = json::array();
  for (const auto& t : r.terms) {
    json values = json::array();
    for (const auto& v : t.values) values.push_back(to_json(v));
    terms.push_back({{"matrix", to_json(t.matrix)},
                     {"values", values},
                     {"fitted", t.fitted ? to_json(*t.fitted) : json(nullptr)},
                     {"symbolic", to_json(t.symbolic)},
                     {"match", t.match}});
  }
  return {{"lhs", to_json(r.b)},        {"rhs", to_json(r.a)},
          {"a_min", r.a_min},           {"a_max", r.a_max},
          {"terms", terms},             {"fit_failures", r.fit_failures},
          {"all_match", r.all_match},
          {"note", "agreement is checked on the window only; uniqueness beyond it is not asserted"}};
}

json to_json(const SuiteResult& r, const std::string& repro) {
  constexpr std::size_t kMaxListed = 100;
  json parts = json::array();
  for (const auto& p : r.parts) {
    json failures = json::array();
    for (std::size_t k = 0; k < p.failures.size() && k < kMaxListed; ++k)
      failures.push_back({{"what", p.failures[k]}, {"repro", repro}});
    parts.push_back({{"name", p.name},
                     {"checked", p.checked},
                     {"passed", p.passed},
                     {"failed", p.failed()},
                     {"failures", failures},
                     {"truncated", p.failures.size() > kMaxListed}});
  }
  json stats = json::object();
  for (const auto& [k, v] : r.stats) stats[k] = v;
  return {{"suite", r.name},    {"checked", r.checked()},
          {"passed", r.passed()}, {"failed", r.checked() - r.passed()},
          {"ok", r.ok()},       {"stats", stats},
          {"parts", parts}};
}

Integer integer_from(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw SchemaError("bad integer string");
    return x;
  }
  throw SchemaError("expected an integer");
}

Weight weight_from(const json& j, int n) {
  const json& a = j.is_object() ? field(j, "coords") : j;
  if (!a.is_array()) throw SchemaError("weight must be an array of integers");
  if (static_cast<int>(a.size()) != n) throw SchemaError("weight has the wrong length");
  std::vector<long> c;
  for (const auto& x : a) c.push_back(as_long(x, "weight coordinate"));
  if (j.is_object() && j.contains("n") && size_from(j) != n) throw SchemaError("weight has the wrong n");
  return Weight(std::move(c));
}

PeriodicMatrix matrix_from(const json& j) {
  const int n = size_from(j);
  const json& e = field(j, "entries");
  if (!e.is_array()) throw SchemaError("entries must be an array");
  std::vector<std::tuple<long, long, long>> entries;
  for (const auto& x : e) {
    if (!x.is_array() || x.size() != 3) throw SchemaError("each entry is [i, j, a]");
    const long i = as_long(x[0], "row"), col = as_long(x[1], "column"), a = as_long(x[2], "value");
    if (i < 1 || i > n) throw SchemaError("row index outside 1..n");
    entries.emplace_back(i, col, a);
  }
  return PeriodicMatrix(n, entries);
}

IntValuedPoly poly_from(const json& j) {
  if (j.is_number_integer() || j.is_string()) return IntValuedPoly(integer_from(j));
  const json& c = field(j, "binom_coeffs");
  if (!c.is_object()) throw SchemaError("binom_coeffs must be an object");
  std::map<long, Integer> m;
  for (const auto& [k, v] : c.items()) {
    std::size_t pos = 0;
    long deg = 0;
    try {
      deg = std::stol(k, &pos);
    } catch (const std::exception&) {
      throw SchemaError("binom_coeffs keys are degrees");
    }
    if (pos != k.size() || deg < 0) throw SchemaError("binom_coeffs keys are degrees");
    m[deg] = integer_from(v);
  }
  return IntValuedPoly(std::move(m));
}

SchurElement schur_from(const json& j) {
  if (j.is_object() && j.contains("entries")) return std_basis(matrix_from(j));
  const int n = size_from(j);
  const long r = as_long(field(j, "r"), "r");
  if (r < 0) throw SchemaError("r must be >= 0");
  SchurElement x(n, r);
  for (const auto& t : field(j, "terms")) {
    const PeriodicMatrix a = matrix_from(field(t, "matrix"));
    if (a.n() != n) throw SchemaError("term matrix has the wrong n");
    x.add_checked(a, integer_from(field(t, "coeff")));
  }
  return x;
}

KElement k_from(const json& j) {
  if (j.is_object() && j.contains("entries")) return k_basis(matrix_from(j));
  const int n = size_from(j);
  KElement x(n);
  for (const auto& t : field(j, "terms")) {
    const PeriodicMatrix a = matrix_from(field(t, "matrix"));
    if (a.n() != n) throw SchemaError("term matrix has the wrong n");
    x.add_checked(a, poly_from(field(t, "coeff")));
  }
  return x;
}

VElement v_from(const json& j) {
  if (j.is_object() && j.contains("matrix") && !j.contains("terms")) {
    const PeriodicMatrix a = matrix_from(j.at("matrix"));
    const Weight l = j.contains("lambda") ? weight_from(j.at("lambda"), a.n()) : Weight::zero(a.n());
    return v_basis(a, l);
  }
  const int n = size_from(j);
  VElement x(n);
  for (const auto& t : field(j, "terms")) {
    const PeriodicMatrix a = matrix_from(field(t, "matrix"));
    if (a.n() != n) throw SchemaError("term matrix has the wrong n");
    x.add_checked({a, weight_from(field(t, "lambda"), n)}, integer_from(field(t, "coeff")));
  }
  return x;
}

Generator generator_from(const json& j, int n) {
  const json& k = field(j, "kind");
  if (!k.is_string()) throw SchemaError("generator kind must be a string");
  const std::string kind = k.get<std::string>();
  const Weight w = weight_from(field(j, "weight"), n);
  if (!w.is_natural()) throw SchemaError("generator weights are in N^n");
  if (kind == "E") return Generator::e(w);
  if (kind == "F") return Generator::f(w);
  if (kind == "zero") return Generator::zero(w);
  throw SchemaError("generator kind is one of E, F, zero");
}

PBWMonomial pbw_from(const json& j) {
  PBWMonomial m;
  m.n = size_from(j);
  auto part = [&](const char* name) {
    std::map<std::pair<long, long>, long> p;
    if (!j.contains(name)) return p;
    for (const auto& x : j.at(name)) {
      if (!x.is_array() || x.size() != 3) throw SchemaError("each PBW factor is [i, j, exponent]");
      p[{as_long(x[0], "row"), as_long(x[1], "column")}] += as_long(x[2], "exponent");
    }
    return p;
  };
  m.upper = part("upper");
  m.lower = part("lower");
  m.diag = j.contains("diag") ? weight_from(j.at("diag"), m.n) : Weight::zero(m.n);
  try {
    m.validate();
  } catch (const DomainError& e) {
    throw SchemaError(e.what());
  }
  return m;
}

json load(const std::string& arg) {
  std::string text;
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw SchemaError("cannot read " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw AlgebraError("parse_error", e.what());
  }
}

}  // namespace affschur::io
