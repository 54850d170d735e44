#pragma once

#include <string>

#include "affschur/coproduct.hpp"
#include "affschur/int_valued_poly.hpp"
#include "affschur/periodic_matrix.hpp"
#include "affschur/schur_element.hpp"
#include "affschur/stab.hpp"
#include "affschur/suites.hpp"
#include "affschur/vz.hpp"
#include "json.hpp"

namespace affschur::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Integers that fit in 64 bits are numbers, larger ones decimal strings.
json to_json(const Integer& x);
json to_json(const Rational& x);
json to_json(const Weight& w);
json to_json(const PeriodicMatrix& m);
json to_json(const IntValuedPoly& p);
json to_json(const SchurElement& x);
json to_json(const KElement& x);
json to_json(const KZeroElement& x);
json to_json(const VElement& x);
json to_json(const QVElement& x);
json to_json(const Generator& g);
json to_json(const Word& w);
json to_json(const Tensor2& t);
json to_json(const PBWMonomial& m);
json to_json(const StabilizationReport& r);
json to_json(const SuiteResult& r, const std::string& repro);

// All readers throw SchemaError on malformed input.
Integer integer_from(const json& j);
Weight weight_from(const json& j, int n);
PeriodicMatrix matrix_from(const json& j);
IntValuedPoly poly_from(const json& j);
// A SchurElement object, or a bare matrix meaning [A] with r = sigma(A).
SchurElement schur_from(const json& j);
// A KElement object or a bare matrix.
KElement k_from(const json& j);
// A VElement object, or {"matrix": ..., "lambda": [...]} for one symbol.
VElement v_from(const json& j);
Generator generator_from(const json& j, int n);
PBWMonomial pbw_from(const json& j);

// Reads a JSON document given inline (starting with '{' or '[') or as a path.
json load(const std::string& arg);

}  // namespace affschur::io
