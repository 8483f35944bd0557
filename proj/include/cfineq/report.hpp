#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "cfineq/operator_ineq.hpp"
#include "cfineq/sandwich.hpp"
#include "cfineq/symmat.hpp"

namespace cfineq {

/// Round-trip-safe decimal: %.17g. Non-finite values print as null (JSON has
/// no literal for them); callers carry an explicit flag alongside.
std::string fmt_double(double v);

/// Minimal insertion-ordered JSON object builder; doubles via fmt_double so
/// output is byte-stable for byte-identical reruns.
class JsonWriter {
 public:
  JsonWriter& field(const char* name, double v);
  JsonWriter& field(const char* name, bool v);
  JsonWriter& field(const char* name, const char* v);
  JsonWriter& field(const char* name, const std::string& v);
  JsonWriter& field(const char* name, uint64_t v);
  JsonWriter& field(const char* name, int v);
  JsonWriter& raw(const char* name, const std::string& json);
  std::string str() const;

 private:
  void key(const char* name);
  std::string out_ = "{";
  bool first_ = true;
};

std::string json_array(std::span<const double> xs);

std::string to_json(const ScalarSandwich& s);
/// Adds the sandwich fields to an object under construction.
JsonWriter& append_fields(JsonWriter& w, const ScalarSandwich& s);
JsonWriter& append_fields(JsonWriter& w, const LoewnerVerdict& v,
                          const char* prefix);

/// Array-of-rows JSON for a symmetric matrix.
std::string to_json(const SymMatrix& m);
/// Full matrix at dim <= 8, {"dim", "frobenius"} summary above.
std::string matrix_or_summary_json(const SymMatrix& m);

std::string csv_row(std::span<const std::string> cells);

}  // namespace cfineq
