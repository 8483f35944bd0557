#include "cfineq/report.hpp"

#include <cmath>
#include <cstdio>

namespace cfineq {

std::string fmt_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void JsonWriter::key(const char* name) {
  if (!first_) out_ += ',';
  first_ = false;
  out_ += '"';
  out_ += name;
  out_ += "\":";
}

JsonWriter& JsonWriter::field(const char* name, double v) {
  key(name);
  out_ += fmt_double(v);
  return *this;
}

JsonWriter& JsonWriter::field(const char* name, bool v) {
  key(name);
  out_ += v ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::field(const char* name, const char* v) {
  key(name);
  out_ += '"';
  out_ += v;
  out_ += '"';
  return *this;
}

JsonWriter& JsonWriter::field(const char* name, const std::string& v) {
  return field(name, v.c_str());
}

JsonWriter& JsonWriter::field(const char* name, uint64_t v) {
  key(name);
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::field(const char* name, int v) {
  key(name);
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::raw(const char* name, const std::string& json) {
  key(name);
  out_ += json;
  return *this;
}

std::string JsonWriter::str() const { return out_ + "}"; }

std::string json_array(std::span<const double> xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += fmt_double(xs[i]);
  }
  return out + "]";
}

JsonWriter& append_fields(JsonWriter& w, const ScalarSandwich& s) {
  return w.field("lower", s.lower)
      .field("middle", s.middle)
      .field("upper", s.upper)
      .field("slack_lower", s.slack_lower)
      .field("slack_upper", s.slack_upper)
      .field("lower_ok", s.lower_ok)
      .field("upper_ok", s.upper_ok);
}

std::string to_json(const ScalarSandwich& s) {
  JsonWriter w;
  return append_fields(w, s).str();
}

JsonWriter& append_fields(JsonWriter& w, const LoewnerVerdict& v,
                          const char* prefix) {
  std::string p = prefix;
  w.field((p + "_relation").c_str(), to_string(v.relation));
  w.field((p + "_min_eig_b_minus_a").c_str(), v.min_eig_B_minus_A);
  w.field((p + "_min_eig_a_minus_b").c_str(), v.min_eig_A_minus_B);
  w.field((p + "_tol").c_str(), v.tol_used);
  return w;
}

std::string to_json(const SymMatrix& m) {
  std::string out = "[";
  for (int i = 0; i < m.dim(); ++i) {
    if (i) out += ',';
    out += '[';
    for (int j = 0; j < m.dim(); ++j) {
      if (j) out += ',';
      out += fmt_double(m(i, j));
    }
    out += ']';
  }
  return out + "]";
}

std::string matrix_or_summary_json(const SymMatrix& m) {
  if (m.dim() <= 8) return to_json(m);
  JsonWriter w;
  w.field("dim", m.dim()).field("frobenius", m.frobenius());
  return w.str();
}

std::string csv_row(std::span<const std::string> cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  return out;
}

}  // namespace cfineq
