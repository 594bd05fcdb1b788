#include "fracterp/io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

#include "fracterp/errors.hpp"

namespace fracterp {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path);
  return in;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) throw parse_error("");
    return v;
  } catch (...) {
    throw parse_error("bad " + what + " field: '" + s + "'");
  }
}

}  // namespace

ComplexMatrix read_matrix_json(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw parse_error(std::string("matrix JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw parse_error("matrix JSON: need {\"dim\": n, \"entries\": [[re, im], ...]}");
  const int n = j["dim"].get<int>();
  if (n < 1) throw parse_error("matrix JSON: dim must be >= 1");
  const auto& e = j["entries"];
  if (!e.is_array() || e.size() != static_cast<std::size_t>(n) * n)
    throw parse_error("matrix JSON: entries must have dim^2 elements");
  ComplexMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const auto& cell = e[static_cast<std::size_t>(r) * n + c];
      if (!cell.is_array() || cell.size() != 2)
        throw parse_error("matrix JSON: each entry must be [re, im]");
      m(r, c) = cdouble(cell[0].get<double>(), cell[1].get<double>());
    }
  validate_matrix(m);
  return m;
}

ComplexMatrix read_matrix_json_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_matrix_json(in);
}

std::string write_matrix_json(const ComplexMatrix& m) {
  std::ostringstream os;
  os << "{\"dim\": " << m.rows() << ", \"entries\": [";
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (r != 0 || c != 0) os << ", ";
      os << "[" << fmt(m(r, c).real()) << ", " << fmt(m(r, c).imag()) << "]";
    }
  os << "]}";
  return os.str();
}

namespace {

struct CsvSignal {
  std::vector<double> xs;
  std::vector<cdouble> values;
};

CsvSignal read_xs_csv(std::istream& in) {
  CsvSignal s;
  std::string line;
  if (!std::getline(in, line)) throw parse_error("signal CSV: empty file");
  if (line.size() && line.back() == '\r') line.pop_back();
  if (line != "x,re,im") throw parse_error("signal CSV: expected header 'x,re,im'");
  while (std::getline(in, line)) {
    if (line.size() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 3) throw parse_error("signal CSV: expected 3 fields per row");
    s.xs.push_back(parse_double(f[0], "x"));
    s.values.emplace_back(parse_double(f[1], "re"), parse_double(f[2], "im"));
  }
  if (s.xs.size() < 2) throw parse_error("signal CSV: need at least 2 rows");
  const double h = s.xs[1] - s.xs[0];
  if (!(h > 0)) throw parse_error("signal CSV: x must be strictly increasing");
  const double span = s.xs.back() - s.xs.front();
  for (std::size_t j = 1; j < s.xs.size(); ++j) {
    const double d = s.xs[j] - s.xs[j - 1];
    if (std::abs(d - h) > 1e-9 * std::max(1.0, std::abs(span)))
      throw parse_error("signal CSV: x must be uniformly spaced");
  }
  return s;
}

}  // namespace

SampledSignal read_signal_csv(std::istream& in) {
  CsvSignal c = read_xs_csv(in);
  SampledSignal s;
  s.a = c.xs.front();
  s.b = c.xs.back();
  s.values = std::move(c.values);
  s.validate();
  return s;
}

SampledSignal read_signal_csv_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_signal_csv(in);
}

std::string write_signal_csv(const SampledSignal& s) {
  std::ostringstream os;
  os << "x,re,im\n";
  for (int j = 0; j < s.size(); ++j)
    os << fmt(s.x(j)) << "," << fmt(s.values[j].real()) << "," << fmt(s.values[j].imag())
       << "\n";
  return os.str();
}

Signal read_frft_signal_csv_file(const std::string& path) {
  auto in = open_or_throw(path);
  CsvSignal c = read_xs_csv(in);
  Signal s;
  s.sample_rate = c.xs[1] - c.xs[0];
  s.samples = std::move(c.values);
  s.validate();
  return s;
}

std::string write_frft_signal_csv(const Signal& s) {
  std::ostringstream os;
  os << "x,re,im\n";
  for (int j = 0; j < s.size(); ++j)
    os << fmt(s.x(j)) << "," << fmt(s.samples[j].real()) << "," << fmt(s.samples[j].imag())
       << "\n";
  return os.str();
}

std::string write_samples_csv(const DirichletSamples& s) {
  std::ostringstream os;
  os << "k,re,im,provenance\n";
  for (std::size_t k = 0; k < s.values.size(); ++k) {
    os << k << "," << fmt(s.values[k].real()) << "," << fmt(s.values[k].imag()) << ",";
    os << (k < s.provenance.size() ? to_string(s.provenance[k]) : to_string(SampleProvenance::user_supplied));
    os << "\n";
  }
  return os.str();
}

DirichletSamples read_samples_csv_file(const std::string& path) {
  auto in = open_or_throw(path);
  DirichletSamples s;
  std::string line;
  if (!std::getline(in, line)) throw parse_error("samples CSV: empty file");
  if (line.size() && line.back() == '\r') line.pop_back();
  if (line.rfind("k,re,im", 0) != 0) throw parse_error("samples CSV: expected header 'k,re,im[,provenance]'");
  std::size_t expect = 0;
  while (std::getline(in, line)) {
    if (line.size() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() < 3) throw parse_error("samples CSV: expected at least 3 fields per row");
    if (static_cast<std::size_t>(parse_double(f[0], "k")) != expect)
      throw parse_error("samples CSV: k must run 0,1,2,...");
    ++expect;
    s.values.emplace_back(parse_double(f[1], "re"), parse_double(f[2], "im"));
    s.provenance.push_back(SampleProvenance::user_supplied);
  }
  s.validate();
  return s;
}

}  // namespace fracterp
