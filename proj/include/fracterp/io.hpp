#pragma once

#include <iosfwd>
#include <string>

#include "fracterp/dirichlet.hpp"
#include "fracterp/frac_calculus.hpp"
#include "fracterp/frft.hpp"
#include "fracterp/operator_power.hpp"

namespace fracterp {

// Matrix JSON: {"dim": n, "entries": [[re, im], ...]} row-major, length n^2.
ComplexMatrix read_matrix_json(std::istream& in);
ComplexMatrix read_matrix_json_file(const std::string& path);
std::string write_matrix_json(const ComplexMatrix& m);

// Signal CSV: header "x,re,im", one row per sample, uniform increasing x.
// Values are printed with max_digits10 so a round trip is bit-identical.
SampledSignal read_signal_csv(std::istream& in);
SampledSignal read_signal_csv_file(const std::string& path);
std::string write_signal_csv(const SampledSignal& s);

// frft signals reuse the CSV layout; rows are the centered grid in order.
Signal read_frft_signal_csv_file(const std::string& path);
std::string write_frft_signal_csv(const Signal& s);

// Sample-table CSV: header "k,re,im,provenance".
std::string write_samples_csv(const DirichletSamples& s);
DirichletSamples read_samples_csv_file(const std::string& path);

}  // namespace fracterp
