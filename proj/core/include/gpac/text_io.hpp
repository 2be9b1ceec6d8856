#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "gpac/pac.hpp"
#include "gpac/spectra.hpp"

namespace gpac::io {

// All readers accept UTF-8 text, skip blank lines and lines starting with '#',
// and tolerate CRLF line endings. Failures raise Error(Errc::Parse) with a
// message of the form "<source>:<line>: <field>: <reason>".

/// Header line exactly `s,mass`, then one `<scale>,<mass>` pair per line.
Spectrum read_spectrum(std::istream& in, std::string_view source);

/// Comma-separated rows of decimal literals with equal lengths.
Eigen::MatrixXd read_matrix(std::istream& in, std::string_view source);

/// Raw contents of a PAC instance file:
///
///   weights,<w1>,...,<wN>           (required, first data line)
///   domain,<x1>,...,<xN>            (optional; defaults to 0..N-1)
///   <name>,<v1>,...,<vN>            (one line per hypothesis)
///
/// Values are not range-checked here; callers rescale and then build a
/// PacInstance.
struct PacInstanceFile {
  std::vector<double> domain;
  std::vector<double> weights;
  std::vector<Hypothesis> hypotheses;
};

PacInstanceFile read_pac_instance(std::istream& in, std::string_view source);

/// Comma-separated list of decimal literals, e.g. "1,2.5,-3".
std::vector<double> parse_number_list(std::string_view text, std::string_view field);

Spectrum read_spectrum_file(const std::filesystem::path& path);
Eigen::MatrixXd read_matrix_file(const std::filesystem::path& path);
PacInstanceFile read_pac_instance_file(const std::filesystem::path& path);

}  // namespace gpac::io
