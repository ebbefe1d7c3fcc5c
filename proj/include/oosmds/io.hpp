#pragma once

#include <iosfwd>
#include <string>

#include <Eigen/Core>

#include "oosmds/errors.hpp"
#include "oosmds/proximity.hpp"
#include "oosmds/restricted.hpp"
#include "oosmds/spectral.hpp"

namespace oosmds::io {

/// Reads a CSV matrix: comma-separated, decimal point, optional single
/// header line (skipped when any field of the first line is not a number).
/// Parse failures report the 1-based line number.
Eigen::MatrixXd read_csv_matrix(std::istream& in, const std::string& name = "<stream>");
Eigen::MatrixXd read_csv_matrix_file(const std::string& path);

/// Writes content to path atomically (temp file in the same directory,
/// then rename).
void write_file_atomic(const std::string& path, const std::string& content);

/// Everything cmd_oos needs from a previous embed run: the configuration,
/// the retained spectrum and the in-sample centering statistics.
struct EmbedDocument {
  Eigen::Index n = 0;
  Eigen::Index dim = 0;
  spectral::Configuration configuration;
  Eigen::VectorXd eigenvalues;   // retained, descending
  Eigen::VectorXd full_spectrum; // all eigenvalues of B, descending
  double dropped_mass = 0.0;     // Frobenius mass of the dropped spectrum
  bool degenerate_spectrum = false;
  proximity::CenteringStats centering;
};

EmbedDocument make_embed_document(const spectral::CmdsResult& cmds,
                                  const proximity::CenteringStats& stats);

std::string embed_document_to_json(const EmbedDocument& doc);
EmbedDocument embed_document_from_json(const std::string& text);

std::string arc_to_csv(const restricted::ArcTrace& trace);

} // namespace oosmds::io
