#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qwalk/evolution.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/operators.hpp"

namespace qwalk {

// occupancy: node occupancy of the final state (N-dimensional, default).
// amplitude: interleaved (re, im) amplitudes of the final state in arc order.
// time_averaged: mean occupancy over steps 0..t.
enum class EmbeddingMode { occupancy, amplitude, time_averaged };

enum class ExportFormat { csv, json };

EmbeddingMode embedding_mode_from_string(const std::string& s);
std::string to_string(EmbeddingMode mode);
ExportFormat export_format_from_string(const std::string& s);
std::string to_string(ExportFormat format);

// Row i is the embedding of node i. Occupancy-style rows sum to 1; amplitude
// rows have unit 2-norm.
struct EmbeddingMatrix {
    EmbeddingMode mode = EmbeddingMode::occupancy;
    int steps = 0;
    int dimension = 0;
    std::vector<std::vector<double>> rows;

    int node_count() const { return static_cast<int>(rows.size()); }
};

// Evolves psi_i for t steps and extracts the vector for the given mode.
std::vector<double> node_embedding(const Graph& g, int node, int steps, EmbeddingMode mode,
                                   Backend backend = Backend::sparse,
                                   int dense_arc_cap = kDefaultDenseCap);

// Embeddings for every node against one shared walk operator, row order by
// node id.
EmbeddingMatrix embed_all(const Graph& g, int steps, EmbeddingMode mode,
                          Backend backend = Backend::sparse,
                          int dense_arc_cap = kDefaultDenseCap);

// CSV ("node,c0,c1,..." header) or JSON ({mode, steps, dimension, rows}).
// Numbers carry 17 significant digits so importing reproduces the matrix
// bit-exactly. Throws std::invalid_argument on an empty matrix.
void export_embedding(const EmbeddingMatrix& m, ExportFormat format, std::ostream& out);
void export_embedding_file(const EmbeddingMatrix& m, ExportFormat format,
                           const std::string& path);

EmbeddingMatrix import_embedding(ExportFormat format, std::istream& in);
EmbeddingMatrix import_embedding_file(ExportFormat format, const std::string& path);

}  // namespace qwalk
