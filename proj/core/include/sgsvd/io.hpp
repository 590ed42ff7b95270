#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sgsvd/factor.hpp"
#include "sgsvd/graph.hpp"
#include "sgsvd/matrix.hpp"
#include "sgsvd/simulate.hpp"
#include "sgsvd/solver.hpp"

namespace sgsvd::io {

// Text formats. All are UTF-8 with LF endings; reals use %.17g so a read
// after a write restores every double exactly.
//
// matrix:   "#<rows> <cols>" then one TAB-separated row per line
// graph:    "#vertices <N>" then "i<TAB>j" per undirected edge (0-based)
// factors:  "#factors <K> <n> <p>", then per factor
//           "factor <k> d=<value> converged=<true|false>" followed by
//           "u<TAB>index<TAB>value" / "v<TAB>index<TAB>value" for nonzeros
// truth:    "#truth <n> <p>" then "u<TAB>index<TAB>value" / "v..." lines
// traces:   "#traces" then "factor<TAB>iteration<TAB>d"

struct FactorRecord {
  FactorTriple factor;
  bool converged = true;
};

struct FactorTable {
  Index rows = 0;
  Index cols = 0;
  std::vector<FactorRecord> records;
};

std::string format_real(double value);

void write_matrix(std::ostream& out, const DenseMatrix& x);
DenseMatrix read_matrix(std::istream& in);

void write_graph(std::ostream& out, const PriorGraph& g);
PriorGraph read_graph(std::istream& in);

void write_factors(std::ostream& out, const FactorTable& table);
FactorTable read_factors(std::istream& in);

void write_truth(std::ostream& out, const GroundTruth& truth);
GroundTruth read_truth(std::istream& in);

void write_traces(std::ostream& out, const std::vector<IterationTrace>& traces);
std::vector<IterationTrace> read_traces(std::istream& in);

// File wrappers; failures to open or parse surface as IoError.
DenseMatrix load_matrix(const std::filesystem::path& path);
void save_matrix(const std::filesystem::path& path, const DenseMatrix& x);
PriorGraph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const PriorGraph& g);
FactorTable load_factors(const std::filesystem::path& path);
void save_factors(const std::filesystem::path& path, const FactorTable& table);
GroundTruth load_truth(const std::filesystem::path& path);
void save_truth(const std::filesystem::path& path, const GroundTruth& truth);
std::vector<IterationTrace> load_traces(const std::filesystem::path& path);
void save_traces(const std::filesystem::path& path, const std::vector<IterationTrace>& traces);

void save_text(const std::filesystem::path& path, const std::string& text);
std::string load_text(const std::filesystem::path& path);

}  // namespace sgsvd::io
