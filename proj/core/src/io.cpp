#include "sgsvd/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string_view>

#include "sgsvd/errors.hpp"

namespace sgsvd::io {

namespace {

class LineReader {
 public:
  LineReader(std::istream& in, std::string what) : in_(in), what_(std::move(what)) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw IoError(what_ + " line " + std::to_string(number_) + ": " + message);
  }

 private:
  std::istream& in_;
  std::string what_;
  int number_ = 0;
};

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == '\t' || line[pos] == ' ')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != '\t' && line[end] != ' ') ++end;
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

template <typename T>
T parse(std::string_view field, const LineReader& reader) {
  T value{};
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    reader.fail("cannot parse '" + std::string(field) + "'");
  }
  return value;
}

std::string expect_header(LineReader& reader, std::string_view tag) {
  std::string line;
  if (!reader.next(line)) reader.fail("missing header");
  if (line.rfind(tag, 0) != 0) reader.fail("expected header starting with '" + std::string(tag) + "'");
  return line.substr(tag.size());
}

void write_sparse(std::ostream& out, char side, const Vector& x) {
  for (Index i = 0; i < x.size(); ++i) {
    if (x[i] != 0.0) out << side << '\t' << i << '\t' << format_real(x[i]) << '\n';
  }
}

// Applies one "u|v<TAB>index<TAB>value" line; returns false for other lines.
bool read_sparse_entry(const std::vector<std::string_view>& f, Vector& u, Vector& v,
                       const LineReader& reader) {
  if (f.size() != 3 || (f[0] != "u" && f[0] != "v")) return false;
  Vector& target = f[0] == "u" ? u : v;
  const auto idx = parse<Index>(f[1], reader);
  if (idx < 0 || idx >= target.size()) reader.fail("index " + std::to_string(idx) + " out of range");
  target[idx] = parse<double>(f[2], reader);
  return true;
}

template <typename T, typename Reader>
T load_with(const std::filesystem::path& path, Reader reader) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  try {
    return reader(in);
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

template <typename Writer>
void save_with(const std::filesystem::path& path, Writer writer) {
  std::ostringstream out;
  writer(out);
  save_text(path, out.str());
}

}  // namespace

std::string format_real(double value) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(len));
}

void write_matrix(std::ostream& out, const DenseMatrix& x) {
  out << '#' << x.rows() << ' ' << x.cols() << '\n';
  for (Index i = 0; i < x.rows(); ++i) {
    for (Index j = 0; j < x.cols(); ++j) {
      if (j > 0) out << '\t';
      out << format_real(x(i, j));
    }
    out << '\n';
  }
}

DenseMatrix read_matrix(std::istream& in) {
  LineReader reader(in, "matrix");
  const auto dims = split(expect_header(reader, "#"));
  if (dims.size() != 2) reader.fail("header must be '#<rows> <cols>'");
  const auto rows = parse<Index>(dims[0], reader);
  const auto cols = parse<Index>(dims[1], reader);
  if (rows < 1 || cols < 1) reader.fail("dimensions must be positive");
  RowMajorMatrix m(rows, cols);
  std::string line;
  for (Index i = 0; i < rows; ++i) {
    if (!reader.next(line)) reader.fail("expected " + std::to_string(rows) + " rows");
    const auto fields = split(line);
    if (static_cast<Index>(fields.size()) != cols) {
      reader.fail("expected " + std::to_string(cols) + " values, found " +
                  std::to_string(fields.size()));
    }
    for (Index j = 0; j < cols; ++j) m(i, j) = parse<double>(fields[j], reader);
  }
  if (reader.next(line)) reader.fail("trailing content after last row");
  return DenseMatrix(std::move(m));
}

void write_graph(std::ostream& out, const PriorGraph& g) {
  out << "#vertices " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << e.first << '\t' << e.second << '\n';
}

PriorGraph read_graph(std::istream& in) {
  LineReader reader(in, "graph");
  const auto header = split(expect_header(reader, "#vertices"));
  if (header.size() != 1) reader.fail("header must be '#vertices <N>'");
  const auto n = parse<Index>(header[0], reader);
  std::vector<Edge> edges;
  std::string line;
  while (reader.next(line)) {
    const auto f = split(line);
    if (f.size() != 2) reader.fail("edge lines must be 'i<TAB>j'");
    edges.push_back({parse<Index>(f[0], reader), parse<Index>(f[1], reader)});
  }
  return PriorGraph(n, std::move(edges));
}

void write_factors(std::ostream& out, const FactorTable& table) {
  out << "#factors " << table.records.size() << ' ' << table.rows << ' ' << table.cols << '\n';
  for (std::size_t k = 0; k < table.records.size(); ++k) {
    const auto& rec = table.records[k];
    out << "factor " << k << " d=" << format_real(rec.factor.d)
        << " converged=" << (rec.converged ? "true" : "false") << '\n';
    write_sparse(out, 'u', rec.factor.u);
    write_sparse(out, 'v', rec.factor.v);
  }
}

FactorTable read_factors(std::istream& in) {
  LineReader reader(in, "factors");
  const auto header = split(expect_header(reader, "#factors"));
  if (header.size() != 3) reader.fail("header must be '#factors <K> <n> <p>'");
  const auto count = parse<std::size_t>(header[0], reader);
  FactorTable table;
  table.rows = parse<Index>(header[1], reader);
  table.cols = parse<Index>(header[2], reader);
  std::string line;
  while (reader.next(line)) {
    const auto f = split(line);
    if (f.size() == 4 && f[0] == "factor") {
      if (parse<std::size_t>(f[1], reader) != table.records.size()) reader.fail("factors out of order");
      if (f[2].rfind("d=", 0) != 0 || f[3].rfind("converged=", 0) != 0) {
        reader.fail("factor header must be 'factor <k> d=<value> converged=<bool>'");
      }
      FactorRecord rec;
      rec.factor.d = parse<double>(f[2].substr(2), reader);
      const auto flag = f[3].substr(10);
      if (flag != "true" && flag != "false") reader.fail("converged must be true or false");
      rec.converged = flag == "true";
      rec.factor.u = Vector::Zero(table.rows);
      rec.factor.v = Vector::Zero(table.cols);
      table.records.push_back(std::move(rec));
      continue;
    }
    if (table.records.empty()) reader.fail("entry before first factor header");
    auto& last = table.records.back().factor;
    if (!read_sparse_entry(f, last.u, last.v, reader)) reader.fail("unrecognized line");
  }
  if (table.records.size() != count) reader.fail("header announced " + std::to_string(count) + " factors");
  return table;
}

void write_truth(std::ostream& out, const GroundTruth& truth) {
  out << "#truth " << truth.u_true.size() << ' ' << truth.v_true.size() << '\n';
  write_sparse(out, 'u', truth.u_true);
  write_sparse(out, 'v', truth.v_true);
}

GroundTruth read_truth(std::istream& in) {
  LineReader reader(in, "truth");
  const auto header = split(expect_header(reader, "#truth"));
  if (header.size() != 2) reader.fail("header must be '#truth <n> <p>'");
  GroundTruth truth;
  truth.u_true = Vector::Zero(parse<Index>(header[0], reader));
  truth.v_true = Vector::Zero(parse<Index>(header[1], reader));
  std::string line;
  while (reader.next(line)) {
    if (!read_sparse_entry(split(line), truth.u_true, truth.v_true, reader)) {
      reader.fail("unrecognized line");
    }
  }
  truth.support_u = support_of(truth.u_true);
  truth.support_v = support_of(truth.v_true);
  return truth;
}

void write_traces(std::ostream& out, const std::vector<IterationTrace>& traces) {
  out << "#traces\n";
  for (std::size_t k = 0; k < traces.size(); ++k) {
    const auto& h = traces[k].d_history;
    for (std::size_t it = 0; it < h.size(); ++it) {
      out << k << '\t' << it + 1 << '\t' << format_real(h[it]) << '\n';
    }
  }
}

std::vector<IterationTrace> read_traces(std::istream& in) {
  LineReader reader(in, "traces");
  expect_header(reader, "#traces");
  std::vector<IterationTrace> traces;
  std::string line;
  while (reader.next(line)) {
    const auto f = split(line);
    if (f.size() != 3) reader.fail("trace lines must be 'factor<TAB>iteration<TAB>d'");
    const auto k = parse<std::size_t>(f[0], reader);
    const auto it = parse<int>(f[1], reader);
    if (k == traces.size()) traces.emplace_back();
    if (k + 1 != traces.size()) reader.fail("trace factors out of order");
    auto& t = traces.back();
    if (it != t.iterations + 1) reader.fail("trace iterations out of order");
    t.d_history.push_back(parse<double>(f[2], reader));
    t.iterations = it;
  }
  return traces;
}

void save_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

std::string load_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

DenseMatrix load_matrix(const std::filesystem::path& path) {
  return load_with<DenseMatrix>(path, [](std::istream& in) { return read_matrix(in); });
}
void save_matrix(const std::filesystem::path& path, const DenseMatrix& x) {
  save_with(path, [&](std::ostream& out) { write_matrix(out, x); });
}
PriorGraph load_graph(const std::filesystem::path& path) {
  return load_with<PriorGraph>(path, [](std::istream& in) { return read_graph(in); });
}
void save_graph(const std::filesystem::path& path, const PriorGraph& g) {
  save_with(path, [&](std::ostream& out) { write_graph(out, g); });
}
FactorTable load_factors(const std::filesystem::path& path) {
  return load_with<FactorTable>(path, [](std::istream& in) { return read_factors(in); });
}
void save_factors(const std::filesystem::path& path, const FactorTable& table) {
  save_with(path, [&](std::ostream& out) { write_factors(out, table); });
}
GroundTruth load_truth(const std::filesystem::path& path) {
  return load_with<GroundTruth>(path, [](std::istream& in) { return read_truth(in); });
}
void save_truth(const std::filesystem::path& path, const GroundTruth& truth) {
  save_with(path, [&](std::ostream& out) { write_truth(out, truth); });
}
std::vector<IterationTrace> load_traces(const std::filesystem::path& path) {
  return load_with<std::vector<IterationTrace>>(path,
                                                [](std::istream& in) { return read_traces(in); });
}
void save_traces(const std::filesystem::path& path, const std::vector<IterationTrace>& traces) {
  save_with(path, [&](std::ostream& out) { write_traces(out, traces); });
}

}  // namespace sgsvd::io
