#include "bentcay/archive.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "bentcay/errors.hpp"
#include "bentcay/graph6.hpp"

namespace bentcay {

namespace {

void write_matrix(std::ostringstream& out, const char* name, const IndexMatrix& m) {
  out << "matrix " << name << ' ' << m.side << ' ' << m.side << '\n';
  for (std::size_t r = 0; r < m.side; ++r) {
    for (std::size_t c = 0; c < m.side; ++c) {
      if (c != 0) out << ' ';
      out << m.at(r, c);
    }
    out << '\n';
  }
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  std::string_view next(const char* expecting) {
    if (pos_ >= text_.size()) fail(std::string("unexpected end of archive, expected ") + expecting);
    std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) end = text_.size();
    std::string_view line = text_.substr(pos_, end - pos_);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos_ = end + 1;
    ++line_;
    return line;
  }

  [[noreturn]] void fail(const std::string& what, std::size_t column = 1) const {
    throw ParseError(what, std::max<std::size_t>(line_, 1), column);
  }

  // "<key> <rest>" -> rest.
  std::string_view keyed(std::string_view key) {
    const std::string_view line = next(std::string(key).c_str());
    if (line.substr(0, key.size()) != key || line.size() <= key.size() || line[key.size()] != ' ') {
      fail("expected '" + std::string(key) + "'");
    }
    return line.substr(key.size() + 1);
  }

  std::size_t number(std::string_view token, std::size_t column = 1) const {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      fail("expected a non-negative integer, got '" + std::string(token) + "'", column);
    }
    return value;
  }

  bool at_end() const { return pos_ >= text_.size(); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

IndexMatrix read_matrix(LineReader& in, std::string_view name, std::size_t side) {
  const std::string_view header = in.keyed("matrix");
  const std::string expected = std::string(name) + ' ' + std::to_string(side) + ' ' + std::to_string(side);
  if (header != expected) in.fail("expected matrix header '" + expected + "'");
  IndexMatrix m(side);
  for (std::size_t r = 0; r < side; ++r) {
    const std::string_view line = in.next("a matrix row");
    std::size_t c = 0;
    std::size_t i = 0;
    while (i < line.size()) {
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ') ++i;
      if (c >= side) in.fail("too many entries in matrix row", start + 1);
      m.at(r, c++) = static_cast<std::uint32_t>(in.number(line.substr(start, i - start), start + 1));
      if (i < line.size()) ++i;
    }
    if (c != side) in.fail("matrix row has " + std::to_string(c) + " entries, expected " + std::to_string(side));
  }
  return m;
}

std::string params_field(const ClassDescriptor& d, int which) {
  if (d.complete) return which == 1 ? "complete" : "";
  if (!d.params) return which == 1 ? "none" : "";
  switch (which) {
    case 1:
      return std::to_string(d.params->k);
    case 2:
      return std::to_string(d.params->lambda);
    default:
      return std::to_string(d.params->mu);
  }
}

std::size_t graph_order(const ClassDescriptor& d) { return d.clique.coeffs.size() > 1 ? d.clique.coeffs[1] : 0; }

}  // namespace

std::string serialize_archive(const Classification& cl) {
  std::ostringstream out;
  out << "bentcay-classification\n";
  out << "version " << kArchiveVersion << '\n';
  out << "dim " << cl.n << '\n';
  out << "anf " << cl.anf << '\n';
  out << "graphs " << cl.graphs.size() << '\n';
  for (std::size_t i = 0; i < cl.graphs.size(); ++i) out << i << ' ' << cl.graphs[i] << '\n';
  write_matrix(out, "bent_index", cl.bent_index);
  write_matrix(out, "dual_index", cl.dual_index);
  write_matrix(out, "wc", cl.wc_matrix);
  out << "end\n";
  return out.str();
}

Classification parse_archive(std::string_view text) {
  LineReader in(text);
  if (in.next("the archive header") != "bentcay-classification") in.fail("not a classification archive");
  const std::size_t version = in.number(in.keyed("version"));
  if (version != static_cast<std::size_t>(kArchiveVersion)) in.fail("unsupported archive version");
  Classification cl;
  const std::size_t n = in.number(in.keyed("dim"));
  if (n < 1 || n > 16) in.fail("dimension out of range");
  cl.n = static_cast<int>(n);
  cl.anf = std::string(in.keyed("anf"));
  const std::size_t side = std::size_t{1} << n;
  const std::size_t count = in.number(in.keyed("graphs"));
  for (std::size_t i = 0; i < count; ++i) {
    const std::string_view line = in.next("a graph line");
    const auto space = line.find(' ');
    if (space == std::string_view::npos) in.fail("expected '<index> <graph6>'");
    if (in.number(line.substr(0, space)) != i) in.fail("graph indices must be consecutive from 0");
    const std::string_view g6 = line.substr(space + 1);
    try {
      if (graph6_decode(g6).order() != side) in.fail("graph order does not match the dimension");
    } catch (const MalformedGraph6& e) {
      in.fail(std::string("bad graph6: ") + e.what());
    }
    cl.graphs.emplace_back(g6);
  }
  cl.bent_index = read_matrix(in, "bent_index", side);
  cl.dual_index = read_matrix(in, "dual_index", side);
  cl.wc_matrix = read_matrix(in, "wc", side);
  if (in.next("'end'") != "end") in.fail("expected 'end'");
  if (!in.at_end()) in.fail("trailing data after 'end'");

  for (const IndexMatrix* m : {&cl.bent_index, &cl.dual_index}) {
    for (auto v : m->values) {
      if (v >= count) throw ParseError("matrix entry " + std::to_string(v) + " has no graph", 1, 1);
    }
  }
  for (auto v : cl.wc_matrix.values) {
    if (v > 1) throw ParseError("weight class entries must be 0 or 1", 1, 1);
  }
  return cl;
}

void save_archive(const Classification& cl, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write archive: " + path);
  out << serialize_archive(cl);
  if (!out) throw Error("failed writing archive: " + path);
}

Classification load_archive(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingArchive(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_archive(buffer.str());
}

std::string pgm_image(const IndexMatrix& m) {
  const std::uint32_t top = m.values.empty() ? 0 : *std::max_element(m.values.begin(), m.values.end());
  const bool wide = top >= 256;
  const std::uint32_t maxval = wide ? 65535 : 255;
  std::string out = "P5\n" + std::to_string(m.side) + ' ' + std::to_string(m.side) + '\n' + std::to_string(maxval) + '\n';
  for (auto v : m.values) {
    const auto level = top == 0 ? 0 : static_cast<std::uint32_t>(std::uint64_t{v} * maxval / top);
    if (wide) out.push_back(static_cast<char>(level >> 8));
    out.push_back(static_cast<char>(level & 0xFF));
  }
  return out;
}

std::string summary_csv(const std::vector<ClassDescriptor>& classes) {
  std::string out = "class,v,k,lambda,mu,rank2,clique_poly,frequency\n";
  for (const auto& d : classes) {
    std::string poly;
    for (std::size_t s = 0; s < d.clique.coeffs.size(); ++s) {
      if (s != 0) poly += ' ';
      poly += std::to_string(d.clique.coeffs[s]);
    }
    out += std::to_string(d.index) + ',' + std::to_string(graph_order(d)) + ',' + params_field(d, 1) + ',' +
           params_field(d, 2) + ',' + params_field(d, 3) + ',' + std::to_string(d.rank2) + ',' + poly + ',' +
           std::to_string(d.bent_frequency) + '\n';
  }
  return out;
}

std::string summary_table(const std::vector<ClassDescriptor>& classes) {
  std::ostringstream out;
  out << "class  parameters            2-rank  frequency  clique polynomial\n";
  for (const auto& d : classes) {
    std::string params;
    if (d.complete) {
      params = "complete K_" + std::to_string(graph_order(d));
    } else if (d.params) {
      params = "(" + std::to_string(d.params->v) + ", " + std::to_string(d.params->k) + ", " +
               std::to_string(d.params->lambda) + ", " + std::to_string(d.params->mu) + ")";
    } else {
      params = "not strongly regular";
    }
    std::string index = std::to_string(d.index);
    std::string rank = std::to_string(d.rank2);
    std::string freq = std::to_string(d.bent_frequency);
    index.resize(std::max<std::size_t>(index.size(), 5), ' ');
    params.resize(std::max<std::size_t>(params.size(), 20), ' ');
    rank.resize(std::max<std::size_t>(rank.size(), 6), ' ');
    freq.resize(std::max<std::size_t>(freq.size(), 9), ' ');
    out << index << "  " << params << "  " << rank << "  " << freq << "  " << d.clique.to_string() << '\n';
  }
  return out.str();
}

}  // namespace bentcay
